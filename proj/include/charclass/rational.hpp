#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace charclass {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p", "-p", "+p", "p/q" (q > 0). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  // "p" or "p/q".
  std::string str() const;

  Rational operator-() const { return Rational(Raw{}, -value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  std::size_t hash() const;

 private:
  using Value = boost::multiprecision::cpp_rational;
  struct Raw {};
  Rational(Raw, Value v) : value_(std::move(v)) {}
  Value value_{0};
};

}  // namespace charclass

template <>
struct std::hash<charclass::Rational> {
  std::size_t operator()(const charclass::Rational& r) const noexcept { return r.hash(); }
};

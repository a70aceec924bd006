#include "charclass/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace charclass {

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits));
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  // cpp_rational rejects negative denominators.
  value_ = den < 0 ? Value(BigInt(-num), BigInt(-den)) : Value(num, den);
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  BigInt num;
  BigInt den = 1;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = parse_digits(body.substr(0, slash), text);
    den = parse_digits(body.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  } else {
    num = parse_digits(body, text);
  }
  return Rational(negative ? BigInt(-num) : num, den);
}

std::string Rational::str() const {
  auto num = numerator();
  auto den = denominator();
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  return std::hash<std::string>{}(str());
}

}  // namespace charclass

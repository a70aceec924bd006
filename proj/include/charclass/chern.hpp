#pragma once

#include "charclass/abstract_class.hpp"
#include "charclass/polynomial.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace charclass {

// A rational number or a polynomial in the atoms d, xi_I.
using Scalar = Polynomial;

class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientTruncation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Typed wrapper over Polynomial for classes living in one cohomology ring.
template <class Tag>
class GradedClass {
 public:
  GradedClass() = default;
  explicit GradedClass(Polynomial p) : poly_(std::move(p)) {}

  const Polynomial& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  std::string str() const { return poly_.str(); }

  GradedClass operator-() const { return GradedClass(-poly_); }
  GradedClass& operator+=(const GradedClass& o) { poly_ += o.poly_; return *this; }
  GradedClass& operator-=(const GradedClass& o) { poly_ -= o.poly_; return *this; }
  GradedClass& operator*=(const GradedClass& o) { poly_ *= o.poly_; return *this; }
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(GradedClass a, const GradedClass& b) { return a *= b; }
  friend GradedClass operator*(const Scalar& s, const GradedClass& b) { return GradedClass(s * b.poly_); }
  friend bool operator==(const GradedClass& a, const GradedClass& b) { return a.poly_ == b.poly_; }
  friend std::ostream& operator<<(std::ostream& os, const GradedClass& c) { return os << c.poly_; }

 private:
  Polynomial poly_;
};

struct SourceTag {};
struct TargetTag {};

// Polynomial in c_k(TM) and at with scalar coefficients, capped at weight m.
using SourceClass = GradedClass<SourceTag>;
// Polynomial in the hyperplane class a of P^n, capped at weight n.
using TargetClass = GradedClass<TargetTag>;

// f: M^m -> P^n described by xi(I) = int_M c_I(TM) at^(m - |I|) for |I| <= m.
struct ChernData {
  int source_dim = 0;
  int target_dim = 0;
  std::map<MultiIndex, Scalar> xi;
};

class MapContext {
 public:
  explicit MapContext(ChernData data);

  int source_dim() const { return data_.source_dim; }
  int target_dim() const { return data_.target_dim; }
  int kappa() const { return data_.target_dim - data_.source_dim; }
  const ChernData& data() const { return data_; }
  const Scalar& xi(const MultiIndex& index) const;

  // at = f^*a and c_k(TM) as source classes.
  SourceClass hyperplane() const;
  SourceClass source_chern(int k) const;
  SourceClass source_one() const;
  // c(TM) = 1 + c_1 + ... + c_m
  SourceClass total_chern() const;
  SourceClass lift(const Scalar& s) const;

 private:
  ChernData data_;
};

// Required xi indices for a source of dimension m: all I with weight(I) <= m.
std::vector<MultiIndex> required_xi(int source_dim);

MapContext make_context(int m, int n, std::map<MultiIndex, Scalar> xi);
MapContext make_symbolic_context(int m, int n);

// c_1(f) ... c_m(f) from (1 + at)^(n+1) / c(TM).
std::vector<SourceClass> quotient_chern(const MapContext& ctx);

TargetClass pushforward(const MapContext& ctx, const SourceClass& x);
// Scalar coefficient of a^k.
Scalar coefficient_of_power(const TargetClass& y, int k);
SourceClass pullback(const MapContext& ctx, const TargetClass& y);
TargetClass landweber_novikov(const MapContext& ctx, const MultiIndex& index);

// Replaces c_k by c_k(f) and s_I by the pullback of s_I(f).
SourceClass evaluate_abstract_class(const MapContext& ctx, const AbstractClass& p);

// Degree of the weight-m component.
Scalar integrate(const MapContext& ctx, const SourceClass& x);
// Degree of the image cycle: each weight-w part is cut by at^(m - w) first.
Scalar degree(const MapContext& ctx, const SourceClass& x);
// True when x pairs to zero against every monomial c_I at^j of complementary weight.
bool numerically_zero(const MapContext& ctx, const SourceClass& x);

// Composition with a generic linear projection P^n --> P^(n-1).
MapContext project_context(const MapContext& ctx);

// int_M c(TM) * series(f); refuses series not valid up to weight m.
Scalar weighted_euler(const MapContext& ctx, const AbstractClass& series);

// Gysin pushforward from a nested submanifold X_level (dimension sub_dim) into
// its ambient ring. Classes on X_level are polynomials in c_k(X_level) with
// coefficients pulled back from the ambient; images lists the pushforward of
// every Chern monomial of weight <= sub_dim.
class GysinTable {
 public:
  GysinTable(int level, int sub_dim, int ambient_dim, std::map<MultiIndex, Polynomial> images);

  int level() const { return level_; }
  int sub_dim() const { return sub_dim_; }
  int ambient_dim() const { return ambient_dim_; }
  const std::map<MultiIndex, Polynomial>& images() const { return images_; }

  // c_k(T X_level)
  Polynomial chern(int k) const;
  Polynomial push(const Polynomial& x) const;

 private:
  int level_;
  int sub_dim_;
  int ambient_dim_;
  std::map<MultiIndex, Polynomial> images_;
};

}  // namespace charclass

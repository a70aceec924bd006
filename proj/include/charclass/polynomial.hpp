#pragma once

#include "charclass/rational.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charclass {

// Exponent vector (i1, i2, ...) indexing Chern monomials c1^i1 c2^i2 ...
// Trailing zeros are always trimmed, so the empty index is the constant monomial.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> exps) : MultiIndex(std::vector<int>(exps)) {}
  explicit MultiIndex(std::vector<int> exps);

  // Parses the digit form used in names: "" or "0" is empty, "01" is (0,1).
  static MultiIndex parse(std::string_view digits);

  const std::vector<int>& exponents() const { return exps_; }
  bool empty() const { return exps_.empty(); }
  int exponent(int k) const;  // exponent of c_k, k >= 1
  int weight() const;
  int length() const { return static_cast<int>(exps_.size()); }

  // "01" style; exponents above 9 use "[a,b,...]".
  std::string str() const;

  // Every index of weight <= max_weight, ordered by weight.
  static std::vector<MultiIndex> all_up_to(int max_weight);

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  // Weight first, then lexicographically larger exponent vectors first.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<int> exps_;
};

enum class VarKind : int {
  Xi = 0,                // degree of f_*(c_I(TM)); xi with empty index is the degree d
  TargetHyperplane = 1,  // a
  SourceHyperplane = 2,  // at = f^* a
  LandweberNovikov = 3,  // s_I
  QuotientChern = 4,     // c_k = c_k(f)
  SourceChern = 5,       // c_k(TM)
  SubChern = 6,          // c_k(T X_level) of a nested submanifold X_level
};

class VariableId {
 public:
  static VariableId xi(MultiIndex index) { return {VarKind::Xi, 0, 0, std::move(index)}; }
  static VariableId degree() { return xi({}); }
  static VariableId target_hyperplane() { return {VarKind::TargetHyperplane, 0, 0, {}}; }
  static VariableId source_hyperplane() { return {VarKind::SourceHyperplane, 0, 0, {}}; }
  static VariableId landweber_novikov(MultiIndex index) {
    return {VarKind::LandweberNovikov, 0, 0, std::move(index)};
  }
  static VariableId quotient_chern(int k);
  static VariableId source_chern(int k);
  static VariableId sub_chern(int level, int k);

  VarKind kind() const { return kind_; }
  int index() const { return index_; }
  int level() const { return level_; }
  const MultiIndex& multi_index() const { return multi_; }

  bool is_scalar() const { return kind_ == VarKind::Xi; }

  // LandweberNovikov weights depend on the relative codimension of the ring.
  int weight(std::optional<int> kappa) const;

  std::string str() const;

  friend bool operator==(const VariableId&, const VariableId&) = default;
  friend std::strong_ordering operator<=>(const VariableId& a, const VariableId& b);

 private:
  VariableId(VarKind kind, int index, int level, MultiIndex multi)
      : kind_(kind), index_(index), level_(level), multi_(std::move(multi)) {}

  VarKind kind_;
  int index_;
  int level_;
  MultiIndex multi_;
};

// Sorted product of variable powers; exponents are positive.
class Monomial {
 public:
  using Factor = std::pair<VariableId, int>;

  Monomial() = default;
  explicit Monomial(const VariableId& v, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int exponent_of(const VariableId& v) const;
  int weight(std::optional<int> kappa) const;
  bool has_kind(VarKind kind) const;

  // Splits into (factors of the given kinds, everything else).
  std::pair<Monomial, Monomial> split(std::initializer_list<VarKind> kinds) const;

  std::string str() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors_ < b.factors_; }

 private:
  std::vector<Factor> factors_;
};

class RingMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NonInvertibleSeries : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IncompleteSubstitution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Sparse polynomial over Q in weighted variables, optionally truncated above a
// weight cap. kappa fixes the weight of Landweber-Novikov variables.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(std::int64_t constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(const VariableId& v);  // NOLINT(google-explicit-constructor)
  Polynomial(Terms terms, std::optional<int> cap, std::optional<int> kappa);

  const Terms& terms() const { return terms_; }
  std::optional<int> cap() const { return cap_; }
  std::optional<int> kappa() const { return kappa_; }

  Polynomial with_cap(std::optional<int> cap) const;
  Polynomial with_kappa(std::optional<int> kappa) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // True when only Xi variables occur (a symbolic or numeric scalar).
  bool is_scalar() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }
  // Requires is_constant().
  Rational to_rational() const;

  // Highest / lowest total weight among the terms; nullopt for zero.
  std::optional<int> max_weight() const;
  std::optional<int> min_weight() const;
  bool is_homogeneous(int weight) const;
  bool contains_kind(VarKind kind) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial pow(int exponent) const;

  // Exact equality of the term maps (caps and kappa are ignored).
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  // Canonical rendering: terms by ascending weight, then variable order.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void truncate();
  void absorb_ring(const Polynomial& o);
  int term_weight(const Monomial& m) const { return m.weight(kappa_); }

  Terms terms_;
  std::optional<int> cap_;
  std::optional<int> kappa_;
};

using Assignment = std::map<VariableId, Polynomial>;

// Formal inverse of a series with constant term 1, truncated at cap.
Polynomial invert_unit_series(const Polynomial& p, int cap);

// Replaces every non-scalar variable by its image; Xi variables are replaced
// only if assigned. The result carries target_cap when given.
Polynomial substitute(const Polynomial& p, const Assignment& assignment,
                      std::optional<int> target_cap = std::nullopt);

// Like substitute, but unassigned variables are kept as they are.
Polynomial substitute_partial(const Polynomial& p, const Assignment& assignment,
                              std::optional<int> target_cap = std::nullopt);

Polynomial component_of_weight(const Polynomial& p, int weight);

// Parses the rendering grammar (plus parentheses): integers and p/q
// coefficients, + - * / ^, variables d, xiI, a, at, sI, ck, ck(TM), ck(Xl).
Polynomial parse_polynomial(std::string_view text, std::optional<int> kappa = std::nullopt);

}  // namespace charclass

#include "charclass/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace charclass {

// ---- MultiIndex ----------------------------------------------------------

MultiIndex::MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent in multi-index");
  }
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

MultiIndex MultiIndex::parse(std::string_view digits) {
  std::vector<int> exps;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("bad multi-index '" + std::string(digits) + "'");
    }
    exps.push_back(ch - '0');
  }
  return MultiIndex(std::move(exps));
}

int MultiIndex::exponent(int k) const {
  return k >= 1 && k <= length() ? exps_[k - 1] : 0;
}

int MultiIndex::weight() const {
  int w = 0;
  for (int k = 0; k < length(); ++k) w += (k + 1) * exps_[k];
  return w;
}

std::string MultiIndex::str() const {
  bool wide = std::any_of(exps_.begin(), exps_.end(), [](int e) { return e > 9; });
  std::string out;
  if (wide) {
    out = "[";
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(exps_[i]);
    }
    return out + "]";
  }
  for (int e : exps_) out += static_cast<char>('0' + e);
  return out;
}

std::vector<MultiIndex> MultiIndex::all_up_to(int max_weight) {
  std::vector<MultiIndex> out;
  std::vector<int> current(static_cast<std::size_t>(std::max(max_weight, 0)), 0);
  // Enumerate exponent vectors of length max_weight whose weight is bounded.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == max_weight) {
      out.emplace_back(current);
      return;
    }
    for (int e = 0; (pos + 1) * e <= remaining; ++e) {
      current[pos] = e;
      self(self, pos + 1, remaining - (pos + 1) * e);
    }
    current[pos] = 0;
  };
  rec(rec, 0, max_weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  // larger leading exponents first
  return b.exps_ <=> a.exps_;
}

// ---- VariableId ----------------------------------------------------------

VariableId VariableId::quotient_chern(int k) {
  if (k < 1) throw std::invalid_argument("Chern class index must be >= 1");
  return {VarKind::QuotientChern, k, 0, {}};
}

VariableId VariableId::source_chern(int k) {
  if (k < 1) throw std::invalid_argument("Chern class index must be >= 1");
  return {VarKind::SourceChern, k, 0, {}};
}

VariableId VariableId::sub_chern(int level, int k) {
  if (k < 1 || level < 1) throw std::invalid_argument("bad submanifold Chern class");
  return {VarKind::SubChern, k, level, {}};
}

int VariableId::weight(std::optional<int> kappa) const {
  switch (kind_) {
    case VarKind::Xi:
      return 0;
    case VarKind::TargetHyperplane:
    case VarKind::SourceHyperplane:
      return 1;
    case VarKind::LandweberNovikov:
      if (!kappa) throw RingMismatch("weight of " + str() + " needs the ring's relative codimension");
      return *kappa + multi_.weight();
    case VarKind::QuotientChern:
    case VarKind::SourceChern:
    case VarKind::SubChern:
      return index_;
  }
  return 0;
}

std::string VariableId::str() const {
  switch (kind_) {
    case VarKind::Xi:
      return multi_.empty() ? "d" : "xi" + multi_.str();
    case VarKind::TargetHyperplane:
      return "a";
    case VarKind::SourceHyperplane:
      return "at";
    case VarKind::LandweberNovikov:
      return "s" + (multi_.empty() ? std::string("0") : multi_.str());
    case VarKind::QuotientChern:
      return "c" + std::to_string(index_);
    case VarKind::SourceChern:
      return "c" + std::to_string(index_) + "(TM)";
    case VarKind::SubChern:
      return "c" + std::to_string(index_) + "(X" + std::to_string(level_) + ")";
  }
  return "?";
}

std::strong_ordering operator<=>(const VariableId& a, const VariableId& b) {
  if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
  if (auto c = a.level_ <=> b.level_; c != 0) return c;
  if (auto c = a.index_ <=> b.index_; c != 0) return c;
  return a.multi_ <=> b.multi_;
}

// ---- Monomial ------------------------------------------------------------

Monomial::Monomial(const VariableId& v, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

int Monomial::exponent_of(const VariableId& v) const {
  for (const auto& [var, e] : factors_) {
    if (var == v) return e;
  }
  return 0;
}

int Monomial::weight(std::optional<int> kappa) const {
  int w = 0;
  for (const auto& [var, e] : factors_) w += var.weight(kappa) * e;
  return w;
}

bool Monomial::has_kind(VarKind kind) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [kind](const Factor& f) { return f.first.kind() == kind; });
}

std::pair<Monomial, Monomial> Monomial::split(std::initializer_list<VarKind> kinds) const {
  Monomial in, out;
  for (const auto& f : factors_) {
    bool hit = std::find(kinds.begin(), kinds.end(), f.first.kind()) != kinds.end();
    (hit ? in : out).factors_.push_back(f);
  }
  return {in, out};
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [var, e] : factors_) {
    if (!out.empty()) out += '*';
    out += var.str();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first == j->first) {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    } else if (i->first < j->first) {
      r.factors_.push_back(*i++);
    } else {
      r.factors_.push_back(*j++);
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  return r;
}

// ---- Polynomial ----------------------------------------------------------

namespace {

std::optional<int> min_cap(std::optional<int> a, std::optional<int> b) {
  if (a && b) return std::min(*a, *b);
  return a ? a : b;
}

}  // namespace

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const VariableId& v) { terms_.emplace(Monomial(v), Rational(1)); }

Polynomial::Polynomial(Terms terms, std::optional<int> cap, std::optional<int> kappa)
    : terms_(std::move(terms)), cap_(cap), kappa_(kappa) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  truncate();
}

Polynomial Polynomial::with_cap(std::optional<int> cap) const {
  Polynomial r = *this;
  r.cap_ = cap;
  r.truncate();
  return r;
}

Polynomial Polynomial::with_kappa(std::optional<int> kappa) const {
  Polynomial r = *this;
  r.kappa_ = kappa;
  r.truncate();
  return r;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_scalar() const {
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) {
      if (!v.is_scalar()) return false;
    }
  }
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::to_rational() const {
  if (!is_constant()) throw std::logic_error("not a constant: " + str());
  return constant_term();
}

std::optional<int> Polynomial::max_weight() const {
  std::optional<int> w;
  for (const auto& [m, c] : terms_) w = std::max(w.value_or(term_weight(m)), term_weight(m));
  return w;
}

std::optional<int> Polynomial::min_weight() const {
  std::optional<int> w;
  for (const auto& [m, c] : terms_) w = std::min(w.value_or(term_weight(m)), term_weight(m));
  return w;
}

bool Polynomial::is_homogeneous(int weight) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& kv) { return term_weight(kv.first) == weight; });
}

bool Polynomial::contains_kind(VarKind kind) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [kind](const auto& kv) { return kv.first.has_kind(kind); });
}

void Polynomial::truncate() {
  if (!cap_) return;
  std::erase_if(terms_, [this](const auto& kv) { return term_weight(kv.first) > *cap_; });
}

void Polynomial::absorb_ring(const Polynomial& o) {
  if (kappa_ && o.kappa_ && *kappa_ != *o.kappa_) {
    throw RingMismatch("mixing relative codimensions " + std::to_string(*kappa_) + " and " +
                       std::to_string(*o.kappa_));
  }
  if (!kappa_) kappa_ = o.kappa_;
  cap_ = min_cap(cap_, o.cap_);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  absorb_ring(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  truncate();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.kappa_ = a.kappa_;
  r.cap_ = a.cap_;
  r.absorb_ring(b);
  for (const auto& [ma, ca] : a.terms_) {
    std::optional<int> wa;
    if (r.cap_) wa = r.term_weight(ma);
    for (const auto& [mb, cb] : b.terms_) {
      if (r.cap_ && *wa + r.term_weight(mb) > *r.cap_) continue;
      auto [it, inserted] = r.terms_.try_emplace(ma * mb, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative power of a polynomial");
  Polynomial result = Polynomial(1).with_cap(cap_).with_kappa(kappa_);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const int display_kappa = kappa_.value_or(0);
  std::vector<std::pair<const Monomial*, const Rational*>> order;
  order.reserve(terms_.size());
  for (const auto& [m, c] : terms_) order.emplace_back(&m, &c);
  auto render_less = [display_kappa](const Monomial& x, const Monomial& y) {
    int wx = x.weight(display_kappa), wy = y.weight(display_kappa);
    if (wx != wy) return wx < wy;
    const auto& fx = x.factors();
    const auto& fy = y.factors();
    for (std::size_t i = 0; i < std::min(fx.size(), fy.size()); ++i) {
      if (fx[i].first != fy[i].first) return fx[i].first < fy[i].first;
      if (fx[i].second != fy[i].second) return fx[i].second > fy[i].second;
    }
    return fx.size() < fy.size();
  };
  std::sort(order.begin(), order.end(),
            [&](const auto& p, const auto& q) { return render_less(*p.first, *q.first); });

  std::string out;
  bool first = true;
  for (const auto& [m, c] : order) {
    Rational mag = c->sign() < 0 ? -*c : *c;
    if (first) {
      if (c->sign() < 0) out += "-";
    } else {
      out += c->sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (m->is_one()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += m->str();
    } else {
      out += mag.str() + "*" + m->str();
    }
  }
  return out;
}

// ---- free operations -----------------------------------------------------

Polynomial invert_unit_series(const Polynomial& p, int cap) {
  if (p.constant_term() != Rational(1)) {
    throw NonInvertibleSeries("series constant term is " + p.constant_term().str() + ", expected 1");
  }
  Polynomial q = p.with_cap(cap);
  Polynomial tail = Polynomial(1) - q;
  if (tail.min_weight().value_or(1) < 1) {
    throw NonInvertibleSeries("series has non-constant weight-0 terms");
  }
  // 1/(1 - t) = 1 + t + t^2 + ...; t has weight >= 1 so cap + 1 terms suffice.
  Polynomial result = Polynomial(1).with_cap(cap).with_kappa(q.kappa());
  Polynomial power = result;
  for (int i = 0; i < cap; ++i) {
    power *= tail;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

namespace {

Polynomial substitute_impl(const Polynomial& p, const Assignment& assignment,
                           std::optional<int> target_cap, bool strict) {
  Polynomial result = Polynomial(0).with_cap(target_cap);
  // Cache powers of each image; terms are small so a flat map suffices.
  std::map<std::pair<VariableId, int>, Polynomial> powers;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial(c).with_cap(target_cap);
    for (const auto& [var, e] : m.factors()) {
      auto it = assignment.find(var);
      if (it == assignment.end()) {
        if (strict && !var.is_scalar()) {
          throw IncompleteSubstitution("no image assigned to variable " + var.str());
        }
        term *= Polynomial(Polynomial::Terms{{Monomial(var, e), Rational(1)}}, std::nullopt, p.kappa());
        continue;
      }
      auto key = std::make_pair(var, e);
      auto pit = powers.find(key);
      if (pit == powers.end()) {
        pit = powers.emplace(key, it->second.with_cap(target_cap).pow(e)).first;
      }
      term *= pit->second;
    }
    result += term;
  }
  return result.with_cap(target_cap);
}

}  // namespace

Polynomial substitute(const Polynomial& p, const Assignment& assignment, std::optional<int> target_cap) {
  return substitute_impl(p, assignment, target_cap, true);
}

Polynomial substitute_partial(const Polynomial& p, const Assignment& assignment,
                              std::optional<int> target_cap) {
  return substitute_impl(p, assignment, target_cap, false);
}

Polynomial component_of_weight(const Polynomial& p, int weight) {
  Polynomial::Terms out;
  for (const auto& [m, c] : p.terms()) {
    if (m.weight(p.kappa()) == weight) out.emplace(m, c);
  }
  return Polynomial(std::move(out), p.cap(), p.kappa());
}

// ---- parser --------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::optional<int> kappa) : text_(text), kappa_(kappa) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial ring(Polynomial p) const { return p.with_kappa(kappa_); }

  Polynomial expr() {
    Polynomial acc = ring(term());
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = ring(unary());
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Polynomial den = unary();
        if (!den.is_constant() || den.is_zero()) fail("division by a non-constant or zero");
        acc *= Polynomial(Rational(1) / den.to_rational());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) return ring(Polynomial(variable()));
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  VariableId variable() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view letters = text_.substr(start, pos_ - start);
    std::size_t digit_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(digit_start, pos_ - digit_start);

    if (letters == "d" && digits.empty()) return VariableId::degree();
    if (letters == "a" && digits.empty()) return VariableId::target_hyperplane();
    if (letters == "at" && digits.empty()) return VariableId::source_hyperplane();
    if (letters == "xi" && !digits.empty()) return VariableId::xi(MultiIndex::parse(digits));
    if (letters == "s" && !digits.empty()) return VariableId::landweber_novikov(MultiIndex::parse(digits));
    if (letters == "c" && !digits.empty()) {
      int k = std::stoi(std::string(digits));
      if (k < 1) fail("Chern index must be positive");
      if (text_.substr(pos_, 4) == "(TM)") {
        pos_ += 4;
        return VariableId::source_chern(k);
      }
      if (text_.substr(pos_, 2) == "(X") {
        pos_ += 2;
        std::size_t ls = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (ls == pos_ || pos_ >= text_.size() || text_[pos_] != ')') fail("bad submanifold tag");
        int level = std::stoi(std::string(text_.substr(ls, pos_ - ls)));
        ++pos_;
        return VariableId::sub_chern(level, k);
      }
      return VariableId::quotient_chern(k);
    }
    pos_ = start;
    fail("unknown variable '" + std::string(text_.substr(start, digit_start - start)) + std::string(digits) + "'");
  }

  std::string_view text_;
  std::optional<int> kappa_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::optional<int> kappa) {
  return Parser(text, kappa).parse().with_kappa(kappa);
}

}  // namespace charclass

#include "charclass/chern.hpp"

namespace charclass {

namespace {

// A source monomial c_I(TM) * at^j * (scalar atoms).
struct SourceMonomial {
  MultiIndex chern;
  int hyper = 0;
  Monomial scalar;
};

SourceMonomial decompose(const Monomial& m) {
  std::vector<int> exps;
  SourceMonomial out;
  for (const auto& [var, e] : m.factors()) {
    switch (var.kind()) {
      case VarKind::SourceChern:
        if (static_cast<int>(exps.size()) < var.index()) exps.resize(var.index(), 0);
        exps[var.index() - 1] = e;
        break;
      case VarKind::SourceHyperplane:
        out.hyper = e;
        break;
      case VarKind::Xi:
        out.scalar = out.scalar * Monomial(var, e);
        break;
      default:
        throw ContextError("variable " + var.str() + " is not a source class variable");
    }
  }
  out.chern = MultiIndex(std::move(exps));
  return out;
}

Polynomial scalar_monomial(const Monomial& m, const Rational& c) {
  return Polynomial(Polynomial::Terms{{m, c}}, std::nullopt, std::nullopt);
}

}  // namespace

std::vector<MultiIndex> required_xi(int source_dim) { return MultiIndex::all_up_to(source_dim); }

MapContext::MapContext(ChernData data) : data_(std::move(data)) {
  const int m = data_.source_dim;
  const int n = data_.target_dim;
  if (m < 1) throw ContextError("source dimension must be >= 1");
  if (n < m) throw ContextError("target dimension " + std::to_string(n) + " below source dimension " +
                                std::to_string(m));
  for (const auto& index : required_xi(m)) {
    if (!data_.xi.contains(index)) {
      throw ContextError("missing xi entry " + VariableId::xi(index).str());
    }
  }
  for (const auto& [index, value] : data_.xi) {
    if (index.weight() > m) throw ContextError("xi entry " + VariableId::xi(index).str() + " exceeds dimension");
    if (!value.is_scalar()) throw ContextError("xi entry " + VariableId::xi(index).str() + " is not a scalar");
  }
}

const Scalar& MapContext::xi(const MultiIndex& index) const {
  auto it = data_.xi.find(index);
  if (it == data_.xi.end()) throw ContextError("no xi entry " + VariableId::xi(index).str());
  return it->second;
}

SourceClass MapContext::lift(const Scalar& s) const { return SourceClass(s.with_cap(source_dim())); }
SourceClass MapContext::source_one() const { return lift(Polynomial(1)); }
SourceClass MapContext::hyperplane() const { return lift(Polynomial(VariableId::source_hyperplane())); }

SourceClass MapContext::source_chern(int k) const {
  if (k > source_dim()) return lift(Polynomial(0));
  return lift(Polynomial(VariableId::source_chern(k)));
}

SourceClass MapContext::total_chern() const {
  SourceClass total = source_one();
  for (int k = 1; k <= source_dim(); ++k) total += source_chern(k);
  return total;
}

MapContext make_context(int m, int n, std::map<MultiIndex, Scalar> xi) {
  if (n <= m) throw ContextError("target dimension must exceed source dimension");
  return MapContext(ChernData{m, n, std::move(xi)});
}

MapContext make_symbolic_context(int m, int n) {
  std::map<MultiIndex, Scalar> xi;
  for (const auto& index : required_xi(m)) xi.emplace(index, Polynomial(VariableId::xi(index)));
  return make_context(m, n, std::move(xi));
}

std::vector<SourceClass> quotient_chern(const MapContext& ctx) {
  const int m = ctx.source_dim();
  Polynomial top = (Polynomial(1) + Polynomial(VariableId::source_hyperplane())).with_cap(m).pow(ctx.target_dim() + 1);
  Polynomial total = top * invert_unit_series(ctx.total_chern().poly(), m);
  std::vector<SourceClass> out;
  for (int k = 1; k <= m; ++k) out.push_back(ctx.lift(component_of_weight(total, k)));
  return out;
}

TargetClass pushforward(const MapContext& ctx, const SourceClass& x) {
  Polynomial out = Polynomial(0).with_cap(ctx.target_dim());
  for (const auto& [m, c] : x.poly().terms()) {
    SourceMonomial sm = decompose(m);
    const int exponent = sm.chern.weight() + sm.hyper + ctx.kappa();
    if (exponent > ctx.target_dim()) continue;
    if (sm.chern.weight() > ctx.source_dim()) continue;
    out += scalar_monomial(sm.scalar, c) * ctx.xi(sm.chern) *
           Polynomial(Polynomial::Terms{{Monomial(VariableId::target_hyperplane(), exponent), Rational(1)}},
                      std::nullopt, std::nullopt);
  }
  return TargetClass(out);
}

Scalar coefficient_of_power(const TargetClass& y, int k) {
  Scalar out;
  for (const auto& [m, c] : y.poly().terms()) {
    auto [power, rest] = m.split({VarKind::TargetHyperplane});
    if (power.exponent_of(VariableId::target_hyperplane()) != k) continue;
    out += scalar_monomial(rest, c);
  }
  return out;
}

SourceClass pullback(const MapContext& ctx, const TargetClass& y) {
  for (const auto& [m, c] : y.poly().terms()) {
    for (const auto& [var, e] : m.factors()) {
      if (var.kind() != VarKind::TargetHyperplane && !var.is_scalar()) {
        throw ContextError("variable " + var.str() + " is not a target class variable");
      }
    }
  }
  Assignment to_source{{VariableId::target_hyperplane(), Polynomial(VariableId::source_hyperplane())}};
  return SourceClass(substitute(y.poly(), to_source, ctx.source_dim()));
}

TargetClass landweber_novikov(const MapContext& ctx, const MultiIndex& index) {
  const auto cf = quotient_chern(ctx);
  SourceClass monomial = ctx.source_one();
  for (int k = 1; k <= index.length(); ++k) {
    if (index.exponent(k) == 0) continue;
    SourceClass factor = k <= ctx.source_dim() ? cf[k - 1] : ctx.lift(Polynomial(0));
    monomial = SourceClass(monomial.poly() * factor.poly().pow(index.exponent(k)));
  }
  return pushforward(ctx, monomial);
}

SourceClass evaluate_abstract_class(const MapContext& ctx, const AbstractClass& p) {
  if (p.kappa != ctx.kappa()) {
    throw RingMismatch("class " + p.name + " has relative codimension " + std::to_string(p.kappa) +
                       " but the map has " + std::to_string(ctx.kappa()));
  }
  const auto cf = quotient_chern(ctx);
  Assignment assignment;
  for (const auto& [m, c] : p.body.terms()) {
    for (const auto& [var, e] : m.factors()) {
      if (assignment.contains(var)) continue;
      switch (var.kind()) {
        case VarKind::QuotientChern:
          assignment.emplace(var, var.index() <= ctx.source_dim() ? cf[var.index() - 1].poly() : Polynomial(0));
          break;
        case VarKind::LandweberNovikov:
          assignment.emplace(var, pullback(ctx, landweber_novikov(ctx, var.multi_index())).poly());
          break;
        default:
          break;
      }
    }
  }
  return SourceClass(substitute(p.body.with_kappa(std::nullopt).with_cap(std::nullopt), assignment,
                                ctx.source_dim()));
}

Scalar integrate(const MapContext& ctx, const SourceClass& x) {
  Scalar total;
  for (const auto& [m, c] : x.poly().terms()) {
    SourceMonomial sm = decompose(m);
    if (sm.chern.weight() + sm.hyper != ctx.source_dim()) continue;
    total += scalar_monomial(sm.scalar, c) * ctx.xi(sm.chern);
  }
  return total;
}

Scalar degree(const MapContext& ctx, const SourceClass& x) {
  Scalar total;
  const int m = ctx.source_dim();
  for (int w = 0; w <= m; ++w) {
    Polynomial part = component_of_weight(x.poly(), w);
    if (part.is_zero()) continue;
    total += integrate(ctx, SourceClass(part * ctx.hyperplane().poly().pow(m - w)));
  }
  return total;
}

bool numerically_zero(const MapContext& ctx, const SourceClass& x) {
  const int m = ctx.source_dim();
  for (int w = 0; w <= m; ++w) {
    Polynomial part = component_of_weight(x.poly(), w);
    if (part.is_zero()) continue;
    for (const auto& index : MultiIndex::all_up_to(m - w)) {
      Polynomial probe = ctx.hyperplane().poly().pow(m - w - index.weight());
      for (int k = 1; k <= index.length(); ++k) probe *= ctx.source_chern(k).poly().pow(index.exponent(k));
      if (!integrate(ctx, SourceClass(part * probe)).is_zero()) return false;
    }
  }
  return true;
}

MapContext project_context(const MapContext& ctx) {
  if (ctx.kappa() < 1) throw ContextError("projection would make the relative codimension negative");
  return MapContext(ChernData{ctx.source_dim(), ctx.target_dim() - 1, ctx.data().xi});
}

Scalar weighted_euler(const MapContext& ctx, const AbstractClass& series) {
  if (series.valid_to_weight && *series.valid_to_weight < ctx.source_dim()) {
    throw InsufficientTruncation("series " + series.name + " is known only through weight " +
                                 std::to_string(*series.valid_to_weight) + ", dimension " +
                                 std::to_string(ctx.source_dim()) + " needs more");
  }
  return integrate(ctx, ctx.total_chern() * evaluate_abstract_class(ctx, series));
}

// ---- GysinTable ----------------------------------------------------------

GysinTable::GysinTable(int level, int sub_dim, int ambient_dim, std::map<MultiIndex, Polynomial> images)
    : level_(level), sub_dim_(sub_dim), ambient_dim_(ambient_dim), images_(std::move(images)) {
  for (const auto& index : MultiIndex::all_up_to(sub_dim_)) {
    if (!images_.contains(index)) {
      throw ContextError("pushforward table lacks the image of c" + index.str() + "(X" + std::to_string(level_) + ")");
    }
  }
}

Polynomial GysinTable::chern(int k) const {
  return Polynomial(VariableId::sub_chern(level_, k)).with_cap(sub_dim_);
}

Polynomial GysinTable::push(const Polynomial& x) const {
  Polynomial out = Polynomial(0).with_cap(ambient_dim_);
  for (const auto& [m, c] : x.terms()) {
    std::vector<int> exps;
    Monomial rest;
    for (const auto& [var, e] : m.factors()) {
      if (var.kind() == VarKind::SubChern && var.level() == level_) {
        if (static_cast<int>(exps.size()) < var.index()) exps.resize(var.index(), 0);
        exps[var.index() - 1] = e;
      } else {
        rest = rest * Monomial(var, e);
      }
    }
    if (m.weight(std::nullopt) > sub_dim_) continue;
    MultiIndex index(std::move(exps));
    Polynomial coefficient(Polynomial::Terms{{rest, c}}, std::nullopt, std::nullopt);
    out += coefficient * images_.at(index);
  }
  return out;
}

}  // namespace charclass

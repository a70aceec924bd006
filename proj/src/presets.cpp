#include "charclass/presets.hpp"

namespace charclass {

std::map<MultiIndex, Scalar> xi_from_single_generator(int m, const Scalar& hyper, int power, const Scalar& e,
                                                      const Scalar& top) {
  const Polynomial h(VariableId::source_hyperplane());
  const Polynomial one = Polynomial(1).with_cap(m);
  const Polynomial chern = (one + h).pow(power) * invert_unit_series(one + e * h, m);
  std::vector<Polynomial> c;
  for (int k = 1; k <= m; ++k) c.push_back(component_of_weight(chern, k));

  std::map<MultiIndex, Scalar> xi;
  for (const auto& index : MultiIndex::all_up_to(m)) {
    Polynomial monomial = one * (hyper * h).pow(m - index.weight());
    for (int k = 1; k <= index.length(); ++k) monomial *= c[k - 1].pow(index.exponent(k));
    // Top-weight part is (scalar) * h^m; strip h^m.
    Scalar value;
    const Polynomial top_part = component_of_weight(monomial, m);
    for (const auto& [mono, coeff] : top_part.terms()) {
      auto [hpart, rest] = mono.split({VarKind::SourceHyperplane});
      value += Polynomial(Polynomial::Terms{{rest, coeff}}, std::nullopt, std::nullopt);
    }
    xi.emplace(index, top * value);
  }
  return xi;
}

// c(T P^2) = (1 + h)^3, hyperplane pulls back to 2h.
MapContext roman_surface() { return make_context(2, 3, xi_from_single_generator(2, 2, 3, 0, 1)); }

// c(T P^3) = (1 + h)^4, hyperplane pulls back to 2h.
MapContext veronese_p3() { return make_context(3, 4, xi_from_single_generator(3, 2, 4, 0, 1)); }

// Adjunction: c(TM) = (1 + h)^4 / (1 + d h), deg h^2 = d.
MapContext smooth_surface(const Scalar& d) { return make_context(2, 3, xi_from_single_generator(2, 1, 4, d, d)); }

// Adjunction: c(TM) = (1 + h)^5 / (1 + d h), deg h^3 = d.
MapContext smooth_threefold(const Scalar& d) {
  return make_context(3, 4, xi_from_single_generator(3, 1, 5, d, d));
}

std::vector<std::string> preset_names() {
  return {"roman-surface", "veronese-p3", "smooth-surface", "smooth-threefold"};
}

}  // namespace charclass

#include <algorithm>

#include "gral/analysis.hpp"

namespace gral {

Subspace two_sided_ideal(const Algebra& a, const std::vector<Vector>& gens) {
  require_field(a.ring(), "two-sided ideal");
  const std::size_t n = a.dim();
  Subspace ideal = Subspace::span(a.ring(), n, gens);
  std::vector<Vector> frontier = ideal.basis();
  while (!frontier.empty()) {
    std::vector<Vector> grown = ideal.basis();
    for (const auto& v : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        const Vector b = unit_vector(a.ring(), n, i);
        grown.push_back(a.multiply(b, v));
        grown.push_back(a.multiply(v, b));
      }
    Subspace next = Subspace::span(a.ring(), n, std::move(grown));
    if (next.dim() == ideal.dim()) break;
    frontier.clear();
    for (const auto& v : next.basis())
      if (!ideal.contains(v)) frontier.push_back(v);
    ideal = std::move(next);
  }
  return ideal;
}

bool is_subring(const Algebra& a, const Subspace& s) {
  for (const auto& u : s.basis())
    for (const auto& v : s.basis())
      if (!s.contains(a.multiply(u, v))) return false;
  return true;
}

MaxCommResult is_maximal_commutative(const Algebra& a, const Subspace& s) {
  require_field(a.ring(), "maximal commutativity");
  for (const auto& u : s.basis())
    for (const auto& v : s.basis())
      if (!(a.multiply(u, v) == a.multiply(v, u)))
        throw Error(ErrorCode::not_commutative, "the subring is not commutative");
  MaxCommResult out{false, centralizer(a, s), std::nullopt};
  out.maximal = out.centralizer == s;
  for (const auto& v : out.centralizer.basis())
    if (!s.contains(v)) {
      out.witness = v;
      break;
    }
  return out;
}

namespace {

/// phi(x u_t) = x u_c(t): folds every component onto the identity component of its codomain.
Vector fold_to_principal(const CrossedProduct& r, const Vector& v) {
  const auto& g = r.algebra;
  const auto& cat = g.category();
  Vector out = zero_vector(g.ring(), g.dim());
  for (auto t : cat.morphisms()) {
    const auto e = cat.identity(cat.cod(t));
    const auto& coords = g.component_indices(t);
    for (std::size_t k = 0; k < coords.size(); ++k) out[r.index(e, k)] += v[coords[k]];
  }
  return out;
}

}  // namespace

std::optional<MaxCommFailureIdeal> maxcomm_failure_ideal(const CrossedProduct& r) {
  if (!r.skew) throw Error(ErrorCode::invalid_input, "the construction needs a skew category algebra");
  const auto& g = r.algebra;
  const auto& cat = g.category();
  const auto& alg = g.algebra();
  const Subspace a = principal_component(g);
  const Subspace c = centralizer(alg, a);
  for (auto s : cat.morphisms()) {
    if (cat.is_identity(s) || !cat.is_endomorphism(s)) continue;
    const Subspace part = c.intersect(component_subspace(g, s));
    if (part.is_zero()) continue;
    const Vector au_s = part.basis().front();
    const auto e = cat.identity(cat.cod(s));
    Vector au_e = zero_vector(g.ring(), g.dim());
    const auto& coords = g.component_indices(s);
    for (std::size_t k = 0; k < coords.size(); ++k) au_e[r.index(e, k)] = au_s[coords[k]];
    const Vector gen = sub(au_e, au_s);
    MaxCommFailureIdeal out{s, au_s, gen, two_sided_ideal(alg, {gen}), false, false};
    out.meets_principal_trivially = out.ideal.intersect(a).is_zero();
    out.killed_by_phi = std::all_of(out.ideal.basis().begin(), out.ideal.basis().end(),
                                    [&](const Vector& v) { return is_zero(fold_to_principal(r, v)); });
    return out;
  }
  return std::nullopt;
}

EquivalenceReport check_maxcomm_iip_equivalence(const CrossedProduct& r, const IipOptions& options) {
  const auto& g = r.algebra;
  if (!r.skew) throw Error(ErrorCode::invalid_input, "not a skew category algebra");
  if (!is_groupoid(g.category())) throw Error(ErrorCode::invalid_input, "the grading category is not a groupoid");
  const Subspace a = principal_component(g);
  MaxCommResult mc = is_maximal_commutative(g.algebra(), a);
  IipResult iip = has_ideal_intersection_property(g.algebra(), a, options);
  EquivalenceReport out{mc.maximal, iip, false, mc, std::nullopt};
  if (iip.verdict != IipVerdict::no_counterexample_found) out.equivalent = mc.maximal == iip.holds();
  if (!mc.maximal) out.construction = maxcomm_failure_ideal(r);
  return out;
}

CommutantIipReport check_commutant_iip(const GradedAlgebra& a, const IipOptions& options) {
  CommutantIipReport out;
  if (!is_groupoid(a.category())) return out;
  out.right = nondegeneracy(a, Side::right).holds;
  out.left = nondegeneracy(a, Side::left).holds;
  out.applicable = out.right || out.left;
  if (!out.applicable) return out;
  out.iip = has_ideal_intersection_property(a.algebra(), commutant_of_center_of_principal(a), options);
  out.holds = out.iip->verdict != IipVerdict::fails;
  return out;
}

}  // namespace gral

#include "gral/analysis.hpp"

#include <algorithm>

namespace gral {

namespace {

/// Solutions r = sum_{j in coords} r_j b_j of sum_j r_j images[j] = 0, lifted to R.
Subspace solve_on_coords(const CoefficientRing& ring, std::size_t n, const std::vector<std::size_t>& coords,
                         const std::vector<Vector>& images) {
  if (coords.empty()) return Subspace(ring, n);
  const std::size_t width = images.empty() ? 0 : images.front().size();
  if (width == 0) return Subspace::coordinate(ring, n, coords);
  std::vector<Vector> lifted;
  for (const auto& k : left_kernel(ring, width, images)) {
    Vector v = zero_vector(ring, n);
    for (std::size_t i = 0; i < coords.size(); ++i) v[coords[i]] = k[i];
    lifted.push_back(std::move(v));
  }
  return Subspace::span(ring, n, std::move(lifted));
}

void append(Vector& into, const Vector& v) { into.insert(into.end(), v.begin(), v.end()); }

std::vector<std::size_t> all_coords(std::size_t n) {
  std::vector<std::size_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = i;
  return c;
}

}  // namespace

Subspace centralizer(const Algebra& a, const Subspace& x) {
  require_field(a.ring(), "centralizer");
  const std::size_t n = a.dim();
  if (x.is_zero()) return Subspace::full(a.ring(), n);
  std::vector<Vector> images(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector bj = unit_vector(a.ring(), n, j);
    for (const auto& g : x.basis()) append(images[j], sub(a.multiply(bj, g), a.multiply(g, bj)));
  }
  return solve_on_coords(a.ring(), n, all_coords(n), images);
}

Subspace center(const Algebra& a) { return centralizer(a, Subspace::full(a.ring(), a.dim())); }

GradedCommutant commutant_of_principal_component(const GradedAlgebra& a) {
  require_field(a.ring(), "commutant of the principal component");
  const auto& cat = a.category();
  const auto& alg = a.algebra();
  const auto& ring = a.ring();
  const std::size_t n = a.dim();
  GradedCommutant out{centralizer(a, principal_component(a)), {}, false, unit_in_principal_component(a), true, {}};

  Subspace sum(ring, n);
  for (auto s : cat.morphisms()) {
    out.components.push_back(out.total.intersect(component_subspace(a, s)));
    sum = sum.sum(out.components.back());
  }
  out.homogeneous = sum == out.total;

  for (auto s : cat.morphisms()) {
    const auto& coords = a.component_indices(s);
    const auto& dom_coords = a.component_indices(cat.identity(cat.dom(s)));
    const auto& cod_coords = a.component_indices(cat.identity(cat.cod(s)));
    std::vector<Vector> images(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const Vector r = unit_vector(ring, n, coords[i]);
      if (cat.is_endomorphism(s)) {
        for (auto d : dom_coords) {
          const Vector x = unit_vector(ring, n, d);
          append(images[i], sub(alg.multiply(r, x), alg.multiply(x, r)));
        }
      } else {
        for (auto c : cod_coords) append(images[i], alg.multiply(unit_vector(ring, n, c), r));
        for (auto d : dom_coords) append(images[i], alg.multiply(r, unit_vector(ring, n, d)));
      }
    }
    const Subspace formula = solve_on_coords(ring, n, coords, images);
    if (!(formula == out.components[s.index]))
      out.mismatches.push_back("component " + cat.name(s) + ": direct dim " +
                               std::to_string(out.components[s.index].dim()) + ", formula dim " +
                               std::to_string(formula.dim()));
    if (out.unit_in_principal && !cat.is_endomorphism(s) && !formula.is_zero())
      out.mismatches.push_back("component " + cat.name(s) + " should vanish since 1 lies in R_0");
  }
  out.formula_agrees = out.mismatches.empty();
  return out;
}

Subspace center_of_principal_component(const GradedAlgebra& a) {
  const Subspace r0 = principal_component(a);
  return centralizer(a, r0).intersect(r0);
}

Subspace commutant_of_center_of_principal(const GradedAlgebra& a) {
  return centralizer(a, center_of_principal_component(a));
}

bool commutant_is_filter(const GradedAlgebra& a, const Subspace& x) {
  const auto& cat = a.category();
  const Subspace c = centralizer(a, x);
  std::vector<Subspace> parts;
  for (auto s : cat.morphisms()) parts.push_back(c.intersect(component_subspace(a, s)));
  for (auto s : cat.morphisms())
    for (auto t : cat.morphisms()) {
      const auto st = cat.composable(s, t) ? cat.compose(s, t) : std::nullopt;
      for (const auto& u : parts[s.index].basis())
        for (const auto& v : parts[t.index].basis()) {
          const Vector p = a.algebra().multiply(u, v);
          if (!st) {
            if (!is_zero(p)) return false;
          } else if (!parts[st->index].contains(p)) {
            return false;
          }
        }
    }
  return true;
}

NondegeneracyResult nondegeneracy(const GradedAlgebra& a, Side side) {
  const auto& cat = a.category();
  const auto& alg = a.algebra();
  const auto& ring = a.ring();
  const std::size_t n = a.dim();
  const auto isos = isomorphisms(cat);
  NondegeneracyResult out;
  out.identities_only = std::all_of(isos.begin(), isos.end(), [&](MorphismId s) { return cat.is_identity(s); });
  const CoefficientRing field = ring.is_field() ? ring : CoefficientRing::rationals();
  for (auto s : isos) {
    const auto inv = *inverse(cat, s);
    const auto& coords = a.component_indices(s);
    const auto& partner = a.component_indices(inv);
    if (coords.empty()) continue;
    std::vector<Vector> images(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const Vector x = unit_vector(ring, n, coords[i]);
      for (auto j : partner) {
        const Vector y = unit_vector(ring, n, j);
        const Vector p = side == Side::right ? alg.multiply(x, y) : alg.multiply(y, x);
        for (const auto& c : p) images[i].push_back(Scalar::from_rational(field, c.to_rational()));
      }
    }
    std::vector<Vector> kernel;
    if (partner.empty()) {
      kernel.push_back(unit_vector(field, coords.size(), 0));
    } else {
      kernel = left_kernel(field, images.front().size(), images);
    }
    if (kernel.empty()) continue;
    // Clear denominators so the witness lives in the original ring.
    mpz_class lcm = 1;
    for (const auto& c : kernel.front()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.to_rational().get_den_mpz_t());
    Vector x = zero_vector(ring, n);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const mpq_class v = kernel.front()[i].to_rational() * lcm;
      x[coords[i]] = ring.is_field() ? kernel.front()[i] : Scalar::from_rational(ring, v);
    }
    out.holds = false;
    out.s = s;
    out.x = std::move(x);
    return out;
  }
  return out;
}

}  // namespace gral

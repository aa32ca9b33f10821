#include "gral/crossed_product.hpp"

#include <map>

namespace gral {

CrossedSystem::CrossedSystem(FiniteCategory cat, std::vector<Algebra> comps)
    : ring(comps.empty() ? CoefficientRing::rationals() : comps.front().ring()),
      category(std::move(cat)),
      components(std::move(comps)) {
  if (components.size() != category.num_objects())
    throw Error(ErrorCode::invalid_system, "one component ring per object is required");
  for (const auto& c : components)
    if (!(c.ring() == ring)) throw Error(ErrorCode::ring_mismatch, "component rings disagree on coefficients");
  for (auto s : category.morphisms()) {
    const auto& src = source(s);
    const auto& dst = target(s);
    sigma.push_back(src.dim() == dst.dim() ? Matrix::identity(ring, src.dim()) : Matrix(ring, dst.dim(), src.dim()));
  }
  for (auto s : category.morphisms())
    for (std::size_t t = 0; t < category.num_morphisms(); ++t) alpha.push_back(target(s).unit());
}

Element apply_sigma(const CrossedSystem& cs, MorphismId s, const Element& a) {
  return Element::from_dense(cs.ring, cs.sigma_at(s).apply(a.dense()));
}

namespace {

std::string pair_name(const FiniteCategory& c, MorphismId s, MorphismId t) {
  return "(" + c.name(s) + ", " + c.name(t) + ")";
}

bool check_shapes(const CrossedSystem& cs, ValidationReport& r) {
  const auto& cat = cs.category;
  if (!cat.validation().ok()) {
    for (const auto& v : cat.validation().violations) r.add("category", v.rule + ": " + v.message);
    return false;
  }
  bool ok = true;
  if (cs.components.size() != cat.num_objects()) {
    r.add("shape", "one component ring per object is required");
    return false;
  }
  if (cs.sigma.size() != cat.num_morphisms()) {
    r.add("shape", "one sigma per morphism is required");
    return false;
  }
  if (cs.alpha.size() != cat.num_morphisms() * cat.num_morphisms()) {
    r.add("shape", "alpha table has the wrong size");
    return false;
  }
  for (auto s : cat.morphisms()) {
    const auto& m = cs.sigma_at(s);
    if (!(m.ring() == cs.ring) || m.rows() != cs.target(s).dim() || m.cols() != cs.source(s).dim()) {
      r.add("shape", "sigma_" + cat.name(s) + " is not a map A_d(s) -> A_c(s)");
      ok = false;
    }
  }
  for (const auto& [s, t] : cat.composable_pairs()) {
    const auto& a = cs.alpha_at(s, t);
    if (!(a.ring() == cs.ring) || a.dim() != cs.target(s).dim()) {
      r.add("shape", "alpha" + pair_name(cat, s, t) + " does not lie in A_c(s)");
      ok = false;
    }
  }
  return ok;
}

}  // namespace

ValidationReport validate_crossed_system(const CrossedSystem& cs) {
  ValidationReport r;
  if (!check_shapes(cs, r)) return r;
  const auto& cat = cs.category;

  for (auto s : cat.morphisms()) {
    const Algebra& src = cs.source(s);
    const Algebra& dst = cs.target(s);
    if (!(apply_sigma(cs, s, src.unit()) == dst.unit()))
      r.add("hom", "sigma_" + cat.name(s) + " does not preserve 1");
    bool multiplicative = true;
    for (std::size_t i = 0; i < src.dim() && multiplicative; ++i)
      for (std::size_t j = 0; j < src.dim() && multiplicative; ++j) {
        const Element lhs = apply_sigma(cs, s, src.product(i, j));
        const Element rhs = dst.multiply(apply_sigma(cs, s, src.basis_element(i)), apply_sigma(cs, s, src.basis_element(j)));
        if (!(lhs == rhs)) {
          r.add("hom", "sigma_" + cat.name(s) + " is not multiplicative on " + src.basis_name(i) + ", " +
                           src.basis_name(j));
          multiplicative = false;
        }
      }
  }

  for (auto o : cat.objects()) {
    const auto e = cat.identity(o);
    if (!(cs.sigma_at(e) == Matrix::identity(cs.ring, cs.component(o).dim())))
      r.add("sigma-identity", "sigma_" + cat.name(e) + " is not the identity");
  }

  for (auto s : cat.morphisms()) {
    const auto ds = cat.identity(cat.dom(s));
    if (!(cs.alpha_at(s, ds) == cs.target(s).unit()))
      r.add("alpha-right-unit", "alpha" + pair_name(cat, s, ds) + " != 1");
  }
  for (auto t : cat.morphisms()) {
    const auto ct = cat.identity(cat.cod(t));
    if (!(cs.alpha_at(ct, t) == cs.target(t).unit()))
      r.add("alpha-left-unit", "alpha" + pair_name(cat, ct, t) + " != 1");
  }

  for (const auto& [s, t] : cat.composable_pairs()) {
    const auto st = *cat.compose(s, t);
    const Algebra& a = cs.target(s);
    for (auto rr : cat.morphisms()) {
      if (!cat.composable(t, rr)) continue;
      const auto tr = *cat.compose(t, rr);
      const Element lhs = a.multiply(cs.alpha_at(s, t), cs.alpha_at(st, rr));
      const Element rhs = a.multiply(apply_sigma(cs, s, cs.alpha_at(t, rr)), cs.alpha_at(s, tr));
      if (!(lhs == rhs))
        r.add("cocycle", "cocycle identity fails on (" + cat.name(s) + ", " + cat.name(t) + ", " + cat.name(rr) + ")");
    }
  }

  for (const auto& [s, t] : cat.composable_pairs()) {
    const auto st = *cat.compose(s, t);
    const Algebra& a = cs.target(s);
    const Algebra& dt = cs.source(t);
    const Element& al = cs.alpha_at(s, t);
    for (std::size_t k = 0; k < dt.dim(); ++k) {
      const Element b = dt.basis_element(k);
      const Element lhs = a.multiply(apply_sigma(cs, s, apply_sigma(cs, t, b)), al);
      const Element rhs = a.multiply(al, apply_sigma(cs, st, b));
      if (!(lhs == rhs)) {
        r.add("twisted-action", "twisted action fails on " + pair_name(cat, s, t) + " at " + dt.basis_name(k));
        break;
      }
    }
  }
  return r;
}

CrossedProduct build_crossed_product(const CrossedSystem& cs, Verify verify) {
  const auto report = validate_crossed_system(cs);
  if (!report.ok()) throw Error(ErrorCode::invalid_system, report.summary());
  const auto& cat = cs.category;

  CrossedProduct out{GradedAlgebra(Algebra(cs.ring, {}, {}, Element(cs.ring, 0)), cat, {}), {}, false};
  std::vector<std::string> names;
  std::vector<MorphismId> degree;
  for (auto s : cat.morphisms()) {
    out.offsets.push_back(names.size());
    const Algebra& a = cs.target(s);
    for (std::size_t k = 0; k < a.dim(); ++k) {
      names.push_back(a.basis_name(k) + "*u_" + cat.name(s));
      degree.push_back(s);
    }
  }
  const std::size_t n = names.size();
  std::map<std::pair<std::size_t, std::size_t>, Element> table;
  for (const auto& [s, t] : cat.composable_pairs()) {
    const auto st = *cat.compose(s, t);
    const Algebra& a = cs.target(s);
    const Algebra& b = cs.target(t);
    const Element& al = cs.alpha_at(s, t);
    for (std::size_t l = 0; l < b.dim(); ++l) {
      const Element twisted = a.multiply(apply_sigma(cs, s, b.basis_element(l)), al);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        const Element v = a.multiply(a.basis_element(k), twisted);
        if (v.is_zero()) continue;
        Element lifted(cs.ring, n);
        for (const auto& [m, c] : v.terms()) lifted.set(out.offsets[st.index] + m, c);
        table.emplace(std::make_pair(out.offsets[s.index] + k, out.offsets[t.index] + l), std::move(lifted));
      }
    }
  }
  Element unit(cs.ring, n);
  for (auto o : cat.objects())
    for (const auto& [m, c] : cs.component(o).unit().terms()) unit.set(out.offsets[cat.identity(o).index] + m, c);

  bool skew = true;
  for (const auto& [s, t] : cat.composable_pairs())
    if (!(cs.alpha_at(s, t) == cs.target(s).unit())) skew = false;

  out.algebra = GradedAlgebra(Algebra::from_table(cs.ring, std::move(names), table, std::move(unit)), cat,
                              std::move(degree));
  out.skew = skew;
  if (verify == Verify::full) {
    const auto g = validate_grading(out.algebra);
    if (!g.ok()) throw Error(ErrorCode::invalid_system, "crossed product fails its grading check: " + g.summary());
  }
  return out;
}

CrossedProduct build_skew_category_algebra(const FiniteCategory& category, std::vector<Algebra> components,
                                           std::vector<Matrix> sigma, Verify verify) {
  CrossedSystem cs(category, std::move(components));
  if (sigma.size() != category.num_morphisms())
    throw Error(ErrorCode::invalid_system, "one sigma per morphism is required");
  cs.sigma = std::move(sigma);
  ValidationReport shapes;
  if (!check_shapes(cs, shapes)) throw Error(ErrorCode::invalid_system, shapes.summary());
  for (const auto& [s, t] : category.composable_pairs()) {
    const auto st = *category.compose(s, t);
    const Algebra& dt = cs.source(t);
    for (std::size_t k = 0; k < dt.dim(); ++k) {
      const Element b = dt.basis_element(k);
      if (!(apply_sigma(cs, s, apply_sigma(cs, t, b)) == apply_sigma(cs, st, b)))
        throw Error(ErrorCode::not_a_functor, "sigma_" + category.name(s) + " sigma_" + category.name(t) +
                                                  " != sigma_" + category.name(st));
    }
  }
  return build_crossed_product(cs, verify);
}

bool strong_grading_criterion(const CrossedSystem& cs) {
  for (const auto& [s, t] : cs.category.composable_pairs()) {
    const Algebra& a = cs.target(s);
    std::vector<Vector> multiples;
    for (std::size_t k = 0; k < a.dim(); ++k)
      multiples.push_back(a.multiply(a.basis_element(k), cs.alpha_at(s, t)).dense());
    const Subspace reachable = Subspace::span(cs.ring, a.dim(), std::move(multiples));
    if (!reachable.contains(a.unit().dense())) return false;
  }
  return true;
}

bool is_zero_divisor(const Algebra& algebra, const Element& a) {
  const std::size_t n = algebra.dim();
  auto injective = [&](const Matrix& m) {
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rank_over_fraction_field(algebra.ring(), n, rows) == n;
  };
  const Vector v = a.dense();
  return !injective(algebra.left_multiplication(v)) || !injective(algebra.right_multiplication(v));
}

}  // namespace gral

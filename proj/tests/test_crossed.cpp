#include <doctest.h>

#include "gral/analysis.hpp"
#include "support.hpp"

using namespace gral;

namespace {

// (a u_s)(b u_t) recomputed from the system data alone.
Vector formula_product(const CrossedSystem& cs, const CrossedProduct& cp, MorphismId s, const Element& a, MorphismId t,
                       const Element& b) {
  Vector out = zero_vector(cs.ring, cp.algebra.dim());
  const auto st = cs.category.compose(s, t);
  if (!cs.category.composable(s, t) || !st) return out;
  const Algebra& A = cs.target(s);
  const Element sb = apply_sigma(cs, s, b);
  const Element prod = A.multiply(A.multiply(a, sb), cs.alpha_at(s, t));
  for (const auto& [k, c] : prod.terms()) out[cp.index(*st, k)] += c;
  return out;
}

Vector embed(const CrossedProduct& cp, MorphismId s, const Element& a) {
  Vector v = zero_vector(a.ring(), cp.algebra.dim());
  for (const auto& [k, c] : a.terms()) v[cp.index(s, k)] = c;
  return v;
}

}  // namespace

TEST_SUITE("crossed_product") {
  TEST_CASE("multiplication follows a sigma_s(b) alpha(s,t) u_st") {
    std::mt19937_64 rng(11);
    for (const auto& field : {"2", "3"})
      for (const auto& inst : support::instances(field, true)) {
        if (!inst.system || !(inst.product->algebra == inst.algebra)) continue;
        INFO(support::label(inst));
        const auto& cs = *inst.system;
        const auto& cp = *inst.product;
        for (int trial = 0; trial < 10; ++trial) {
          const auto s = MorphismId{static_cast<std::uint32_t>(rng() % cs.category.num_morphisms())};
          const auto t = MorphismId{static_cast<std::uint32_t>(rng() % cs.category.num_morphisms())};
          const Element a = Element::from_dense(cs.ring, support::random_vector(cs.ring, cs.target(s).dim(), rng));
          const Element b = Element::from_dense(cs.ring, support::random_vector(cs.ring, cs.target(t).dim(), rng));
          CHECK(cp.algebra.algebra().multiply(embed(cp, s, a), embed(cp, t, b)) ==
                formula_product(cs, cp, s, a, t, b));
        }
      }
  }

  TEST_CASE("the unit is the sum of the component units at identities") {
    for (const auto& inst : support::instances("3", true)) {
      if (!inst.system) continue;
      const auto& cs = *inst.system;
      const auto& cp = *inst.product;
      Vector expected = zero_vector(cs.ring, cp.algebra.dim());
      for (auto o : cs.category.objects()) {
        const auto e = cs.category.identity(o);
        for (const auto& [k, c] : cs.component(o).unit().terms()) expected[cp.index(e, k)] = c;
      }
      CHECK(cp.algebra.algebra().unit().dense() == expected);
    }
  }

  TEST_CASE("invalid systems are rejected") {
    auto inst = catalog::build("twisted-pair-groupoid", {{"n", "3"}, {"field", "3"}});
    CrossedSystem cs = *inst.system;
    const auto& cat = cs.category;
    cs.alpha_at(cat.at("(1,2)"), cat.at("(2,3)")) = Scalar::from_int(cs.ring, 2) * cs.components[0].unit();
    CHECK(validate_crossed_system(cs).mentions("cocycle"));
    try {
      (void)build_crossed_product(cs);
      FAIL("expected InvalidSystem");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_system);
    }
  }

  TEST_CASE("skew category algebras need a functor") {
    const auto F = CoefficientRing::prime_field(3);
    const auto base = catalog::build("skew-group", {{"n", "2"}, {"field", "3"}});
    std::vector<Matrix> sigma = base.system->sigma;
    CHECK_NOTHROW(build_skew_category_algebra(base.system->category, base.system->components, sigma));
    sigma[1] = Matrix::identity(F, 2);
    sigma[1].at(0, 1) = Scalar::one(F);  // not multiplicative on D^2
    try {
      (void)build_skew_category_algebra(base.system->category, base.system->components, sigma);
      FAIL("expected NotAFunctor");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_a_functor);
    }
  }

  TEST_CASE("strong grading criterion agrees with the product") {
    for (const auto& field : {"2", "3", "Q"})
      for (const auto& inst : support::instances(field, true)) {
        if (!inst.system) continue;
        INFO(support::label(inst));
        CHECK(strong_grading_criterion(*inst.system) == is_strongly_graded(inst.product->algebra).strong);
      }
    const auto over_z = catalog::build("pi-twisted-m3");
    CHECK_FALSE(strong_grading_criterion(*over_z.system));
  }

  TEST_CASE("zero divisors") {
    const auto inst = catalog::build("skew-group", {{"n", "2"}, {"field", "2"}});
    const Algebra& d2 = inst.system->components[0];
    CHECK(is_zero_divisor(d2, d2.basis_element(0)));
    CHECK_FALSE(is_zero_divisor(d2, d2.unit()));
    const auto Z = CoefficientRing::integers();
    const auto pi = catalog::build("pi-twisted-m3");
    const Algebra& zc = pi.system->components[0];
    CHECK_FALSE(is_zero_divisor(zc, Scalar::from_int(Z, 2) * zc.unit()));
  }
}

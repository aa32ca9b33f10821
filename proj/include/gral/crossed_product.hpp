#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gral/algebra.hpp"

namespace gral {

/// Data (A, G, sigma, alpha). components[o] is A_o for object index o;
/// sigma[s] is a dim A_c(s) x dim A_d(s) matrix; alpha holds one entry per
/// ordered pair of morphisms and is only read on composable pairs.
struct CrossedSystem {
  CoefficientRing ring;
  FiniteCategory category;
  std::vector<Algebra> components;
  std::vector<Matrix> sigma;
  std::vector<Element> alpha;  // num_morphisms^2, row-major (s, t)

  /// sigma_s = identity-shaped matrices where shapes allow, alpha = 1 everywhere.
  CrossedSystem(FiniteCategory category, std::vector<Algebra> components);

  const Algebra& component(ObjectId o) const { return components.at(o.index); }
  const Algebra& source(MorphismId s) const { return component(category.dom(s)); }
  const Algebra& target(MorphismId s) const { return component(category.cod(s)); }
  Element& alpha_at(MorphismId s, MorphismId t) { return alpha.at(s.index * category.num_morphisms() + t.index); }
  const Element& alpha_at(MorphismId s, MorphismId t) const {
    return alpha.at(s.index * category.num_morphisms() + t.index);
  }
  Matrix& sigma_at(MorphismId s) { return sigma.at(s.index); }
  const Matrix& sigma_at(MorphismId s) const { return sigma.at(s.index); }
};

/// Violation rules, in checking order:
///   shape, hom          malformed data; sigma not a unital ring homomorphism
///   sigma-identity      sigma_e = id for identities e
///   alpha-right-unit    alpha(s, d(s)) = 1
///   alpha-left-unit     alpha(c(t), t) = 1
///   cocycle             alpha(s,t) alpha(st,r) = sigma_s(alpha(t,r)) alpha(s,tr)
///   twisted-action      sigma_s(sigma_t(a)) alpha(s,t) = alpha(s,t) sigma_st(a), on a basis
inline constexpr const char* kCrossedAxioms[] = {"sigma-identity", "alpha-right-unit", "alpha-left-unit", "cocycle",
                                                 "twisted-action"};

ValidationReport validate_crossed_system(const CrossedSystem& cs);

struct CrossedProduct {
  GradedAlgebra algebra;
  /// offsets[s] is the index of the first basis vector b_0 u_s.
  std::vector<std::size_t> offsets;
  bool skew = false;

  std::size_t index(MorphismId s, std::size_t k) const { return offsets.at(s.index) + k; }
};

/// (a u_s)(b u_t) = a sigma_s(b) alpha(s,t) u_st. Throws InvalidSystem unless
/// the system validates. With Verify::full the result's grading is re-verified.
CrossedProduct build_crossed_product(const CrossedSystem& cs, Verify verify = Verify::full);

/// Crossed product with alpha = 1. Throws NotAFunctor unless sigma_s sigma_t = sigma_st.
CrossedProduct build_skew_category_algebra(const FiniteCategory& category, std::vector<Algebra> components,
                                           std::vector<Matrix> sigma, Verify verify = Verify::full);

/// Every alpha(s,t) on a composable pair has a left inverse in A_c(s).
bool strong_grading_criterion(const CrossedSystem& cs);

/// a is a zero divisor when left or right multiplication by a has a kernel.
bool is_zero_divisor(const Algebra& algebra, const Element& a);

/// Sigma evaluated on an element of A_d(s).
Element apply_sigma(const CrossedSystem& cs, MorphismId s, const Element& a);

}  // namespace gral

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gral/crossed_product.hpp"

namespace gral {

// ---------------------------------------------------------------------------
// Commutants

/// {r : r x = x r for every x in X}. Field coefficients only.
Subspace centralizer(const Algebra& a, const Subspace& x);
Subspace center(const Algebra& a);
inline Subspace centralizer(const GradedAlgebra& a, const Subspace& x) { return centralizer(a.algebra(), x); }
inline Subspace center(const GradedAlgebra& a) { return center(a.algebra()); }

struct GradedCommutant {
  Subspace total;
  std::vector<Subspace> components;  // total ∩ R_s, per morphism
  bool homogeneous = false;          // total is the direct sum of its components
  bool unit_in_principal = false;
  /// Per-morphism agreement of the direct component with the closed formula:
  /// C_{R_s}(R_d(s)) on endomorphisms; elsewhere the two-sided annihilator
  /// {r : R_c(s) r = r R_d(s) = 0}, which must vanish when 1 lies in R_0.
  bool formula_agrees = false;
  std::vector<std::string> mismatches;
};

GradedCommutant commutant_of_principal_component(const GradedAlgebra& a);
/// Z(R_0) = C_R(R_0) ∩ R_0.
Subspace center_of_principal_component(const GradedAlgebra& a);
Subspace commutant_of_center_of_principal(const GradedAlgebra& a);

/// Componentwise commutant {C_R(X) ∩ R_s}; checks the G-filter law on it.
bool commutant_is_filter(const GradedAlgebra& a, const Subspace& x);

// ---------------------------------------------------------------------------
// Nondegeneracy

enum class Side { right, left };

struct NondegeneracyResult {
  bool holds = true;
  std::optional<MorphismId> s;
  std::optional<Vector> x;  // nonzero x in R_s with x R_{s^-1} = 0 (right) or R_{s^-1} x = 0 (left)
  /// The category has no non-identity isomorphisms, so only identity
  /// components were inspected.
  bool identities_only = false;
};

/// Literal test over all isomorphisms s. Over Z the kernel is decided by rank
/// over Q, which is exact for the existence of a nonzero integer solution.
NondegeneracyResult nondegeneracy(const GradedAlgebra& a, Side side);

// ---------------------------------------------------------------------------
// Ideals and the ideal intersection property

/// Smallest two-sided ideal containing gens: saturate under left and right
/// multiplication by basis vectors, in basis order, until the dimension stalls.
Subspace two_sided_ideal(const Algebra& a, const std::vector<Vector>& gens);

/// Closed under multiplication.
bool is_subring(const Algebra& a, const Subspace& s);

struct IipOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::optional<std::uint64_t> sample;  // randomized mode with this many draws
  unsigned threads = 0;                 // 0 means hardware concurrency
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

enum class IipVerdict { holds, fails, no_counterexample_found };
std::string to_string(IipVerdict v);

struct IdealWitness {
  Vector generator;
  Subspace ideal;
  std::size_t intersection_dim = 0;
};

struct IipResult {
  IipVerdict verdict = IipVerdict::holds;
  std::optional<IdealWitness> witness;
  std::uint64_t points_total = 0;     // projective points (exhaustive) or draws (sampled)
  std::uint64_t points_examined = 0;
  bool unit_in_subring = false;
  bool subring_closed = false;

  bool holds() const noexcept { return verdict == IipVerdict::holds; }
};

/// Number of points of P^{n-1}(GF(p)), saturating at UINT64_MAX.
std::uint64_t projective_point_count(std::uint32_t p, std::size_t n);
/// The k-th projective representative (first nonzero coordinate 1) in
/// enumeration order: by leading position, then lexicographic tail.
std::vector<std::uint32_t> projective_point(std::uint32_t p, std::size_t n, std::uint64_t k);

/// S ∩ I != 0 for every nonzero two-sided ideal I, decided on principal ideals.
/// GF(p): exhaustive over projective points, TooLarge past the budget. Q: only
/// the sampled mode runs, exhaustive mode throws TooLarge. Z: FieldRequired.
IipResult has_ideal_intersection_property(const Algebra& a, const Subspace& s, const IipOptions& options = {});

// ---------------------------------------------------------------------------
// Maximal commutativity

struct MaxCommResult {
  bool maximal = false;
  Subspace centralizer;
  std::optional<Vector> witness;  // in C_R(S) but not in S
};

/// C_R(S) = S. Throws NotCommutative if S is not commutative.
MaxCommResult is_maximal_commutative(const Algebra& a, const Subspace& s);

/// The ideal <a u_e - a u_s> built from a nonzero a u_s in C_R(A) with s a
/// non-identity endomorphism, together with the map phi(x u_t) = x.
struct MaxCommFailureIdeal {
  MorphismId s;
  Vector commuting;   // a u_s
  Vector generator;   // a u_e - a u_s
  Subspace ideal;
  bool meets_principal_trivially = false;  // I ∩ A = 0
  bool killed_by_phi = false;              // phi(I) = 0
};

/// Skew category algebras only (InvalidInput otherwise). Empty when no
/// non-identity endomorphism component of C_R(A) is nonzero.
std::optional<MaxCommFailureIdeal> maxcomm_failure_ideal(const CrossedProduct& r);

struct EquivalenceReport {
  bool maximal_commutative = false;
  IipResult iip;
  bool equivalent = false;
  MaxCommResult maxcomm;
  std::optional<MaxCommFailureIdeal> construction;
};

/// For a skew groupoid algebra with commutative principal component A:
/// computes maximal commutativity of A and the IIP of A and compares them.
/// Throws InvalidInput outside those hypotheses.
EquivalenceReport check_maxcomm_iip_equivalence(const CrossedProduct& r, const IipOptions& options = {});

struct CommutantIipReport {
  bool applicable = false;  // groupoid grading, nondegenerate on some side
  bool right = false;
  bool left = false;
  std::optional<IipResult> iip;  // only run when applicable
  bool holds = true;             // vacuous when not applicable
};

/// Nondegenerate groupoid grading implies C_R(Z(R_0)) has the IIP.
CommutantIipReport check_commutant_iip(const GradedAlgebra& a, const IipOptions& options = {});

// ---------------------------------------------------------------------------
// Morphisms

/// Linear map given on basis vectors: column j is the image of basis j.
class AlgebraMorphism {
 public:
  /// Throws NotAHomomorphism unless the unit and every basis product are preserved.
  AlgebraMorphism(Algebra source, Algebra target, Matrix matrix);

  const Algebra& source() const noexcept { return source_; }
  const Algebra& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  Vector apply(const Vector& v) const { return matrix_.apply(v); }

  static AlgebraMorphism identity(const Algebra& a);

 private:
  Algebra source_;
  Algebra target_;
  Matrix matrix_;
};

struct Injectivity {
  bool full = false;
  bool restricted = false;
};

Injectivity morphism_injectivity(const AlgebraMorphism& phi, const Subspace& s);

/// R / I with basis the non-pivot coordinates of I's echelon form, and the
/// projection R -> R / I. I must be a two-sided ideal.
AlgebraMorphism quotient_by_ideal(const Algebra& a, const Subspace& ideal);

}  // namespace gral

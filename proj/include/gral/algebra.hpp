#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gral/category.hpp"
#include "gral/linalg.hpp"

namespace gral {

/// Sparse coordinate vector over a fixed basis; zero coordinates are omitted
/// and terms are kept sorted by basis index.
class Element {
 public:
  using Term = std::pair<std::size_t, Scalar>;

  Element(const CoefficientRing& ring, std::size_t dim);  // zero
  static Element basis(const CoefficientRing& ring, std::size_t dim, std::size_t i);
  static Element from_dense(const CoefficientRing& ring, const Vector& v);

  const CoefficientRing& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  Scalar coeff(std::size_t i) const;
  void set(std::size_t i, const Scalar& value);
  /// this += c * other
  void add_scaled(const Scalar& c, const Element& other);
  Vector dense() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, const Element& a);
  friend bool operator==(const Element& a, const Element& b) = default;

 private:
  void require_compatible(const Element& other) const;

  CoefficientRing ring_;
  std::size_t dim_;
  std::vector<Term> terms_;
};

/// Finite-dimensional unital algebra given by structure constants on a named
/// basis. Products of omitted pairs are zero.
class Algebra {
 public:
  Algebra(const CoefficientRing& ring, std::vector<std::string> basis, std::vector<Element> products, Element unit);
  /// Builds from a map of nonzero basis products.
  static Algebra from_table(const CoefficientRing& ring, std::vector<std::string> basis,
                            const std::map<std::pair<std::size_t, std::size_t>, Element>& products, Element unit);

  const CoefficientRing& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  const std::string& basis_name(std::size_t i) const { return basis_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  const Element& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  const Element& unit() const noexcept { return unit_; }

  Element multiply(const Element& a, const Element& b) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  Element zero() const { return Element(ring_, dim()); }
  Element basis_element(std::size_t i) const { return Element::basis(ring_, dim(), i); }

  /// Matrix of x -> a x (left) or x -> x a (right), columns indexed by basis.
  Matrix left_multiplication(const Vector& a) const;
  Matrix right_multiplication(const Vector& a) const;

  bool is_commutative() const;
  /// Associativity on basis triples, two-sided unit, unit nonzero.
  ValidationReport validate() const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  CoefficientRing ring_;
  std::vector<std::string> basis_;
  std::vector<Element> products_;  // dim x dim, row-major
  Element unit_;
};

/// Bilinear map a, b -> a b on dense coordinates, summed over the sparse table.
Vector structure_product(const Algebra& algebra, const Vector& a, const Vector& b);

enum class Verify { full, skip };

/// Algebra with a homogeneous basis and a degree map into a finite category.
class GradedAlgebra {
 public:
  GradedAlgebra(Algebra algebra, FiniteCategory category, std::vector<MorphismId> degree);

  const Algebra& algebra() const noexcept { return algebra_; }
  const FiniteCategory& category() const noexcept { return category_; }
  const CoefficientRing& ring() const noexcept { return algebra_.ring(); }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  MorphismId degree(std::size_t i) const { return degree_.at(i); }
  const std::vector<MorphismId>& degrees() const noexcept { return degree_; }
  /// Basis indices of degree s, in basis order.
  const std::vector<std::size_t>& component_indices(MorphismId s) const { return by_degree_.at(s.index); }

  Element multiply(const Element& a, const Element& b) const;

  friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

 private:
  Algebra algebra_;
  FiniteCategory category_;
  std::vector<MorphismId> degree_;
  std::vector<std::vector<std::size_t>> by_degree_;
};

/// Category axioms, associativity, two-sided unit, 1 != 0 and the G-filter law.
/// With Verify::skip the associativity sweep is left out.
ValidationReport validate_grading(const GradedAlgebra& a, Verify verify = Verify::full);

std::map<MorphismId, Element> homogeneous_components(const GradedAlgebra& a, const Element& x);
Subspace component_subspace(const GradedAlgebra& a, MorphismId s);
Subspace principal_component(const GradedAlgebra& a);
bool unit_in_principal_component(const GradedAlgebra& a);

struct StrongGradingResult {
  bool strong = true;
  std::optional<std::pair<MorphismId, MorphismId>> pair;  // failing composable pair
  std::optional<Vector> missed;                           // vector of R_st outside R_s R_t
};

/// R_s R_t = R_st for every composable pair. Over Z the product span is compared
/// to R_st as lattices via Hermite normal forms, which is exact.
StrongGradingResult is_strongly_graded(const GradedAlgebra& a);

}  // namespace gral

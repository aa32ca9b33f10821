#include "gral/algebra.hpp"

#include <algorithm>

namespace gral {

// ---------------------------------------------------------------------------
// Element

Element::Element(const CoefficientRing& ring, std::size_t dim) : ring_(ring), dim_(dim) {}

Element Element::basis(const CoefficientRing& ring, std::size_t dim, std::size_t i) {
  Element e(ring, dim);
  e.set(i, Scalar::one(ring));
  return e;
}

Element Element::from_dense(const CoefficientRing& ring, const Vector& v) {
  Element e(ring, v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) e.terms_.emplace_back(i, v[i]);
  return e;
}

Scalar Element::coeff(std::size_t i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i, [](const Term& t, std::size_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == i) return it->second;
  return Scalar(ring_);
}

void Element::set(std::size_t i, const Scalar& value) {
  if (i >= dim_) throw Error(ErrorCode::invalid_input, "coordinate out of range");
  if (!(value.ring() == ring_)) throw Error(ErrorCode::ring_mismatch, value.ring().name() + " vs " + ring_.name());
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i, [](const Term& t, std::size_t k) { return t.first < k; });
  const bool present = it != terms_.end() && it->first == i;
  if (value.is_zero()) {
    if (present) terms_.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    terms_.insert(it, {i, value});
  }
}

void Element::require_compatible(const Element& other) const {
  if (!(ring_ == other.ring_)) throw Error(ErrorCode::ring_mismatch, ring_.name() + " vs " + other.ring_.name());
  if (dim_ != other.dim_) throw Error(ErrorCode::algebra_mismatch, "elements of different algebras");
}

void Element::add_scaled(const Scalar& c, const Element& other) {
  require_compatible(other);
  if (c.is_zero() || other.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar v = a->second + c * b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Vector Element::dense() const {
  Vector v = zero_vector(ring_, dim_);
  for (const auto& [i, c] : terms_) v[i] = c;
  return v;
}

Element& Element::operator+=(const Element& other) {
  add_scaled(Scalar::one(ring_), other);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  add_scaled(-Scalar::one(ring_), other);
  return *this;
}

Element operator*(const Scalar& c, const Element& a) {
  Element r(a.ring_, a.dim_);
  if (c.is_zero()) return r;
  for (const auto& [i, v] : a.terms_) {
    Scalar p = c * v;
    if (!p.is_zero()) r.terms_.emplace_back(i, std::move(p));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(const CoefficientRing& ring, std::vector<std::string> basis, std::vector<Element> products,
                 Element unit)
    : ring_(ring), basis_(std::move(basis)), products_(std::move(products)), unit_(std::move(unit)) {
  const std::size_t n = basis_.size();
  if (products_.size() != n * n) throw Error(ErrorCode::invalid_input, "structure table has the wrong size");
  for (const auto& p : products_)
    if (p.dim() != n || !(p.ring() == ring_))
      throw Error(ErrorCode::invalid_input, "structure constant outside the algebra");
  if (unit_.dim() != n || !(unit_.ring() == ring_)) throw Error(ErrorCode::invalid_input, "unit outside the algebra");
  std::vector<std::string> sorted = basis_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::invalid_input, "duplicate basis id");
}

Algebra Algebra::from_table(const CoefficientRing& ring, std::vector<std::string> basis,
                            const std::map<std::pair<std::size_t, std::size_t>, Element>& products, Element unit) {
  const std::size_t n = basis.size();
  std::vector<Element> table(n * n, Element(ring, n));
  for (const auto& [ij, v] : products) {
    if (ij.first >= n || ij.second >= n) throw Error(ErrorCode::invalid_input, "structure index out of range");
    table[ij.first * n + ij.second] = v;
  }
  return Algebra(ring, std::move(basis), std::move(table), std::move(unit));
}

std::optional<std::size_t> Algebra::index_of(const std::string& name) const {
  auto it = std::find(basis_.begin(), basis_.end(), name);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  if (a.dim() != dim() || b.dim() != dim()) throw Error(ErrorCode::algebra_mismatch, "element of another algebra");
  Element r = zero();
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, y] : b.terms()) r.add_scaled(x * y, product(i, j));
  return r;
}

Vector structure_product(const Algebra& algebra, const Vector& a, const Vector& b) {
  const std::size_t n = algebra.dim();
  if (a.size() != n || b.size() != n) throw Error(ErrorCode::algebra_mismatch, "vector of another algebra");
  Vector r = zero_vector(algebra.ring(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      for (const auto& [k, v] : algebra.product(i, j).terms()) r[k] += c * v;
    }
  }
  return r;
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const { return structure_product(*this, a, b); }

Matrix Algebra::left_multiplication(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(a, unit_vector(ring_, dim(), j)));
  return Matrix::from_columns(ring_, dim(), cols);
}

Matrix Algebra::right_multiplication(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(unit_vector(ring_, dim(), j), a));
  return Matrix::from_columns(ring_, dim(), cols);
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (!(product(i, j) == product(j, i))) return false;
  return true;
}

namespace {

void check_unit(const Algebra& a, ValidationReport& r) {
  if (a.unit().is_zero()) r.add("unit", "1 = 0");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Element b = a.basis_element(i);
    if (!(a.multiply(a.unit(), b) == b)) r.add("unit", "1 is not a left unit on " + a.basis_name(i));
    if (!(a.multiply(b, a.unit()) == b)) r.add("unit", "1 is not a right unit on " + a.basis_name(i));
  }
}

void check_associativity(const Algebra& a, ValidationReport& r) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Element left = a.zero();
        for (const auto& [m, c] : ij.terms()) left.add_scaled(c, a.product(m, k));
        Element right = a.zero();
        for (const auto& [m, c] : a.product(j, k).terms()) right.add_scaled(c, a.product(i, m));
        if (!(left == right))
          r.add("associativity",
                "(" + a.basis_name(i) + " " + a.basis_name(j) + ") " + a.basis_name(k) + " != " + a.basis_name(i) +
                    " (" + a.basis_name(j) + " " + a.basis_name(k) + ")");
      }
    }
}

}  // namespace

ValidationReport Algebra::validate() const {
  ValidationReport r;
  check_unit(*this, r);
  check_associativity(*this, r);
  return r;
}

// ---------------------------------------------------------------------------
// GradedAlgebra

GradedAlgebra::GradedAlgebra(Algebra algebra, FiniteCategory category, std::vector<MorphismId> degree)
    : algebra_(std::move(algebra)), category_(std::move(category)), degree_(std::move(degree)) {
  if (degree_.size() != algebra_.dim()) throw Error(ErrorCode::invalid_input, "every basis element needs a degree");
  by_degree_.resize(category_.num_morphisms());
  for (std::size_t i = 0; i < degree_.size(); ++i) {
    if (degree_[i].index >= category_.num_morphisms())
      throw Error(ErrorCode::unknown_morphism, "degree of " + algebra_.basis_name(i) + " is not a morphism");
    by_degree_[degree_[i].index].push_back(i);
  }
}

Element GradedAlgebra::multiply(const Element& a, const Element& b) const { return algebra_.multiply(a, b); }

ValidationReport validate_grading(const GradedAlgebra& a, Verify verify) {
  ValidationReport r = a.category().validation();
  const Algebra& alg = a.algebra();
  check_unit(alg, r);
  const auto& cat = a.category();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto s = a.degree(i);
      const auto t = a.degree(j);
      const Element& p = alg.product(i, j);
      if (p.is_zero()) continue;
      const std::string pair = alg.basis_name(i) + " " + alg.basis_name(j);
      if (!cat.composable(s, t)) {
        r.add("filter", pair + " is nonzero but " + cat.name(s) + ", " + cat.name(t) + " are not composable");
        continue;
      }
      const auto st = cat.compose(s, t);
      for (const auto& [k, c] : p.terms()) {
        if (!st || a.degree(k) != *st) {
          r.add("filter", pair + " has a component on " + alg.basis_name(k) + " outside degree " +
                              (st ? cat.name(*st) : std::string("?")));
          break;
        }
      }
    }
  if (verify == Verify::full) check_associativity(alg, r);
  return r;
}

std::map<MorphismId, Element> homogeneous_components(const GradedAlgebra& a, const Element& x) {
  std::map<MorphismId, Element> out;
  for (const auto& [i, c] : x.terms()) {
    auto [it, _] = out.try_emplace(a.degree(i), a.ring(), a.dim());
    it->second.set(i, c);
  }
  return out;
}

Subspace component_subspace(const GradedAlgebra& a, MorphismId s) {
  if (s.index >= a.category().num_morphisms()) throw Error(ErrorCode::unknown_morphism, "morphism index out of range");
  return Subspace::coordinate(a.ring(), a.dim(), a.component_indices(s));
}

Subspace principal_component(const GradedAlgebra& a) {
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.category().is_identity(a.degree(i))) coords.push_back(i);
  return Subspace::coordinate(a.ring(), a.dim(), coords);
}

bool unit_in_principal_component(const GradedAlgebra& a) {
  for (const auto& [i, c] : a.algebra().unit().terms())
    if (!a.category().is_identity(a.degree(i))) return false;
  return true;
}

StrongGradingResult is_strongly_graded(const GradedAlgebra& a) {
  const auto& cat = a.category();
  cat.require_valid();
  const Algebra& alg = a.algebra();
  for (const auto& [s, t] : cat.composable_pairs()) {
    const auto st = *cat.compose(s, t);
    std::vector<Vector> products;
    for (auto i : a.component_indices(s))
      for (auto j : a.component_indices(t)) products.push_back(alg.product(i, j).dense());
    const Subspace span = Subspace::span(a.ring(), a.dim(), std::move(products));
    for (auto k : a.component_indices(st)) {
      Vector v = unit_vector(a.ring(), a.dim(), k);
      if (!span.contains(v)) return {false, std::make_pair(s, t), std::move(v)};
    }
  }
  return {};
}

}  // namespace gral

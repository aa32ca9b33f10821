#include "gral/analysis.hpp"

namespace gral {

AlgebraMorphism::AlgebraMorphism(Algebra source, Algebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!(source_.ring() == target_.ring()) || !(matrix_.ring() == source_.ring()))
    throw Error(ErrorCode::ring_mismatch, "morphism between algebras over different rings");
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw Error(ErrorCode::not_a_homomorphism, "matrix shape does not match the algebras");
  if (!(apply(source_.unit().dense()) == target_.unit().dense()))
    throw Error(ErrorCode::not_a_homomorphism, "the unit is not preserved");
  for (std::size_t i = 0; i < source_.dim(); ++i)
    for (std::size_t j = 0; j < source_.dim(); ++j) {
      const Vector lhs = apply(source_.product(i, j).dense());
      const Vector rhs = target_.multiply(matrix_.column(i), matrix_.column(j));
      if (!(lhs == rhs))
        throw Error(ErrorCode::not_a_homomorphism,
                    "product " + source_.basis_name(i) + " " + source_.basis_name(j) + " is not preserved");
    }
}

AlgebraMorphism AlgebraMorphism::identity(const Algebra& a) {
  return AlgebraMorphism(a, a, Matrix::identity(a.ring(), a.dim()));
}

Injectivity morphism_injectivity(const AlgebraMorphism& phi, const Subspace& s) {
  const auto& ring = phi.source().ring();
  const std::size_t m = phi.target().dim();
  std::vector<Vector> images;
  for (std::size_t j = 0; j < phi.source().dim(); ++j) images.push_back(phi.matrix().column(j));
  Injectivity out;
  out.full = rank_over_fraction_field(ring, m, images) == phi.source().dim();
  std::vector<Vector> restricted;
  for (const auto& v : s.basis()) restricted.push_back(phi.apply(v));
  out.restricted = rank_over_fraction_field(ring, m, restricted) == s.dim();
  return out;
}

AlgebraMorphism quotient_by_ideal(const Algebra& a, const Subspace& ideal) {
  require_field(a.ring(), "quotient algebra");
  const std::size_t n = a.dim();
  for (const auto& v : ideal.basis())
    for (std::size_t i = 0; i < n; ++i) {
      const Vector b = unit_vector(a.ring(), n, i);
      if (!ideal.contains(a.multiply(b, v)) || !ideal.contains(a.multiply(v, b)))
        throw Error(ErrorCode::invalid_input, "not a two-sided ideal");
    }
  std::vector<bool> pivot(n, false);
  for (auto c : ideal.pivots()) pivot[c] = true;
  std::vector<std::size_t> kept;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) {
      kept.push_back(i);
      names.push_back(a.basis_name(i));
    }
  const std::size_t q = kept.size();
  auto project = [&](const Vector& v) {
    const Vector r = ideal.reduce(v);
    Vector out;
    out.reserve(q);
    for (auto i : kept) out.push_back(r[i]);
    return out;
  };
  std::vector<Element> table;
  for (auto i : kept)
    for (auto j : kept) table.push_back(Element::from_dense(a.ring(), project(a.product(i, j).dense())));
  Algebra quotient(a.ring(), std::move(names), std::move(table),
                   Element::from_dense(a.ring(), project(a.unit().dense())));
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(project(unit_vector(a.ring(), n, j)));
  Matrix m = Matrix::from_columns(a.ring(), q, cols);
  return AlgebraMorphism(a, std::move(quotient), std::move(m));
}

}  // namespace gral

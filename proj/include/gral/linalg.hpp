#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gral/scalar.hpp"

namespace gral {

using Vector = std::vector<Scalar>;

Vector zero_vector(const CoefficientRing& ring, std::size_t n);
Vector unit_vector(const CoefficientRing& ring, std::size_t n, std::size_t i);
bool is_zero(const Vector& v) noexcept;
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
/// v += c * w
void axpy(Vector& v, const Scalar& c, const Vector& w);

/// Dense matrix over a coefficient ring, row-major.
class Matrix {
 public:
  Matrix(const CoefficientRing& ring, std::size_t rows, std::size_t cols);
  static Matrix identity(const CoefficientRing& ring, std::size_t n);
  static Matrix from_columns(const CoefficientRing& ring, std::size_t rows, std::span<const Vector> columns);

  const CoefficientRing& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  /// Matrix times column vector.
  Vector apply(const Vector& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  CoefficientRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Canonical echelon form of a row list: reduced row echelon form over a field,
/// Hermite normal form (positive pivots, entries above pivots reduced into
/// [0, pivot)) over the integers. Zero rows are dropped.
struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
};

Echelon echelon_form(const CoefficientRing& ring, std::size_t cols, std::vector<Vector> rows);

/// Rank; over Z this equals the rank over Q.
std::size_t rank(const CoefficientRing& ring, std::size_t cols, std::vector<Vector> rows);

/// Rank over the fraction field (Q for Z), i.e. the field rank of the same rows.
std::size_t rank_over_fraction_field(const CoefficientRing& ring, std::size_t cols, const std::vector<Vector>& rows);

/// Basis of {v : M v = 0} for M given by its rows. Field only.
std::vector<Vector> nullspace(const CoefficientRing& ring, std::size_t cols, const std::vector<Vector>& rows);

/// Basis of {c : sum_i c_i rows[i] = 0}. Field only.
std::vector<Vector> left_kernel(const CoefficientRing& ring, std::size_t cols, const std::vector<Vector>& rows);

/// Finite-dimensional subspace (or Z-submodule) of R^n held in canonical
/// echelon form, so equality is row equality.
class Subspace {
 public:
  Subspace(const CoefficientRing& ring, std::size_t ambient_dim);  // zero subspace

  static Subspace span(const CoefficientRing& ring, std::size_t ambient_dim, std::vector<Vector> generators);
  static Subspace full(const CoefficientRing& ring, std::size_t ambient_dim);
  /// Span of the standard basis vectors at the given coordinates.
  static Subspace coordinate(const CoefficientRing& ring, std::size_t ambient_dim, std::span<const std::size_t> coords);

  const CoefficientRing& ring() const noexcept { return ring_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return echelon_.rows.size(); }
  bool is_zero() const noexcept { return echelon_.rows.empty(); }
  const std::vector<Vector>& basis() const noexcept { return echelon_.rows; }
  const std::vector<std::size_t>& pivots() const noexcept { return echelon_.pivots; }

  /// Residual of v after reduction by the basis; zero iff v is a member.
  /// Over Z the residual is the Hermite remainder.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  /// Field only.
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  void require_compatible(const Subspace& other) const;

  CoefficientRing ring_;
  std::size_t ambient_;
  Echelon echelon_;
};

void require_field(const CoefficientRing& ring, const char* operation);

}  // namespace gral

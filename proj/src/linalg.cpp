#include "gral/linalg.hpp"

#include <algorithm>
#include <utility>

namespace gral {

Vector zero_vector(const CoefficientRing& ring, std::size_t n) { return Vector(n, Scalar(ring)); }

Vector unit_vector(const CoefficientRing& ring, std::size_t n, std::size_t i) {
  Vector v = zero_vector(ring, n);
  v.at(i) = Scalar::one(ring);
  return v;
}

bool is_zero(const Vector& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::invalid_input, "vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::invalid_input, "vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x = c * x;
  return r;
}

void axpy(Vector& v, const Scalar& c, const Vector& w) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!w[i].is_zero()) v[i] += c * w[i];
}

void require_field(const CoefficientRing& ring, const char* operation) {
  if (!ring.is_field())
    throw Error(ErrorCode::field_required, std::string(operation) + " needs field coefficients, got " + ring.name());
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(const CoefficientRing& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar(ring)) {}

Matrix Matrix::identity(const CoefficientRing& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
  return m;
}

Matrix Matrix::from_columns(const CoefficientRing& ring, std::size_t rows, std::span<const Vector> columns) {
  Matrix m(ring, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::invalid_input, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::invalid_input, "matrix/vector size mismatch");
  Vector out = zero_vector(ring_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Echelon forms

namespace {

Echelon rref_field(const CoefficientRing& ring, std::size_t cols, std::vector<Vector> rows) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pick = r;
    while (pick < rows.size() && rows[pick][c].is_zero()) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[r], rows[pick]);
    const Scalar inv = inverse(rows[r][c]);
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      axpy(rows[i], -rows[i][c], rows[r]);
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  (void)ring;
  return e;
}

using IntRow = std::vector<mpz_class>;

void int_axpy(IntRow& v, const mpz_class& c, const IntRow& w) {
  if (c == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (w[i] != 0) v[i] += c * w[i];
}

Echelon hermite(const CoefficientRing& ring, std::size_t cols, const std::vector<Vector>& input) {
  std::vector<IntRow> rows;
  rows.reserve(input.size());
  for (const auto& v : input) {
    IntRow row(cols);
    for (std::size_t i = 0; i < cols; ++i) row[i] = v[i].integer();
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    bool found = false;
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      found = true;
      std::swap(rows[r], rows[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        int_axpy(rows[i], -q, rows[r]);
        if (rows[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!found) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      int_axpy(rows[i], -q, rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e;
  e.pivots = std::move(pivots);
  for (std::size_t i = 0; i < r; ++i) {
    Vector v;
    v.reserve(cols);
    for (const auto& x : rows[i]) v.push_back(Scalar::from_integer(ring, x));
    e.rows.push_back(std::move(v));
  }
  return e;
}

std::vector<Vector> to_rationals(const std::vector<Vector>& rows) {
  const auto q = CoefficientRing::rationals();
  std::vector<Vector> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Vector v;
    v.reserve(row.size());
    for (const auto& x : row) v.push_back(Scalar::from_rational(q, x.to_rational()));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Echelon echelon_form(const CoefficientRing& ring, std::size_t cols, std::vector<Vector> rows) {
  for (const auto& row : rows)
    if (row.size() != cols) throw Error(ErrorCode::invalid_input, "row length mismatch in echelon form");
  if (ring.is_field()) return rref_field(ring, cols, std::move(rows));
  return hermite(ring, cols, rows);
}

std::size_t rank(const CoefficientRing& ring, std::size_t cols, std::vector<Vector> rows) {
  return echelon_form(ring, cols, std::move(rows)).rows.size();
}

std::size_t rank_over_fraction_field(const CoefficientRing& ring, std::size_t cols, const std::vector<Vector>& rows) {
  if (ring.is_field()) return rank(ring, cols, rows);
  return rank(CoefficientRing::rationals(), cols, to_rationals(rows));
}

std::vector<Vector> nullspace(const CoefficientRing& ring, std::size_t cols, const std::vector<Vector>& rows) {
  require_field(ring, "nullspace");
  Echelon e = echelon_form(ring, cols, rows);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(ring, cols, f);
    for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivots[k]] = -e.rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> left_kernel(const CoefficientRing& ring, std::size_t cols, const std::vector<Vector>& rows) {
  std::vector<Vector> transposed(cols, zero_vector(ring, rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) transposed[j][i] = rows[i][j];
  return nullspace(ring, rows.size(), transposed);
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(const CoefficientRing& ring, std::size_t ambient_dim) : ring_(ring), ambient_(ambient_dim) {}

Subspace Subspace::span(const CoefficientRing& ring, std::size_t ambient_dim, std::vector<Vector> generators) {
  Subspace s(ring, ambient_dim);
  s.echelon_ = echelon_form(ring, ambient_dim, std::move(generators));
  return s;
}

Subspace Subspace::full(const CoefficientRing& ring, std::size_t ambient_dim) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < ambient_dim; ++i) gens.push_back(unit_vector(ring, ambient_dim, i));
  return span(ring, ambient_dim, std::move(gens));
}

Subspace Subspace::coordinate(const CoefficientRing& ring, std::size_t ambient_dim, std::span<const std::size_t> coords) {
  std::vector<Vector> gens;
  for (auto i : coords) gens.push_back(unit_vector(ring, ambient_dim, i));
  return span(ring, ambient_dim, std::move(gens));
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::invalid_input, "vector does not live in the ambient space");
  Vector r = v;
  for (std::size_t k = 0; k < echelon_.rows.size(); ++k) {
    const std::size_t c = echelon_.pivots[k];
    if (r[c].is_zero()) continue;
    const Vector& row = echelon_.rows[k];
    if (ring_.is_field()) {
      axpy(r, -r[c], row);
    } else {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), r[c].integer().get_mpz_t(), row[c].integer().get_mpz_t());
      axpy(r, -Scalar::from_integer(ring_, q), row);
    }
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return gral::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_compatible(other);
  return std::all_of(other.basis().begin(), other.basis().end(), [&](const Vector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  require_compatible(other);
  std::vector<Vector> gens = basis();
  gens.insert(gens.end(), other.basis().begin(), other.basis().end());
  return span(ring_, ambient_, std::move(gens));
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_compatible(other);
  require_field(ring_, "subspace intersection");
  // Zassenhaus: rows (u | u) and (w | 0); rows with vanishing left half span U ∩ W.
  const std::size_t n = ambient_;
  std::vector<Vector> rows;
  for (const auto& u : basis()) {
    Vector row = u;
    row.insert(row.end(), u.begin(), u.end());
    rows.push_back(std::move(row));
  }
  for (const auto& w : other.basis()) {
    Vector row = w;
    row.resize(2 * n, Scalar(ring_));
    rows.push_back(std::move(row));
  }
  Echelon e = echelon_form(ring_, 2 * n, std::move(rows));
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (e.pivots[k] < n) continue;
    gens.emplace_back(e.rows[k].begin() + static_cast<std::ptrdiff_t>(n), e.rows[k].end());
  }
  return span(ring_, n, std::move(gens));
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ring_ == b.ring_ && a.ambient_ == b.ambient_ && a.echelon_.pivots == b.echelon_.pivots &&
         a.echelon_.rows == b.echelon_.rows;
}

void Subspace::require_compatible(const Subspace& other) const {
  if (!(ring_ == other.ring_)) throw Error(ErrorCode::ring_mismatch, ring_.name() + " vs " + other.ring_.name());
  if (ambient_ != other.ambient_) throw Error(ErrorCode::algebra_mismatch, "subspaces live in different spaces");
}

}  // namespace gral

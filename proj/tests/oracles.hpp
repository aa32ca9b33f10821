#pragma once

// Brute-force reference implementations over small prime fields. They read
// raw structure constants and composition tables and enumerate elements, so
// they share no algorithm with the library.

#include <cstdint>
#include <optional>
#include <vector>

#include "gral/algebra.hpp"

namespace oracle {

using Vec = std::vector<int>;

struct Table {
  int p = 2;
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::size_t, int>>> prod;  // n*n
  Vec unit;

  explicit Table(const gral::Algebra& a) : p(static_cast<int>(a.ring().characteristic())), n(a.dim()) {
    prod.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : a.product(i, j).terms()) prod[i * n + j].push_back({k, static_cast<int>(c.residue())});
    unit.assign(n, 0);
    for (const auto& [k, c] : a.unit().terms()) unit[k] = static_cast<int>(c.residue());
  }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!y[j]) continue;
        for (const auto& [k, c] : prod[i * n + j]) out[k] = (out[k] + x[i] * y[j] * c) % p;
      }
    }
    return out;
  }
  Vec basis(std::size_t i) const {
    Vec v(n, 0);
    v[i] = 1;
    return v;
  }
  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < n; ++i) s *= static_cast<std::uint64_t>(p);
    return s;
  }
  Vec decode(std::uint64_t idx) const {
    Vec v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<int>(idx % static_cast<std::uint64_t>(p));
      idx /= static_cast<std::uint64_t>(p);
    }
    return v;
  }
  std::uint64_t encode(const Vec& v) const {
    std::uint64_t idx = 0;
    for (std::size_t i = n; i-- > 0;) idx = idx * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(v[i]);
    return idx;
  }
  Vec add(const Vec& a, const Vec& b, int c = 1) const {
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = (a[i] + c * b[i]) % p;
    return out;
  }
};

inline bool is_zero(const Vec& v) {
  for (int x : v)
    if (x) return false;
  return true;
}

inline Vec from_dense(const gral::Vector& v) {
  Vec out;
  for (const auto& s : v) out.push_back(static_cast<int>(s.residue()));
  return out;
}

/// Element set of a subspace, as a membership bitmap over all p^n vectors.
class SpanSet {
 public:
  explicit SpanSet(const Table& t) : t_(&t), member_(t.size(), false), elems_{0} { member_[0] = true; }

  bool contains(const Vec& v) const { return member_[t_->encode(v)]; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<std::uint64_t>& elements() const { return elems_; }

  /// Adds v and closes under linear combinations; returns false if v was already in.
  bool add(const Vec& v) {
    if (contains(v)) return false;
    std::vector<std::uint64_t> fresh;
    const std::size_t before = elems_.size();
    for (int c = 1; c < t_->p; ++c)
      for (std::size_t i = 0; i < before; ++i) {
        const Vec w = t_->add(t_->decode(elems_[i]), v, c);
        const auto idx = t_->encode(w);
        if (!member_[idx]) {
          member_[idx] = true;
          fresh.push_back(idx);
        }
      }
    elems_.insert(elems_.end(), fresh.begin(), fresh.end());
    return true;
  }

  std::size_t dim() const {
    std::size_t d = 0;
    for (std::size_t s = 1; s < elems_.size(); s *= static_cast<std::size_t>(t_->p)) ++d;
    return d;
  }

 private:
  const Table* t_;
  std::vector<bool> member_;
  std::vector<std::uint64_t> elems_;
};

inline SpanSet span_of(const Table& t, const std::vector<Vec>& gens) {
  SpanSet s(t);
  for (const auto& g : gens) s.add(g);
  return s;
}

/// Two-sided ideal generated by gens, by closing a spanning list under b_i * and * b_i.
inline SpanSet ideal_of(const Table& t, const std::vector<Vec>& gens) {
  SpanSet s(t);
  std::vector<Vec> queue;
  for (const auto& g : gens)
    if (s.add(g)) queue.push_back(g);
  while (!queue.empty()) {
    const Vec v = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < t.n; ++i)
      for (const Vec& w : {t.mul(t.basis(i), v), t.mul(v, t.basis(i))})
        if (s.add(w)) queue.push_back(w);
  }
  return s;
}

/// dim {x : x g = g x for every g in gens} by enumerating all x.
inline std::size_t centralizer_dim(const Table& t, const std::vector<Vec>& gens) {
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < t.size(); ++idx) {
    const Vec x = t.decode(idx);
    bool ok = true;
    for (const auto& g : gens)
      if (t.mul(x, g) != t.mul(g, x)) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  std::size_t d = 0;
  for (std::uint64_t s = 1; s < count; s *= static_cast<std::uint64_t>(t.p)) ++d;
  return d;
}

inline std::size_t center_dim(const Table& t) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < t.n; ++i) gens.push_back(t.basis(i));
  return centralizer_dim(t, gens);
}

inline bool associative(const Table& t) {
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t k = 0; k < t.n; ++k)
        if (t.mul(t.mul(t.basis(i), t.basis(j)), t.basis(k)) != t.mul(t.basis(i), t.mul(t.basis(j), t.basis(k))))
          return false;
  return true;
}

/// IIP of the subspace S by saturating every 1- and 2-dimensional subspace of R.
inline bool iip(const Table& t, const SpanSet& s) {
  auto meets = [&](const SpanSet& ideal) {
    for (auto idx : ideal.elements())
      if (idx != 0 && s.contains(t.decode(idx))) return true;
    return false;
  };
  const std::uint64_t total = t.size();
  for (std::uint64_t a = 1; a < total; ++a) {
    const Vec x = t.decode(a);
    if (!meets(ideal_of(t, {x}))) return false;
    for (std::uint64_t b = a + 1; b < total; ++b) {
      const Vec y = t.decode(b);
      if (span_of(t, {x}).contains(y)) continue;
      if (!meets(ideal_of(t, {x, y}))) return false;
    }
  }
  return true;
}

/// Literal nondegeneracy: every nonzero x in R_s has x R_{s^-1} != 0 (right)
/// or R_{s^-1} x != 0 (left), over isomorphisms s found by searching the table.
inline bool nondegenerate(const gral::GradedAlgebra& a, bool right) {
  const Table t(a.algebra());
  const auto& cat = a.category();
  for (auto s : cat.morphisms()) {
    std::optional<gral::MorphismId> inv;
    for (auto u : cat.morphisms()) {
      const auto su = cat.compose(s, u);
      const auto us = cat.compose(u, s);
      if (su && us && cat.is_identity(*su) && cat.is_identity(*us)) inv = u;
    }
    if (!inv) continue;
    const auto& coords = a.component_indices(s);
    const auto& partner = a.component_indices(*inv);
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < coords.size(); ++i) combos *= static_cast<std::uint64_t>(t.p);
    for (std::uint64_t c = 1; c < combos; ++c) {
      Vec x(t.n, 0);
      std::uint64_t r = c;
      for (auto k : coords) {
        x[k] = static_cast<int>(r % static_cast<std::uint64_t>(t.p));
        r /= static_cast<std::uint64_t>(t.p);
      }
      bool nonzero = false;
      for (auto j : partner) {
        const Vec y = t.basis(j);
        if (!is_zero(right ? t.mul(x, y) : t.mul(y, x))) nonzero = true;
      }
      if (!nonzero) return false;
    }
  }
  return true;
}

/// Span of R_s R_t as an element set.
inline SpanSet product_span(const gral::GradedAlgebra& a, gral::MorphismId s, gral::MorphismId u) {
  const Table t(a.algebra());
  SpanSet out(t);
  for (auto i : a.component_indices(s))
    for (auto j : a.component_indices(u)) out.add(t.mul(t.basis(i), t.basis(j)));
  return out;
}

/// R_s R_t = R_st for every composable pair, by comparing element counts.
inline bool strongly_graded(const gral::GradedAlgebra& a) {
  const auto& cat = a.category();
  for (auto s : cat.morphisms())
    for (auto u : cat.morphisms()) {
      const auto st = cat.compose(s, u);
      if (!st) continue;
      if (product_span(a, s, u).dim() != a.component_indices(*st).size()) return false;
    }
  return true;
}

}  // namespace oracle

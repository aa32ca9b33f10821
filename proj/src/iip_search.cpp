#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <thread>
#include <utility>

#include "gral/analysis.hpp"

namespace gral {

std::string to_string(IipVerdict v) {
  switch (v) {
    case IipVerdict::holds: return "holds";
    case IipVerdict::fails: return "fails";
    case IipVerdict::no_counterexample_found: return "no-counterexample-found";
  }
  return "?";
}

std::uint64_t projective_point_count(std::uint32_t p, std::size_t n) {
  // 1 + p + ... + p^(n-1)
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap - power) return cap;
    total += power;
    if (i + 1 < n) {
      if (power > cap / p) return cap;
      power *= p;
    }
  }
  return total;
}

std::vector<std::uint32_t> projective_point(std::uint32_t p, std::size_t n, std::uint64_t k) {
  std::vector<std::uint32_t> v(n, 0);
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    const std::uint64_t block = projective_point_count(p, tail + 1) - projective_point_count(p, tail);
    if (k < block) {
      v[lead] = 1;
      for (std::size_t i = n; i-- > lead + 1;) {
        v[i] = static_cast<std::uint32_t>(k % p);
        k /= p;
      }
      return v;
    }
    k -= block;
  }
  throw Error(ErrorCode::invalid_input, "projective point index out of range");
}

namespace {

using Word = std::uint32_t;
using Dense = std::vector<Word>;

/// Structure constants of an algebra over GF(p) as sparse word lists.
struct FastAlgebra {
  Word p = 2;
  std::size_t n = 0;
  struct Term {
    std::uint32_t k;
    Word c;
  };
  std::vector<std::vector<Term>> table;  // n*n

  explicit FastAlgebra(const Algebra& a) : p(a.ring().characteristic()), n(a.dim()), table(n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : a.product(i, j).terms())
          table[i * n + j].push_back({static_cast<std::uint32_t>(k), c.residue()});
  }

  Word mul(Word a, Word b) const { return static_cast<Word>(std::uint64_t{a} * b % p); }
  Word add(Word a, Word b) const { return static_cast<Word>((std::uint64_t{a} + b) % p); }

  /// b_i x
  void left(std::size_t i, const Dense& x, Dense& out) const {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] == 0) continue;
      for (const auto& t : table[i * n + j]) out[t.k] = add(out[t.k], mul(x[j], t.c));
    }
  }
  /// x b_j
  void right(const Dense& x, std::size_t j, Dense& out) const {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (const auto& t : table[i * n + j]) out[t.k] = add(out[t.k], mul(x[i], t.c));
    }
  }
};

Word inverse_mod(Word a, Word p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return static_cast<Word>(t < 0 ? t + p : t);
}

/// Semi-echelon basis keyed by pivot column; each row has its pivot as first
/// nonzero entry, normalized to 1.
class FastEchelon {
 public:
  FastEchelon(Word p, std::size_t n) : p_(p), n_(n), pivot_row_(n, -1) {}

  std::size_t dim() const noexcept { return rows_.size(); }

  /// Reduces v in place; returns true and stores it when it was independent.
  bool insert(Dense& v) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (v[c] == 0) continue;
      const int r = pivot_row_[c];
      if (r < 0) {
        const Word inv = inverse_mod(v[c], p_);
        for (std::size_t k = c; k < n_; ++k) v[k] = static_cast<Word>(std::uint64_t{v[k]} * inv % p_);
        pivot_row_[c] = static_cast<int>(rows_.size());
        rows_.push_back(v);
        return true;
      }
      const Dense& row = rows_[static_cast<std::size_t>(r)];
      const Word f = p_ - v[c];
      for (std::size_t k = c; k < n_; ++k)
        if (row[k] != 0) v[k] = static_cast<Word>((v[k] + std::uint64_t{f} * row[k]) % p_);
    }
    return false;
  }

  const std::vector<Dense>& rows() const noexcept { return rows_; }

 private:
  Word p_;
  std::size_t n_;
  std::vector<int> pivot_row_;
  std::vector<Dense> rows_;
};

/// Saturates <x> while tracking both I and S + I; dim(S ∩ I) becomes positive
/// exactly when a vector enlarges I without enlarging S + I.
bool principal_ideal_meets(const FastAlgebra& fa, const FastEchelon& s_echelon, const Dense& x) {
  const std::size_t n = fa.n;
  FastEchelon ideal(fa.p, n);
  FastEchelon joint = s_echelon;
  Dense scratch(n), probe(n);
  auto push = [&](const Dense& v, std::vector<Dense>* keep) {
    probe = v;
    if (!ideal.insert(probe)) return false;
    if (keep) keep->push_back(v);
    probe = v;
    return !joint.insert(probe);
  };
  std::vector<Dense> left_span;
  if (push(x, &left_span)) return true;
  for (std::size_t i = 0; i < n; ++i) {
    fa.left(i, x, scratch);
    if (push(scratch, &left_span)) return true;
  }
  for (const auto& y : left_span)
    for (std::size_t j = 0; j < n; ++j) {
      fa.right(y, j, scratch);
      if (push(scratch, nullptr)) return true;
    }
  return false;
}

Vector to_vector(const CoefficientRing& ring, const Dense& d) {
  Vector v;
  v.reserve(d.size());
  for (auto w : d) v.push_back(Scalar::from_int(ring, w));
  return v;
}

IdealWitness make_witness(const Algebra& a, const Subspace& s, Vector gen) {
  Subspace ideal = two_sided_ideal(a, {gen});
  const std::size_t meet = ideal.intersect(s).dim();
  return IdealWitness{std::move(gen), std::move(ideal), meet};
}

bool meets_generic(const Algebra& a, const Subspace& s, const Vector& x) {
  return !two_sided_ideal(a, {x}).intersect(s).is_zero();
}

}  // namespace

IipResult has_ideal_intersection_property(const Algebra& a, const Subspace& s, const IipOptions& options) {
  const auto& ring = a.ring();
  require_field(ring, "ideal intersection property");
  if (!(s.ring() == ring) || s.ambient_dim() != a.dim())
    throw Error(ErrorCode::algebra_mismatch, "the subring does not live in this algebra");
  const std::size_t n = a.dim();

  IipResult out;
  out.unit_in_subring = s.contains(a.unit().dense());
  out.subring_closed = is_subring(a, s);

  if (options.sample) {
    out.points_total = *options.sample;
    std::mt19937_64 rng(options.seed);
    std::optional<FastAlgebra> fa;
    std::optional<FastEchelon> se;
    if (ring.is_prime_field()) {
      fa.emplace(a);
      se.emplace(ring.characteristic(), n);
      for (const auto& v : s.basis()) {
        Dense d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = v[i].residue();
        se->insert(d);
      }
    }
    for (std::uint64_t draw = 0; draw < *options.sample; ++draw) {
      Vector x = zero_vector(ring, n);
      Dense d(n, 0);
      do {
        for (std::size_t i = 0; i < n; ++i) {
          if (ring.is_prime_field()) {
            d[i] = static_cast<Word>(rng() % ring.characteristic());
            x[i] = Scalar::from_int(ring, d[i]);
          } else {
            x[i] = Scalar::from_int(ring, static_cast<long long>(rng() % 7) - 3);
          }
        }
      } while (is_zero(x));
      ++out.points_examined;
      const bool meets = fa ? principal_ideal_meets(*fa, *se, d) : meets_generic(a, s, x);
      if (!meets) {
        out.verdict = IipVerdict::fails;
        out.witness = make_witness(a, s, std::move(x));
        return out;
      }
    }
    out.verdict = IipVerdict::no_counterexample_found;
    return out;
  }

  if (!ring.is_prime_field())
    throw Error(ErrorCode::too_large, "exhaustive search over " + ring.name() + " is infinite; use sampled mode");
  const Word p = ring.characteristic();
  out.points_total = projective_point_count(p, n);
  if (out.points_total > options.budget)
    throw Error(ErrorCode::too_large, std::to_string(out.points_total) + " projective points exceed the budget of " +
                                          std::to_string(options.budget));

  const FastAlgebra fa(a);
  FastEchelon s_echelon(p, n);
  for (const auto& v : s.basis()) {
    Dense d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = v[i].residue();
    s_echelon.insert(d);
  }

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t chunk = 256;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, (out.points_total + chunk - 1) / chunk));
  threads = std::max(1u, threads);

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> found{std::numeric_limits<std::uint64_t>::max()};
  std::atomic<std::uint64_t> examined{0};
  auto worker = [&] {
    std::uint64_t local = 0;
    for (;;) {
      const std::uint64_t start = next.fetch_add(chunk);
      if (start >= out.points_total || start > found.load()) break;
      const std::uint64_t stop = std::min(out.points_total, start + chunk);
      Dense x = projective_point(p, n, start);
      for (std::uint64_t k = start; k < stop; ++k) {
        if (k > found.load(std::memory_order_relaxed)) break;
        if (k != start) x = projective_point(p, n, k);
        ++local;
        if (!principal_ideal_meets(fa, s_echelon, x)) {
          std::uint64_t cur = found.load();
          while (k < cur && !found.compare_exchange_weak(cur, k)) {
          }
          break;
        }
      }
    }
    examined += local;
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  out.points_examined = examined.load();
  const std::uint64_t hit = found.load();
  if (hit != std::numeric_limits<std::uint64_t>::max()) {
    out.verdict = IipVerdict::fails;
    out.witness = make_witness(a, s, to_vector(ring, projective_point(p, n, hit)));
  }
  return out;
}

}  // namespace gral

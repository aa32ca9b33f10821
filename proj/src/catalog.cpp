#include "gral/catalog.hpp"

#include <charconv>
#include <functional>
#include <set>

namespace gral::catalog {

std::string to_string(Origin o) {
  switch (o) {
    case Origin::stated: return "stated";
    case Origin::immediate: return "immediate";
    case Origin::computed: return "computed";
  }
  return "?";
}

namespace {

[[noreturn]] void bad_params(const std::string& msg) { throw Error(ErrorCode::bad_params, msg); }

const ParamInfo kField{"field", "2", "coefficient ring: a prime p, GF(p) or Q"};

const std::vector<EntryInfo> kEntries = {
    {"twisted-group", "D[Z_n] twisted by the carry cocycle, i.e. D[x]/(x^n - lambda)",
     {{"n", "2", "order of the cyclic group"}, {"lambda", "-1", "cocycle value, a unit"}, {"field", "3", kField.help}}},
    {"pair-groupoid-matrix", "n x n matrices over D graded by the pair groupoid",
     {{"n", "2", "matrix size"}, kField}},
    {"twisted-pair-groupoid", "matrices with a coboundary twist: alpha = f(s) f(t) / f(st)",
     {{"n", "3", "matrix size"},
      {"lambda", "-1", "value of f on arrows leaving the marked object, a unit"},
      {"marked", "1", "marked object"},
      {"field", "3", kField.help}}},
    {"quiver", "path algebra of an acyclic quiver graded by its path category",
     {{"shape", "a2", "a2 (1 -> 2), a3 (1 -> 2 -> 3) or kronecker (two arrows 1 -> 2)"}, kField}},
    {"dade-m3", "M_3(D) with the strong Z_2-grading whose R_0 = D x M_2(D)", {{"field", "3", kField.help}}},
    {"thin-groupoid-13dim", "13-dimensional subalgebra of M_5(D) graded by the thin groupoid {e, f, s, t}",
     {kField}},
    {"z2-onesided", "D[x]/(x^2) extended by u with u^2 = 0 and u x = 0, graded by Z_2", {kField}},
    {"pi-twisted-m3", "M_3 with odd-times-odd products scaled by pi, graded by Z_2",
     {{"pi", "2", "twist scalar, nonzero"}, {"field", "Z", "coefficient ring: Z, Q or a prime"}}},
    {"skew-group", "D^n or D skew group algebra of Z_n",
     {{"n", "2", "order of the cyclic group"}, {"action", "shift", "shift (cyclic shift of D^n) or trivial (on D)"},
      kField}},
    {"skew-groupoid", "skew groupoid algebra over pair(n) x Z_k",
     {{"n", "2", "objects of the pair groupoid"},
      {"k", "2", "order of the cyclic factor"},
      {"action", "trivial", "shift (Z_k shifts D^k) or trivial (on D)"},
      kField}},
};

const EntryInfo& info(const std::string& name) {
  for (const auto& e : kEntries)
    if (e.name == name) return e;
  throw Error(ErrorCode::unknown_entry, "no catalog entry named '" + name + "'");
}

Params resolve(const EntryInfo& e, const Params& given) {
  Params out;
  for (const auto& p : e.params) out[p.name] = p.fallback;
  for (const auto& [key, v] : given) {
    const std::string k = key == "p" ? "field" : key;
    if (!out.contains(k)) bad_params("entry '" + e.name + "' has no parameter '" + k + "'");
    out[k] = v;
  }
  return out;
}

std::size_t get_size(const Params& p, const std::string& key, std::size_t lo, std::size_t hi) {
  const std::string& s = p.at(key);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < lo || v > hi)
    bad_params(key + " must be an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

CoefficientRing get_ring(const Params& p, bool allow_integers = false) {
  CoefficientRing r = CoefficientRing::parse(p.at("field"));
  if (!allow_integers && !r.is_field()) bad_params("this entry needs a field");
  return r;
}

Scalar get_scalar(const Params& p, const std::string& key, const CoefficientRing& ring) {
  try {
    return Scalar::parse(ring, p.at(key));
  } catch (const Error&) {
    bad_params(key + " is not a scalar");
  }
}

std::string get_choice(const Params& p, const std::string& key, std::initializer_list<const char*> options) {
  const std::string& v = p.at(key);
  for (const char* o : options)
    if (v == o) return v;
  bad_params("unsupported value '" + v + "' for " + key);
}

// ---------------------------------------------------------------------------
// Component rings

Algebra scalars(const CoefficientRing& ring) {
  const Element one = Element::basis(ring, 1, 0);
  return Algebra::from_table(ring, {"1"}, {{{0, 0}, one}}, one);
}

/// D^k with orthogonal idempotents p1..pk.
Algebra diagonal(const CoefficientRing& ring, std::size_t k) {
  std::vector<std::string> names;
  std::map<std::pair<std::size_t, std::size_t>, Element> table;
  Element unit(ring, k);
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("p" + std::to_string(i + 1));
    table.emplace(std::make_pair(i, i), Element::basis(ring, k, i));
    unit.set(i, Scalar::one(ring));
  }
  return Algebra::from_table(ring, std::move(names), table, std::move(unit));
}

/// p_i -> p_{i+a mod k}.
Matrix shift(const CoefficientRing& ring, std::size_t k, std::size_t a) {
  Matrix m(ring, k, k);
  for (std::size_t j = 0; j < k; ++j) m.at((j + a) % k, j) = Scalar::one(ring);
  return m;
}

/// Span of the matrix units e_ij for (i, j) in `units`, with e_ij e_jl = w(i,j,l) e_il.
/// Every e_ii must be present so the identity lies in the span.
Algebra matrix_units(const CoefficientRing& ring, const std::vector<std::pair<int, int>>& units,
                     const std::function<Scalar(int, int, int)>& weight) {
  const std::size_t n = units.size();
  std::vector<std::string> names;
  std::map<std::pair<int, int>, std::size_t> where;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back("e" + std::to_string(units[k].first) + std::to_string(units[k].second));
    where[units[k]] = k;
  }
  std::map<std::pair<std::size_t, std::size_t>, Element> table;
  Element unit(ring, n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto [i, j] = units[a];
    if (i == j) unit.set(a, Scalar::one(ring));
    for (std::size_t b = 0; b < n; ++b) {
      const auto [j2, l] = units[b];
      if (j2 != j) continue;
      auto it = where.find({i, l});
      if (it == where.end()) throw Error(ErrorCode::invalid_input, "matrix unit span is not closed");
      Element e(ring, n);
      e.set(it->second, weight(i, j, l));
      table.emplace(std::make_pair(a, b), std::move(e));
    }
  }
  return Algebra::from_table(ring, std::move(names), table, std::move(unit));
}

GradedAlgebra graded(Algebra alg, FiniteCategory cat, const std::function<std::string(const std::string&)>& degree_of) {
  std::vector<MorphismId> degree;
  for (const auto& b : alg.basis()) degree.push_back(cat.at(degree_of(b)));
  return GradedAlgebra(std::move(alg), std::move(cat), std::move(degree));
}

int row_of(const std::string& b) { return b[1] - '0'; }
int col_of(const std::string& b) { return b[2] - '0'; }

// ---------------------------------------------------------------------------
// Expectations

struct Expect {
  std::vector<Expectation>& out;
  bool field_dependent = false;

  void operator()(std::string check, std::string key, nlohmann::json value, Origin origin, std::string note = {}) {
    out.push_back({std::move(check), std::move(key), std::move(value), origin, std::move(note), field_dependent});
  }
};

void expect_common(Expect& e, std::size_t total) {
  e("grading", "result", true, Origin::immediate, "valid grading");
  e("grading", "dims.total", total, Origin::immediate);
  e("unit-in-R0", "result", true, Origin::stated, "1 lies in R_0 for groupoid and crossed-product gradings");
}

void expect_commutants(Expect& e, std::size_t c_r0, std::size_t center, std::size_t z_r0, std::size_t c_zr0) {
  e("commutant-R0", "result", true, Origin::stated, "componentwise commutant matches the closed formula");
  e("commutant-R0", "dims.dim", c_r0, Origin::computed);
  e("center", "dims.dim", center, Origin::computed);
  e("commutant-ZR0", "dims.ZR0", z_r0, Origin::computed);
  e("commutant-ZR0", "dims.dim", c_zr0, Origin::computed);
}

void expect_strong(Expect& e, bool crossed) {
  e("strong", "result", true, Origin::stated);
  if (crossed) e("strong-criterion", "result", true, Origin::stated, "every alpha(s,t) is invertible");
  e("nondeg-right", "result", true, Origin::stated, "strongly graded implies nondegenerate");
  e("nondeg-left", "result", true, Origin::stated, "strongly graded implies nondegenerate");
}

Instance finish(std::string entry, Params params, CrossedSystem cs) {
  CrossedProduct cp = build_crossed_product(cs);
  GradedAlgebra alg = cp.algebra;
  return Instance{std::move(entry), std::move(params), std::move(alg), std::move(cs), std::move(cp), {}};
}

// ---------------------------------------------------------------------------
// Builders

Instance twisted_group(const Params& p) {
  const auto ring = get_ring(p);
  const std::size_t n = get_size(p, "n", 1, 64);
  const Scalar lambda = get_scalar(p, "lambda", ring);
  if (!is_unit(lambda)) bad_params("lambda must be a unit");
  CrossedSystem cs(categories::cyclic_group(n), {scalars(ring)});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a + b >= n) cs.alpha_at(MorphismId{static_cast<std::uint32_t>(a)}, MorphismId{static_cast<std::uint32_t>(b)}) = lambda * cs.components[0].unit();
  Instance out = finish("twisted-group", p, std::move(cs));
  Expect e{out.expected};
  expect_common(e, n);
  expect_strong(e, true);
  expect_commutants(e, n, n, 1, n);
  e("zr0-commutant-iip", "result", true, Origin::stated);
  e("maxcomm", "result", n == 1, Origin::computed, "R is commutative, so C_R(R_0) = R");
  if (n == 2 && ring.is_prime_field()) {
    // D[x]/(x^2 - lambda) is a field exactly when lambda is not a square.
    bool square = false;
    for (std::uint32_t y = 0; y < ring.characteristic(); ++y)
      if (Scalar::from_int(ring, y) * Scalar::from_int(ring, y) == lambda) square = true;
    e.field_dependent = true;
    e("iip", "result", !square, Origin::computed, square ? "x - sqrt(lambda) generates an ideal missing D" : "R is a field");
  }
  return out;
}

Instance pair_groupoid_matrix(const Params& p) {
  const auto ring = get_ring(p);
  const std::size_t n = get_size(p, "n", 1, 8);
  CrossedSystem cs(categories::pair_groupoid(n), std::vector<Algebra>(n, scalars(ring)));
  Instance out = finish("pair-groupoid-matrix", p, std::move(cs));
  Expect e{out.expected};
  expect_common(e, n * n);
  expect_strong(e, true);
  expect_commutants(e, n, 1, n, n);
  e("iip", "result", true, Origin::computed, "M_n(D) is simple");
  e("maxcomm", "result", true, Origin::computed, "diagonal matrices are maximal commutative");
  e("zr0-commutant-iip", "result", true, Origin::stated);
  e("maxcomm-iff-iip", "result", true, Origin::stated);
  return out;
}

Instance twisted_pair_groupoid(const Params& p) {
  const auto ring = get_ring(p);
  const std::size_t n = get_size(p, "n", 1, 8);
  const std::size_t marked = get_size(p, "marked", 1, n);
  const Scalar lambda = get_scalar(p, "lambda", ring);
  if (!is_unit(lambda)) bad_params("lambda must be a unit");
  CrossedSystem cs(categories::pair_groupoid(n), std::vector<Algebra>(n, scalars(ring)));
  const auto& cat = cs.category;
  const auto marked_obj = *cat.find_object(std::to_string(marked));
  auto f = [&](MorphismId s) {
    return !cat.is_identity(s) && cat.dom(s) == marked_obj ? lambda : Scalar::one(ring);
  };
  for (const auto& [s, t] : cat.composable_pairs()) {
    const auto st = *cat.compose(s, t);
    cs.alpha_at(s, t) = (f(s) * f(t) * inverse(f(st))) * cs.components[0].unit();
  }
  Instance out = finish("twisted-pair-groupoid", p, std::move(cs));
  Expect e{out.expected};
  expect_common(e, n * n);
  expect_strong(e, true);
  expect_commutants(e, n, 1, n, n);
  e("iip", "result", true, Origin::computed, "the twist is a coboundary, so R is M_n(D)");
  e("maxcomm", "result", true, Origin::computed);
  e("zr0-commutant-iip", "result", true, Origin::stated);
  return out;
}

Instance quiver(const Params& p) {
  const auto ring = get_ring(p);
  const std::string shape = get_choice(p, "shape", {"a2", "a3", "kronecker"});
  Quiver q;
  std::size_t total = 0;
  if (shape == "a2") {
    q = {{"1", "2"}, {{"a", "1", "2"}}};
    total = 3;
  } else if (shape == "a3") {
    q = {{"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}};
    total = 6;
  } else {
    q = {{"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}};
    total = 4;
  }
  const std::size_t vertices = q.vertices.size();
  CrossedSystem cs(categories::path_category(q), std::vector<Algebra>(vertices, scalars(ring)));
  Instance out = finish("quiver", p, std::move(cs));
  Expect e{out.expected};
  expect_common(e, total);
  e("strong", "result", true, Origin::computed, "u_s u_t = u_st for every composable pair");
  e("nondeg-right", "result", true, Origin::computed, "only identity isomorphisms; vacuous off R_0");
  e("nondeg-left", "result", true, Origin::computed, "only identity isomorphisms; vacuous off R_0");
  expect_commutants(e, vertices, 1, vertices, vertices);
  e("iip", "result", false, Origin::computed, "the arrow ideal misses R_0");
  e("maxcomm", "result", true, Origin::computed);
  e("zr0-commutant-iip", "result", true, Origin::immediate, "not a groupoid grading, so nothing is claimed");
  return out;
}

Instance dade_m3(const Params& p) {
  const auto ring = get_ring(p);
  std::vector<std::pair<int, int>> units;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) units.emplace_back(i, j);
  auto odd = [](int i, int j) { return (i == 1) != (j == 1); };
  Algebra alg = matrix_units(ring, units, [&](int, int, int) { return Scalar::one(ring); });
  Instance out{"dade-m3", p,
               graded(std::move(alg), categories::cyclic_group(2),
                      [&](const std::string& b) { return odd(row_of(b), col_of(b)) ? "g" : "e"; }),
               std::nullopt, std::nullopt, {}};
  Expect e{out.expected};
  expect_common(e, 9);
  e("grading", "dims.R_e", 5, Origin::stated);
  e("grading", "dims.R_g", 4, Origin::stated);
  e("strong", "result", true, Origin::stated);
  e("nondeg-right", "result", true, Origin::stated, "strongly graded implies nondegenerate");
  e("nondeg-left", "result", true, Origin::stated, "strongly graded implies nondegenerate");
  expect_commutants(e, 2, 1, 2, 5);
  e("iip", "result", true, Origin::computed, "M_3(D) is simple");
  e("zr0-commutant-iip", "result", true, Origin::stated);
  return out;
}

Instance thin_groupoid_13dim(const Params& p) {
  const auto ring = get_ring(p);
  const std::map<std::pair<int, int>, std::string> degree = {
      {{1, 1}, "e"}, {{3, 3}, "e"},                                                              // R_e
      {{2, 2}, "f"}, {{4, 4}, "f"}, {{4, 5}, "f"}, {{5, 4}, "f"}, {{5, 5}, "f"},                 // R_f
      {{1, 2}, "s"}, {{3, 4}, "s"}, {{3, 5}, "s"},                                               // R_s
      {{2, 1}, "t"}, {{4, 3}, "t"}, {{5, 3}, "t"}};                                              // R_t
  std::vector<std::pair<int, int>> units;
  for (const auto& [ij, s] : degree) units.push_back(ij);
  Algebra alg = matrix_units(ring, units, [&](int, int, int) { return Scalar::one(ring); });
  Instance out{"thin-groupoid-13dim", p,
               graded(std::move(alg), categories::thin_groupoid(),
                      [&](const std::string& b) { return degree.at({row_of(b), col_of(b)}); }),
               std::nullopt, std::nullopt, {}};
  Expect e{out.expected};
  expect_common(e, 13);
  e("grading", "dims.R_e", 2, Origin::stated);
  e("grading", "dims.R_f", 5, Origin::stated);
  e("grading", "dims.R_s", 3, Origin::stated);
  e("grading", "dims.R_t", 3, Origin::stated);
  e("strong", "result", true, Origin::stated);
  e("nondeg-right", "result", true, Origin::stated, "strongly graded implies nondegenerate");
  e("nondeg-left", "result", true, Origin::stated, "strongly graded implies nondegenerate");
  expect_commutants(e, 4, 2, 4, 7);
  e("iip", "result", true, Origin::computed, "R is M_2(D) x M_3(D) and R_0 meets both factors");
  e("zr0-commutant-iip", "result", true, Origin::stated);
  return out;
}

Instance z2_onesided(const Params& p) {
  const auto ring = get_ring(p);
  // Basis 1, x, u, xu. x^2 = 0, u^2 = 0, u x = 0.
  auto b = [&](std::size_t i) { return Element::basis(ring, 4, i); };
  const std::map<std::pair<std::size_t, std::size_t>, Element> table = {
      {{0, 0}, b(0)}, {{0, 1}, b(1)}, {{0, 2}, b(2)}, {{0, 3}, b(3)},
      {{1, 0}, b(1)}, {{1, 2}, b(3)},
      {{2, 0}, b(2)},
      {{3, 0}, b(3)}};
  Algebra alg = Algebra::from_table(ring, {"1", "x", "u", "xu"}, table, b(0));
  Instance out{"z2-onesided", p,
               graded(std::move(alg), categories::cyclic_group(2),
                      [](const std::string& name) { return name.find('u') == std::string::npos ? "e" : "g"; }),
               std::nullopt, std::nullopt, {}};
  Expect e{out.expected};
  expect_common(e, 4);
  e("strong", "result", false, Origin::computed, "R_g R_g = 0");
  e("nondeg-right", "result", false, Origin::computed,
    "claimed true in the source; fails the definition since xu R_g = 0");
  e("nondeg-left", "result", false, Origin::stated);
  expect_commutants(e, 3, 2, 2, 3);
  e("iip", "result", false, Origin::computed, "<xu> = D xu misses R_0");
  e("maxcomm", "result", false, Origin::computed, "xu commutes with R_0");
  e("zr0-commutant-iip", "result", true, Origin::immediate, "neither side nondegenerate, so nothing is claimed");
  return out;
}

Instance pi_twisted_m3(const Params& p) {
  const auto ring = get_ring(p, true);
  const Scalar pi = get_scalar(p, "pi", ring);
  if (pi.is_zero()) bad_params("pi must be nonzero");
  auto odd = [](int i, int j) { return (i == 1) != (j == 1); };
  auto weight = [&](int i, int j, int l) { return odd(i, j) && odd(j, l) ? pi : Scalar::one(ring); };
  std::vector<std::pair<int, int>> units;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) units.emplace_back(i, j);

  // The same ring as a crossed product over the pair groupoid on 3 objects.
  CrossedSystem cs(categories::pair_groupoid(3), std::vector<Algebra>(3, scalars(ring)));
  const auto& cat = cs.category;
  for (const auto& [s, t] : cat.composable_pairs()) {
    const auto& sn = cat.name(s);
    const auto& tn = cat.name(t);
    const Scalar w = weight(sn[1] - '0', sn[3] - '0', tn[3] - '0');
    cs.alpha_at(s, t) = w * cs.components[0].unit();
  }
  CrossedProduct cp = build_crossed_product(cs);

  Algebra alg = matrix_units(ring, units, weight);
  Instance out{"pi-twisted-m3", p,
               graded(std::move(alg), categories::cyclic_group(2),
                      [&](const std::string& b) { return odd(row_of(b), col_of(b)) ? "g" : "e"; }),
               std::move(cs), std::move(cp), {}};
  Expect e{out.expected};
  expect_common(e, 9);
  e("grading", "dims.R_e", 5, Origin::stated);
  e("grading", "dims.R_g", 4, Origin::stated);
  const bool unit = is_unit(pi);
  e.field_dependent = true;
  e("strong", "result", unit, Origin::stated, unit ? "pi is a unit here" : "R_g R_g = pi R_e");
  e("strong-criterion", "result", unit, Origin::stated);
  e.field_dependent = false;
  e("nondeg-right", "result", true, Origin::stated);
  e("nondeg-left", "result", true, Origin::computed, "the construction is transpose-symmetric");
  return out;
}

Instance skew_group(const Params& p) {
  const auto ring = get_ring(p);
  const std::size_t n = get_size(p, "n", 1, 16);
  const bool shift_action = get_choice(p, "action", {"shift", "trivial"}) == "shift";
  CrossedSystem cs(categories::cyclic_group(n), {shift_action ? diagonal(ring, n) : scalars(ring)});
  if (shift_action)
    for (std::size_t a = 0; a < n; ++a) cs.sigma_at(MorphismId{static_cast<std::uint32_t>(a)}) = shift(ring, n, a);
  Instance out = finish("skew-group", p, std::move(cs));
  Expect e{out.expected};
  if (shift_action) {
    expect_common(e, n * n);
    expect_strong(e, true);
    expect_commutants(e, n, 1, n, n);
    e("iip", "result", true, Origin::computed, "free action: R is M_n(D)");
    e("maxcomm", "result", true, Origin::computed);
  } else {
    expect_common(e, n);
    expect_strong(e, true);
    expect_commutants(e, n, n, 1, n);
    e("iip", "result", n == 1, Origin::computed, "the augmentation ideal misses D");
    e("maxcomm", "result", n == 1, Origin::computed, "R is commutative");
  }
  e("zr0-commutant-iip", "result", true, Origin::stated);
  e("maxcomm-iff-iip", "result", true, Origin::stated);
  return out;
}

Instance skew_groupoid(const Params& p) {
  const auto ring = get_ring(p);
  const std::size_t n = get_size(p, "n", 1, 6);
  const std::size_t k = get_size(p, "k", 1, 6);
  const bool shift_action = get_choice(p, "action", {"shift", "trivial"}) == "shift";
  const auto pair = categories::pair_groupoid(n);
  const auto cyc = categories::cyclic_group(k);
  const std::size_t fiber = shift_action ? k : 1;
  CrossedSystem cs(categories::product(pair, cyc),
                   std::vector<Algebra>(n, shift_action ? diagonal(ring, k) : scalars(ring)));
  if (shift_action)
    for (auto m : pair.morphisms())
      for (auto g : cyc.morphisms())
        cs.sigma_at(cs.category.at("(" + pair.name(m) + "," + cyc.name(g) + ")")) = shift(ring, k, g.index);
  Instance out = finish("skew-groupoid", p, std::move(cs));
  Expect e{out.expected};
  expect_common(e, n * n * k * fiber);
  expect_strong(e, true);
  if (shift_action) {
    expect_commutants(e, n * k, 1, n * k, n * k);
    e("iip", "result", true, Origin::computed, "free fiber action: R is M_nk(D)");
    e("maxcomm", "result", true, Origin::computed);
  } else {
    expect_commutants(e, n * k, k, n, n * k);
    e("iip", "result", k == 1, Origin::computed, "R is M_n(D[Z_k])");
    e("maxcomm", "result", k == 1, Origin::computed);
  }
  e("zr0-commutant-iip", "result", true, Origin::stated);
  e("maxcomm-iff-iip", "result", true, Origin::stated);
  return out;
}

using Builder = Instance (*)(const Params&);
const std::map<std::string, Builder> kBuilders = {
    {"twisted-group", twisted_group},
    {"pair-groupoid-matrix", pair_groupoid_matrix},
    {"twisted-pair-groupoid", twisted_pair_groupoid},
    {"quiver", quiver},
    {"dade-m3", dade_m3},
    {"thin-groupoid-13dim", thin_groupoid_13dim},
    {"z2-onesided", z2_onesided},
    {"pi-twisted-m3", pi_twisted_m3},
    {"skew-group", skew_group},
    {"skew-groupoid", skew_groupoid},
};

}  // namespace

const std::vector<EntryInfo>& entries() { return kEntries; }

Instance build(const std::string& name, const Params& params) {
  const EntryInfo& e = info(name);
  Instance out = kBuilders.at(name)(resolve(e, params));
  const auto report = validate_grading(out.algebra);
  if (!report.ok()) throw Error(ErrorCode::bad_params, name + ": " + report.summary(3));
  return out;
}

const std::vector<Run>& verification_runs() {
  static const std::vector<Run> runs = {
      {"twisted-group", {}, {"2", "3", "Q"}},
      {"twisted-group", {{"n", "3"}, {"lambda", "2"}}, {"3"}},
      {"pair-groupoid-matrix", {{"n", "2"}}, {"2", "3", "Q"}},
      {"pair-groupoid-matrix", {{"n", "3"}}, {"2", "3"}},
      {"twisted-pair-groupoid", {}, {"2", "3", "Q"}},
      {"quiver", {{"shape", "a2"}}, {"2", "3", "Q"}},
      {"quiver", {{"shape", "a3"}}, {"2", "3", "Q"}},
      {"quiver", {{"shape", "kronecker"}}, {"2", "3", "Q"}},
      {"dade-m3", {}, {"2", "3", "Q"}},
      {"thin-groupoid-13dim", {}, {"2", "3", "Q"}},
      {"z2-onesided", {}, {"2", "3", "Q"}},
      {"pi-twisted-m3", {}, {}},
      {"skew-group", {{"action", "shift"}}, {"2", "3", "Q"}},
      {"skew-group", {{"action", "trivial"}}, {"2", "3", "Q"}},
      {"skew-group", {{"n", "3"}, {"action", "shift"}}, {"2", "3"}},
      {"skew-groupoid", {{"action", "trivial"}}, {"2", "3", "Q"}},
      {"skew-groupoid", {{"action", "shift"}}, {"2"}},
      {"skew-groupoid", {{"n", "1"}, {"k", "3"}, {"action", "shift"}}, {"2", "3"}},
  };
  return runs;
}

}  // namespace gral::catalog

// Acceptance driver: `acceptance <n>` checks criterion n and prints one
// "criterion n: PASS|FAIL" line. Expected values are recomputed here from
// the brute-force oracles or from plain rank computations.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <map>
#include <tuple>
#include <string>

#include "gral/checks.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gral;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Verdict {
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      std::cout << "  fail: " << what << "\n";
    }
  }
};

void info(const std::string& s) { std::cout << "  info: " << s << "\n"; }

std::vector<oracle::Vec> oracle_basis(const Subspace& s) {
  std::vector<oracle::Vec> out;
  for (const auto& v : s.basis()) out.push_back(oracle::from_dense(v));
  return out;
}

std::string vec_str(const Algebra& a, const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += (v[i].is_one() ? "" : v[i].to_string() + "*") + a.basis_name(i);
  }
  return s.empty() ? "0" : s;
}

// Span of R_s R_t computed from the structure constants.
Subspace product_span(const GradedAlgebra& a, MorphismId s, MorphismId t) {
  std::vector<Vector> gens;
  for (auto i : a.component_indices(s))
    for (auto j : a.component_indices(t)) gens.push_back(a.algebra().product(i, j).dense());
  return Subspace::span(a.ring(), a.dim(), gens);
}

std::vector<catalog::Instance> all_instances(bool with_fixed) {
  auto out = support::instances("2", with_fixed);
  for (const auto& f : {"3", "Q"}) {
    auto more = support::instances(f);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::string label(const catalog::Instance& inst) { return support::label(inst); }

// ---------------------------------------------------------------------------

bool criterion1(Verdict& v) {
  for (const auto& field : {"Q", "3"}) {
    const auto t0 = Clock::now();
    const auto inst = catalog::build("dade-m3", {{"field", field}});
    const auto& a = inst.algebra;
    const auto& cat = a.category();
    const auto e = cat.at("e"), g = cat.at("g");
    const std::size_t d0 = principal_component(a).dim();
    const std::size_t d1 = component_subspace(a, g).dim();
    const bool strong = is_strongly_graded(a).strong;
    const bool valid = validate_grading(a).ok();
    const double ms = ms_since(t0);
    info(std::string("GF/Q=") + field + " dim R0=" + std::to_string(d0) + " dim R1=" + std::to_string(d1) +
         " strong=" + (strong ? "true" : "false") + " " + std::to_string(ms) + " ms");
    v.require(valid, "grading validates");
    v.require(d0 == 5 && d1 == 4, "dim R0 = 5 and dim R1 = 4");
    v.require(strong, "strongly graded");
    v.require(ms < 1000.0, "runtime under 1 s");
    if (inst.algebra.ring().is_prime_field()) {
      const oracle::Table t(a.algebra());
      v.require(oracle::strongly_graded(a), "oracle: strongly graded");
      v.require(oracle::product_span(a, g, g).dim() == a.component_indices(e).size(), "oracle: R1 R1 = R0");
    }
  }
  return v.ok;
}

bool criterion2(Verdict& v) {
  for (const auto& field : {"2", "3", "Q"}) {
    const auto t0 = Clock::now();
    const auto inst = catalog::build("thin-groupoid-13dim", {{"field", field}});
    const auto& a = inst.algebra;
    const auto& cat = a.category();
    v.require(cat.num_morphisms() == 4 && is_groupoid(cat), "graded by the 4-morphism thin groupoid");
    v.require(validate_grading(a).ok(), "grading validates");
    const std::pair<const char*, const char*> pairs[] = {{"e", "e"}, {"f", "f"}, {"e", "s"},
                                                         {"t", "e"}, {"s", "f"}, {"f", "t"}};
    for (const auto& [x, y] : pairs) {
      const auto s = cat.at(x), t = cat.at(y);
      const auto st = *cat.compose(s, t);
      const bool eq = product_span(a, s, t) == component_subspace(a, st);
      v.require(eq, std::string("R_") + x + " R_" + y + " = R_" + cat.name(st) + " over " + field);
    }
    const bool strong = is_strongly_graded(a).strong;
    const std::size_t df = component_subspace(a, cat.at("f")).dim();
    const std::size_t dt = component_subspace(a, cat.at("t")).dim();
    const double ms = ms_since(t0);
    info(std::string(field) + ": dim=" + std::to_string(a.dim()) + " dim R_f=" + std::to_string(df) +
         " dim R_t=" + std::to_string(dt) + " strong=" + (strong ? "true" : "false") + " " + std::to_string(ms) +
         " ms");
    v.require(strong, "strongly graded");
    v.require(a.dim() == 13 && df == 5 && dt == 3, "dim 13, dim R_f = 5, dim R_t = 3");
    v.require(ms < 1000.0, "runtime under 1 s");
    if (std::string(field) == "2") {
      for (const auto& [x, y] : pairs) {
        const auto s = cat.at(x), t = cat.at(y);
        v.require(oracle::product_span(a, s, t).dim() == a.component_indices(*cat.compose(s, t)).size(),
                  std::string("oracle: R_") + x + " R_" + y);
      }
    }
  }
  return v.ok;
}

bool criterion3(Verdict& v) {
  const auto t0 = Clock::now();
  const auto inst = catalog::build("z2-onesided", {{"field", "2"}});
  const auto& a = inst.algebra;
  const auto right = nondegeneracy(a, Side::right);
  const auto left = nondegeneracy(a, Side::left);
  const double ms = ms_since(t0);
  const bool oracle_right = oracle::nondegenerate(a, true);
  const bool oracle_left = oracle::nondegenerate(a, false);
  info(std::string("library: right=") + (right.holds ? "true" : "false") + " left=" + (left.holds ? "true" : "false"));
  info(std::string("oracle:  right=") + (oracle_right ? "true" : "false") + " left=" + (oracle_left ? "true" : "false"));
  const auto& alg = a.algebra();
  const auto& cat = a.category();
  for (const auto& [side, res] : {std::pair{"right", &right}, std::pair{"left", &left}}) {
    if (res->holds) continue;
    const auto s = *res->s;
    const auto inv = *inverse(cat, s);
    info(std::string(side) + " witness: x = " + vec_str(alg, *res->x) + " in R_" + cat.name(s) + " annihilates R_" +
         cat.name(inv) + " from the " + (std::string(side) == "right" ? "right" : "left"));
  }
  // The annihilation pattern of x on the odd component, both ways round.
  const auto g = cat.at("g");
  const Vector x = unit_vector(alg.ring(), alg.dim(), *alg.index_of("x"));
  for (auto j : a.component_indices(g)) {
    const Vector b = unit_vector(alg.ring(), alg.dim(), j);
    info("x*" + alg.basis_name(j) + " = " + vec_str(alg, alg.multiply(x, b)) + ", " + alg.basis_name(j) + "*x = " +
         vec_str(alg, alg.multiply(b, x)));
  }
  bool x_r1 = false, r1_x = false;
  for (auto j : a.component_indices(g)) {
    const Vector b = unit_vector(alg.ring(), alg.dim(), j);
    x_r1 |= !is_zero(alg.multiply(x, b));
    r1_x |= !is_zero(alg.multiply(b, x));
  }
  info(std::string("x in R_e: x R_g ") + (x_r1 ? "!= 0" : "= 0") + ", R_g x " + (r1_x ? "!= 0" : "= 0"));
  v.require(right.holds == oracle_right && left.holds == oracle_left, "library agrees with the oracle");
  v.require(right.holds, "nondegeneracy(right) = true");
  v.require(!left.holds, "nondegeneracy(left) = false");
  v.require(ms < 1000.0, "runtime under 1 s");
  return v.ok;
}

bool criterion4(Verdict& v) {
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (const auto& inst : support::instances("2")) {
    const auto& a = inst.algebra;
    if (a.dim() > 13) continue;
    const bool groupoid = is_groupoid(a.category());
    const bool r = oracle::nondegenerate(a, true), l = oracle::nondegenerate(a, false);
    const auto rep = check_commutant_iip(a);
    if (!groupoid) {
      info("excluded (category is not a groupoid): " + label(inst));
      v.require(!rep.applicable, "not applicable off groupoids: " + label(inst));
      continue;
    }
    v.require(rep.applicable == (r || l), "applicability matches oracle nondegeneracy: " + label(inst));
    if (!(r || l)) {
      info("excluded (degenerate on both sides): " + label(inst));
      continue;
    }
    ++checked;
    const bool exhaustive = rep.iip && rep.iip->verdict == IipVerdict::holds && !rep.iip->witness;
    info(label(inst) + " dim=" + std::to_string(a.dim()) + " right=" + (r ? "1" : "0") + " left=" + (l ? "1" : "0") +
         " dim C(Z(R0))=" + std::to_string(commutant_of_center_of_principal(a).dim()) +
         " points=" + (rep.iip ? std::to_string(rep.iip->points_examined) : "-") +
         " iip=" + (exhaustive ? "true" : "false"));
    v.require(exhaustive, "exhaustive IIP holds with zero witnesses: " + label(inst));
    if (a.dim() <= 6) {
      const oracle::Table t(a.algebra());
      v.require(oracle::iip(t, oracle::span_of(t, oracle_basis(commutant_of_center_of_principal(a)))),
                "oracle IIP: " + label(inst));
    }
  }
  const double ms = ms_since(t0);
  info("algebras checked: " + std::to_string(checked) + ", " + std::to_string(ms) + " ms");
  v.require(checked >= 5, "at least five algebras in scope");
  v.require(ms < 60000.0, "runtime under 60 s");
  return v.ok;
}

bool criterion5(Verdict& v) {
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  bool saw_counterexample = false;
  for (const auto& field : {"2", "3"})
    for (const auto& inst : support::instances(field)) {
      if (inst.entry != "skew-group" && inst.entry != "skew-groupoid") continue;
      const auto& cp = *inst.product;
      const auto& alg = cp.algebra.algebra();
      const auto eq = check_maxcomm_iip_equivalence(cp);
      ++checked;
      info(label(inst) + " dim=" + std::to_string(alg.dim()) + " maxcomm=" + (eq.maximal_commutative ? "1" : "0") +
           " iip=" + to_string(eq.iip.verdict));
      v.require(eq.equivalent, "maximal commutative iff IIP: " + label(inst));
      if (alg.ring().is_prime_field() && oracle::Table(alg).size() <= 81) {
        const oracle::Table t(alg);
        v.require(oracle::iip(t, oracle::span_of(t, oracle_basis(principal_component(cp.algebra)))) ==
                      eq.iip.holds(),
                  "oracle IIP agrees: " + label(inst));
      }
      if (inst.entry == "skew-group" && inst.params.at("action") == "trivial" && field == std::string("2")) {
        saw_counterexample = true;
        v.require(!eq.maximal_commutative && !eq.iip.holds(), "counterexample: both sides false");
        v.require(eq.construction.has_value(), "counterexample: construction present");
        if (!eq.construction) continue;
        const auto& c = *eq.construction;
        const auto& cat = cp.algebra.category();
        const auto e = cat.identity(cat.cod(c.s));
        // Rebuild a u_e - a u_s from a u_s.
        Vector expect = zero_vector(alg.ring(), alg.dim());
        const std::size_t fiber = cp.algebra.component_indices(c.s).size();
        for (std::size_t k = 0; k < fiber; ++k) {
          expect[cp.index(e, k)] = c.commuting[cp.index(c.s, k)];
          expect[cp.index(c.s, k)] = -c.commuting[cp.index(c.s, k)];
        }
        v.require(!cat.is_identity(c.s) && cat.is_endomorphism(c.s), "s is a non-identity endomorphism");
        v.require(!is_zero(c.commuting), "a u_s is nonzero");
        v.require(c.generator == expect, "generator is a u_e - a u_s");
        info("generator: " + vec_str(alg, c.generator));
        const Subspace ideal = two_sided_ideal(alg, {c.generator});
        v.require(ideal == c.ideal, "ideal is generated by the construction element");
        v.require(ideal.intersect(principal_component(cp.algebra)).dim() == 0, "ideal meets A trivially");
        // phi(x u_t) = x, summed per object.
        bool killed = true;
        for (const auto& b : ideal.basis())
          for (auto o : cat.objects()) {
            const std::size_t d = cp.algebra.component_indices(cat.identity(o)).size();
            for (std::size_t k = 0; k < d; ++k) {
              Scalar sum = Scalar::zero(alg.ring());
              for (auto t : cat.morphisms())
                if (cat.cod(t) == o) sum += b[cp.index(t, k)];
              killed &= sum.is_zero();
            }
          }
        v.require(killed && c.killed_by_phi && c.meets_principal_trivially, "ideal is killed by phi");
      }
    }
  const double ms = ms_since(t0);
  info("skew groupoid algebras: " + std::to_string(checked) + ", " + std::to_string(ms) + " ms");
  v.require(checked >= 5, "at least five skew groupoid algebras");
  v.require(saw_counterexample, "trivial-action counterexample included");
  v.require(ms < 30000.0, "runtime under 30 s");
  return v.ok;
}

bool criterion6(Verdict& v) {
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (const auto& inst : all_instances(false)) {
    const auto& a = inst.algebra;
    const auto& alg = a.algebra();
    const auto& cat = a.category();
    const auto gc = commutant_of_principal_component(a);
    std::vector<std::size_t> r0;
    for (auto e : cat.identities())
      for (auto i : a.component_indices(e)) r0.push_back(i);
    std::size_t total = 0;
    bool agree = true;
    for (auto s : cat.morphisms()) {
      const auto& idx = a.component_indices(s);
      // Direct: r in R_s with r x = x r for every basis x of R_0.
      std::vector<Vector> direct, formula;
      for (auto j : idx) {
        Vector w;
        for (auto x : r0) {
          const Vector d = sub(alg.product(j, x).dense(), alg.product(x, j).dense());
          w.insert(w.end(), d.begin(), d.end());
        }
        direct.push_back(w);
        Vector f;
        if (cat.is_endomorphism(s)) {
          for (auto x : a.component_indices(cat.identity(cat.dom(s)))) {
            const Vector d = sub(alg.product(j, x).dense(), alg.product(x, j).dense());
            f.insert(f.end(), d.begin(), d.end());
          }
        } else {
          for (auto x : a.component_indices(cat.identity(cat.dom(s)))) {
            const Vector d = alg.product(j, x).dense();
            f.insert(f.end(), d.begin(), d.end());
          }
          for (auto y : a.component_indices(cat.identity(cat.cod(s)))) {
            const Vector d = alg.product(y, j).dense();
            f.insert(f.end(), d.begin(), d.end());
          }
        }
        formula.push_back(f);
      }
      const std::size_t dd = idx.size() - (direct.empty() ? 0 : rank(a.ring(), direct[0].size(), direct));
      const std::size_t df = idx.size() - (formula.empty() ? 0 : rank(a.ring(), formula[0].size(), formula));
      agree &= dd == df && dd == gc.components.at(s.index).dim();
      total += dd;
    }
    ++checked;
    v.require(agree, "componentwise commutant matches the formula: " + label(inst));
    v.require(gc.homogeneous && gc.formula_agrees && total == gc.total.dim(),
              "library reports a homogeneous commutant: " + label(inst));
  }
  const double ms = ms_since(t0);
  info("instances: " + std::to_string(checked) + ", " + std::to_string(ms) + " ms");
  v.require(ms < 10000.0, "runtime under 10 s");
  return v.ok;
}

bool criterion7(Verdict& v) {
  std::size_t graded = 0, crossed = 0;
  for (const auto& inst : all_instances(true)) {
    const auto& a = inst.algebra;
    if (is_groupoid(a.category()) || inst.system) {
      ++graded;
      bool coords = true;
      for (const auto& [k, c] : a.algebra().unit().terms()) coords &= a.category().is_identity(a.degree(k));
      v.require(unit_in_principal_component(a) && coords, "unit in R0: " + label(inst));
    }
    if (!inst.system) continue;
    ++crossed;
    const auto& cs = *inst.system;
    const auto& cp = *inst.product;
    v.require(unit_in_principal_component(cp.algebra), "unit in R0 of the crossed product: " + label(inst));
    Vector expect = zero_vector(cs.ring, cp.algebra.dim());
    for (auto o : cs.category.objects())
      for (const auto& [k, c] : cs.component(o).unit().terms()) expect[cp.index(cs.category.identity(o), k)] = c;
    v.require(cp.algebra.algebra().unit().dense() == expect, "1 = sum of u_e coordinatewise: " + label(inst));
  }
  info("groupoid-graded or crossed instances: " + std::to_string(graded) + ", crossed products: " +
       std::to_string(crossed));
  v.require(crossed > 0, "crossed products present");
  return v.ok;
}

bool criterion8(Verdict& v) {
  std::size_t strong_count = 0;
  for (const auto& inst : all_instances(true)) {
    const auto& a = inst.algebra;
    const bool strong = is_strongly_graded(a).strong;
    if (a.ring().is_prime_field() && oracle::Table(a.algebra()).size() <= 20000)
      v.require(strong == oracle::strongly_graded(a), "oracle agrees on strong grading: " + label(inst));
    if (!strong) continue;
    ++strong_count;
    const bool r = nondegeneracy(a, Side::right).holds, l = nondegeneracy(a, Side::left).holds;
    v.require(r && l, "strong implies nondegenerate: " + label(inst));
    if (a.ring().is_prime_field() && oracle::Table(a.algebra()).size() <= 20000)
      v.require(oracle::nondegenerate(a, true) && oracle::nondegenerate(a, false),
                "oracle nondegeneracy: " + label(inst));
  }
  info("strongly graded instances: " + std::to_string(strong_count));
  v.require(strong_count >= 5, "several strongly graded instances");

  std::vector<catalog::Instance> twisted;
  for (const auto& inst : all_instances(true))
    if (inst.entry == "twisted-group" || inst.entry == "twisted-pair-groupoid" || inst.entry == "pi-twisted-m3")
      twisted.push_back(inst);
  twisted.push_back(catalog::build("pi-twisted-m3", {{"pi", "3"}}));
  bool saw_non_strong = false;
  for (const auto& inst : twisted) {
    const auto& cs = *inst.system;
    bool no_zero_divisors = true;
    for (const auto& [s, t] : cs.category.composable_pairs())
      no_zero_divisors &= !is_zero_divisor(cs.target(s), cs.alpha_at(s, t));
    const auto& r = inst.product->algebra;
    const bool strong = is_strongly_graded(r).strong;
    saw_non_strong |= !strong;
    const bool nd = nondegeneracy(r, Side::right).holds && nondegeneracy(r, Side::left).holds;
    info(label(inst) + " cocycle non-zero-divisor=" + (no_zero_divisors ? "1" : "0") + " strong=" +
         (strong ? "1" : "0") + " nondegenerate=" + (nd ? "1" : "0"));
    v.require(no_zero_divisors, "cocycle values are not zero divisors: " + label(inst));
    v.require(nd, "crossed product is nondegenerate: " + label(inst));
  }
  v.require(saw_non_strong, "criterion exercised beyond strong gradings");
  return v.ok;
}

bool criterion9(Verdict& v) {
  std::mt19937_64 rng(2024);
  const auto alpha_base = *catalog::build("twisted-pair-groupoid", {{"n", "3"}, {"field", "3"}}).system;
  const auto sigma_base =
      *catalog::build("skew-groupoid", {{"n", "2"}, {"k", "2"}, {"action", "shift"}, {"field", "3"}}).system;
  v.require(validate_crossed_system(alpha_base).ok() && validate_crossed_system(sigma_base).ok(),
            "unmutated systems validate");
  const auto F = alpha_base.ring;
  auto other_value = [&](const Scalar& old) {
    Scalar x = old;
    while (x == old) x = Scalar::from_int(F, static_cast<long long>(rng() % 3));
    return x;
  };
  auto pick = [&](const std::vector<MorphismId>& xs) { return xs[rng() % xs.size()]; };
  auto non_identities = [](const FiniteCategory& c) {
    std::vector<MorphismId> out;
    for (auto m : c.morphisms())
      if (!c.is_identity(m)) out.push_back(m);
    return out;
  };
  std::size_t rejected = 0, first_rule = 0;
  std::map<std::string, std::size_t> per_rule;
  for (int i = 0; i < 100; ++i) {
    const std::string rule = kCrossedAxioms[i % 5];
    CrossedSystem cs = rule == "sigma-identity" || rule == "twisted-action" ? sigma_base : alpha_base;
    const auto& cat = cs.category;
    std::string where;
    if (rule == "sigma-identity" || rule == "twisted-action") {
      const auto s = rule == "sigma-identity" ? pick(cat.identities()) : pick(non_identities(cat));
      Matrix& m = cs.sigma_at(s);
      const std::size_t r = rng() % m.rows(), c = rng() % m.cols();
      m.at(r, c) = other_value(m.at(r, c));
      where = "sigma_" + cat.name(s) + "[" + std::to_string(r) + "," + std::to_string(c) + "]";
    } else {
      MorphismId s, t;
      if (rule == "alpha-right-unit") {
        s = pick(cat.morphisms());
        t = cat.identity(cat.dom(s));
      } else if (rule == "alpha-left-unit") {
        t = pick(cat.morphisms());
        s = cat.identity(cat.cod(t));
      } else {
        std::vector<std::pair<MorphismId, MorphismId>> pairs;
        for (const auto& [a, b] : cat.composable_pairs())
          if (!cat.is_identity(a) && !cat.is_identity(b)) pairs.push_back({a, b});
        std::tie(s, t) = pairs[rng() % pairs.size()];
      }
      Element& al = cs.alpha_at(s, t);
      const std::size_t k = rng() % al.dim();
      al.set(k, other_value(al.coeff(k)));
      where = "alpha(" + cat.name(s) + "," + cat.name(t) + ")";
    }
    const auto report = validate_crossed_system(cs);
    const bool hit = !report.ok() && report.mentions(rule);
    rejected += hit;
    per_rule[rule] += hit;
    if (hit && report.violations.front().rule == rule) ++first_rule;
    if (!hit) v.require(false, "mutation " + std::to_string(i) + " of " + where + " not reported as " + rule);
  }
  for (const auto& [rule, n] : per_rule) info(rule + ": " + std::to_string(n) + "/20 reported");
  info("reported with the mutated rule first: " + std::to_string(first_rule) + "/100");
  v.require(rejected == 100, "all 100 mutations rejected with the mutated rule");
  return v.ok;
}

// D[x]/(f) for monic f of degree d, coefficients c[0..d-1] of the lower terms.
Algebra truncated_polynomial(const CoefficientRing& F, const std::vector<int>& c) {
  const std::size_t d = c.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
  std::map<std::pair<std::size_t, std::size_t>, Element> table;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<long long> poly(2 * d, 0);
      poly[i + j] = 1;
      for (std::size_t top = 2 * d - 1; top >= d; --top) {
        if (poly[top] == 0) continue;
        const long long lead = poly[top];
        poly[top] = 0;
        for (std::size_t k = 0; k < d; ++k) poly[top - d + k] -= lead * c[k];
      }
      Element e(F, d);
      for (std::size_t k = 0; k < d; ++k) e.set(k, Scalar::from_int(F, poly[k]));
      if (!e.is_zero()) table.emplace(std::pair{i, j}, e);
    }
  return Algebra::from_table(F, names, table, Element::basis(F, d, 0));
}

GradedAlgebra trivially_graded(const Algebra& a) {
  const auto cat = categories::trivial();
  return GradedAlgebra(a, cat, std::vector<MorphismId>(a.dim(), cat.identities()[0]));
}

GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b) {
  const auto& F = a.ring();
  const std::size_t n = a.dim() + b.dim();
  const auto cat = categories::disjoint_union(a.category(), b.category());
  std::vector<std::string> names;
  std::vector<MorphismId> degree;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    names.push_back("0:" + a.algebra().basis_name(i));
    degree.push_back(cat.at("0:" + a.category().name(a.degree(i))));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    names.push_back("1:" + b.algebra().basis_name(i));
    degree.push_back(cat.at("1:" + b.category().name(b.degree(i))));
  }
  auto shift = [&](const Element& e, std::size_t off) {
    Element out(F, n);
    for (const auto& [k, c] : e.terms()) out.set(k + off, c);
    return out;
  };
  std::map<std::pair<std::size_t, std::size_t>, Element> table;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!a.algebra().product(i, j).is_zero()) table.emplace(std::pair{i, j}, shift(a.algebra().product(i, j), 0));
  const std::size_t off = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      if (!b.algebra().product(i, j).is_zero())
        table.emplace(std::pair{i + off, j + off}, shift(b.algebra().product(i, j), off));
  const Element unit = shift(a.algebra().unit(), 0) + shift(b.algebra().unit(), off);
  return GradedAlgebra(Algebra::from_table(F, names, table, unit), cat, degree);
}

bool criterion10(Verdict& v) {
  const auto t0 = Clock::now();
  const auto F = CoefficientRing::prime_field(2);
  std::vector<std::pair<std::string, GradedAlgebra>> family;
  for (std::size_t d = 1; d <= 4; ++d)
    for (unsigned bits = 0; bits < (1u << d); ++bits) {
      std::vector<int> c(d);
      std::string name = "D[x]/(x^" + std::to_string(d);
      for (std::size_t k = 0; k < d; ++k) {
        c[k] = (bits >> k) & 1u;
        if (c[k]) name += k == 0 ? " + 1" : " + x^" + std::to_string(k);
      }
      family.emplace_back(name + ")", trivially_graded(truncated_polynomial(F, c)));
    }
  for (const auto& inst : support::instances("2"))
    if (inst.algebra.dim() <= 4) family.emplace_back(label(inst), inst.algebra);
  const std::size_t singles = family.size();
  for (std::size_t i = 0; i < singles; ++i)
    for (std::size_t j = i; j < singles; ++j)
      if (family[i].second.dim() + family[j].second.dim() <= 4)
        family.emplace_back(family[i].first + " (+) " + family[j].first,
                            direct_sum(family[i].second, family[j].second));

  std::size_t cases = 0, holds = 0, fails = 0;
  for (const auto& [name, a] : family) {
    v.require(validate_grading(a).ok(), "family member validates: " + name);
    const auto& alg = a.algebra();
    const oracle::Table t(alg);
    std::vector<std::pair<std::string, Subspace>> subrings = {
        {"R0", principal_component(a)},
        {"Z(R)", center(a)},
        {"C(R0)", centralizer(a, principal_component(a))},
        {"C(Z(R0))", commutant_of_center_of_principal(a)},
        {"D1", Subspace::span(F, alg.dim(), {alg.unit().dense()})},
    };
    for (const auto& [sname, s] : subrings) {
      const bool lib = has_ideal_intersection_property(alg, s).holds();
      const bool orc = oracle::iip(t, oracle::span_of(t, oracle_basis(s)));
      ++cases;
      (orc ? holds : fails) += 1;
      v.require(lib == orc, "IIP of " + sname + " in " + name);
    }
  }
  const double ms = ms_since(t0);
  info("algebras: " + std::to_string(family.size()) + ", (algebra, subring) cases: " + std::to_string(cases) +
       ", IIP holds in " + std::to_string(holds) + ", fails in " + std::to_string(fails) + ", " +
       std::to_string(ms) + " ms");
  v.require(holds > 0 && fails > 0, "both verdicts occur");
  v.require(ms < 120000.0, "runtime under 120 s");
  return v.ok;
}

bool criterion11(Verdict& v) {
  {
    const auto inst = catalog::build("skew-group", {{"n", "2"}, {"action", "trivial"}, {"field", "2"}});
    const auto& cp = *inst.product;
    const auto& alg = cp.algebra.algebra();
    const Subspace a0 = principal_component(cp.algebra);
    const auto eq = check_maxcomm_iip_equivalence(cp);
    v.require(eq.iip.witness.has_value() && eq.construction.has_value(), "counterexample has witness ideals");
    if (eq.iip.witness && eq.construction) {
      for (const auto& [what, ideal] :
           {std::pair{"IIP witness", eq.iip.witness->ideal}, std::pair{"construction", eq.construction->ideal}}) {
        const auto q = quotient_by_ideal(alg, ideal);
        const auto inj = morphism_injectivity(q, a0);
        info(std::string(what) + " quotient: target dim " + std::to_string(q.target().dim()) + ", full=" +
             (inj.full ? "true" : "false") + " restricted=" + (inj.restricted ? "true" : "false"));
        v.require(!inj.full && inj.restricted, std::string("{full: false, restricted: true} for the ") + what);
      }
    }
  }
  std::mt19937_64 rng(99);
  std::size_t morphisms = 0, non_injective = 0, subrings_with_iip = 0;
  for (const auto& field : {"2", "3"})
    for (const auto& inst : support::instances(field)) {
      const auto& a = inst.algebra;
      const auto& alg = a.algebra();
      if (oracle::Table(alg).size() > 4096) continue;
      for (auto choice : {checks::SubringChoice::principal, checks::SubringChoice::commutant_principal,
                          checks::SubringChoice::commutant_center_principal, checks::SubringChoice::center}) {
        const Subspace s = checks::choose_subring(a, choice);
        if (!has_ideal_intersection_property(alg, s).holds()) continue;
        ++subrings_with_iip;
        std::vector<AlgebraMorphism> maps = {AlgebraMorphism::identity(alg)};
        std::vector<Vector> gens;
        for (std::size_t i = 0; i < alg.dim(); ++i) gens.push_back(unit_vector(alg.ring(), alg.dim(), i));
        for (int k = 0; k < 4; ++k) gens.push_back(support::random_vector(alg.ring(), alg.dim(), rng));
        for (const auto& g : gens) {
          if (is_zero(g)) continue;
          const Subspace ideal = two_sided_ideal(alg, {g});
          if (ideal.dim() == alg.dim()) continue;
          maps.push_back(quotient_by_ideal(alg, ideal));
        }
        for (const auto& phi : maps) {
          const auto inj = morphism_injectivity(phi, s);
          ++morphisms;
          non_injective += !inj.full;
          v.require(inj.full == inj.restricted, "restricted = full: " + label(inst));
        }
      }
    }
  info("subrings with verified IIP: " + std::to_string(subrings_with_iip) + ", morphisms: " +
       std::to_string(morphisms) + " (" + std::to_string(non_injective) + " not injective)");
  v.require(non_injective > 0, "non-injective morphisms exercised");
  return v.ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <criterion 1-11>\n";
    return 2;
  }
  const int n = std::atoi(argv[1]);
  const std::function<bool(Verdict&)> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8,
                                                    criterion9, criterion10, criterion11};
  if (n < 1 || n > 11) {
    std::cerr << "criterion must be 1-11\n";
    return 2;
  }
  Verdict v;
  const auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = criteria[n - 1](v);
  } catch (const std::exception& e) {
    std::cout << "  error: " << e.what() << "\n";
    ok = false;
  }
  std::printf("criterion %d: %s (%.0f ms)\n", n, ok ? "PASS" : "FAIL", ms_since(t0));
  return ok ? 0 : 1;
}

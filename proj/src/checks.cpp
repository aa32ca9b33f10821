#include "gral/checks.hpp"

#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>

namespace gral::checks {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::invalid_input, msg); }

const std::vector<std::string> kChecks = {"grading",       "strong", "strong-criterion",  "unit-in-R0",
                                          "nondeg-right",  "nondeg-left", "commutant-R0", "center",
                                          "commutant-ZR0", "iip",    "maxcomm",           "zr0-commutant-iip",
                                          "maxcomm-iff-iip"};

const std::map<std::string, std::string> kAliases = {{"theorem3", "zr0-commutant-iip"},
                                                     {"theorem4", "maxcomm-iff-iip"}};

bool uses_search(const std::string& check) {
  return check == "iip" || check == "zr0-commutant-iip" || check == "maxcomm-iff-iip";
}

json element(const Algebra& a, const Vector& v) { return io::vector_to_json(a, v); }

json verdict_result(IipVerdict v) {
  switch (v) {
    case IipVerdict::holds: return true;
    case IipVerdict::fails: return false;
    case IipVerdict::no_counterexample_found: return nullptr;
  }
  return nullptr;
}

json iip_to_json(const Algebra& a, const IipResult& r) {
  json out = {{"verdict", to_string(r.verdict)},
              {"points_total", r.points_total},
              {"points_examined", r.points_examined},
              {"unit_in_subring", r.unit_in_subring},
              {"subring_closed", r.subring_closed}};
  if (r.witness)
    out["witness"] = {{"generator", element(a, r.witness->generator)},
                      {"ideal_dim", r.witness->ideal.dim()},
                      {"intersection_dim", r.witness->intersection_dim}};
  return out;
}

std::string subring_name(SubringChoice c) {
  switch (c) {
    case SubringChoice::principal: return "R0";
    case SubringChoice::commutant_principal: return "commutant-R0";
    case SubringChoice::commutant_center_principal: return "commutant-ZR0";
    case SubringChoice::center: return "center";
  }
  return "?";
}

void dispatch(const Subject& s, const std::string& name, const Options& opt, json& r) {
  const GradedAlgebra& a = s.algebra;
  const Algebra& alg = a.algebra();
  const FiniteCategory& cat = a.category();

  if (name == "grading") {
    const auto rep = validate_grading(a);
    r["result"] = rep.ok();
    r["dims"]["total"] = a.dim();
    r["dims"]["R0"] = principal_component(a).dim();
    for (auto m : cat.morphisms()) r["dims"]["R_" + cat.name(m)] = a.component_indices(m).size();
    if (!rep.ok()) r["violations"] = rep.summary(5);
  } else if (name == "strong") {
    const auto sg = is_strongly_graded(a);
    r["result"] = sg.strong;
    if (sg.pair) {
      r["witness"] = {{"pair", {cat.name(sg.pair->first), cat.name(sg.pair->second)}}};
      if (sg.missed) r["witness"]["missed"] = element(alg, *sg.missed);
    }
  } else if (name == "strong-criterion") {
    if (!s.system) {
      r["status"] = "not-applicable";
      r["reason"] = "no crossed system attached";
      return;
    }
    const bool crit = strong_grading_criterion(*s.system);
    r["result"] = crit;
    r["agrees_with_strong"] = crit == is_strongly_graded(s.product->algebra).strong;
  } else if (name == "unit-in-R0") {
    r["result"] = unit_in_principal_component(a);
  } else if (name == "nondeg-right" || name == "nondeg-left") {
    const auto nd = nondegeneracy(a, name == "nondeg-right" ? Side::right : Side::left);
    r["result"] = nd.holds;
    r["identities_only"] = nd.identities_only;
    if (nd.s) r["witness"] = {{"s", cat.name(*nd.s)}, {"x", element(alg, *nd.x)}};
  } else if (name == "commutant-R0") {
    const auto gc = commutant_of_principal_component(a);
    r["result"] = gc.formula_agrees && gc.homogeneous;
    r["homogeneous"] = gc.homogeneous;
    r["formula_agrees"] = gc.formula_agrees;
    r["filter"] = commutant_is_filter(a, principal_component(a));
    if (!gc.mismatches.empty()) r["mismatches"] = gc.mismatches;
    r["dims"]["dim"] = gc.total.dim();
    for (auto m : cat.morphisms())
      if (!gc.components[m.index].is_zero()) r["dims"]["C_" + cat.name(m)] = gc.components[m.index].dim();
  } else if (name == "center") {
    r["result"] = true;
    r["dims"]["dim"] = center(a).dim();
  } else if (name == "commutant-ZR0") {
    const Subspace z = center_of_principal_component(a);
    r["result"] = true;
    r["dims"]["ZR0"] = z.dim();
    r["dims"]["dim"] = centralizer(a, z).dim();
  } else if (name == "iip") {
    const Subspace sub = choose_subring(a, opt.subring);
    const auto res = has_ideal_intersection_property(alg, sub, opt.iip);
    r["result"] = verdict_result(res.verdict);
    r["subring"] = subring_name(opt.subring);
    r["dims"]["subring"] = sub.dim();
    r["search"] = iip_to_json(alg, res);
  } else if (name == "maxcomm") {
    const Subspace sub = choose_subring(a, opt.subring);
    const auto mc = is_maximal_commutative(alg, sub);
    r["result"] = mc.maximal;
    r["subring"] = subring_name(opt.subring);
    r["dims"]["subring"] = sub.dim();
    r["dims"]["centralizer"] = mc.centralizer.dim();
    if (mc.witness) r["witness"] = element(alg, *mc.witness);
  } else if (name == "zr0-commutant-iip") {
    const auto rep = check_commutant_iip(a, opt.iip);
    r["applicable"] = rep.applicable;
    r["right"] = rep.right;
    r["left"] = rep.left;
    if (!rep.applicable) {
      r["result"] = true;
      r["vacuous"] = true;
      return;
    }
    r["result"] = verdict_result(rep.iip->verdict);
    r["dims"]["subring"] = commutant_of_center_of_principal(a).dim();
    r["search"] = iip_to_json(alg, *rep.iip);
  } else if (name == "maxcomm-iff-iip") {
    if (!s.product || !s.product->skew) {
      r["status"] = "not-applicable";
      r["reason"] = "needs a skew category algebra";
      return;
    }
    if (!is_groupoid(s.product->algebra.category())) {
      r["status"] = "not-applicable";
      r["reason"] = "the grading category is not a groupoid";
      return;
    }
    const auto eq = check_maxcomm_iip_equivalence(*s.product, opt.iip);
    const Algebra& palg = s.product->algebra.algebra();
    r["result"] = eq.iip.verdict == IipVerdict::no_counterexample_found ? json(nullptr) : json(eq.equivalent);
    r["maximal_commutative"] = eq.maximal_commutative;
    r["iip"] = verdict_result(eq.iip.verdict);
    r["search"] = iip_to_json(palg, eq.iip);
    if (eq.construction) {
      const auto& c = *eq.construction;
      r["construction"] = {{"s", s.product->algebra.category().name(c.s)},
                           {"commuting", element(palg, c.commuting)},
                           {"generator", element(palg, c.generator)},
                           {"ideal_dim", c.ideal.dim()},
                           {"meets_principal_trivially", c.meets_principal_trivially},
                           {"killed_by_phi", c.killed_by_phi}};
    }
  }
}

GradedAlgebra load_graded(const json& j) { return io::graded_algebra_from_json(j); }

}  // namespace

// ---------------------------------------------------------------------------

Subject subject_of(const catalog::Instance& inst) { return Subject{inst.algebra, inst.system, inst.product}; }

json expectation_to_json(const catalog::Expectation& e) {
  json out = {{"check", e.check}, {"key", e.key}, {"value", e.value}, {"origin", catalog::to_string(e.origin)}};
  if (!e.note.empty()) out["note"] = e.note;
  if (e.field_dependent) out["field_dependent"] = true;
  return out;
}

catalog::Expectation expectation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("check") || !j.contains("key") || !j.contains("value"))
    bad("expectations need check, key and value");
  catalog::Expectation e{canonical_check(j.at("check").get<std::string>()), j.at("key").get<std::string>(),
                         j.at("value"), catalog::Origin::computed, j.value("note", std::string()),
                         j.value("field_dependent", false)};
  const std::string origin = j.value("origin", std::string("computed"));
  if (origin == "stated") e.origin = catalog::Origin::stated;
  else if (origin == "immediate") e.origin = catalog::Origin::immediate;
  else if (origin != "computed") bad("unknown origin '" + origin + "'");
  return e;
}

json instance_to_json(const catalog::Instance& inst) {
  json out = {{"entry", inst.entry}, {"params", inst.params}, {"algebra", io::to_json(inst.algebra)}};
  if (inst.system) out["crossed_system"] = io::to_json(*inst.system);
  json expected = json::array();
  for (const auto& e : inst.expected) expected.push_back(expectation_to_json(e));
  out["expected"] = expected;
  return out;
}

Subject subject_from_json(const json& doc, std::vector<catalog::Expectation>* expected) {
  if (!doc.is_object()) bad("expected a JSON object");
  std::optional<CrossedSystem> system;
  std::optional<CrossedProduct> product;
  const json* cs = doc.contains("crossed_system") ? &doc.at("crossed_system")
                                                  : (doc.contains("components") ? &doc : nullptr);
  if (cs) {
    system = io::crossed_system_from_json(*cs);
    product = build_crossed_product(*system);
  }
  std::optional<GradedAlgebra> alg;
  if (doc.contains("algebra")) alg = load_graded(doc.at("algebra"));
  else if (doc.contains("basis")) alg = load_graded(doc);
  else if (product) alg = product->algebra;
  else bad("no algebra or crossed system in the document");
  if (expected && doc.contains("expected"))
    for (const auto& e : doc.at("expected")) expected->push_back(expectation_from_json(e));
  return Subject{std::move(*alg), std::move(system), std::move(product)};
}

const std::vector<std::string>& check_names() { return kChecks; }

std::string canonical_check(const std::string& name) {
  if (auto it = kAliases.find(name); it != kAliases.end()) return it->second;
  for (const auto& c : kChecks)
    if (c == name) return c;
  bad("unknown check '" + name + "'");
}

SubringChoice parse_subring_choice(const std::string& s) {
  if (s == "R0") return SubringChoice::principal;
  if (s == "commutant-R0") return SubringChoice::commutant_principal;
  if (s == "commutant-ZR0") return SubringChoice::commutant_center_principal;
  if (s == "center") return SubringChoice::center;
  bad("unknown subring '" + s + "' (R0, commutant-R0, commutant-ZR0, center)");
}

Subspace choose_subring(const GradedAlgebra& a, SubringChoice c) {
  switch (c) {
    case SubringChoice::principal: return principal_component(a);
    case SubringChoice::commutant_principal: return centralizer(a, principal_component(a));
    case SubringChoice::commutant_center_principal: return commutant_of_center_of_principal(a);
    case SubringChoice::center: return center(a);
  }
  bad("unknown subring");
}

json run_check(const Subject& s, const std::string& name, const Options& options) {
  const std::string canon = canonical_check(name);
  json r = {{"check", canon}, {"status", "ok"}, {"result", nullptr}, {"dims", json::object()}};
  const auto t0 = std::chrono::steady_clock::now();
  if (uses_search(canon) && s.algebra.ring().is_field() && !s.algebra.ring().is_prime_field() && !options.iip.sample) {
    r["status"] = "skipped";
    r["reason"] = "exhaustive search needs a finite field; pass --sample";
  } else {
    try {
      dispatch(s, canon, options, r);
    } catch (const Error& e) {
      r["result"] = nullptr;
      r["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
      switch (e.code()) {
        case ErrorCode::too_large: r["status"] = "budget"; break;
        case ErrorCode::field_required:
        case ErrorCode::not_commutative: r["status"] = "not-applicable"; break;
        default: r["status"] = "error";
      }
    }
  }
  r["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

json run_checks(const Subject& s, const std::vector<std::string>& names, const Options& options) {
  json out = json::object();
  for (const auto& n : names) {
    const std::string canon = canonical_check(n);
    if (!out.contains(canon)) out[canon] = run_check(s, canon, options);
  }
  return out;
}

json evaluate(const json& reports, const std::vector<catalog::Expectation>& expected, Tally& tally) {
  json out = json::array();
  for (const auto& e : expected) {
    json o = expectation_to_json(e);
    o.erase("value");
    o["expected"] = e.value;
    o["actual"] = nullptr;
    std::string status;
    if (!reports.contains(e.check)) {
      status = "mismatch";
      o["reason"] = "check was not run";
    } else {
      const json& rep = reports.at(e.check);
      const std::string st = rep.at("status").get<std::string>();
      if (st == "budget") {
        status = "budget";
      } else if (st == "skipped") {
        status = "skipped";
      } else if (st != "ok") {
        status = "mismatch";
        o["reason"] = rep.contains("error") ? rep.at("error").at("message") : rep.value("reason", json(st));
      } else {
        json actual = nullptr;
        if (e.key == "result") actual = rep.at("result");
        else if (e.key.starts_with("dims.") && rep.at("dims").contains(e.key.substr(5)))
          actual = rep.at("dims").at(e.key.substr(5));
        o["actual"] = actual;
        if (actual.is_null() && e.key == "result" && uses_search(e.check)) status = "inconclusive";
        else status = actual == e.value ? "met" : "mismatch";
      }
    }
    o["status"] = status;
    if (status == "met") ++tally.met;
    else if (status == "mismatch") ++tally.mismatch;
    else if (status == "skipped") ++tally.skipped;
    else if (status == "budget") ++tally.budget;
    else ++tally.inconclusive;
    out.push_back(o);
  }
  return out;
}

GradedAlgebra mutate_structure(const GradedAlgebra& a) {
  const Algebra& alg = a.algebra();
  const std::size_t n = alg.dim();
  std::vector<Element> products;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products.push_back(alg.product(i, j));
  products[n * n - 1] += alg.basis_element(0);
  return GradedAlgebra(Algebra(alg.ring(), alg.basis(), std::move(products), alg.unit()), a.category(), a.degrees());
}

VerifyResult verify_all(const VerifyOptions& options) {
  const CoefficientRing field = CoefficientRing::parse(options.field);
  VerifyResult out;
  json runs = json::array();
  std::size_t skipped_runs = 0;
  for (const auto& run : catalog::verification_runs()) {
    catalog::Params params = run.params;
    if (!run.fields.empty()) {
      bool listed = false;
      for (const auto& f : run.fields) listed |= CoefficientRing::parse(f) == field;
      if (!listed) {
        ++skipped_runs;
        continue;
      }
      params["field"] = options.field;
    }
    json entry = {{"entry", run.entry}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const auto inst = catalog::build(run.entry, params);
      entry["params"] = inst.params;
      entry["ring"] = inst.algebra.ring().name();
      entry["dim"] = inst.algebra.dim();
      Subject subject = subject_of(inst);
      if (options.mutate) subject = Subject{mutate_structure(inst.algebra), std::nullopt, std::nullopt};
      std::vector<std::string> names;
      for (const auto& e : inst.expected)
        if (std::find(names.begin(), names.end(), e.check) == names.end()) names.push_back(e.check);
      const json reports = run_checks(subject, names, options.checks);
      entry["checks"] = reports;
      entry["expectations"] = evaluate(reports, inst.expected, out.tally);
    } catch (const Error& e) {
      ++out.tally.mismatch;
      entry["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    }
    entry["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    runs.push_back(entry);
  }
  const auto& t = out.tally;
  out.report = {{"field", field.name()},
                {"mutate", options.mutate},
                {"runs", runs},
                {"runs_not_over_this_field", skipped_runs},
                {"summary",
                 {{"met", t.met},
                  {"mismatch", t.mismatch},
                  {"skipped", t.skipped},
                  {"budget", t.budget},
                  {"inconclusive", t.inconclusive}}},
                {"ok", t.exit_code() == 0}};
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms

namespace {

struct Loaded {
  Algebra algebra;
  std::optional<GradedAlgebra> graded;
};

Loaded load_any(const json& doc) {
  const json& j = doc.contains("algebra") ? doc.at("algebra") : doc;
  if (j.contains("degree")) {
    GradedAlgebra g = io::graded_algebra_from_json(j);
    Algebra a = g.algebra();
    return {std::move(a), std::move(g)};
  }
  if (!j.contains("basis") && (j.contains("components") || j.contains("crossed_system"))) {
    Subject s = subject_from_json(doc);
    Algebra a = s.algebra.algebra();
    return {std::move(a), std::move(s.algebra)};
  }
  return {io::algebra_from_json(j), std::nullopt};
}

}  // namespace

json run_morphism(const json& source, const json& map, const json& subring, const IipOptions& options,
                  bool& consistent) {
  const Loaded src = load_any(source);
  const Algebra& a = src.algebra;
  std::optional<AlgebraMorphism> phi;
  json out = json::object();
  if (map.contains("quotient")) {
    std::vector<Vector> gens;
    for (const auto& g : map.at("quotient")) gens.push_back(io::element_from_json(a, g).dense());
    const Subspace ideal = two_sided_ideal(a, gens);
    out["ideal_dim"] = ideal.dim();
    phi.emplace(quotient_by_ideal(a, ideal));
  } else {
    if (!map.contains("target") || !map.contains("images")) bad("map file needs target and images, or quotient");
    const Loaded tgt = load_any(map.at("target"));
    if (!(tgt.algebra.ring() == a.ring())) throw Error(ErrorCode::ring_mismatch, "source and target rings differ");
    std::vector<Vector> cols;
    for (const auto& b : a.basis()) {
      if (!map.at("images").contains(b)) bad("no image given for basis id '" + b + "'");
      cols.push_back(io::element_from_json(tgt.algebra, map.at("images").at(b)).dense());
    }
    phi.emplace(a, tgt.algebra, Matrix::from_columns(a.ring(), tgt.algebra.dim(), cols));
  }

  Subspace s(a.ring(), a.dim());
  if (subring.contains("preset")) {
    if (!src.graded) bad("subring presets need a graded source algebra");
    s = choose_subring(*src.graded, parse_subring_choice(subring.at("preset").get<std::string>()));
  } else {
    s = io::subspace_from_json(a, subring);
  }

  const Injectivity inj = morphism_injectivity(*phi, s);
  out["full"] = inj.full;
  out["restricted"] = inj.restricted;
  out["subring_dim"] = s.dim();
  out["target_dim"] = phi->target().dim();
  out["iip"] = nullptr;
  consistent = true;
  try {
    const auto res = has_ideal_intersection_property(a, s, options);
    out["iip"] = iip_to_json(a, res);
    if (res.holds()) consistent = !inj.restricted || inj.full;
  } catch (const Error& e) {
    out["iip_error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  }
  out["consistent"] = consistent;
  return out;
}

// ---------------------------------------------------------------------------
// Pretty printing

namespace {

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void pretty_checks(std::ostringstream& os, const json& reports, const std::string& indent) {
  for (const auto& [name, r] : reports.items()) {
    os << indent << std::left << std::setw(20) << name << std::setw(15) << cell(r.at("status")) << std::setw(8)
       << cell(r.at("result"));
    for (const auto& [k, v] : r.at("dims").items()) os << ' ' << k << '=' << cell(v);
    os << '\n';
  }
}

}  // namespace

std::string pretty(const json& report) {
  std::ostringstream os;
  if (report.contains("runs")) {
    for (const auto& run : report.at("runs")) {
      os << run.at("entry").get<std::string>();
      if (run.contains("params"))
        for (const auto& [k, v] : run.at("params").items()) os << ' ' << k << '=' << cell(v);
      os << '\n';
      if (run.contains("error")) os << "  error: " << cell(run.at("error").at("message")) << '\n';
      if (!run.contains("expectations")) continue;
      for (const auto& o : run.at("expectations")) {
        os << "  " << std::left << std::setw(13) << cell(o.at("status")) << std::setw(36)
           << (cell(o.at("check")) + " " + cell(o.at("key"))) << "expected " << std::setw(6) << cell(o.at("expected"))
           << " actual " << std::setw(6) << cell(o.at("actual")) << " [" << cell(o.at("origin")) << "]\n";
      }
    }
    const auto& s = report.at("summary");
    os << "field " << cell(report.at("field")) << ": " << s.at("met") << " met, " << s.at("mismatch")
       << " mismatched, " << s.at("skipped") << " skipped, " << s.at("budget") << " over budget, "
       << s.at("inconclusive") << " inconclusive\n";
  } else if (report.contains("checks")) {
    pretty_checks(os, report.at("checks"), "");
    if (report.contains("expectations"))
      for (const auto& o : report.at("expectations"))
        os << "  " << cell(o.at("status")) << ' ' << cell(o.at("check")) << ' ' << cell(o.at("key")) << " expected "
           << cell(o.at("expected")) << " actual " << cell(o.at("actual")) << '\n';
  } else {
    for (const auto& [k, v] : report.items()) os << std::left << std::setw(14) << k << cell(v) << '\n';
  }
  return os.str();
}

}  // namespace gral::checks

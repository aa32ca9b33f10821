#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gral/catalog.hpp"
#include "gral/json_io.hpp"

namespace gral::checks {

using json = nlohmann::json;

/// What a check runs on: a graded algebra, optionally with the crossed system
/// it came from.
struct Subject {
  GradedAlgebra algebra;
  std::optional<CrossedSystem> system;
  std::optional<CrossedProduct> product;
};

Subject subject_of(const catalog::Instance& inst);

/// Reads {"algebra", "crossed_system", "expected"} documents, a bare graded
/// algebra or a bare crossed system. Expectations go to *expected when given.
Subject subject_from_json(const json& doc, std::vector<catalog::Expectation>* expected = nullptr);

/// Document written by `gral build`.
json instance_to_json(const catalog::Instance& inst);

json expectation_to_json(const catalog::Expectation& e);
catalog::Expectation expectation_from_json(const json& j);

/// grading, strong, strong-criterion, unit-in-R0, nondeg-right, nondeg-left,
/// commutant-R0, center, commutant-ZR0, iip, maxcomm, theorem3, theorem4.
/// "zr0-commutant-iip" and "maxcomm-iff-iip" are accepted for the last two.
const std::vector<std::string>& check_names();
std::string canonical_check(const std::string& name);  // throws InvalidInput

/// Subring used by the iip and maxcomm checks.
enum class SubringChoice { principal, commutant_principal, commutant_center_principal, center };
SubringChoice parse_subring_choice(const std::string& s);  // throws InvalidInput
Subspace choose_subring(const GradedAlgebra& a, SubringChoice c);

struct Options {
  IipOptions iip;
  SubringChoice subring = SubringChoice::principal;
};

/// Report {"check", "status", "result", "dims", "witness", "elapsed_ms", ...}.
/// status is ok, skipped, not-applicable, budget or error.
json run_check(const Subject& s, const std::string& name, const Options& options = {});
/// Object keyed by canonical check name.
json run_checks(const Subject& s, const std::vector<std::string>& names, const Options& options = {});

struct Tally {
  std::size_t met = 0, mismatch = 0, skipped = 0, budget = 0, inconclusive = 0;
  int exit_code() const { return mismatch ? 1 : (budget ? 3 : 0); }
};

/// One outcome per expectation; reports must already hold the checks named.
json evaluate(const json& reports, const std::vector<catalog::Expectation>& expected, Tally& tally);

struct VerifyOptions {
  std::string field = "2";
  Options checks;
  bool mutate = false;
};

struct VerifyResult {
  json report;
  Tally tally;
};

VerifyResult verify_all(const VerifyOptions& options);

/// Adds b_0 to b_{n-1} b_{n-1}.
GradedAlgebra mutate_structure(const GradedAlgebra& a);

/// Map file: {"target": algebra, "images": {source basis id: target element}}
/// or {"quotient": [generator, ...]} for the projection onto R / <generators>.
/// Subring file: {"basis": [...]} or {"preset": "R0" | "commutant-R0" | ...}.
json run_morphism(const json& source, const json& map, const json& subring, const IipOptions& options, bool& consistent);

/// Human-readable rendering of check and verify reports.
std::string pretty(const json& report);

}  // namespace gral::checks

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gral/analysis.hpp"

namespace gral::catalog {

using Params = std::map<std::string, std::string>;

/// Where an expected value comes from: a claim made about the example in the
/// source literature, an immediate consequence of the construction, or a hand
/// computation.
enum class Origin { stated, immediate, computed };
std::string to_string(Origin o);

/// key is "result" or "dims.<name>" inside the report of `check`.
struct Expectation {
  std::string check;
  std::string key;
  nlohmann::json value;
  Origin origin;
  std::string note;
  /// The value depends on the coefficient field, not just on the construction.
  bool field_dependent = false;
};

struct ParamInfo {
  std::string name;
  std::string fallback;
  std::string help;
};

struct EntryInfo {
  std::string name;
  std::string summary;
  std::vector<ParamInfo> params;
};

const std::vector<EntryInfo>& entries();

struct Instance {
  std::string entry;
  Params params;  // resolved, defaults filled in
  GradedAlgebra algebra;
  std::optional<CrossedSystem> system;
  /// Crossed product of `system`. Usually identical to `algebra`; an entry may
  /// regrade it by a coarser category.
  std::optional<CrossedProduct> product;
  std::vector<Expectation> expected;
};

/// Throws UnknownEntry or BadParams. Keys "field" and "p" are synonyms.
Instance build(const std::string& name, const Params& params = {});

/// Instances run by verify-all. `fields` lists the coefficient rings each one
/// is exercised over; an empty list means "whatever the entry fixes".
struct Run {
  std::string entry;
  Params params;
  std::vector<std::string> fields;
};
const std::vector<Run>& verification_runs();

}  // namespace gral::catalog

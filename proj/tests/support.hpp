#pragma once

#include <random>
#include <string>
#include <vector>

#include "gral/catalog.hpp"

namespace support {

/// Every verification run that is exercised over `field` ("2", "3", "Q"),
/// plus the runs with a fixed ring when `with_fixed` is set.
inline std::vector<gral::catalog::Instance> instances(const std::string& field, bool with_fixed = false) {
  std::vector<gral::catalog::Instance> out;
  for (const auto& run : gral::catalog::verification_runs()) {
    auto params = run.params;
    if (run.fields.empty()) {
      if (with_fixed) out.push_back(gral::catalog::build(run.entry, params));
      continue;
    }
    bool listed = false;
    for (const auto& f : run.fields) listed |= f == field;
    if (!listed) continue;
    params["field"] = field;
    out.push_back(gral::catalog::build(run.entry, params));
  }
  return out;
}

inline std::string label(const gral::catalog::Instance& inst) {
  std::string s = inst.entry;
  for (const auto& [k, v] : inst.params) s += " " + k + "=" + v;
  return s;
}

inline gral::Vector random_vector(const gral::CoefficientRing& ring, std::size_t n, std::mt19937_64& rng) {
  gral::Vector v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(gral::Scalar::from_int(ring, static_cast<long long>(rng() % 7) - 3));
  return v;
}

}  // namespace support

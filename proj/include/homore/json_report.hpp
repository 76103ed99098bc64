#pragma once

#include <json.hpp>

#include <vector>

#include "homore/report.hpp"

namespace homore {

nlohmann::json to_json(const Report& report);

// The published report document:
// { config, suites: [{name, status, counterexample?, bound, millis}], seed, version }
nlohmann::json report_document(nlohmann::json config, const std::vector<Report>& suites,
                               std::uint64_t seed);

extern const char* const kVersion;

}  // namespace homore

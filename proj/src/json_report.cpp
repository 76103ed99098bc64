#include "homore/json_report.hpp"

namespace homore {

const char* const kVersion = "0.1.0";

nlohmann::json to_json(const Report& report) {
    nlohmann::json j;
    j["name"] = report.property;
    j["status"] = report.pass ? "pass" : "fail";
    if (report.counterexample) {
        j["counterexample"] = {{"inputs", report.counterexample->inputs},
                               {"lhs", report.counterexample->lhs},
                               {"rhs", report.counterexample->rhs}};
    }
    j["bound"] = report.bounds;
    j["millis"] = report.millis;
    if (report.seed) j["seed"] = *report.seed;
    return j;
}

nlohmann::json report_document(nlohmann::json config, const std::vector<Report>& suites,
                               std::uint64_t seed) {
    nlohmann::json j;
    j["config"] = std::move(config);
    j["suites"] = nlohmann::json::array();
    for (const auto& r : suites) j["suites"].push_back(to_json(r));
    j["seed"] = seed;
    j["version"] = kVersion;
    return j;
}

}  // namespace homore

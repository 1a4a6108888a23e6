#pragma once

#include <string>
#include <vector>

#include "birkit/report.hpp"

namespace birkit {

struct ScenarioInfo {
    std::string name;
    std::string description;
};

struct ScenarioResult {
    Json report;
    bool pass = false;
};

// Registered named scenarios, each replaying one of the toolkit's example
// families end to end with per-assertion verdicts.
const std::vector<ScenarioInfo>& scenario_registry();

// Deterministic given (name, seed); throws UnknownScenario for unknown names.
ScenarioResult run_scenario(const std::string& name, unsigned seed = 0);

}  // namespace birkit

#ifndef STC_SCENARIOS_HPP
#define STC_SCENARIOS_HPP

#include <string>
#include <vector>

#include "stc/json_io.hpp"

namespace stc {

/// One verified claim: description, source anchor formula, verdict and the
/// computed evidence.
struct ScenarioClaim {
    std::string claim;
    std::string anchor;
    bool pass = false;
    Json computed;
};

struct ScenarioReport {
    std::string name;
    std::vector<ScenarioClaim> claims;
    bool pass = false;

    Json to_json() const;
};

struct ScenarioOptions {
    uint64_t seed = 42;
    int trials = 5;        // randomized fallback runs in prop9
    int threads = 1;
    bool force_randomized = false;  // skip the symbolic route in prop9
    int samples = 12;      // property-L samples
    double tol = 1e-8;
};

/// Scenario names: prop3, prop5, prop6, prop9. Throws UnknownScenario.
ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& opts = {});

std::vector<std::string> scenario_names();

}  // namespace stc

#endif

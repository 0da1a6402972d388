#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "matroid/catalog.hpp"

namespace matroidlab {

struct ClaimOutcome {
    bool ok = false;
    nlohmann::ordered_json witness;
    std::string note;
};

struct ClaimDef {
    std::string id;
    std::function<ClaimOutcome(const Catalog&)> run;
};

struct ScenarioDef {
    std::string id;
    std::string ref;
    std::function<std::vector<ClaimDef>(const Catalog&)> claims;
};

const std::vector<ScenarioDef>& scenario_registry();

// Runs one claim, mapping enumeration-guard trips to `skipped` (never to
// pass) and other exceptions to `fail`.
struct ClaimExecution {
    int status;  // 0 pass, 1 fail, 2 skipped
    nlohmann::ordered_json witness;
    std::string note;
};
ClaimExecution execute_claim(const Catalog& cat, const ClaimDef& claim);

}  // namespace matroidlab

#pragma once

#include "task.hpp"

namespace shom::cli {

struct VerbResult {
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> failures;
};

// Runs one verb other than report-suite. Library exceptions propagate.
VerbResult run_verb(const TaskConfig& c, Dumps* dumps);

}  // namespace shom::cli

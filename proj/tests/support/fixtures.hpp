#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "riskprio/document.hpp"
#include "riskprio/project_model.hpp"
#include "riskprio/risk_model.hpp"

namespace riskprio::fixtures {

std::filesystem::path case_study_path();
const ProjectDocument& case_study();

Activity activity(const std::string& id, std::vector<std::string> preds, DurationModel duration,
                  double fixed_cost = 0.0, double variable_cost = 0.0);

// Ladders with the probability VL/L and impact VL bounds of the case study;
// the rest are arbitrary but valid.
RiskRegister empty_register();

// Random DAG: activity i may depend on any j < i. Triangular durations,
// non-negative costs.
ProjectNetwork random_network(std::mt19937_64& rng, std::size_t n);

}  // namespace riskprio::fixtures

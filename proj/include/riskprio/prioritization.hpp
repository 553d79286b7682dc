#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "riskprio/mcs_engine.hpp"
#include "riskprio/risk_model.hpp"

namespace riskprio {

struct RiskDeltaRow {
    RiskId risk;
    Days duration_with_risk = 0.0;
    Money cost_with_risk = 0.0;
    Days delta_duration = 0.0;
    Money delta_cost = 0.0;
    int rank_duration = 0;
    int rank_cost = 0;

    bool operator==(const RiskDeltaRow&) const = default;
};

struct PrioritizationReport {
    double percentile = 0.95;
    std::uint32_t iterations = 0;
    std::uint64_t seed = 0;
    Days baseline_duration = 0.0;
    Money baseline_cost = 0.0;
    std::vector<RiskDeltaRow> rows;  // register order

    // Deltas are reported as computed; a negative one means streams were not
    // aligned and the ranking is noise-driven.
    bool has_negative_deltas() const;

    bool operator==(const PrioritizationReport&) const = default;
};

// The report together with the sample arrays it was computed from.
struct PrioritizationRun {
    PrioritizationReport report;
    ScenarioResult baseline;
    std::vector<ScenarioResult> with_risk;  // parallel to report.rows
};

// Baseline scenario plus one scenario per risk with only that risk active,
// all under the same seed. Deltas are percentile differences against the
// baseline; each delta column gets its own competition ranking.
PrioritizationRun run_prioritization(const ProjectNetwork& net, const RiskRegister& reg,
                                     const SimulationConfig& config);

PrioritizationReport prioritize(const ProjectNetwork& net, const RiskRegister& reg,
                                const SimulationConfig& config);

struct DeltaError {
    double duration = 0.0;
    double cost = 0.0;
};

// Standard error of the percentile deltas from a paired bootstrap: each
// resample draws iteration indices with replacement and applies them to both
// arrays, keeping the common-random-number pairing intact.
DeltaError bootstrap_delta_error(const ScenarioResult& baseline, const ScenarioResult& with_risk,
                                 double alpha, unsigned resamples, std::uint64_t seed);

struct ComparisonRow {
    RiskId risk;
    ImpactGroup group = ImpactGroup::duration;
    // Absent when the risk's probability or impact is not categorical.
    std::optional<CategoryLevel> probability_level;
    std::optional<CategoryLevel> impact_level;
    std::optional<double> matrix_score;
    std::optional<int> matrix_rank;
    Days duration_with_risk = 0.0;
    Days delta_duration = 0.0;
    int rank_duration = 0;
    Money cost_with_risk = 0.0;
    Money delta_cost = 0.0;
    int rank_cost = 0;
};

// A pair within one impact group that the two methods order differently.
// Orders are -1, 0 or +1 for first below, tied with, or above second.
struct Disagreement {
    ImpactGroup group = ImpactGroup::duration;
    RiskId first;
    RiskId second;
    int matrix_order = 0;
    int quantitative_order = 0;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;  // duration group first, register order within
    std::vector<Disagreement> disagreements;
};

// Joins the qualitative matrix with the simulated deltas. Throws
// ValidationError if the report was not produced from `reg`.
ComparisonTable compare_with_matrix(const PrioritizationReport& report, const RiskRegister& reg,
                                    const ScoreLadder& scores);

}  // namespace riskprio

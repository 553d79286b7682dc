#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riskprio/histogram.hpp"
#include "riskprio/mcs_engine.hpp"
#include "riskprio/prioritization.hpp"
#include "riskprio/project_model.hpp"
#include "riskprio/risk_model.hpp"

namespace riskprio {

enum class OutputFormat { text, csv, json };

std::optional<OutputFormat> parse_format(std::string_view name);

// Fixed-point with '.' as decimal separator whatever the global locale.
std::string format_fixed(double value, int decimals);

struct PlanSummary {
    Days duration = 0.0;
    Money cost = 0.0;
    std::vector<PlannedValuePoint> curve;
    std::string time_unit;
    std::string currency_unit;
};

PlanSummary make_plan(const ProjectNetwork& net);

enum class Metric { duration, cost };

struct SimulationSummary {
    double percentile = 0.95;
    std::uint32_t iterations = 0;
    std::uint64_t seed = 0;
    std::vector<RiskId> active_risks;
    SampleSummary duration;
    SampleSummary cost;
    Days duration_at_percentile = 0.0;
    Money cost_at_percentile = 0.0;
    HistogramExport duration_histogram;
    HistogramExport cost_histogram;
};

SimulationSummary summarize_simulation(const ScenarioResult& result, const SimulationConfig& config,
                                       std::vector<RiskId> active_risks, std::size_t bins);

std::string render_plan(const PlanSummary& plan, OutputFormat format);

// csv emits the histogram of `metric` only; text and json carry both.
std::string render_simulation(const SimulationSummary& sim, OutputFormat format, Metric metric);

// Column layout: Risk, Duration_with_Ri, Cost_with_Ri,
// Difference_Duration_with_Ri, Ranking_Dur, Difference_Cost_with_Ri,
// Ranking_Cost. Durations and costs print with 2 decimals; json keeps full
// precision and round-trips through parse_report_json.
std::string render_report(const PrioritizationReport& report, OutputFormat format);
PrioritizationReport parse_report_json(std::string_view text);

std::string render_matrix(const std::vector<MatrixEntry>& entries, OutputFormat format);
std::string render_comparison(const ComparisonTable& table, const PrioritizationReport& report,
                              OutputFormat format);

}  // namespace riskprio

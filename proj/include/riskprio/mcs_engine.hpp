#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "riskprio/project_model.hpp"
#include "riskprio/risk_model.hpp"

namespace riskprio {

struct SimulationConfig {
    std::uint32_t iterations = 20000;
    std::uint64_t seed = 42;
    double percentile = 0.95;
    // 0 picks std::thread::hardware_concurrency(). Never changes results.
    unsigned workers = 0;

    // Throws ValidationError on zero iterations or a percentile outside (0, 1).
    void validate() const;

    bool operator==(const SimulationConfig&) const = default;
};

// Network plus the subset of the register that is switched on. Borrows both;
// they must outlive the call that consumes the scenario.
struct Scenario {
    const ProjectNetwork& network;
    const RiskRegister& risks;
    std::vector<RiskId> active_risks;
};

// Linear interpolation between closest order statistics:
// h = (n - 1) * alpha, result = x[floor h] + frac(h) * (x[floor h + 1] - x[floor h]).
double percentile(std::span<const double> samples, double alpha);

struct SampleSummary {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation (n - 1)
    double min = 0.0;
    double max = 0.0;
};

SampleSummary summarize(std::span<const double> samples);

class ScenarioResult {
public:
    ScenarioResult(std::vector<Days> durations, std::vector<Money> costs);

    const std::vector<Days>& duration_samples() const { return durations_; }
    const std::vector<Money>& cost_samples() const { return costs_; }
    const SampleSummary& duration_summary() const { return duration_summary_; }
    const SampleSummary& cost_summary() const { return cost_summary_; }

    Days duration_percentile(double alpha) const { return percentile(durations_, alpha); }
    Money cost_percentile(double alpha) const { return percentile(costs_, alpha); }

private:
    std::vector<Days> durations_;
    std::vector<Money> costs_;
    SampleSummary duration_summary_;
    SampleSummary cost_summary_;
};

// Inverse-CDF transforms of a uniform variate u in [0, 1].
double sample_triangular(double min, double mode, double max, double u);
double sample_uniform(const Interval& range, double u);
bool sample_bernoulli(double p, double u);
double sample(const SamplingSpec& spec, double u);

// Runs `config.iterations` replications of the scenario. Activity durations
// and each risk draw from their own substream keyed by (seed, source id,
// iteration), so two scenarios with the same seed see identical activity
// durations and identical draws for any risk they share. Output is
// bit-identical for every worker count.
ScenarioResult run_scenario(const Scenario& scenario, const SimulationConfig& config);

}  // namespace riskprio

#include "riskprio/mcs_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "riskprio/detail/overloaded.hpp"
#include "riskprio/errors.hpp"
#include "riskprio/random_stream.hpp"

namespace riskprio {

namespace {

using detail::overloaded;

// Variate slots inside a risk's substream cell.
constexpr std::uint32_t kProbabilitySlot = 0;
constexpr std::uint32_t kOccurrenceSlot = 1;
constexpr std::uint32_t kDurationImpactSlot = 2;
constexpr std::uint32_t kCostImpactSlot = 3;

struct ActiveRisk {
    std::uint64_t source = 0;
    std::size_t target = 0;
    SamplingSpec probability;
    std::optional<SamplingSpec> duration_impact;
    std::optional<SamplingSpec> cost_impact;
};

std::vector<ActiveRisk> resolve_active(const Scenario& scenario, const ScheduleEvaluator& eval) {
    const auto& reg = scenario.risks;
    std::set<RiskId> seen;
    std::vector<ActiveRisk> out;
    for (const auto& id : scenario.active_risks) {
        if (!seen.insert(id).second) throw ValidationError("risk " + id.str() + " activated twice");
        const auto& spec = reg.find(id);
        ActiveRisk r;
        r.source = source_key(SourceKind::risk, id.str());
        r.target = eval.index_of(spec.target_activity);
        r.probability = resolve_probability(spec.probability, reg.probability_ladder);
        if (spec.duration_impact)
            r.duration_impact =
                resolve_impact(*spec.duration_impact, reg.duration_ladder, LadderKind::duration_impact);
        if (spec.cost_impact)
            r.cost_impact = resolve_impact(*spec.cost_impact, reg.cost_ladder, LadderKind::cost_impact);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

void SimulationConfig::validate() const {
    if (iterations < 1) throw ValidationError("iterations must be >= 1");
    if (!(percentile > 0.0 && percentile < 1.0))
        throw ValidationError("percentile must lie strictly between 0 and 1");
}

double percentile(std::span<const double> samples, double alpha) {
    if (samples.empty()) throw std::invalid_argument("percentile of an empty sample");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("percentile alpha must lie in (0, 1)");
    std::vector<double> v(samples.begin(), samples.end());
    const double h = static_cast<double>(v.size() - 1) * alpha;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(lo), v.end());
    const double x_lo = v[lo];
    if (lo + 1 >= v.size()) return x_lo;
    const double x_hi = *std::min_element(v.begin() + static_cast<std::ptrdiff_t>(lo) + 1, v.end());
    const double frac = h - static_cast<double>(lo);
    return x_lo + frac * (x_hi - x_lo);
}

SampleSummary summarize(std::span<const double> samples) {
    SampleSummary s;
    if (samples.empty()) return s;
    const double n = static_cast<double>(samples.size());
    s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : samples) ss += (x - s.mean) * (x - s.mean);
    s.stddev = samples.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    s.min = *mn;
    s.max = *mx;
    return s;
}

ScenarioResult::ScenarioResult(std::vector<Days> durations, std::vector<Money> costs)
    : durations_(std::move(durations)), costs_(std::move(costs)) {
    if (durations_.size() != costs_.size())
        throw std::invalid_argument("duration and cost sample arrays differ in length");
    duration_summary_ = summarize(durations_);
    cost_summary_ = summarize(costs_);
}

double sample_triangular(double min, double mode, double max, double u) {
    if (!(min <= mode && mode <= max)) throw std::invalid_argument("triangular requires min <= mode <= max");
    if (min == max) return min;
    const double width = max - min;
    if (u <= (mode - min) / width) return min + std::sqrt(u * width * (mode - min));
    return max - std::sqrt((1.0 - u) * width * (max - mode));
}

double sample_uniform(const Interval& range, double u) { return range.lo + u * (range.hi - range.lo); }

bool sample_bernoulli(double p, double u) { return u < p; }

double sample(const SamplingSpec& spec, double u) {
    return std::visit(overloaded{[&](const Uniform& s) { return sample_uniform(s.range, u); },
                                 [](const Point& s) { return s.value; },
                                 [&](const Triangular& s) { return sample_triangular(s.min, s.mode, s.max, u); }},
                      spec);
}

ScenarioResult run_scenario(const Scenario& scenario, const SimulationConfig& config) {
    config.validate();
    const auto& net = scenario.network;
    const ScheduleEvaluator eval(net);
    validate_register(scenario.risks, net);
    const auto risks = resolve_active(scenario, eval);

    const std::size_t n = eval.size();
    std::vector<std::uint64_t> activity_source(n);
    for (std::size_t i = 0; i < n; ++i)
        activity_source[i] = source_key(SourceKind::activity, net.activities[i].id.str());

    const std::uint32_t iterations = config.iterations;
    std::vector<Days> durations(iterations);
    std::vector<Money> costs(iterations);

    auto run_range = [&](std::uint32_t begin, std::uint32_t end) {
        std::vector<Days> d(n);
        std::vector<Money> extras(n);
        for (std::uint32_t k = begin; k < end; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                d[i] = std::visit(
                    overloaded{[](const Deterministic& m) { return m.value; },
                               [&](const Triangular& t) {
                                   const SubstreamCell cell(config.seed, activity_source[i], k);
                                   return sample_triangular(t.min, t.mode, t.max, cell.uniform(0));
                               }},
                    net.activities[i].duration);
            }
            std::fill(extras.begin(), extras.end(), 0.0);
            for (const auto& r : risks) {
                const SubstreamCell cell(config.seed, r.source, k);
                const double p = sample(r.probability, cell.uniform(kProbabilitySlot));
                if (!sample_bernoulli(p, cell.uniform(kOccurrenceSlot))) continue;
                if (r.duration_impact) d[r.target] += sample(*r.duration_impact, cell.uniform(kDurationImpactSlot));
                if (r.cost_impact) extras[r.target] += sample(*r.cost_impact, cell.uniform(kCostImpactSlot));
            }
            durations[k] = eval.duration(d);
            costs[k] = eval.cost(d, extras);
        }
    };

    unsigned workers = config.workers != 0 ? config.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, iterations);
    if (workers <= 1) {
        run_range(0, iterations);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::uint32_t chunk = (iterations + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint32_t begin = w * chunk;
            const std::uint32_t end = std::min(iterations, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run_range, begin, end);
        }
    }
    return ScenarioResult(std::move(durations), std::move(costs));
}

}  // namespace riskprio

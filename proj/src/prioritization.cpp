#include "riskprio/prioritization.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "riskprio/errors.hpp"

namespace riskprio {

namespace {

int sign(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

bool PrioritizationReport::has_negative_deltas() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const RiskDeltaRow& r) { return r.delta_duration < 0.0 || r.delta_cost < 0.0; });
}

PrioritizationRun run_prioritization(const ProjectNetwork& net, const RiskRegister& reg,
                                     const SimulationConfig& config) {
    config.validate();
    validate_register(reg, net);

    PrioritizationRun run{{}, run_scenario(Scenario{net, reg, {}}, config), {}};
    auto& report = run.report;
    report.percentile = config.percentile;
    report.iterations = config.iterations;
    report.seed = config.seed;
    report.baseline_duration = run.baseline.duration_percentile(config.percentile);
    report.baseline_cost = run.baseline.cost_percentile(config.percentile);

    run.with_risk.reserve(reg.risks.size());
    for (const auto& risk : reg.risks) {
        auto& result = run.with_risk.emplace_back(run_scenario(Scenario{net, reg, {risk.id}}, config));
        RiskDeltaRow row;
        row.risk = risk.id;
        row.duration_with_risk = result.duration_percentile(config.percentile);
        row.cost_with_risk = result.cost_percentile(config.percentile);
        row.delta_duration = row.duration_with_risk - report.baseline_duration;
        row.delta_cost = row.cost_with_risk - report.baseline_cost;
        report.rows.push_back(row);
    }

    std::vector<double> dd, dc;
    for (const auto& r : report.rows) {
        dd.push_back(r.delta_duration);
        dc.push_back(r.delta_cost);
    }
    const auto rank_d = competition_rank(dd);
    const auto rank_c = competition_rank(dc);
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        report.rows[i].rank_duration = rank_d[i];
        report.rows[i].rank_cost = rank_c[i];
    }
    return run;
}

PrioritizationReport prioritize(const ProjectNetwork& net, const RiskRegister& reg,
                                const SimulationConfig& config) {
    return run_prioritization(net, reg, config).report;
}

DeltaError bootstrap_delta_error(const ScenarioResult& baseline, const ScenarioResult& with_risk,
                                 double alpha, unsigned resamples, std::uint64_t seed) {
    const auto& bd = baseline.duration_samples();
    const auto& bc = baseline.cost_samples();
    const auto& rd = with_risk.duration_samples();
    const auto& rc = with_risk.cost_samples();
    const std::size_t n = bd.size();
    if (n == 0 || rd.size() != n) throw std::invalid_argument("bootstrap needs paired, non-empty samples");
    if (resamples < 2) throw std::invalid_argument("bootstrap needs at least two resamples");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<double> s_bd(n), s_bc(n), s_rd(n), s_rc(n);
    std::vector<double> dur_deltas, cost_deltas;
    dur_deltas.reserve(resamples);
    cost_deltas.reserve(resamples);
    for (unsigned b = 0; b < resamples; ++b) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto j = pick(rng);
            s_bd[k] = bd[j];
            s_bc[k] = bc[j];
            s_rd[k] = rd[j];
            s_rc[k] = rc[j];
        }
        dur_deltas.push_back(percentile(s_rd, alpha) - percentile(s_bd, alpha));
        cost_deltas.push_back(percentile(s_rc, alpha) - percentile(s_bc, alpha));
    }
    return {summarize(dur_deltas).stddev, summarize(cost_deltas).stddev};
}

ComparisonTable compare_with_matrix(const PrioritizationReport& report, const RiskRegister& reg,
                                    const ScoreLadder& scores) {
    if (report.rows.size() != reg.risks.size())
        throw ValidationError("report has " + std::to_string(report.rows.size()) + " rows but the register has " +
                              std::to_string(reg.risks.size()) + " risks");
    for (std::size_t i = 0; i < report.rows.size(); ++i)
        if (report.rows[i].risk != reg.risks[i].id)
            throw ValidationError("report row " + report.rows[i].risk.str() + " does not match register risk " +
                                  reg.risks[i].id.str());
    scores.validate();

    const auto matrix = matrix_rank(reg, scores);
    ComparisonTable table;
    for (auto group : {ImpactGroup::duration, ImpactGroup::cost}) {
        const std::size_t first_row = table.rows.size();
        for (std::size_t i = 0; i < reg.risks.size(); ++i) {
            const auto& risk = reg.risks[i];
            const auto& impact = group == ImpactGroup::duration ? risk.duration_impact : risk.cost_impact;
            if (!impact) continue;
            const auto& q = report.rows[i];
            ComparisonRow row;
            row.risk = risk.id;
            row.group = group;
            auto m = std::find_if(matrix.begin(), matrix.end(), [&](const MatrixEntry& e) {
                return e.risk == risk.id && e.group == group;
            });
            if (m != matrix.end()) {
                row.probability_level = m->probability;
                row.impact_level = m->impact;
                row.matrix_score = m->score;
                row.matrix_rank = m->rank;
            }
            row.duration_with_risk = q.duration_with_risk;
            row.delta_duration = q.delta_duration;
            row.rank_duration = q.rank_duration;
            row.cost_with_risk = q.cost_with_risk;
            row.delta_cost = q.delta_cost;
            row.rank_cost = q.rank_cost;
            table.rows.push_back(row);
        }

        for (std::size_t a = first_row; a < table.rows.size(); ++a) {
            for (std::size_t b = a + 1; b < table.rows.size(); ++b) {
                const auto& ra = table.rows[a];
                const auto& rb = table.rows[b];
                if (!ra.matrix_score || !rb.matrix_score) continue;
                const int mo = sign(*ra.matrix_score - *rb.matrix_score);
                const int qo = group == ImpactGroup::duration ? sign(ra.delta_duration - rb.delta_duration)
                                                              : sign(ra.delta_cost - rb.delta_cost);
                if (mo != qo) table.disagreements.push_back({group, ra.risk, rb.risk, mo, qo});
            }
        }
    }
    return table;
}

}  // namespace riskprio

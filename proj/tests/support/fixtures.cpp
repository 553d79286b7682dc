#include "support/fixtures.hpp"

namespace riskprio::fixtures {

std::filesystem::path case_study_path() { return std::filesystem::path(RISKPRIO_DATA_DIR) / "case_study.json"; }

const ProjectDocument& case_study() {
    static const ProjectDocument doc = parse_document(case_study_path());
    return doc;
}

Activity activity(const std::string& id, std::vector<std::string> preds, DurationModel duration,
                  double fixed_cost, double variable_cost) {
    Activity a;
    a.id = ActivityId(id);
    for (auto& p : preds) a.predecessors.emplace_back(std::move(p));
    a.duration = duration;
    a.fixed_cost = fixed_cost;
    a.variable_cost_rate = variable_cost;
    return a;
}

RiskRegister empty_register() {
    RiskRegister reg;
    reg.probability_ladder = CategoryLadder(
        LadderKind::probability, {{{0.0, 0.03}, {0.03, 0.10}, {0.10, 0.30}, {0.30, 0.50}, {0.50, 0.90}}});
    reg.duration_ladder = CategoryLadder(LadderKind::duration_impact,
                                         {{{0.0, 5.0}, {5.0, 10.0}, {10.0, 30.0}, {50.0, 100.0}, {100.0, 200.0}}});
    reg.cost_ladder = CategoryLadder(LadderKind::cost_impact,
                                     {{{0.0, 100.0}, {100.0, 500.0}, {500.0, 1000.0}, {1000.0, 5000.0},
                                       {5000.0, 10000.0}}});
    return reg;
}

ProjectNetwork random_network(std::mt19937_64& rng, std::size_t n) {
    ProjectNetwork net;
    std::uniform_real_distribution<double> len(0.0, 20.0);
    std::uniform_real_distribution<double> money(0.0, 10.0);
    std::bernoulli_distribution edge(0.35);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> preds;
        for (std::size_t j = 0; j < i; ++j)
            if (edge(rng)) preds.push_back("N" + std::to_string(j));
        double a = len(rng), b = len(rng), c = len(rng);
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        net.activities.push_back(activity("N" + std::to_string(i), preds, Triangular{a, b, c}, money(rng), money(rng)));
    }
    return net;
}

}  // namespace riskprio::fixtures

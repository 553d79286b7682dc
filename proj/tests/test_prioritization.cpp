#include <catch2/catch_amalgamated.hpp>

#include "riskprio/errors.hpp"
#include "riskprio/prioritization.hpp"
#include "support/fixtures.hpp"

using namespace riskprio;
using fixtures::activity;

namespace {

SimulationConfig config(std::uint32_t iterations, std::uint64_t seed) {
    SimulationConfig c;
    c.iterations = iterations;
    c.seed = seed;
    return c;
}

}  // namespace

TEST_CASE("report rows follow the register and ranks follow the deltas") {
    const auto& doc = fixtures::case_study();
    const auto run = run_prioritization(doc.network, doc.risks, config(4000, 1));
    const auto& rep = run.report;
    REQUIRE(rep.rows.size() == doc.risks.risks.size());
    CHECK(run.with_risk.size() == rep.rows.size());
    CHECK(rep.baseline_duration == run.baseline.duration_percentile(0.95));
    CHECK(rep.iterations == 4000);
    CHECK(rep.seed == 1);

    std::vector<double> dd, dc;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& row = rep.rows[i];
        CHECK(row.risk == doc.risks.risks[i].id);
        CHECK(row.delta_duration == row.duration_with_risk - rep.baseline_duration);
        CHECK(row.delta_cost == row.cost_with_risk - rep.baseline_cost);
        dd.push_back(row.delta_duration);
        dc.push_back(row.delta_cost);
    }
    const auto rd = competition_rank(dd), rc = competition_rank(dc);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(rep.rows[i].rank_duration == rd[i]);
        CHECK(rep.rows[i].rank_cost == rc[i]);
    }
    CHECK_FALSE(rep.has_negative_deltas());
}

TEST_CASE("cost-only risks have exactly zero duration delta") {
    const auto& doc = fixtures::case_study();
    for (std::uint64_t seed : {1u, 42u, 99u}) {
        const auto rep = prioritize(doc.network, doc.risks, config(3000, seed));
        for (const auto& row : rep.rows) {
            const auto& spec = doc.risks.find(row.risk);
            if (!spec.duration_impact) CHECK(row.delta_duration == 0.0);
        }
    }
}

TEST_CASE("duration risk on an activity without variable cost has zero cost delta") {
    const auto& doc = fixtures::case_study();
    const auto rep = prioritize(doc.network, doc.risks, config(3000, 42));
    for (const auto& row : rep.rows)
        if (row.risk.str() == "R4") CHECK(row.delta_cost == 0.0);
}

TEST_CASE("bootstrap error is zero for identical arrays and positive otherwise") {
    ScenarioResult a({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    auto e = bootstrap_delta_error(a, a, 0.9, 200, 1);
    CHECK(e.duration == 0.0);
    CHECK(e.cost == 0.0);
    ScenarioResult b({1, 2, 3, 4, 5, 6, 7, 8, 9, 30}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    e = bootstrap_delta_error(a, b, 0.9, 200, 1);
    CHECK(e.duration > 0.0);
    CHECK(e.cost == 0.0);
    CHECK_THROWS(bootstrap_delta_error(a, ScenarioResult({1}, {1}), 0.9, 10, 1));
}

TEST_CASE("comparison joins matrix and simulation") {
    const auto& doc = fixtures::case_study();
    const auto rep = prioritize(doc.network, doc.risks, config(2000, 42));
    const auto table = compare_with_matrix(rep, doc.risks, doc.matrix_scores);
    REQUIRE(table.rows.size() == 15);
    CHECK(table.rows.front().group == ImpactGroup::duration);
    CHECK(table.rows.back().group == ImpactGroup::cost);
    for (const auto& row : table.rows) {
        CHECK(row.matrix_rank.has_value());
        CHECK(row.probability_level.has_value());
    }
    for (const auto& d : table.disagreements) {
        CHECK(d.matrix_order != d.quantitative_order);
        CHECK(d.first != d.second);
    }

    auto other = rep;
    other.rows.pop_back();
    CHECK_THROWS_AS(compare_with_matrix(other, doc.risks, doc.matrix_scores), ValidationError);
}

TEST_CASE("disagreement detection on a hand-built case") {
    ProjectNetwork net;
    net.activities = {activity("A", {}, Deterministic{10}), activity("B", {"A"}, Deterministic{10})};
    auto reg = fixtures::empty_register();
    using L = CategoryLevel;
    // X scores 0.7 * 0.1 = 0.07 and Y scores 0.1 * 0.8 = 0.08, but Y occurs
    // less than 5% of the time so it cannot move the 95th percentile.
    reg.risks = {RiskSpec{RiskId("X"), "", ActivityId("A"), Category{L::H}, Category{L::L}, std::nullopt},
                 RiskSpec{RiskId("Y"), "", ActivityId("B"), Category{L::VL}, Category{L::VH}, std::nullopt},
                 RiskSpec{RiskId("Z"), "", ActivityId("B"), Point{0.45}, Point{3.0}, std::nullopt}};
    validate_register(reg, net);
    const auto rep = prioritize(net, reg, config(5000, 42));
    CHECK(rep.rows[0].delta_duration > 0.0);
    CHECK(rep.rows[1].delta_duration == 0.0);

    const auto table = compare_with_matrix(rep, reg, ScoreLadder{});
    REQUIRE(table.rows.size() == 3);
    CHECK_FALSE(table.rows[2].matrix_rank.has_value());
    CHECK(table.rows[2].rank_duration == 2);
    REQUIRE(table.disagreements.size() == 1);
    const auto& d = table.disagreements[0];
    CHECK(d.group == ImpactGroup::duration);
    CHECK(((d.first.str() == "X" && d.matrix_order == -1 && d.quantitative_order == 1) ||
           (d.first.str() == "Y" && d.matrix_order == 1 && d.quantitative_order == -1)));
}

TEST_CASE("empty register gives baseline only") {
    ProjectNetwork net;
    net.activities = {activity("A", {}, Triangular{1, 2, 5}, 3, 1)};
    const auto reg = fixtures::empty_register();
    const auto rep = prioritize(net, reg, config(1000, 42));
    CHECK(rep.rows.empty());
    const auto base = run_scenario(Scenario{net, reg, {}}, config(1000, 42));
    CHECK(rep.baseline_duration == base.duration_percentile(0.95));
    CHECK(rep.baseline_cost == base.cost_percentile(0.95));
}

TEST_CASE("single risk agrees trivially") {
    ProjectNetwork net;
    net.activities = {activity("A", {}, Deterministic{10}, 0, 1)};
    auto reg = fixtures::empty_register();
    reg.risks = {RiskSpec{RiskId("R1"), "", ActivityId("A"), Category{CategoryLevel::H}, Category{CategoryLevel::M},
                          std::nullopt}};
    const auto rep = prioritize(net, reg, config(2000, 42));
    const auto table = compare_with_matrix(rep, reg, ScoreLadder{});
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0].matrix_rank == 1);
    CHECK(table.rows[0].rank_duration == 1);
    CHECK(table.disagreements.empty());
}

TEST_CASE("equal matrix scores separated by simulation") {
    ProjectNetwork net;
    net.activities = {activity("A", {}, Deterministic{10}, 0, 1), activity("B", {}, Deterministic{10}, 0, 5),
                      activity("F", {"A", "B"}, Deterministic{0})};
    auto reg = fixtures::empty_register();
    using L = CategoryLevel;
    reg.risks = {RiskSpec{RiskId("P"), "", ActivityId("A"), Category{L::H}, Category{L::M}, std::nullopt},
                 RiskSpec{RiskId("Q"), "", ActivityId("B"), Category{L::H}, Category{L::M}, std::nullopt}};
    const auto rep = prioritize(net, reg, config(5000, 42));
    CHECK(rep.rows[1].delta_cost > rep.rows[0].delta_cost);
    CHECK(rep.rows[1].rank_cost == 1);
    CHECK(rep.rows[0].rank_cost == 2);

    const auto table = compare_with_matrix(rep, reg, ScoreLadder{});
    CHECK(table.rows[0].matrix_rank == table.rows[1].matrix_rank);
    bool listed = false;
    for (const auto& d : table.disagreements)
        listed = listed || (d.matrix_order == 0 && d.quantitative_order != 0);
    CHECK(listed);
}

TEST_CASE("case study: matrix has R2 over R3, simulation has R3 first") {
    const auto& doc = fixtures::case_study();
    const auto rep = prioritize(doc.network, doc.risks, config(20000, 42));
    const auto table = compare_with_matrix(rep, doc.risks, doc.matrix_scores);
    bool found = false;
    for (const auto& d : table.disagreements)
        found = found || (d.group == ImpactGroup::duration && d.first.str() == "R2" && d.second.str() == "R3" &&
                          d.matrix_order == 1 && d.quantitative_order == -1);
    CHECK(found);
    for (const auto& row : rep.rows)
        if (row.risk.str() == "R3") CHECK(row.rank_duration == 1);
}

TEST_CASE("property: wider impact never shrinks the delta") {
    ProjectNetwork net;
    net.activities = {activity("A", {}, Triangular{5, 8, 14}, 2, 1), activity("B", {}, Triangular{6, 7, 9}, 1, 3),
                      activity("C", {"A", "B"}, Triangular{1, 2, 3}, 0, 2)};
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        for (double alpha : {0.1, 0.5, 0.8, 0.95}) {
            auto cfg = config(1500, seed);
            cfg.percentile = alpha;
            double prev_d = -1.0, prev_c = -1.0;
            for (double hi : {1.0, 2.0, 4.0, 8.0, 16.0}) {
                auto reg = fixtures::empty_register();
                reg.risks = {RiskSpec{RiskId("R"), "", ActivityId(seed % 2 ? "A" : "B"), Uniform{{0.1, 0.4}},
                                      Uniform{{0.5, hi}}, Uniform{{0.0, hi * 3}}}};
                const auto rep = prioritize(net, reg, cfg);
                CHECK(rep.rows[0].delta_duration >= prev_d);
                CHECK(rep.rows[0].delta_cost >= prev_c);
                prev_d = rep.rows[0].delta_duration;
                prev_c = rep.rows[0].delta_cost;
            }
        }
    }
}

TEST_CASE("property: risks without duration impact never outrank a positive duration delta") {
    const auto& doc = fixtures::case_study();
    for (std::uint64_t seed : {3u, 4u}) {
        const auto rep = prioritize(doc.network, doc.risks, config(3000, seed));
        for (const auto& a : rep.rows) {
            if (doc.risks.find(a.risk).duration_impact) continue;
            for (const auto& b : rep.rows)
                if (b.delta_duration > 0.0) CHECK(a.rank_duration > b.rank_duration);
        }
    }
}

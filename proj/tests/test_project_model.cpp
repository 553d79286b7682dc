#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "riskprio/errors.hpp"
#include "riskprio/project_model.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace riskprio;
using fixtures::activity;

namespace {

DurationAssignment assign(const ProjectNetwork& net, const std::map<std::string, double>& d) {
    DurationAssignment out;
    for (const auto& a : net.activities) out[a.id] = d.at(a.id.str());
    return out;
}

std::map<std::string, double> draw(const ProjectNetwork& net, std::mt19937_64& rng) {
    std::map<std::string, double> d;
    for (const auto& a : net.activities) {
        const auto& t = std::get<Triangular>(a.duration);
        d[a.id.str()] = std::uniform_real_distribution<double>(t.min, t.max)(rng);
    }
    return d;
}

}  // namespace

TEST_CASE("chain in parallel with a longer activity") {
    ProjectNetwork net;
    net.activities = {activity("A", {}, Deterministic{3}), activity("B", {"A"}, Deterministic{4}),
                      activity("C", {}, Deterministic{10}), activity("S", {"B", "C"}, Deterministic{0})};
    DurationAssignment d{{ActivityId("A"), 3}, {ActivityId("B"), 4}, {ActivityId("C"), 10}, {ActivityId("S"), 0}};
    CHECK(project_duration(net, d) == 10.0);
}

TEST_CASE("single activity cost with extra") {
    ProjectNetwork net;
    net.activities = {activity("A", {}, Deterministic{10}, 100, 2)};
    DurationAssignment d{{ActivityId("A"), 10}};
    CHECK(project_cost(net, d, {{ActivityId("A"), 5}}) == 125.0);
    CHECK(project_cost(net, d) == 120.0);
}

TEST_CASE("several sinks end at the latest one") {
    ProjectNetwork net;
    net.activities = {activity("A", {}, Deterministic{2}), activity("B", {"A"}, Deterministic{9}),
                      activity("C", {"A"}, Deterministic{1})};
    CHECK(project_duration(net, {{ActivityId("A"), 2}, {ActivityId("B"), 9}, {ActivityId("C"), 1}}) == 11.0);
}

TEST_CASE("planned value curve") {
    SECTION("one activity") {
        ProjectNetwork net;
        net.activities = {activity("A", {}, Deterministic{4}, 10, 0)};
        auto curve = planned_value_curve(net);
        REQUIRE(curve.size() == 2);
        CHECK(curve.front() == PlannedValuePoint{0, 0});
        CHECK(curve.back() == PlannedValuePoint{4, 10});
    }
    SECTION("two in sequence") {
        ProjectNetwork net;
        net.activities = {activity("A", {}, Deterministic{2}, 10, 0), activity("B", {"A"}, Deterministic{2}, 10, 0)};
        auto curve = planned_value_curve(net);
        REQUIRE(curve.size() == 3);
        CHECK(curve[1] == PlannedValuePoint{2, 10});
        CHECK(curve[2] == PlannedValuePoint{4, 20});
    }
    SECTION("triangular durations use the most likely value") {
        ProjectNetwork net;
        net.activities = {activity("A", {}, Triangular{1, 3, 8}, 0, 5)};
        auto curve = planned_value_curve(net);
        CHECK(curve.back() == PlannedValuePoint{3, 15});
    }
}

TEST_CASE("validation rejects malformed networks") {
    ProjectNetwork net;
    SECTION("empty") {}
    SECTION("duplicate id") { net.activities = {activity("A", {}, Deterministic{1}), activity("A", {}, Deterministic{1})}; }
    SECTION("dangling predecessor") { net.activities = {activity("A", {"A99"}, Deterministic{1})}; }
    SECTION("self loop") { net.activities = {activity("A", {"A"}, Deterministic{1})}; }
    SECTION("negative duration") { net.activities = {activity("A", {}, Deterministic{-1})}; }
    SECTION("unordered triangular") { net.activities = {activity("A", {}, Triangular{3, 2, 4})}; }
    SECTION("negative cost") { net.activities = {activity("A", {}, Deterministic{1}, -1, 0)}; }
    SECTION("duplicate predecessor") {
        net.activities = {activity("A", {}, Deterministic{1}), activity("B", {"A", "A"}, Deterministic{1})};
    }
    CHECK_THROWS_AS(validate_network(net), ValidationError);
}

TEST_CASE("cycle error names a member") {
    ProjectNetwork net;
    net.activities = {activity("S", {}, Deterministic{1}), activity("X", {"S", "Z"}, Deterministic{1}),
                      activity("Y", {"X"}, Deterministic{1}), activity("Z", {"Y"}, Deterministic{1})};
    try {
        validate_network(net);
        FAIL("no exception");
    } catch (const ValidationError& e) {
        std::string msg = e.what();
        CHECK((msg.find("X") != std::string::npos || msg.find("Y") != std::string::npos ||
               msg.find("Z") != std::string::npos));
        CHECK(msg.find("cycle") != std::string::npos);
    }
}

TEST_CASE("evaluator rejects incomplete assignments") {
    ProjectNetwork net;
    net.activities = {activity("A", {}, Deterministic{1}), activity("B", {"A"}, Deterministic{1})};
    ScheduleEvaluator ev(net);
    CHECK_THROWS(ev.to_vector({{ActivityId("A"), 1}}));
    CHECK_THROWS(ev.to_vector({{ActivityId("A"), 1}, {ActivityId("B"), 1}, {ActivityId("Q"), 1}}));
    CHECK_THROWS(ev.index_of(ActivityId("Q")));
}

TEST_CASE("case study order and plan") {
    const auto& doc = fixtures::case_study();
    auto order = validate_network(doc.network);
    REQUIRE(order.size() == 34);
    CHECK(order[0].str() == "Ai");
    CHECK(order[1].str() == "A1");
    CHECK(order[32].str() == "A32");
    CHECK(order[33].str() == "Af");

    DurationAssignment mp;
    for (const auto& a : doc.network.activities) mp[a.id] = most_likely(a.duration);
    CHECK(project_duration(doc.network, mp) == 300.0);
    CHECK(project_cost(doc.network, mp) == 30000.0);
}

TEST_CASE("property: forward pass equals brute-force longest path") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto net = fixtures::random_network(rng, 1 + trial % 9);
        auto d = draw(net, rng);
        CHECK(project_duration(net, assign(net, d)) == Catch::Approx(oracle::longest_path(net, d)).epsilon(1e-12));
    }
}

TEST_CASE("property: duration is monotone and bounded") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto net = fixtures::random_network(rng, 2 + trial % 8);
        auto d = draw(net, rng);
        const double base = project_duration(net, assign(net, d));

        double longest = 0.0, total = 0.0;
        for (const auto& [_, v] : d) {
            longest = std::max(longest, v);
            total += v;
        }
        CHECK(base >= longest);
        CHECK(base <= total + 1e-9);

        auto bumped = d;
        const auto& pick = net.activities[rng() % net.activities.size()].id.str();
        const double delta = std::uniform_real_distribution<double>(0.0, 5.0)(rng);
        bumped[pick] += delta;
        const double after = project_duration(net, assign(net, bumped));
        CHECK(after >= base);
        CHECK(after <= base + delta + 1e-9);
    }
}

TEST_CASE("property: cost is additive in extras and linear in durations") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        auto net = fixtures::random_network(rng, 1 + trial % 8);
        auto d = draw(net, rng);
        const auto da = assign(net, d);
        const double base = project_cost(net, da);

        double expected = 0.0;
        for (const auto& a : net.activities) expected += a.fixed_cost + a.variable_cost_rate * d.at(a.id.str());
        CHECK(base == Catch::Approx(expected).epsilon(1e-12));

        ExtraCosts e1, e2, both;
        for (const auto& a : net.activities) {
            const double x = std::uniform_real_distribution<double>(0.0, 50.0)(rng);
            const double y = std::uniform_real_distribution<double>(0.0, 50.0)(rng);
            e1[a.id] = x;
            e2[a.id] = y;
            both[a.id] = x + y;
        }
        const double lhs = project_cost(net, da, both) - base;
        const double rhs = (project_cost(net, da, e1) - base) + (project_cost(net, da, e2) - base);
        CHECK(lhs == Catch::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("property: planned value curve is monotone and ends at the plan") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto net = fixtures::random_network(rng, 1 + trial % 8);
        auto curve = planned_value_curve(net);
        REQUIRE(curve.size() >= 2);
        CHECK(curve.front().time == 0.0);
        for (std::size_t i = 1; i < curve.size(); ++i) {
            CHECK(curve[i].time > curve[i - 1].time);
            CHECK(curve[i].value >= curve[i - 1].value - 1e-9);
        }
        DurationAssignment mp;
        for (const auto& a : net.activities) mp[a.id] = most_likely(a.duration);
        CHECK(curve.back().time == Catch::Approx(project_duration(net, mp)));
        CHECK(curve.back().value == project_cost(net, mp));
    }
}

TEST_CASE("small examples") {
    ProjectNetwork one;
    one.activities = {activity("A1", {}, Deterministic{7})};
    CHECK(validate_network(one) == std::vector<ActivityId>{ActivityId("A1")});
    CHECK(project_duration(one, {{ActivityId("A1"), 7}}) == 7.0);
    CHECK(project_cost(one, {{ActivityId("A1"), 7}}) == 0.0);

    ProjectNetwork loop;
    loop.activities = {activity("A", {"B"}, Deterministic{1}), activity("B", {"A"}, Deterministic{1})};
    CHECK_THROWS_AS(validate_network(loop), ValidationError);
}

TEST_CASE("case study planned value curve ends at the plan") {
    const auto curve = planned_value_curve(fixtures::case_study().network);
    CHECK(curve.front() == PlannedValuePoint{0, 0});
    CHECK(curve.back() == PlannedValuePoint{300, 30000});
}

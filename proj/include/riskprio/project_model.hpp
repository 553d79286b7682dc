#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "riskprio/ids.hpp"

namespace riskprio {

struct Deterministic {
    double value = 0.0;
    bool operator==(const Deterministic&) const = default;
};

// Three-point distribution: minimum, most probable and maximum.
struct Triangular {
    double min = 0.0;
    double mode = 0.0;
    double max = 0.0;
    bool operator==(const Triangular&) const = default;
};

using DurationModel = std::variant<Deterministic, Triangular>;

Days most_likely(const DurationModel& model);
Days minimum(const DurationModel& model);

struct Activity {
    ActivityId id;
    std::string label;
    std::vector<ActivityId> predecessors;
    DurationModel duration = Deterministic{};
    Money fixed_cost = 0.0;
    Money variable_cost_rate = 0.0;  // per time unit

    bool operator==(const Activity&) const = default;
};

struct ProjectNetwork {
    std::vector<Activity> activities;
    std::string currency_unit = "monetary units";
    std::string time_unit = "days";

    bool operator==(const ProjectNetwork&) const = default;
};

using DurationAssignment = std::map<ActivityId, Days>;
using ExtraCosts = std::map<ActivityId, Money>;

// Checks ids, predecessor references, distribution parameters, costs and
// acyclicity. Returns a topological order (Kahn's algorithm, ties broken by
// declaration order). Throws ValidationError.
std::vector<ActivityId> validate_network(const ProjectNetwork& net);

// Earliest-finish forward pass; the project ends at the latest sink.
Days project_duration(const ProjectNetwork& net, const DurationAssignment& durations);

// Sum over activities of FC + VC * d + extra.
Money project_cost(const ProjectNetwork& net, const DurationAssignment& durations,
                   const ExtraCosts& extra_costs = {});

struct PlannedValuePoint {
    Days time = 0.0;
    Money value = 0.0;
    bool operator==(const PlannedValuePoint&) const = default;
};

// Cumulative planned cost under most-likely durations and an earliest-start
// schedule, each activity's cost accruing linearly over its interval.
// Sampled at every start/finish epoch.
std::vector<PlannedValuePoint> planned_value_curve(const ProjectNetwork& net);

// Index-based form of a validated network for the hot simulation loop.
// Durations and extras are indexed by declaration order.
class ScheduleEvaluator {
public:
    explicit ScheduleEvaluator(const ProjectNetwork& net);

    std::size_t size() const { return fixed_cost_.size(); }
    std::size_t index_of(const ActivityId& id) const;

    Days duration(std::span<const Days> durations) const;
    Money cost(std::span<const Days> durations, std::span<const Money> extras = {}) const;

    // Earliest start of every activity, indexed by declaration order.
    std::vector<Days> earliest_starts(std::span<const Days> durations) const;

    std::vector<Days> to_vector(const DurationAssignment& durations) const;

private:
    std::vector<ActivityId> ids_;
    std::map<ActivityId, std::size_t> index_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> preds_;
    std::vector<Money> fixed_cost_;
    std::vector<Money> variable_rate_;
};

}  // namespace riskprio

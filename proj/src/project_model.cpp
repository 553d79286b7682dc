#include "riskprio/project_model.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "riskprio/detail/overloaded.hpp"
#include "riskprio/errors.hpp"

namespace riskprio {

namespace {

using detail::overloaded;

void check_duration(const Activity& a) {
    std::visit(overloaded{
                   [&](const Deterministic& d) {
                       if (!std::isfinite(d.value) || d.value < 0.0)
                           throw ValidationError("activity " + a.id.str() +
                                                 ": duration must be a finite value >= 0");
                   },
                   [&](const Triangular& t) {
                       if (!std::isfinite(t.min) || !std::isfinite(t.max) ||
                           !std::isfinite(t.mode))
                           throw ValidationError("activity " + a.id.str() +
                                                 ": duration parameters must be finite");
                       if (t.min < 0.0)
                           throw ValidationError("activity " + a.id.str() +
                                                 ": duration min must be >= 0");
                       if (t.min > t.mode || t.mode > t.max)
                           throw ValidationError("activity " + a.id.str() +
                                                 ": triangular duration requires min <= mp <= max");
                   }},
               a.duration);
}

// Walk predecessors inside the unresolved set until a node repeats; that
// node lies on a cycle.
const ActivityId& find_cycle_member(const ProjectNetwork& net,
                                    const std::map<ActivityId, std::size_t>& index,
                                    const std::vector<std::size_t>& indegree) {
    std::size_t current = 0;
    while (indegree[current] == 0) ++current;
    std::vector<bool> seen(net.activities.size(), false);
    while (!seen[current]) {
        seen[current] = true;
        for (const auto& p : net.activities[current].predecessors) {
            std::size_t pi = index.at(p);
            if (indegree[pi] != 0) {
                current = pi;
                break;
            }
        }
    }
    return net.activities[current].id;
}

std::vector<std::size_t> topological_indices(const ProjectNetwork& net,
                                             std::map<ActivityId, std::size_t>& index) {
    const auto n = net.activities.size();
    if (n == 0) throw ValidationError("network has no activities");
    index.clear();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = net.activities[i];
        if (a.id.empty()) throw ValidationError("activity #" + std::to_string(i) + " has an empty id");
        if (!index.emplace(a.id, i).second)
            throw ValidationError("duplicate activity id " + a.id.str());
    }

    std::vector<std::size_t> indegree(n, 0);
    std::vector<std::vector<std::size_t>> successors(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = net.activities[i];
        check_duration(a);
        if (!(a.fixed_cost >= 0.0) || !std::isfinite(a.fixed_cost))
            throw ValidationError("activity " + a.id.str() + ": fixed cost must be >= 0");
        if (!(a.variable_cost_rate >= 0.0) || !std::isfinite(a.variable_cost_rate))
            throw ValidationError("activity " + a.id.str() + ": variable cost must be >= 0");
        std::set<ActivityId> distinct;
        for (const auto& p : a.predecessors) {
            auto it = index.find(p);
            if (it == index.end())
                throw ValidationError("activity " + a.id.str() + " references unknown predecessor " +
                                      p.str());
            if (!distinct.insert(p).second)
                throw ValidationError("activity " + a.id.str() + " lists predecessor " + p.str() +
                                      " twice");
            successors[it->second].push_back(i);
            ++indegree[i];
        }
    }

    std::deque<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.push_back(i);

    std::vector<std::size_t> order;
    order.reserve(n);
    auto remaining = indegree;
    while (!ready.empty()) {
        auto i = ready.front();
        ready.pop_front();
        order.push_back(i);
        for (auto s : successors[i])
            if (--remaining[s] == 0) ready.push_back(s);
    }
    if (order.size() != n) {
        throw ValidationError("precedence cycle through activity " +
                              find_cycle_member(net, index, remaining).str());
    }
    return order;
}

}  // namespace

Days most_likely(const DurationModel& model) {
    return std::visit(overloaded{[](const Deterministic& d) { return d.value; },
                                 [](const Triangular& t) { return t.mode; }},
                      model);
}

Days minimum(const DurationModel& model) {
    return std::visit(overloaded{[](const Deterministic& d) { return d.value; },
                                 [](const Triangular& t) { return t.min; }},
                      model);
}

std::vector<ActivityId> validate_network(const ProjectNetwork& net) {
    std::map<ActivityId, std::size_t> index;
    auto order = topological_indices(net, index);
    std::vector<ActivityId> ids;
    ids.reserve(order.size());
    for (auto i : order) ids.push_back(net.activities[i].id);
    return ids;
}

ScheduleEvaluator::ScheduleEvaluator(const ProjectNetwork& net) {
    order_ = topological_indices(net, index_);
    const auto n = net.activities.size();
    ids_.reserve(n);
    preds_.resize(n);
    fixed_cost_.reserve(n);
    variable_rate_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = net.activities[i];
        ids_.push_back(a.id);
        for (const auto& p : a.predecessors) preds_[i].push_back(index_.at(p));
        fixed_cost_.push_back(a.fixed_cost);
        variable_rate_.push_back(a.variable_cost_rate);
    }
}

std::size_t ScheduleEvaluator::index_of(const ActivityId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ValidationError("unknown activity " + id.str());
    return it->second;
}

std::vector<Days> ScheduleEvaluator::earliest_starts(std::span<const Days> durations) const {
    if (durations.size() != size())
        throw std::invalid_argument("duration vector does not cover every activity");
    std::vector<Days> start(size(), 0.0);
    std::vector<Days> finish(size(), 0.0);
    for (auto i : order_) {
        Days s = 0.0;
        for (auto p : preds_[i]) s = std::max(s, finish[p]);
        start[i] = s;
        finish[i] = s + durations[i];
    }
    return start;
}

Days ScheduleEvaluator::duration(std::span<const Days> durations) const {
    if (durations.size() != size())
        throw std::invalid_argument("duration vector does not cover every activity");
    std::vector<Days> finish(size(), 0.0);
    Days end = 0.0;
    for (auto i : order_) {
        Days s = 0.0;
        for (auto p : preds_[i]) s = std::max(s, finish[p]);
        finish[i] = s + durations[i];
        end = std::max(end, finish[i]);
    }
    return end;
}

Money ScheduleEvaluator::cost(std::span<const Days> durations, std::span<const Money> extras) const {
    if (durations.size() != size())
        throw std::invalid_argument("duration vector does not cover every activity");
    if (!extras.empty() && extras.size() != size())
        throw std::invalid_argument("extra cost vector does not cover every activity");
    Money total = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        total += fixed_cost_[i] + variable_rate_[i] * durations[i];
        if (!extras.empty()) total += extras[i];
    }
    return total;
}

std::vector<Days> ScheduleEvaluator::to_vector(const DurationAssignment& durations) const {
    std::vector<Days> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto it = durations.find(ids_[i]);
        if (it == durations.end())
            throw ValidationError("duration assignment is missing activity " + ids_[i].str());
        if (!(it->second >= 0.0))
            throw ValidationError("duration of activity " + ids_[i].str() + " must be >= 0");
        out[i] = it->second;
    }
    for (const auto& [id, _] : durations)
        if (!index_.contains(id))
            throw ValidationError("duration assignment names unknown activity " + id.str());
    return out;
}

Days project_duration(const ProjectNetwork& net, const DurationAssignment& durations) {
    ScheduleEvaluator eval(net);
    return eval.duration(eval.to_vector(durations));
}

Money project_cost(const ProjectNetwork& net, const DurationAssignment& durations,
                   const ExtraCosts& extra_costs) {
    ScheduleEvaluator eval(net);
    std::vector<Money> extras(eval.size(), 0.0);
    for (const auto& [id, amount] : extra_costs) extras[eval.index_of(id)] += amount;
    return eval.cost(eval.to_vector(durations), extras);
}

std::vector<PlannedValuePoint> planned_value_curve(const ProjectNetwork& net) {
    ScheduleEvaluator eval(net);
    const auto n = eval.size();
    std::vector<Days> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = most_likely(net.activities[i].duration);
    const auto start = eval.earliest_starts(d);

    std::vector<Money> budget(n);
    std::vector<Days> epochs{0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = net.activities[i];
        budget[i] = a.fixed_cost + a.variable_cost_rate * d[i];
        epochs.push_back(start[i]);
        epochs.push_back(start[i] + d[i]);
    }
    std::sort(epochs.begin(), epochs.end());
    epochs.erase(std::unique(epochs.begin(), epochs.end()), epochs.end());

    const Days end = eval.duration(d);
    std::vector<PlannedValuePoint> curve;
    curve.reserve(epochs.size());
    for (Days t : epochs) {
        Money value = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Days finish = start[i] + d[i];
            if (t >= finish) {
                value += budget[i];
            } else if (t > start[i]) {
                value += budget[i] * (t - start[i]) / d[i];
            }
        }
        curve.push_back({t, value});
    }
    // Last point must equal project_cost exactly, independent of summation order.
    if (!curve.empty() && curve.back().time == end) curve.back().value = eval.cost(d);
    return curve;
}

}  // namespace riskprio

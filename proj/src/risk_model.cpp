#include "riskprio/risk_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "riskprio/detail/overloaded.hpp"
#include "riskprio/errors.hpp"

namespace riskprio {

namespace {

using detail::overloaded;

bool finite(const Interval& i) { return std::isfinite(i.lo) && std::isfinite(i.hi); }

void check_probability_interval(const Interval& i, const std::string& who) {
    if (!finite(i) || i.lo > i.hi || i.lo < 0.0 || i.hi > 1.0)
        throw ValidationError(who + ": probability interval [" + std::to_string(i.lo) + ", " +
                              std::to_string(i.hi) + "] must be ordered and inside [0, 1]");
}

void check_impact(const ImpactModel& model, const std::string& who) {
    std::visit(overloaded{
                   [](const Category&) {},
                   [&](const Uniform& u) {
                       if (!finite(u.range) || u.range.lo > u.range.hi || u.range.lo < 0.0)
                           throw ValidationError(who + ": impact interval must be ordered and >= 0");
                   },
                   [&](const Point& p) {
                       if (!std::isfinite(p.value) || p.value < 0.0)
                           throw ValidationError(who + ": impact must be >= 0");
                   },
                   [&](const Triangular& t) {
                       if (!std::isfinite(t.min) || !std::isfinite(t.max) || t.min < 0.0 ||
                           t.min > t.mode || t.mode > t.max)
                           throw ValidationError(who +
                                                 ": triangular impact requires 0 <= min <= mp <= max");
                   }},
               model);
}

}  // namespace

std::string_view to_string(CategoryLevel level) {
    switch (level) {
        case CategoryLevel::VL: return "VL";
        case CategoryLevel::L: return "L";
        case CategoryLevel::M: return "M";
        case CategoryLevel::H: return "H";
        case CategoryLevel::VH: return "VH";
    }
    return "?";
}

std::optional<CategoryLevel> parse_level(std::string_view text) {
    if (text == "VL" || text == "MB") return CategoryLevel::VL;
    if (text == "L" || text == "B") return CategoryLevel::L;
    if (text == "M") return CategoryLevel::M;
    if (text == "H" || text == "A") return CategoryLevel::H;
    if (text == "VH" || text == "MA") return CategoryLevel::VH;
    return std::nullopt;
}

std::string_view to_string(LadderKind kind) {
    switch (kind) {
        case LadderKind::probability: return "probability";
        case LadderKind::duration_impact: return "duration_impact";
        case LadderKind::cost_impact: return "cost_impact";
    }
    return "?";
}

std::string_view to_string(ImpactGroup group) {
    return group == ImpactGroup::duration ? "duration" : "cost";
}

CategoryLadder::CategoryLadder(LadderKind kind, std::array<Interval, 5> intervals)
    : kind_(kind), intervals_(intervals) {
    const std::string who = std::string(to_string(kind)) + " ladder";
    for (std::size_t k = 0; k < intervals_.size(); ++k) {
        const auto& iv = intervals_[k];
        const std::string level(to_string(kAllLevels[k]));
        if (!finite(iv) || iv.lo > iv.hi)
            throw ValidationError(who + ": level " + level + " interval is not ordered");
        if (iv.lo < 0.0) throw ValidationError(who + ": level " + level + " has a negative bound");
        if (kind == LadderKind::probability && iv.hi > 1.0)
            throw ValidationError(who + ": level " + level + " exceeds probability 1");
        if (k > 0 && iv.lo < intervals_[k - 1].hi)
            throw ValidationError(who + ": level " + level + " overlaps the level below");
    }
}

const RiskSpec& RiskRegister::find(const RiskId& id) const {
    auto it = std::find_if(risks.begin(), risks.end(), [&](const RiskSpec& r) { return r.id == id; });
    if (it == risks.end()) throw ValidationError("unknown risk " + id.str());
    return *it;
}

void validate_register(const RiskRegister& reg, const ProjectNetwork& net) {
    if (reg.probability_ladder.kind() != LadderKind::probability ||
        reg.duration_ladder.kind() != LadderKind::duration_impact ||
        reg.cost_ladder.kind() != LadderKind::cost_impact)
        throw ValidationError("risk register ladders are assigned to the wrong kinds");

    std::set<ActivityId> activities;
    for (const auto& a : net.activities) activities.insert(a.id);

    std::set<RiskId> seen;
    for (const auto& r : reg.risks) {
        const std::string who = "risk " + r.id.str();
        if (r.id.empty()) throw ValidationError("risk with an empty id");
        if (!seen.insert(r.id).second) throw ValidationError("duplicate risk id " + r.id.str());
        if (!activities.contains(r.target_activity))
            throw ValidationError(who + " targets unknown activity " + r.target_activity.str());
        if (!r.duration_impact && !r.cost_impact)
            throw ValidationError(who + " has neither a duration nor a cost impact");
        if (const auto* u = std::get_if<Uniform>(&r.probability)) check_probability_interval(u->range, who);
        if (const auto* p = std::get_if<Point>(&r.probability)) {
            if (!(p->value >= 0.0 && p->value <= 1.0))
                throw ValidationError(who + ": probability must lie in [0, 1]");
        }
        if (r.duration_impact) check_impact(*r.duration_impact, who);
        if (r.cost_impact) check_impact(*r.cost_impact, who);
    }
}

SamplingSpec resolve_probability(const ProbabilityModel& model, const CategoryLadder& ladder) {
    if (ladder.kind() != LadderKind::probability)
        throw ValidationError("probability resolved against a " + std::string(to_string(ladder.kind())) +
                              " ladder");
    return std::visit(overloaded{
                          [&](const Category& c) -> SamplingSpec {
                              const auto& iv = ladder.at(c.level);
                              check_probability_interval(iv, "probability ladder");
                              return Uniform{iv};
                          },
                          [](const Uniform& u) -> SamplingSpec {
                              check_probability_interval(u.range, "probability");
                              return u;
                          },
                          [](const Point& p) -> SamplingSpec {
                              if (!(p.value >= 0.0 && p.value <= 1.0))
                                  throw ValidationError("probability must lie in [0, 1]");
                              return p;
                          }},
                      model);
}

SamplingSpec resolve_impact(const ImpactModel& model, const CategoryLadder& ladder,
                            LadderKind expected) {
    if (expected == LadderKind::probability)
        throw ValidationError("impacts cannot be resolved against a probability ladder");
    if (ladder.kind() != expected)
        throw ValidationError("impact expects a " + std::string(to_string(expected)) + " ladder, got " +
                              std::string(to_string(ladder.kind())));
    check_impact(model, "impact");
    return std::visit(overloaded{[&](const Category& c) -> SamplingSpec { return Uniform{ladder.at(c.level)}; },
                                 [](const Uniform& u) -> SamplingSpec { return u; },
                                 [](const Point& p) -> SamplingSpec { return p; },
                                 [](const Triangular& t) -> SamplingSpec { return t; }},
                      model);
}

void ScoreLadder::validate() const {
    for (const auto* row : {&probability, &impact}) {
        for (std::size_t k = 0; k < row->size(); ++k) {
            double s = (*row)[k];
            if (!(s > 0.0 && s <= 1.0)) throw ValidationError("matrix scores must lie in (0, 1]");
            if (k > 0 && !(s > (*row)[k - 1]))
                throw ValidationError("matrix scores must increase strictly with level");
        }
    }
}

double matrix_score(CategoryLevel probability, CategoryLevel impact, const ScoreLadder& scores) {
    return scores.probability[static_cast<std::size_t>(probability)] *
           scores.impact[static_cast<std::size_t>(impact)];
}

std::vector<int> competition_rank(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<int> rank(values.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (pos > 0 && values[order[pos]] == values[order[pos - 1]])
            rank[order[pos]] = rank[order[pos - 1]];
        else
            rank[order[pos]] = static_cast<int>(pos) + 1;
    }
    return rank;
}

std::vector<MatrixEntry> matrix_rank(const RiskRegister& reg, const ScoreLadder& scores) {
    std::vector<MatrixEntry> out;
    for (auto group : {ImpactGroup::duration, ImpactGroup::cost}) {
        std::vector<MatrixEntry> entries;
        for (const auto& r : reg.risks) {
            const auto& impact = group == ImpactGroup::duration ? r.duration_impact : r.cost_impact;
            if (!impact) continue;
            const auto* pc = std::get_if<Category>(&r.probability);
            const auto* ic = std::get_if<Category>(&*impact);
            if (!pc || !ic) continue;
            entries.push_back({r.id, group, pc->level, ic->level, matrix_score(pc->level, ic->level, scores), 0});
        }
        std::vector<double> values;
        for (const auto& e : entries) values.push_back(e.score);
        auto ranks = competition_rank(values);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            entries[i].rank = ranks[i];
            out.push_back(entries[i]);
        }
    }
    return out;
}

}  // namespace riskprio

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "riskprio/ids.hpp"
#include "riskprio/project_model.hpp"

namespace riskprio {

enum class CategoryLevel { VL = 0, L = 1, M = 2, H = 3, VH = 4 };

inline constexpr std::array<CategoryLevel, 5> kAllLevels = {
    CategoryLevel::VL, CategoryLevel::L, CategoryLevel::M, CategoryLevel::H, CategoryLevel::VH};

std::string_view to_string(CategoryLevel level);
// Accepts VL/L/M/H/VH and the MB/B/M/A/MA spelling used by some registers.
std::optional<CategoryLevel> parse_level(std::string_view text);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool operator==(const Interval&) const = default;
};

enum class LadderKind { probability, duration_impact, cost_impact };

std::string_view to_string(LadderKind kind);

// Maps the five semantic levels to numeric ranges for one kind of estimate.
class CategoryLadder {
public:
    CategoryLadder() = default;
    // Throws ValidationError if intervals are reversed, overlap, are negative,
    // or (for probability) leave [0, 1].
    CategoryLadder(LadderKind kind, std::array<Interval, 5> intervals);

    LadderKind kind() const { return kind_; }
    const Interval& at(CategoryLevel level) const {
        return intervals_[static_cast<std::size_t>(level)];
    }
    const std::array<Interval, 5>& intervals() const { return intervals_; }

    bool operator==(const CategoryLadder&) const = default;

private:
    LadderKind kind_ = LadderKind::probability;
    std::array<Interval, 5> intervals_{};
};

struct Category {
    CategoryLevel level = CategoryLevel::VL;
    bool operator==(const Category&) const = default;
};

struct Uniform {
    Interval range;
    bool operator==(const Uniform&) const = default;
};

struct Point {
    double value = 0.0;
    bool operator==(const Point&) const = default;
};

using ProbabilityModel = std::variant<Category, Uniform, Point>;
using ImpactModel = std::variant<Category, Uniform, Point, Triangular>;

// What the simulator samples from once categories have been looked up.
using SamplingSpec = std::variant<Uniform, Point, Triangular>;

struct RiskSpec {
    RiskId id;
    std::string label;
    ActivityId target_activity;
    ProbabilityModel probability = Point{0.0};
    std::optional<ImpactModel> duration_impact;
    std::optional<ImpactModel> cost_impact;

    bool operator==(const RiskSpec&) const = default;
};

struct RiskRegister {
    CategoryLadder probability_ladder;
    CategoryLadder duration_ladder;
    CategoryLadder cost_ladder;
    std::vector<RiskSpec> risks;

    const RiskSpec& find(const RiskId& id) const;

    bool operator==(const RiskRegister&) const = default;
};

// Checks id uniqueness, impact presence and ranges, and that every target
// exists in `net` and every category resolves. Throws ValidationError.
void validate_register(const RiskRegister& reg, const ProjectNetwork& net);

SamplingSpec resolve_probability(const ProbabilityModel& model, const CategoryLadder& ladder);
SamplingSpec resolve_impact(const ImpactModel& model, const CategoryLadder& ladder,
                            LadderKind expected);

// Representative score per level for the qualitative matrix.
struct ScoreLadder {
    std::array<double, 5> probability{0.1, 0.3, 0.5, 0.7, 0.9};
    std::array<double, 5> impact{0.05, 0.1, 0.2, 0.4, 0.8};

    // Throws ValidationError unless both rows are strictly increasing in (0, 1].
    void validate() const;

    bool operator==(const ScoreLadder&) const = default;
};

double matrix_score(CategoryLevel probability, CategoryLevel impact, const ScoreLadder& scores);

// Competition ranking by descending value: ties share the best rank of their
// block and the following rank skips (1, 2, 3, 3, 5).
std::vector<int> competition_rank(const std::vector<double>& values);

enum class ImpactGroup { duration, cost };

std::string_view to_string(ImpactGroup group);

struct MatrixEntry {
    RiskId risk;
    ImpactGroup group = ImpactGroup::duration;
    CategoryLevel probability = CategoryLevel::VL;
    CategoryLevel impact = CategoryLevel::VL;
    double score = 0.0;
    int rank = 0;

    bool operator==(const MatrixEntry&) const = default;
};

// Scores every (risk, impact group) pair whose probability and impact are
// both categorical, then ranks each group on its own. Entries keep register
// order, duration group first. Risks with non-categorical models are skipped.
std::vector<MatrixEntry> matrix_rank(const RiskRegister& reg, const ScoreLadder& scores);

}  // namespace riskprio

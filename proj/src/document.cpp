#include "riskprio/document.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "riskprio/detail/overloaded.hpp"
#include "riskprio/errors.hpp"

namespace riskprio {

namespace {

using nlohmann::json;
using detail::overloaded;

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

// A JSON value together with its JSON-pointer location, for error messages.
class Node {
public:
    Node(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

    const json& value() const { return value_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(path_.empty() ? "/" : path_, what); }

    void require_object(std::initializer_list<std::string_view> allowed) const {
        if (!value_.is_object()) fail("expected an object");
        for (const auto& [key, _] : value_.items()) {
            bool ok = false;
            for (auto a : allowed) ok = ok || key == a;
            if (!ok) Node(value_[key], path_ + "/" + key).fail("unknown key '" + key + "'");
        }
    }

    bool has(std::string_view key) const { return value_.contains(key); }

    Node at(const std::string& key) const {
        if (!value_.contains(key)) fail("missing required key '" + key + "'");
        return Node(value_.at(key), path_ + "/" + key);
    }

    Node at(std::size_t index) const { return Node(value_.at(index), path_ + "/" + std::to_string(index)); }

    std::size_t array_size() const {
        if (!value_.is_array()) fail("expected an array");
        return value_.size();
    }

    double number() const {
        if (!value_.is_number()) fail("expected a number");
        return value_.get<double>();
    }

    std::uint64_t unsigned_integer() const {
        if (!value_.is_number_integer() || value_.get<std::int64_t>() < 0)
            fail("expected a non-negative integer");
        return value_.get<std::uint64_t>();
    }

    std::string string() const {
        if (!value_.is_string()) fail("expected a string");
        return value_.get<std::string>();
    }

    std::string string_or(const std::string& key, std::string fallback) const {
        return has(key) ? at(key).string() : std::move(fallback);
    }

    double number_or(const std::string& key, double fallback) const {
        return has(key) ? at(key).number() : fallback;
    }

    std::vector<double> numbers(std::size_t expected) const {
        if (array_size() != expected) fail("expected " + std::to_string(expected) + " numbers");
        std::vector<double> out;
        for (std::size_t i = 0; i < expected; ++i) out.push_back(at(i).number());
        return out;
    }

private:
    const json& value_;
    std::string path_;
};

CategoryLevel level_of(const Node& n) {
    auto level = parse_level(n.string());
    if (!level) n.fail("unknown category level '" + n.string() + "' (expected VL, L, M, H or VH)");
    return *level;
}

DurationModel read_duration(const Node& n) {
    if (n.value().is_number()) return Deterministic{n.number()};
    n.require_object({"min", "mp", "max"});
    return Triangular{n.at("min").number(), n.at("mp").number(), n.at("max").number()};
}

Activity read_activity(const Node& n) {
    n.require_object({"id", "label", "predecessors", "duration", "fixed_cost", "variable_cost"});
    Activity a;
    a.id = ActivityId(n.at("id").string());
    a.label = n.string_or("label", "");
    if (n.has("predecessors")) {
        auto preds = n.at("predecessors");
        for (std::size_t i = 0; i < preds.array_size(); ++i) a.predecessors.emplace_back(preds.at(i).string());
    }
    a.duration = read_duration(n.at("duration"));
    a.fixed_cost = n.number_or("fixed_cost", 0.0);
    a.variable_cost_rate = n.number_or("variable_cost", 0.0);
    return a;
}

CategoryLadder read_ladder(const Node& n, LadderKind kind) {
    n.require_object({"VL", "L", "M", "H", "VH"});
    std::array<Interval, 5> intervals{};
    for (auto level : kAllLevels) {
        auto bounds = n.at(std::string(to_string(level))).numbers(2);
        intervals[static_cast<std::size_t>(level)] = {bounds[0], bounds[1]};
    }
    try {
        return CategoryLadder(kind, intervals);
    } catch (const ValidationError& e) {
        throw ValidationError(n.path() + ": " + e.what());
    }
}

ProbabilityModel read_probability(const Node& n) {
    if (n.value().is_string()) return Category{level_of(n)};
    n.require_object({"uniform", "point"});
    if (n.value().size() != 1) n.fail("expected exactly one of 'uniform' or 'point'");
    if (n.has("uniform")) {
        auto b = n.at("uniform").numbers(2);
        return Uniform{{b[0], b[1]}};
    }
    return Point{n.at("point").number()};
}

ImpactModel read_impact(const Node& n) {
    if (n.value().is_string()) return Category{level_of(n)};
    n.require_object({"uniform", "point", "triangular"});
    if (n.value().size() != 1) n.fail("expected exactly one of 'uniform', 'point' or 'triangular'");
    if (n.has("uniform")) {
        auto b = n.at("uniform").numbers(2);
        return Uniform{{b[0], b[1]}};
    }
    if (n.has("triangular")) {
        auto t = n.at("triangular").numbers(3);
        return Triangular{t[0], t[1], t[2]};
    }
    return Point{n.at("point").number()};
}

RiskSpec read_risk(const Node& n) {
    n.require_object({"id", "label", "activity", "probability", "duration_impact", "cost_impact"});
    RiskSpec r;
    r.id = RiskId(n.at("id").string());
    r.label = n.string_or("label", "");
    r.target_activity = ActivityId(n.at("activity").string());
    r.probability = read_probability(n.at("probability"));
    if (n.has("duration_impact")) r.duration_impact = read_impact(n.at("duration_impact"));
    if (n.has("cost_impact")) r.cost_impact = read_impact(n.at("cost_impact"));
    return r;
}

std::array<double, 5> read_scores(const Node& n) {
    auto v = n.numbers(5);
    return {v[0], v[1], v[2], v[3], v[4]};
}

ProjectDocument read_document(const json& root) {
    const Node doc(root, "");
    doc.require_object({"name", "currency_unit", "time_unit", "activities", "ladders", "matrix_scores", "risks",
                        "simulation"});
    ProjectDocument out;
    out.name = doc.string_or("name", "");
    out.network.currency_unit = doc.string_or("currency_unit", out.network.currency_unit);
    out.network.time_unit = doc.string_or("time_unit", out.network.time_unit);

    auto acts = doc.at("activities");
    for (std::size_t i = 0; i < acts.array_size(); ++i) out.network.activities.push_back(read_activity(acts.at(i)));

    auto ladders = doc.at("ladders");
    ladders.require_object({"probability", "duration_impact", "cost_impact"});
    out.risks.probability_ladder = read_ladder(ladders.at("probability"), LadderKind::probability);
    out.risks.duration_ladder = read_ladder(ladders.at("duration_impact"), LadderKind::duration_impact);
    out.risks.cost_ladder = read_ladder(ladders.at("cost_impact"), LadderKind::cost_impact);

    if (doc.has("matrix_scores")) {
        auto ms = doc.at("matrix_scores");
        ms.require_object({"probability", "impact"});
        out.matrix_scores.probability = read_scores(ms.at("probability"));
        out.matrix_scores.impact = read_scores(ms.at("impact"));
    }

    if (doc.has("risks")) {
        auto risks = doc.at("risks");
        for (std::size_t i = 0; i < risks.array_size(); ++i) out.risks.risks.push_back(read_risk(risks.at(i)));
    }

    if (doc.has("simulation")) {
        auto sim = doc.at("simulation");
        sim.require_object({"iterations", "seed", "percentile"});
        if (sim.has("iterations")) {
            auto it = sim.at("iterations").unsigned_integer();
            if (it > 0xFFFFFFFFull) sim.at("iterations").fail("too many iterations");
            out.simulation.iterations = static_cast<std::uint32_t>(it);
        }
        if (sim.has("seed")) out.simulation.seed = sim.at("seed").unsigned_integer();
        out.simulation.percentile = sim.number_or("percentile", out.simulation.percentile);
    }

    validate_network(out.network);
    validate_register(out.risks, out.network);
    out.simulation.validate();
    out.matrix_scores.validate();
    return out;
}

json ladder_json(const CategoryLadder& ladder) {
    json j = json::object();
    for (auto level : kAllLevels) {
        const auto& iv = ladder.at(level);
        j[std::string(to_string(level))] = {iv.lo, iv.hi};
    }
    return j;
}

json model_json(const ImpactModel& m) {
    return std::visit(overloaded{[](const Category& c) -> json { return std::string(to_string(c.level)); },
                                 [](const Uniform& u) -> json { return {{"uniform", {u.range.lo, u.range.hi}}}; },
                                 [](const Point& p) -> json { return {{"point", p.value}}; },
                                 [](const Triangular& t) -> json {
                                     return {{"triangular", {t.min, t.mode, t.max}}};
                                 }},
                      m);
}

json probability_json(const ProbabilityModel& m) {
    return std::visit([](const auto& v) { return model_json(ImpactModel{v}); }, m);
}

}  // namespace

ProjectDocument parse_document_text(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(line_col(text, e.byte == 0 ? 0 : e.byte - 1), "syntax error");
    }
    return read_document(root);
}

ProjectDocument parse_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document_text(buf.str());
}

std::string document_to_json(const ProjectDocument& doc) {
    json j;
    j["name"] = doc.name;
    j["currency_unit"] = doc.network.currency_unit;
    j["time_unit"] = doc.network.time_unit;
    json acts = json::array();
    for (const auto& a : doc.network.activities) {
        json ja;
        ja["id"] = a.id.str();
        if (!a.label.empty()) ja["label"] = a.label;
        json preds = json::array();
        for (const auto& p : a.predecessors) preds.push_back(p.str());
        ja["predecessors"] = preds;
        ja["duration"] = std::visit(overloaded{[](const Deterministic& d) -> json { return d.value; },
                                               [](const Triangular& t) -> json {
                                                   return {{"min", t.min}, {"mp", t.mode}, {"max", t.max}};
                                               }},
                                    a.duration);
        ja["fixed_cost"] = a.fixed_cost;
        ja["variable_cost"] = a.variable_cost_rate;
        acts.push_back(std::move(ja));
    }
    j["activities"] = std::move(acts);
    j["ladders"] = {{"probability", ladder_json(doc.risks.probability_ladder)},
                    {"duration_impact", ladder_json(doc.risks.duration_ladder)},
                    {"cost_impact", ladder_json(doc.risks.cost_ladder)}};
    j["matrix_scores"] = {{"probability", doc.matrix_scores.probability}, {"impact", doc.matrix_scores.impact}};
    json risks = json::array();
    for (const auto& r : doc.risks.risks) {
        json jr;
        jr["id"] = r.id.str();
        if (!r.label.empty()) jr["label"] = r.label;
        jr["activity"] = r.target_activity.str();
        jr["probability"] = probability_json(r.probability);
        if (r.duration_impact) jr["duration_impact"] = model_json(*r.duration_impact);
        if (r.cost_impact) jr["cost_impact"] = model_json(*r.cost_impact);
        risks.push_back(std::move(jr));
    }
    j["risks"] = std::move(risks);
    j["simulation"] = {{"iterations", doc.simulation.iterations},
                       {"seed", doc.simulation.seed},
                       {"percentile", doc.simulation.percentile}};
    return j.dump(2) + "\n";
}

}  // namespace riskprio

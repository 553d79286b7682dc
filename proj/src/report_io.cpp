#include "riskprio/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <json.hpp>

#include "riskprio/errors.hpp"

namespace riskprio {

namespace {

using nlohmann::json;

// Left-aligned first column, right-aligned rest.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const {
        std::vector<std::size_t> width(rows_.front().size(), 0);
        for (const auto& r : rows_)
            for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
        std::string out;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& r = rows_[i];
            std::string line;
            for (std::size_t c = 0; c < r.size(); ++c) {
                const std::string pad(width[c] - r[c].size(), ' ');
                if (c > 0) line += "  ";
                line += c == 0 ? r[c] + pad : pad + r[c];
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line + "\n";
            if (i == 0) {
                std::size_t total = 0;
                for (auto w : width) total += w;
                out += std::string(total + 2 * (width.size() - 1), '-') + "\n";
            }
        }
        return out;
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string join_csv(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ",";
        out += cells[i];
    }
    return out + "\n";
}

std::string percentile_label(double alpha) {
    // 0.95 -> "P95", 0.975 -> "P97.5"
    double pct = alpha * 100.0;
    if (std::fabs(pct - std::round(pct)) < 1e-9) return "P" + std::to_string(static_cast<int>(std::round(pct)));
    std::string s = format_fixed(pct, 4);
    while (s.back() == '0') s.pop_back();
    return "P" + s;
}

json summary_json(const SampleSummary& s) {
    return {{"mean", s.mean}, {"stddev", s.stddev}, {"min", s.min}, {"max", s.max}};
}

json histogram_json(const HistogramExport& h) {
    return {{"edges", h.edges},
            {"counts", h.counts},
            {"cumulative", h.cumulative},
            {"alpha", h.alpha},
            {"marker", h.marker}};
}

std::string opt_level(const std::optional<CategoryLevel>& l) { return l ? std::string(to_string(*l)) : "-"; }

const std::vector<std::string> kReportColumns = {"Risk",
                                                 "Duration_with_Ri",
                                                 "Cost_with_Ri",
                                                 "Difference_Duration_with_Ri",
                                                 "Ranking_Dur",
                                                 "Difference_Cost_with_Ri",
                                                 "Ranking_Cost"};

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    return std::nullopt;
}

std::string format_fixed(double value, int decimals) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    if (ec != std::errc{}) return "overflow";
    std::string s(buf, end);
    // "-0.00" -> "0.00"
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

PlanSummary make_plan(const ProjectNetwork& net) {
    PlanSummary plan;
    DurationAssignment mp;
    for (const auto& a : net.activities) mp[a.id] = most_likely(a.duration);
    plan.duration = project_duration(net, mp);
    plan.cost = project_cost(net, mp);
    plan.curve = planned_value_curve(net);
    plan.time_unit = net.time_unit;
    plan.currency_unit = net.currency_unit;
    return plan;
}

SimulationSummary summarize_simulation(const ScenarioResult& result, const SimulationConfig& config,
                                       std::vector<RiskId> active_risks, std::size_t bins) {
    SimulationSummary s;
    s.percentile = config.percentile;
    s.iterations = config.iterations;
    s.seed = config.seed;
    s.active_risks = std::move(active_risks);
    s.duration = result.duration_summary();
    s.cost = result.cost_summary();
    s.duration_at_percentile = result.duration_percentile(config.percentile);
    s.cost_at_percentile = result.cost_percentile(config.percentile);
    s.duration_histogram = export_histogram(result.duration_samples(), bins, config.percentile);
    s.cost_histogram = export_histogram(result.cost_samples(), bins, config.percentile);
    return s;
}

std::string render_plan(const PlanSummary& plan, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            json curve = json::array();
            for (const auto& p : plan.curve) curve.push_back({{"time", p.time}, {"value", p.value}});
            json j = {{"duration", plan.duration},
                      {"cost", plan.cost},
                      {"time_unit", plan.time_unit},
                      {"currency_unit", plan.currency_unit},
                      {"planned_value_curve", curve}};
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string out = "time,planned_value\n";
            for (const auto& p : plan.curve) out += format_fixed(p.time, 2) + "," + format_fixed(p.value, 2) + "\n";
            return out;
        }
        case OutputFormat::text: break;
    }
    std::string out;
    out += "Planned project duration: " + format_fixed(plan.duration, 2) + " " + plan.time_unit + "\n";
    out += "Planned project cost:     " + format_fixed(plan.cost, 2) + " " + plan.currency_unit + "\n\n";
    TextTable t({"Time", "Planned_Value"});
    for (const auto& p : plan.curve) t.add({format_fixed(p.time, 2), format_fixed(p.value, 2)});
    return out + "Planned value curve\n" + t.str();
}

std::string render_simulation(const SimulationSummary& sim, OutputFormat format, Metric metric) {
    std::vector<std::string> active;
    for (const auto& r : sim.active_risks) active.push_back(r.str());
    switch (format) {
        case OutputFormat::json: {
            json j = {{"percentile", sim.percentile},
                      {"iterations", sim.iterations},
                      {"seed", sim.seed},
                      {"active_risks", active},
                      {"duration", summary_json(sim.duration)},
                      {"cost", summary_json(sim.cost)},
                      {"duration_at_percentile", sim.duration_at_percentile},
                      {"cost_at_percentile", sim.cost_at_percentile},
                      {"duration_histogram", histogram_json(sim.duration_histogram)},
                      {"cost_histogram", histogram_json(sim.cost_histogram)}};
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv:
            return histogram_to_csv(metric == Metric::duration ? sim.duration_histogram : sim.cost_histogram);
        case OutputFormat::text: break;
    }
    const auto label = percentile_label(sim.percentile);
    std::string out;
    out += "Iterations: " + std::to_string(sim.iterations) + "  Seed: " + std::to_string(sim.seed) + "\n";
    std::string risks = "(none)";
    if (!active.empty()) {
        risks.clear();
        for (std::size_t i = 0; i < active.size(); ++i) risks += (i ? " " : "") + active[i];
    }
    out += "Active risks: " + risks + "\n";
    out += "The Project Duration for this percentile (" + label + ") is " +
           format_fixed(sim.duration_at_percentile, 2) + "\n";
    out += "The Project Cost for this percentile (" + label + ") is " + format_fixed(sim.cost_at_percentile, 2) +
           "\n\n";
    TextTable stats({"Metric", "Mean", "StdDev", "Min", "Max", label});
    stats.add({"Duration", format_fixed(sim.duration.mean, 2), format_fixed(sim.duration.stddev, 2),
               format_fixed(sim.duration.min, 2), format_fixed(sim.duration.max, 2),
               format_fixed(sim.duration_at_percentile, 2)});
    stats.add({"Cost", format_fixed(sim.cost.mean, 2), format_fixed(sim.cost.stddev, 2),
               format_fixed(sim.cost.min, 2), format_fixed(sim.cost.max, 2), format_fixed(sim.cost_at_percentile, 2)});
    out += stats.str();
    for (auto [name, h] : {std::pair{"Duration", &sim.duration_histogram}, std::pair{"Cost", &sim.cost_histogram}}) {
        out += std::string("\n") + name + " histogram\n";
        TextTable t({"Bin_Lo", "Bin_Hi", "Count", "Cum_Frac"});
        for (std::size_t b = 0; b < h->counts.size(); ++b)
            t.add({format_fixed(h->edges[b], 2), format_fixed(h->edges[b + 1], 2), std::to_string(h->counts[b]),
                   format_fixed(h->cumulative[b], 4)});
        out += t.str();
    }
    return out;
}

std::string render_report(const PrioritizationReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            json rows = json::array();
            for (const auto& r : report.rows)
                rows.push_back({{"risk", r.risk.str()},
                                {"duration_with_risk", r.duration_with_risk},
                                {"cost_with_risk", r.cost_with_risk},
                                {"delta_duration", r.delta_duration},
                                {"delta_cost", r.delta_cost},
                                {"rank_duration", r.rank_duration},
                                {"rank_cost", r.rank_cost}});
            json j = {{"percentile", report.percentile},
                      {"iterations", report.iterations},
                      {"seed", report.seed},
                      {"baseline", {{"duration", report.baseline_duration}, {"cost", report.baseline_cost}}},
                      {"rows", rows}};
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string out = join_csv(kReportColumns);
            out += join_csv({"baseline", format_fixed(report.baseline_duration, 2), format_fixed(report.baseline_cost, 2),
                             "", "", "", ""});
            for (const auto& r : report.rows)
                out += join_csv({r.risk.str(), format_fixed(r.duration_with_risk, 2), format_fixed(r.cost_with_risk, 2),
                                 format_fixed(r.delta_duration, 2), std::to_string(r.rank_duration),
                                 format_fixed(r.delta_cost, 2), std::to_string(r.rank_cost)});
            return out;
        }
        case OutputFormat::text: break;
    }
    const auto label = percentile_label(report.percentile);
    std::string out;
    out += "Percentile: " + label + "  Iterations: " + std::to_string(report.iterations) +
           "  Seed: " + std::to_string(report.seed) + "\n";
    out += "The Project Duration for this percentile is " + format_fixed(report.baseline_duration, 2) + "\n";
    out += "The Project Cost for this percentile is " + format_fixed(report.baseline_cost, 2) + "\n\n";
    TextTable t(kReportColumns);
    for (const auto& r : report.rows)
        t.add({r.risk.str(), format_fixed(r.duration_with_risk, 2), format_fixed(r.cost_with_risk, 2),
               format_fixed(r.delta_duration, 2), std::to_string(r.rank_duration), format_fixed(r.delta_cost, 2),
               std::to_string(r.rank_cost)});
    out += t.str();
    if (report.has_negative_deltas())
        out += "\nWARNING: negative deltas present; rankings reflect sampling noise.\n";
    return out;
}

PrioritizationReport parse_report_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), "syntax error in report");
    }
    try {
        PrioritizationReport r;
        r.percentile = j.at("percentile").get<double>();
        r.iterations = j.at("iterations").get<std::uint32_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.baseline_duration = j.at("baseline").at("duration").get<double>();
        r.baseline_cost = j.at("baseline").at("cost").get<double>();
        for (const auto& jr : j.at("rows")) {
            RiskDeltaRow row;
            row.risk = RiskId(jr.at("risk").get<std::string>());
            row.duration_with_risk = jr.at("duration_with_risk").get<double>();
            row.cost_with_risk = jr.at("cost_with_risk").get<double>();
            row.delta_duration = jr.at("delta_duration").get<double>();
            row.delta_cost = jr.at("delta_cost").get<double>();
            row.rank_duration = jr.at("rank_duration").get<int>();
            row.rank_cost = jr.at("rank_cost").get<int>();
            r.rows.push_back(std::move(row));
        }
        return r;
    } catch (const json::exception& e) {
        throw ParseError("report", e.what());
    }
}

std::string render_matrix(const std::vector<MatrixEntry>& entries, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            json rows = json::array();
            for (const auto& e : entries)
                rows.push_back({{"risk", e.risk.str()},
                                {"group", std::string(to_string(e.group))},
                                {"probability", std::string(to_string(e.probability))},
                                {"impact", std::string(to_string(e.impact))},
                                {"score", e.score},
                                {"rank", e.rank}});
            return json{{"entries", rows}}.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string out = join_csv({"Risk", "Group", "P", "I", "PxI", "Ranking"});
            for (const auto& e : entries)
                out += join_csv({e.risk.str(), std::string(to_string(e.group)), std::string(to_string(e.probability)),
                                 std::string(to_string(e.impact)), format_fixed(e.score, 3), std::to_string(e.rank)});
            return out;
        }
        case OutputFormat::text: break;
    }
    std::string out;
    for (auto group : {ImpactGroup::duration, ImpactGroup::cost}) {
        TextTable t({"Risk", "P", "I", "PxI", "Ranking"});
        bool any = false;
        for (const auto& e : entries) {
            if (e.group != group) continue;
            any = true;
            t.add({e.risk.str(), std::string(to_string(e.probability)), std::string(to_string(e.impact)),
                   format_fixed(e.score, 3), std::to_string(e.rank)});
        }
        if (!any) continue;
        if (!out.empty()) out += "\n";
        out += std::string(group == ImpactGroup::duration ? "Duration" : "Cost") + " risks (probability-impact matrix)\n";
        out += t.str();
    }
    return out;
}

std::string render_comparison(const ComparisonTable& table, const PrioritizationReport& report,
                              OutputFormat format) {
    auto score_text = [](const std::optional<double>& s) { return s ? format_fixed(*s, 3) : std::string("-"); };
    auto rank_text = [](const std::optional<int>& r) { return r ? std::to_string(*r) : std::string("-"); };
    switch (format) {
        case OutputFormat::json: {
            json rows = json::array();
            for (const auto& r : table.rows) {
                json jr = {{"risk", r.risk.str()},
                           {"group", std::string(to_string(r.group))},
                           {"duration_with_risk", r.duration_with_risk},
                           {"delta_duration", r.delta_duration},
                           {"rank_duration", r.rank_duration},
                           {"cost_with_risk", r.cost_with_risk},
                           {"delta_cost", r.delta_cost},
                           {"rank_cost", r.rank_cost}};
                jr["probability"] = r.probability_level ? json(std::string(to_string(*r.probability_level))) : json();
                jr["impact"] = r.impact_level ? json(std::string(to_string(*r.impact_level))) : json();
                jr["matrix_score"] = r.matrix_score ? json(*r.matrix_score) : json();
                jr["matrix_rank"] = r.matrix_rank ? json(*r.matrix_rank) : json();
                rows.push_back(std::move(jr));
            }
            json dis = json::array();
            for (const auto& d : table.disagreements)
                dis.push_back({{"group", std::string(to_string(d.group))},
                               {"first", d.first.str()},
                               {"second", d.second.str()},
                               {"matrix_order", d.matrix_order},
                               {"quantitative_order", d.quantitative_order}});
            json j = {{"percentile", report.percentile},
                      {"iterations", report.iterations},
                      {"seed", report.seed},
                      {"baseline", {{"duration", report.baseline_duration}, {"cost", report.baseline_cost}}},
                      {"rows", rows},
                      {"disagreements", dis}};
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string out = join_csv({"Risk", "Group", "P", "I", "PxI", "Ranking", "Dur_with_R", "Diff_Dur",
                                        "Ranking_Dur", "Cost_with_R", "Diff_Cost", "Ranking_Cost"});
            for (const auto& r : table.rows)
                out += join_csv({r.risk.str(), std::string(to_string(r.group)), opt_level(r.probability_level),
                                 opt_level(r.impact_level), score_text(r.matrix_score), rank_text(r.matrix_rank),
                                 format_fixed(r.duration_with_risk, 2), format_fixed(r.delta_duration, 2),
                                 std::to_string(r.rank_duration), format_fixed(r.cost_with_risk, 2),
                                 format_fixed(r.delta_cost, 2), std::to_string(r.rank_cost)});
            return out;
        }
        case OutputFormat::text: break;
    }
    std::string out = "Baseline at " + percentile_label(report.percentile) + ": duration " +
                      format_fixed(report.baseline_duration, 2) + ", cost " + format_fixed(report.baseline_cost, 2) +
                      "\n\n";
    TextTable t({"Risk", "Group", "P", "I", "PxI", "Ranking", "Dur_with_R", "Diff_Dur", "Ranking_Dur", "Cost_with_R",
                 "Diff_Cost", "Ranking_Cost"});
    for (const auto& r : table.rows)
        t.add({r.risk.str(), std::string(to_string(r.group)), opt_level(r.probability_level), opt_level(r.impact_level),
               score_text(r.matrix_score), rank_text(r.matrix_rank), format_fixed(r.duration_with_risk, 2),
               format_fixed(r.delta_duration, 2), std::to_string(r.rank_duration), format_fixed(r.cost_with_risk, 2),
               format_fixed(r.delta_cost, 2), std::to_string(r.rank_cost)});
    out += t.str();
    out += "\nOrdering disagreements: " + std::to_string(table.disagreements.size()) + "\n";
    auto order_word = [](int o) { return o > 0 ? ">" : (o < 0 ? "<" : "="); };
    for (const auto& d : table.disagreements)
        out += "  [" + std::string(to_string(d.group)) + "] " + d.first.str() + " vs " + d.second.str() +
               ": matrix " + order_word(d.matrix_order) + ", simulation " + order_word(d.quantitative_order) + "\n";
    return out;
}

}  // namespace riskprio

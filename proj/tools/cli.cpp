#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riskprio/document.hpp"
#include "riskprio/errors.hpp"
#include "riskprio/mcs_engine.hpp"
#include "riskprio/prioritization.hpp"
#include "riskprio/report_io.hpp"

namespace riskprio::cli {

namespace {

struct Options {
    std::string document;
    std::string format = "text";
    std::string output;
    std::uint32_t iterations = 0;
    std::uint64_t seed = 0;
    double percentile = 0.0;
    unsigned workers = 0;
    std::size_t bins = 20;
    std::string metric = "duration";
    std::string risks;
};

struct SimulationFlags {
    CLI::Option* iterations = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* percentile = nullptr;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("document", o.document, "Project document (JSON)")->required();
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output,-o", o.output, "Write to this file instead of stdout");
}

SimulationFlags add_simulation(CLI::App* cmd, Options& o) {
    SimulationFlags f;
    f.iterations = cmd->add_option("--iterations", o.iterations, "Monte Carlo iterations (document value, else 20000)")
                       ->check(CLI::PositiveNumber);
    f.seed = cmd->add_option("--seed", o.seed, "Random seed (document value, else 42)");
    f.percentile = cmd->add_option("--percentile", o.percentile, "Percentile as a fraction, e.g. 0.95")
                       ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--workers", o.workers, "Worker threads, 0 = all cores; results do not depend on it");
    return f;
}

SimulationConfig effective_config(const ProjectDocument& doc, const Options& o, const SimulationFlags& f) {
    SimulationConfig c = doc.simulation;
    if (f.iterations->count()) c.iterations = o.iterations;
    if (f.seed->count()) c.seed = o.seed;
    if (f.percentile->count()) c.percentile = o.percentile;
    c.workers = o.workers;
    c.validate();
    return c;
}

std::vector<RiskId> select_risks(const ProjectDocument& doc, const std::string& spec) {
    std::vector<RiskId> ids;
    if (spec.empty() || spec == "none") return ids;
    if (spec == "all") {
        for (const auto& r : doc.risks.risks) ids.push_back(r.id);
        return ids;
    }
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        ids.emplace_back(token);
        doc.risks.find(ids.back());
    }
    return ids;
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.output);
    f << text;
    if (!f) throw std::runtime_error("failed writing " + o.output);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantitative project risk prioritization by Monte Carlo simulation", "riskprio"};
    app.require_subcommand(1);

    Options o;
    auto* plan = app.add_subcommand("plan", "Deterministic schedule, planned cost and planned value curve");
    add_common(plan, o);

    auto* simulate = app.add_subcommand("simulate", "Simulate one scenario and export histograms");
    add_common(simulate, o);
    const auto sim_flags = add_simulation(simulate, o);
    simulate->add_option("--risks", o.risks, "Active risks: comma-separated ids, 'all' or 'none'")
        ->capture_default_str();
    simulate->add_option("--bins", o.bins, "Histogram bins")->check(CLI::PositiveNumber)->capture_default_str();
    simulate->add_option("--metric", o.metric, "Histogram exported in csv format")
        ->check(CLI::IsMember({"duration", "cost"}))
        ->capture_default_str();

    auto* prioritize_cmd = app.add_subcommand("prioritize", "Rank risks by percentile impact on duration and cost");
    add_common(prioritize_cmd, o);
    const auto prio_flags = add_simulation(prioritize_cmd, o);

    auto* matrix = app.add_subcommand("matrix", "Qualitative probability-impact matrix ranking");
    add_common(matrix, o);

    auto* compare = app.add_subcommand("compare", "Matrix ranking next to the simulated ranking");
    add_common(compare, o);
    const auto cmp_flags = add_simulation(compare, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "riskprio: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        const auto doc = parse_document(o.document);
        const auto format = *parse_format(o.format);

        if (plan->parsed()) {
            emit(render_plan(make_plan(doc.network), format), o, out);
        } else if (simulate->parsed()) {
            const auto config = effective_config(doc, o, sim_flags);
            auto active = select_risks(doc, o.risks);
            const auto result = run_scenario(Scenario{doc.network, doc.risks, active}, config);
            const auto summary = summarize_simulation(result, config, std::move(active), o.bins);
            emit(render_simulation(summary, format, o.metric == "cost" ? Metric::cost : Metric::duration), o, out);
        } else if (prioritize_cmd->parsed()) {
            const auto config = effective_config(doc, o, prio_flags);
            emit(render_report(prioritize(doc.network, doc.risks, config), format), o, out);
        } else if (matrix->parsed()) {
            emit(render_matrix(matrix_rank(doc.risks, doc.matrix_scores), format), o, out);
        } else if (compare->parsed()) {
            const auto config = effective_config(doc, o, cmp_flags);
            const auto report = prioritize(doc.network, doc.risks, config);
            emit(render_comparison(compare_with_matrix(report, doc.risks, doc.matrix_scores), report, format), o, out);
        }
    } catch (const ParseError& e) {
        err << "riskprio: parse error at " << e.what() << "\n";
        return kParseError;
    } catch (const ValidationError& e) {
        err << "riskprio: invalid input: " << e.what() << "\n";
        return kValidationError;
    } catch (const std::exception& e) {
        err << "riskprio: " << e.what() << "\n";
        return kRuntimeError;
    }
    return kOk;
}

}  // namespace riskprio::cli

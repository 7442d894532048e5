/**
 * Command surface of the cedge tool. run() never touches the process
 * streams; it returns the exit code together with the stdout payload and
 * the stderr diagnostics so that tests can call it directly.
 *
 * Exit codes: 0 success, 1 verification failure or discrepancy,
 * 2 usage or input error.
 */

#ifndef CEDGE_CLI_HPP
#define CEDGE_CLI_HPP

#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graph.hpp"
#include "homology.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "random.hpp"
#include "verify.hpp"

namespace cedge {

struct CommandOutcome
{
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline std::vector<double> parse_c_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
    {
        std::size_t used = 0;
        double v = 0;
        try
        {
            v = std::stod(item, &used);
        }
        catch (const std::exception&)
        {
            used = 0;
        }
        if (used == 0 || used != item.size() || v < 0)
            throw DomainError("--c expects a comma-separated list of non-negative numbers, got '" + text + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw DomainError("--c needs at least one value");
    return out;
}

}   // namespace detail

inline CommandOutcome run(std::vector<std::string> args)
{
    CLI::App app{"Complementary edge ideals: licci verdicts, Betti oracle, random-graph experiments", "cedge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "cedge 1.0.0");

    std::string graph_path;
    std::string field_text = "gf2";
    bool with_oracle = false;
    bool as_json = false;
    int max_n = 5;
    int n = 0;
    double p = -1, c = -1;
    std::string c_list;
    std::uint64_t trials = 0, seed = 0;
    unsigned workers = 1;

    auto* analyze = app.add_subcommand("analyze", "Predicted invariants and licci verdict for I_c(G)");
    analyze->add_option("graph", graph_path, "Graph file (text or JSON)")->required();
    analyze->add_flag("--oracle", with_oracle, "Also compute ground truth with the Betti oracle");
    analyze->add_option("--field", field_text, "Coefficient field for the oracle")->check(CLI::IsMember({"gf2", "q"}));
    analyze->add_flag("--json", as_json, "Emit JSON (the default and only format)");

    auto* betti = app.add_subcommand("betti", "Graded Betti table of S/I_c(G)");
    betti->add_option("graph", graph_path, "Graph file (text or JSON)")->required();
    betti->add_option("--field", field_text, "Coefficient field")->check(CLI::IsMember({"gf2", "q"}));

    auto* verify = app.add_subcommand("verify", "Exhaustive formula-vs-oracle check on all graphs up to --max-n");
    verify->add_option("--max-n", max_n, "Largest vertex count")->check(CLI::Range(3, kDefaultEnumerationLimit));
    verify->add_option("--field", field_text, "Coefficient field")->check(CLI::IsMember({"gf2", "q"}));

    auto* montecarlo = app.add_subcommand("montecarlo", "Estimate P[I_c(G(n,p)) is licci]");
    montecarlo->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(3, 1 << 16));
    auto* p_opt = montecarlo->add_option("--p", p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    auto* c_opt = montecarlo->add_option("--c", c, "Scaled edge probability, p = min(c/n, 1)")
                      ->check(CLI::NonNegativeNumber);
    p_opt->excludes(c_opt);
    montecarlo->add_option("--trials", trials, "Number of samples")->required()->check(CLI::PositiveNumber);
    montecarlo->add_option("--seed", seed, "Master seed")->required();
    montecarlo->add_option("--workers", workers, "Worker threads (results do not depend on this)");

    auto* sweep = app.add_subcommand("sweep", "Licci fraction for several c with p = c/n");
    sweep->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(3, 1 << 16));
    sweep->add_option("--c", c_list, "Comma-separated c values")->required();
    sweep->add_option("--trials", trials, "Samples per c")->required()->check(CLI::PositiveNumber);
    sweep->add_option("--seed", seed, "Master seed")->required();
    sweep->add_option("--workers", workers, "Worker threads (results do not depend on this)");

    auto* mdensity = app.add_subcommand("mdensity", "Maximum subgraph density m(H) as an exact fraction");
    mdensity->add_option("graph", graph_path, "Graph file (text or JSON)")->required();

    CommandOutcome outcome;
    std::ostringstream out, err;
    try
    {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    }
    catch (const CLI::CallForHelp&)
    {
        return {0, app.help(), ""};
    }
    catch (const CLI::CallForVersion&)
    {
        return {0, app.version() + "\n", ""};
    }
    catch (const CLI::ParseError& e)
    {
        return {2, "", std::string(e.what()) + "\n" + "run 'cedge --help' for usage\n"};
    }

    try
    {
        const Field field = parse_field(field_text);
        if (*analyze)
        {
            const auto g = read_graph_file(graph_path);
            const auto report = predict_invariants(g);
            auto doc = to_json(report);
            doc["graph"] = to_json(g);
            doc["ideal"] = to_json(complementary_edge_ideal(g));
            if (with_oracle)
            {
                const auto oracle = oracle_invariants(g, field);
                const auto discrepancy = cross_validate(g, report, oracle);
                doc["oracle"] = to_json(oracle);
                doc["mismatches"] = to_json(discrepancy)["mismatches"];
                doc["huneke_ulrich"] = huneke_ulrich_check(oracle.reg_pd.reg_quotient, oracle.height, report.indeg);
                bool tension = std::find(report.notes.begin(), report.notes.end(), kIsolatedVertexTension) !=
                               report.notes.end();
                if (!discrepancy.agrees() && !tension)
                    outcome.exit_code = 1;
            }
            out << doc.dump(2) << "\n";
        }
        else if (*betti)
        {
            const auto g = read_graph_file(graph_path);
            const auto ideal = complementary_edge_ideal(g);
            if (ideal.is_zero())
                throw DomainError("edgeless graph: I_c(G) is the zero ideal");
            out << to_json(hochster_betti(ideal, field)).dump(2) << "\n";
        }
        else if (*verify)
        {
            const auto summary = run_verification(max_n, field);
            out << to_json(summary).dump(2) << "\n";
            err << "verify: " << summary.graphs_checked << " graphs with edges checked, "
                << summary.mismatches.size() << " unflagged mismatches\n";
            if (!summary.ok())
                outcome.exit_code = 1;
        }
        else if (*montecarlo)
        {
            if (p_opt->count() == 0 && c_opt->count() == 0)
                throw CLI::RequiredError("--p or --c");
            ExperimentConfig config{n, AbsoluteP{p}, trials, seed};
            if (c_opt->count())
                config.p_spec = ScaledP{c};
            const auto summary = estimate_licci_probability(config, workers);
            out << kExperimentCsvHeader << "\n" << csv_row(summary) << "\n";
            err << "montecarlo: forests=" << summary.forest_count << " with_cycle=" << summary.cycle_count
                << " wall_time=" << summary.wall_time << "s\n";
        }
        else if (*sweep)
        {
            const auto result = threshold_sweep(n, detail::parse_c_list(c_list), trials, seed, workers);
            out << kExperimentCsvHeader << "\n";
            for (const auto& row : result.rows)
                out << csv_row(row) << "\n";
            for (const auto& d : result.diagnostics)
                err << "sweep: " << d << "\n";
        }
        else if (*mdensity)
        {
            const auto m = max_subgraph_density(read_graph_file(graph_path));
            out << m.numerator() << "/" << m.denominator() << "\n";
        }
    }
    catch (const CLI::Error& e)
    {
        return {2, "", std::string(e.what()) + "\n"};
    }
    catch (const std::exception& e)
    {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    }

    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
}

inline CommandOutcome run(int argc, const char* const* argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args));
}

}   // namespace cedge

#endif

// Command-line entry point: loads or assembles a scenario, runs the
// selected law suites, and emits text plus structured reports.
//
// Exit codes: 0 all cases pass, 1 at least one failure, 2 usage error.

#include <iostream>

#include <CLI11.hpp>

#include "rigweb/serialize.hpp"

using namespace rigweb;

int main(int argc, char** argv) {
    CLI::App app{"rigweb: law-suite workbench for web models over partial commutative rigs"};

    std::string scenario_arg;
    std::vector<std::string> suite_ids;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> model;
    std::optional<int> bang_degree;
    std::optional<int> s_bound;
    std::optional<int> cases;
    std::string report_path;
    std::string format = "text";
    bool list_suites = false;

    app.add_option("--scenario", scenario_arg,
                   "scenario file, or a bundled name (pcoh-smoke, coh-smoke, kothe-taylor)");
    app.add_option("--suite", suite_ids, "suite ids to run (default: all)");
    app.add_option("--seed", seed, "sampling seed (fixes the whole run)");
    app.add_option("--model", model, "model id: rel wrel pcoh coh fin kothe");
    app.add_option("--bang-degree", bang_degree, "multiset degree bound for the exponential");
    app.add_option("--s-bound", s_bound, "index bound for the summability web");
    app.add_option("--cases", cases, "sampled cases per suite");
    app.add_option("--report", report_path, "write the structured report here");
    app.add_option("--format", format, "stdout format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--list-suites", list_suites, "print the known suite ids and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list_suites) {
        for (auto& id : known_suites()) std::cout << id << "\n";
        return 0;
    }

    Scenario sc;
    try {
        if (!scenario_arg.empty()) {
            if (auto bundled = bundled_scenario(scenario_arg))
                sc = scenario_from_json(json::parse(*bundled));
            else
                sc = scenario_from_json(read_json_file(scenario_arg));
        }
        if (model) {
            model_info(*model);
            sc.model = *model;
        }
        if (seed) sc.seed = *seed;
        if (bang_degree) sc.cfg.bang_degree = *bang_degree;
        if (s_bound) sc.cfg.s_bound = *s_bound;
        if (cases) sc.cases = *cases;
        if (!suite_ids.empty()) sc.suites = suite_ids;
        for (auto& id : sc.suites) {
            bool known = id == "harness.demo-failure";
            for (auto& k : known_suites())
                if (k == id) known = true;
            if (!known) throw std::invalid_argument("unknown suite id: " + id);
        }
        if (sc.cfg.bang_degree < 0 || sc.cfg.bang_degree > 5)
            throw std::invalid_argument("bang degree out of the desk-scale range [0,5]");
        if (sc.cfg.s_bound < 1 || sc.cfg.s_bound > 6)
            throw std::invalid_argument("s bound out of the desk-scale range [1,6]");
    } catch (const json::parse_error& e) {
        std::cerr << "scenario parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    LawReport report;
    try {
        report = run_scenario_suites(sc);
    } catch (const std::exception& e) {
        std::cerr << "run failed: " << e.what() << "\n";
        return 2;
    }

    if (format == "structured")
        std::cout << report_to_json(report, sc, true).dump(2) << "\n";
    else
        std::cout << report_text(report);

    if (!report_path.empty()) {
        try {
            write_file(report_path, report_to_json(report, sc, true).dump(2) + "\n");
        } catch (const std::exception& e) {
            std::cerr << "cannot write report: " << e.what() << "\n";
            return 2;
        }
    }
    return report.ok() ? 0 : 1;
}

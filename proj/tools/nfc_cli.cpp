// Command-line front door: every verdict is a thin wrapper over the
// library call of the same name.
//
// Exit codes: 0 property holds / success, 1 property fails, 2 usage or
// input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nfc/criticality.hpp"
#include "nfc/graph.hpp"
#include "nfc/harness.hpp"
#include "nfc/matching.hpp"
#include "nfc/oracle.hpp"

namespace {

nfc::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nfc::GraphError("cannot open file: " + path);
    return nfc::parse_graph(in);
}

std::string witness_summary(const nfc::Witness& w) {
    if (std::holds_alternative<nfc::FailingVertex>(w))
        return "failing vertex " +
               std::to_string(std::get<nfc::FailingVertex>(w).v);
    if (std::holds_alternative<nfc::TutteWitness>(w)) {
        const auto& tw = std::get<nfc::TutteWitness>(w);
        std::ostringstream out;
        out << "tutte set S={";
        for (std::size_t i = 0; i < tw.s.size(); ++i)
            out << (i ? "," : "") << tw.s[i];
        out << "} with " << tw.odd_count << " odd components";
        return out.str();
    }
    if (std::holds_alternative<nfc::StructuralCase>(w))
        return "tag=" + nfc::to_string(std::get<nfc::StructuralCase>(w));
    if (std::holds_alternative<nfc::ParityFailure>(w)) return "parity failure";
    return "none";
}

int report_verdict(const std::string& property, const std::string& route,
                   const nfc::Graph& g, const nfc::CriticalityVerdict& verdict,
                   bool want_witness, bool want_json) {
    if (want_json) {
        std::cout << nfc::verdict_report(property, route, g, verdict) << '\n';
    } else {
        std::cout << property << ": " << (verdict.holds ? "holds" : "fails")
                  << " (route=" << route;
        if (want_witness || !verdict.holds ||
            std::holds_alternative<nfc::StructuralCase>(verdict.witness))
            std::cout << ", " << witness_summary(verdict.witness);
        std::cout << ")\n";
    }
    return verdict.holds ? 0 : 1;
}

int run_check(const std::string& property, const std::string& file,
              const std::string& route, bool want_witness, bool want_json) {
    nfc::Graph g = load_graph(file);
    if (property == "nfc") {
        std::string r = route.empty() ? "theorem" : route;
        auto verdict = r == "definition" ? nfc::is_nfc_by_definition(g)
                                         : nfc::is_nfc_by_theorem(g);
        return report_verdict("nfc", r, g, verdict, want_witness, want_json);
    }
    if (property == "factor-critical") {
        if (route == "theorem")
            throw CLI::ValidationError(
                "--route theorem applies to the nfc property only");
        return report_verdict("factor-critical", "definition", g,
                              nfc::is_factor_critical(g), want_witness,
                              want_json);
    }
    if (property == "perfect") {
        if (route == "theorem")
            throw CLI::ValidationError(
                "--route theorem applies to the nfc property only");
        nfc::CriticalityVerdict verdict{nfc::has_perfect_matching(g), {}};
        if (!verdict.holds && want_witness &&
            g.order() <= nfc::kTutteSearchBound)
            if (auto tw = nfc::tutte_witness(g)) verdict.witness = *tw;
        return report_verdict("perfect-matching", "definition", g, verdict,
                              want_witness, want_json);
    }
    // near-factor
    if (route == "theorem")
        throw CLI::ValidationError(
            "--route theorem applies to the nfc property only");
    auto nf = nfc::find_near_factor(g);
    nfc::CriticalityVerdict verdict{nf.has_value(), {}};
    int rc = report_verdict("near-factor", "definition", g, verdict,
                            want_witness, want_json);
    if (nf && want_witness && !want_json)
        std::cout << nfc::serialize_near_factor(*nf);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"near-factor-critical graph toolkit"};
    app.require_subcommand(1);

    std::string property, file, route, kind;
    bool want_witness = false, want_json = false, force = false;
    int gen_n = 0, max_n = nfc::kTutteSearchBound, verify_max_n = 5;
    int count = 1000, jobs = 1;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string mode = "exhaustive", csv_path;

    auto* check = app.add_subcommand("check", "test a graph property");
    check->add_option("property", property, "property to test")
        ->required()
        ->check(CLI::IsMember(
            {"nfc", "factor-critical", "perfect", "near-factor"}));
    check->add_option("file", file, "graph file")->required();
    check->add_option("--route", route, "nfc recognition route")
        ->check(CLI::IsMember({"definition", "theorem"}));
    check->add_flag("--witness", want_witness, "print the witness");
    check->add_flag("--json", want_json, "full JSON verdict");

    auto* match = app.add_subcommand("match", "maximum matching");
    match->add_option("file", file)->required();

    auto* tutte = app.add_subcommand("tutte", "search for a Tutte witness");
    tutte->add_option("file", file)->required();
    tutte->add_option("--max-n", max_n, "exhaustive search bound");
    tutte->add_flag("--force", force, "run the 2^n search past the bound");

    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember(
            {"path", "cycle", "complete", "star", "empty", "random"}));
    gen->add_option("n", gen_n)->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--p", p, "edge probability (random)");
    gen->add_option("--seed", seed, "PRNG seed (random)");

    auto* verify = app.add_subcommand("verify", "cross-check the recognizers");
    verify->add_option("--max-n", verify_max_n)->required();
    verify->add_option("--mode", mode)
        ->check(CLI::IsMember({"exhaustive", "random"}));
    verify->add_option("--count", count, "graphs per order (random mode)");
    verify->add_option("--seed", seed, "seed (random mode)");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--csv", csv_path, "append the CSV rows to this file");
    verify->add_flag("--force", force, "allow exhaustive n=8");

    auto* oracle = app.add_subcommand("oracle", "brute-force matching stats");
    oracle->add_option("file", file)->required();

    try {
        app.parse(argc, argv);

        if (check->parsed())
            return run_check(property, file, route, want_witness, want_json);

        if (match->parsed()) {
            nfc::Graph g = load_graph(file);
            nfc::Matching m = nfc::max_matching(g);
            std::cout << "size: " << m.size() << '\n'
                      << nfc::serialize_matching(m);
            return 0;
        }

        if (tutte->parsed()) {
            nfc::Graph g = load_graph(file);
            auto tw = nfc::tutte_witness(g, max_n, force);
            if (!tw) {
                std::cout << "tutte condition holds (perfect matching exists)\n";
                return 0;
            }
            std::cout << witness_summary(nfc::Witness{*tw}) << '\n';
            return 1;
        }

        if (gen->parsed()) {
            nfc::Graph g;
            if (kind == "path") g = nfc::path_graph(gen_n);
            else if (kind == "cycle") g = nfc::cycle_graph(gen_n);
            else if (kind == "complete") g = nfc::complete_graph(gen_n);
            else if (kind == "star") g = nfc::star_graph(gen_n);
            else if (kind == "empty") g = nfc::empty_graph(gen_n);
            else g = nfc::random_graph(gen_n, p, seed);
            std::cout << nfc::serialize_graph(g);
            return 0;
        }

        if (verify->parsed()) {
            nfc::VerifyOptions options;
            options.mode = mode == "random"
                               ? nfc::VerifyOptions::Mode::kRandom
                               : nfc::VerifyOptions::Mode::kExhaustive;
            options.random_count = count;
            options.seed = seed;
            options.jobs = jobs;
            options.allow_large = force;
            auto reports = nfc::verify_theorems(verify_max_n, options);
            std::string csv = nfc::reports_to_csv(reports);
            std::cout << csv;
            if (!csv_path.empty()) {
                std::ofstream out(csv_path, std::ios::app);
                out << csv;
            }
            bool clean = true;
            for (const auto& r : reports)
                for (const auto& mm : r.mismatches) {
                    clean = false;
                    std::cerr << "mismatch [" << mm.kind << "] n=" << mm.order
                              << "\n" << mm.graph;
                }
            return clean ? 0 : 1;
        }

        if (oracle->parsed()) {
            nfc::Graph g = load_graph(file);
            std::cout << "matchings: " << nfc::oracle::all_matchings(g).size()
                      << '\n'
                      << "max size: "
                      << nfc::oracle::max_matching_size_brute(g) << '\n'
                      << "perfect: "
                      << (nfc::oracle::has_perfect_brute(g) ? "yes" : "no")
                      << '\n'
                      << "near-factor: "
                      << (nfc::oracle::has_near_factor_brute(g) ? "yes" : "no")
                      << '\n';
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const nfc::GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

#include "nfc/harness.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <tuple>

#include "nfc/criticality.hpp"
#include "nfc/matching.hpp"
#include "nfc/oracle.hpp"

namespace nfc {

namespace {

std::vector<Edge> edge_universe(int n) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    return all;
}

Graph graph_from_mask(int n, const std::vector<Edge>& universe,
                      std::uint64_t mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < universe.size(); ++i)
        if (mask & (1ULL << i)) edges.push_back(universe[i]);
    return Graph(n, std::move(edges));
}

void check_graph(const Graph& g, const VerifyOptions& options,
                 VerificationReport& report) {
    ++report.graphs_checked;

    CriticalityVerdict by_def = is_nfc_by_definition(g);
    CriticalityVerdict by_thm = is_nfc_by_theorem(g);
    if (by_def.holds != by_thm.holds)
        report.mismatches.push_back(
            {g.order(), "nfc-route", serialize_graph(g)});
    if (by_def.holds) ++report.nfc_count;

    if (is_factor_critical(g).holds) ++report.factor_critical_count;

    bool perfect = has_perfect_matching(g);
    if (perfect) ++report.perfect_matching_count;
    if (g.order() <= options.tutte_check_max_n) {
        bool witness_absent = !tutte_witness(g).has_value();
        if (perfect != witness_absent)
            report.mismatches.push_back(
                {g.order(), "tutte", serialize_graph(g)});
    }

    if (g.order() <= options.oracle_check_max_n) {
        if (max_matching(g).size() != oracle::max_matching_size_brute(g))
            report.mismatches.push_back(
                {g.order(), "matching-size", serialize_graph(g)});
    }
}

void merge(VerificationReport& into, VerificationReport&& part) {
    into.graphs_checked += part.graphs_checked;
    into.nfc_count += part.nfc_count;
    into.factor_critical_count += part.factor_critical_count;
    into.perfect_matching_count += part.perfect_matching_count;
    into.mismatches.insert(into.mismatches.end(),
                           std::make_move_iterator(part.mismatches.begin()),
                           std::make_move_iterator(part.mismatches.end()));
}

void sort_mismatches(VerificationReport& report) {
    std::sort(report.mismatches.begin(), report.mismatches.end(),
              [](const Mismatch& a, const Mismatch& b) {
                  return std::tie(a.kind, a.graph) < std::tie(b.kind, b.graph);
              });
}

}  // namespace

void enumerate_labeled_graphs(int n,
                              const std::function<void(const Graph&)>& visit,
                              bool allow_large) {
    if (n < 0) throw GraphError("negative order");
    if (n > kEnumerationBound + 1 || (n > kEnumerationBound && !allow_large))
        throw GraphError("enumeration bound exceeded: n=" + std::to_string(n) +
                         (n == kEnumerationBound + 1
                              ? " requires the explicit override"
                              : " is out of reach"));
    const auto universe = edge_universe(n);
    const std::uint64_t total = 1ULL << universe.size();
    for (std::uint64_t mask = 0; mask < total; ++mask)
        visit(graph_from_mask(n, universe, mask));
}

VerificationReport verify_order(int n, const VerifyOptions& options) {
    VerificationReport report;
    report.order = n;

    if (options.mode == VerifyOptions::Mode::kRandom) {
        Xorshift64Star seeder(options.seed + static_cast<std::uint64_t>(n));
        for (int i = 0; i < options.random_count; ++i)
            check_graph(random_graph(n, 0.5, seeder.next()), options, report);
        sort_mismatches(report);
        return report;
    }

    if (n > kEnumerationBound + 1 ||
        (n > kEnumerationBound && !options.allow_large))
        throw GraphError("enumeration bound exceeded: n=" + std::to_string(n));
    const auto universe = edge_universe(n);
    const std::uint64_t total = 1ULL << universe.size();
    const int jobs = std::max(
        1, std::min(options.jobs, static_cast<int>(std::min<std::uint64_t>(
               total, 64))));

    if (jobs == 1) {
        for (std::uint64_t mask = 0; mask < total; ++mask)
            check_graph(graph_from_mask(n, universe, mask), options, report);
    } else {
        std::vector<VerificationReport> parts(jobs);
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                parts[w].order = n;
                for (std::uint64_t mask = w; mask < total; mask += jobs)
                    check_graph(graph_from_mask(n, universe, mask), options,
                                parts[w]);
            });
        for (auto& t : workers) t.join();
        for (auto& part : parts) merge(report, std::move(part));
    }
    sort_mismatches(report);
    return report;
}

std::vector<VerificationReport> verify_theorems(int n_max,
                                                const VerifyOptions& options) {
    std::vector<VerificationReport> reports;
    for (int n = 0; n <= n_max; ++n)
        reports.push_back(verify_order(n, options));
    return reports;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << "order,graphs_checked,nfc_count,factor_critical_count,"
           "perfect_matching_count,mismatch_count\n";
    for (const auto& r : reports)
        out << r.order << ',' << r.graphs_checked << ',' << r.nfc_count << ','
            << r.factor_critical_count << ',' << r.perfect_matching_count
            << ',' << r.mismatches.size() << '\n';
    return out.str();
}

}  // namespace nfc

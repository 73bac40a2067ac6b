#include "nfc/criticality.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include <json.hpp>

namespace nfc {

std::string to_string(StructuralCase c) {
    switch (c) {
        case StructuralCase::kConnectedWithOneFactor:
            return "connected-with-1-factor";
        case StructuralCase::kAllEvenComponents:
            return "all-even-components";
        case StructuralCase::kTwoFactorCriticalComponents:
            return "two-factor-critical-components";
    }
    return "unknown";
}

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
    std::vector<char> in(g.order(), 0);
    for (Vertex v : keep) in[v] = 1;
    std::vector<Vertex> drop;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!in[v]) drop.push_back(v);
    return delete_vertices(g, drop).graph;
}

// Lowest v for which G - v has no near-factor; -1 if none.
Vertex lowest_nfc_failure(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (!find_near_factor(delete_vertices(g, {v}).graph)) return v;
    return -1;
}

}  // namespace

CriticalityVerdict is_factor_critical(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (!has_perfect_matching(delete_vertices(g, {v}).graph))
            return {false, FailingVertex{v}};
    return {true, std::monostate{}};
}

CriticalityVerdict is_nfc_by_definition(const Graph& g) {
    Vertex v = lowest_nfc_failure(g);
    if (v != -1) return {false, FailingVertex{v}};
    return {true, std::monostate{}};
}

CriticalityVerdict is_nfc_by_theorem(const Graph& g) {
    const int n = g.order();
    if (n % 2 == 1) return {false, ParityFailure{}};
    if (n == 0) return {true, StructuralCase::kAllEvenComponents};

    ComponentDecomposition dec = components(g);
    if (dec.count() == 1) {
        if (has_perfect_matching(g))
            return {true, StructuralCase::kConnectedWithOneFactor};
        return {false, FailingVertex{lowest_nfc_failure(g)}};
    }

    if (dec.odd_count() == 0) {
        bool all_perfect = true;
        for (const auto& comp : dec.components)
            if (!has_perfect_matching(induced_subgraph(g, comp))) {
                all_perfect = false;
                break;
            }
        if (all_perfect) return {true, StructuralCase::kAllEvenComponents};
    } else if (dec.count() == 2) {
        bool both_critical = true;
        for (const auto& comp : dec.components)
            if (!is_factor_critical(induced_subgraph(g, comp)).holds) {
                both_critical = false;
                break;
            }
        if (both_critical)
            return {true, StructuralCase::kTwoFactorCriticalComponents};
    }
    return {false, FailingVertex{lowest_nfc_failure(g)}};
}

namespace {

// Odd components of the subgraph induced on `alive`, via bitmask BFS.
int odd_components_mask(const std::vector<std::uint64_t>& adj,
                        std::uint64_t alive) {
    int odd = 0;
    std::uint64_t rem = alive;
    while (rem) {
        std::uint64_t comp = rem & -rem;
        for (;;) {
            std::uint64_t grown = comp;
            std::uint64_t scan = comp;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                grown |= adj[v] & alive;
            }
            if (grown == comp) break;
            comp = grown;
        }
        if (std::popcount(comp) % 2 == 1) ++odd;
        rem &= ~comp;
    }
    return odd;
}

}  // namespace

std::optional<TutteWitness> tutte_witness(const Graph& g, int max_n,
                                          bool force) {
    const int n = g.order();
    if (n > max_n && !force)
        throw GraphError("tutte_witness: n=" + std::to_string(n) +
                         " exceeds the exhaustive bound " +
                         std::to_string(max_n) + " (pass force to override)");
    if (n > 63) throw GraphError("tutte_witness: n > 63 unsupported");

    std::vector<std::uint64_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }
    const std::uint64_t full = n == 0 ? 0 : (~0ULL >> (64 - n));

    // Subsets by increasing cardinality, lexicographic within.
    std::vector<int> idx;
    for (int k = 0; k <= n; ++k) {
        idx.resize(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::uint64_t smask = 0;
            for (int i : idx) smask |= 1ULL << i;
            int odd = odd_components_mask(adj, full & ~smask);
            if (odd > k)
                return TutteWitness{std::vector<Vertex>(idx.begin(), idx.end()),
                                    odd};
            // next k-combination of 0..n-1
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

bool check_lemma1(const Graph& g, const std::vector<Vertex>& s,
                  const std::vector<Vertex>& h, Vertex v, const Matching& m) {
    const int n = g.order();
    if (!is_connected(g)) throw GraphError("check_lemma1: g is disconnected");
    if (v < 0 || v >= n)
        throw GraphError("check_lemma1: vertex out of range: " +
                         std::to_string(v));

    std::vector<char> in_s(n, 0), in_h(n, 0);
    for (Vertex x : s) {
        if (x < 0 || x >= n)
            throw GraphError("check_lemma1: s contains out-of-range vertex " +
                             std::to_string(x));
        in_s[x] = 1;
    }
    for (Vertex x : h) {
        if (x < 0 || x >= n)
            throw GraphError("check_lemma1: h contains out-of-range vertex " +
                             std::to_string(x));
        in_h[x] = 1;
    }
    if (in_h[v]) throw GraphError("check_lemma1: v lies in h");

    // h must be exactly one odd component of g \ s.
    if (h.empty() || h.size() % 2 == 0)
        throw GraphError("check_lemma1: h is not of odd order");
    std::vector<char> alive(n, 1);
    for (Vertex x : s) alive[x] = 0;
    for (Vertex x : h)
        if (!alive[x])
            throw GraphError("check_lemma1: h intersects s");
    std::vector<Vertex> comp, stack{h.front()};
    std::vector<char> seen(n, 0);
    seen[h.front()] = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        comp.push_back(x);
        for (Vertex w : g.neighbors(x))
            if (alive[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    if (comp.size() != h.size())
        throw GraphError("check_lemma1: h is not a component of g minus s");
    for (Vertex x : comp)
        if (!in_h[x])
            throw GraphError("check_lemma1: h is not a component of g minus s");

    // m must be a near-factor of g - v with its unsaturated vertex
    // outside h. Edges are given in g's vertex ids.
    validate_matching(g, m);
    std::vector<char> saturated(n, 0);
    for (const auto& [a, b] : m.edges) {
        if (a == v || b == v)
            throw GraphError("check_lemma1: m covers the deleted vertex v");
        saturated[a] = saturated[b] = 1;
    }
    Vertex unsat = -1;
    int unsat_count = 0;
    for (Vertex x = 0; x < n; ++x)
        if (x != v && !saturated[x]) {
            unsat = x;
            ++unsat_count;
        }
    if (unsat_count != 1)
        throw GraphError("check_lemma1: m is not a near-factor of g minus v");
    if (in_h[unsat])
        throw GraphError(
            "check_lemma1: the unsaturated vertex of m lies in h");

    for (const auto& [a, b] : m.edges)
        if ((in_s[a] && in_h[b]) || (in_s[b] && in_h[a])) return true;
    return false;
}

std::string verdict_report(const std::string& property,
                           const std::string& route, const Graph& g,
                           const CriticalityVerdict& verdict) {
    nlohmann::json witness;
    if (std::holds_alternative<FailingVertex>(verdict.witness)) {
        witness = {{"type", "failing-vertex"},
                   {"v", std::get<FailingVertex>(verdict.witness).v}};
    } else if (std::holds_alternative<TutteWitness>(verdict.witness)) {
        const auto& tw = std::get<TutteWitness>(verdict.witness);
        witness = {{"type", "tutte-set"},
                   {"s", tw.s},
                   {"odd_count", tw.odd_count}};
    } else if (std::holds_alternative<StructuralCase>(verdict.witness)) {
        witness = {{"type", "structural-case"},
                   {"tag", to_string(std::get<StructuralCase>(verdict.witness))}};
    } else if (std::holds_alternative<ParityFailure>(verdict.witness)) {
        witness = {{"type", "parity-failure"}};
    } else {
        witness = nullptr;
    }
    nlohmann::json report = {{"property", property}, {"holds", verdict.holds},
                             {"witness", witness},   {"route", route},
                             {"n", g.order()},       {"m", g.size()}};
    return report.dump();
}

}  // namespace nfc

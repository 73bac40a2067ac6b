#include "nfc/oracle.hpp"

#include <string>

namespace nfc {
namespace oracle {

namespace {

void backtrack(const std::vector<Edge>& edges, std::size_t first,
               std::vector<char>& used, Matching& current,
               const std::function<void(const Matching&)>& visit) {
    visit(current);
    for (std::size_t i = first; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (used[u] || used[v]) continue;
        used[u] = used[v] = 1;
        current.edges.push_back(edges[i]);
        backtrack(edges, i + 1, used, current, visit);
        current.edges.pop_back();
        used[u] = used[v] = 0;
    }
}

void check_guard(const Graph& g) {
    if (g.order() > kMaxOrder)
        throw GraphError("oracle size guard exceeded: n=" +
                         std::to_string(g.order()) + " > " +
                         std::to_string(kMaxOrder));
}

}  // namespace

void enumerate_matchings(const Graph& g,
                         const std::function<void(const Matching&)>& visit) {
    check_guard(g);
    std::vector<char> used(g.order(), 0);
    Matching current;
    backtrack(g.edges(), 0, used, current, visit);
}

std::vector<Matching> all_matchings(const Graph& g) {
    std::vector<Matching> out;
    enumerate_matchings(g, [&](const Matching& m) { out.push_back(m); });
    return out;
}

int max_matching_size_brute(const Graph& g) {
    int best = 0;
    enumerate_matchings(g, [&](const Matching& m) {
        if (m.size() > best) best = m.size();
    });
    return best;
}

bool has_perfect_brute(const Graph& g) {
    bool found = g.order() == 0;
    enumerate_matchings(g, [&](const Matching& m) {
        if (m.size() * 2 == g.order()) found = true;
    });
    return found;
}

bool has_near_factor_brute(const Graph& g) {
    bool found = false;
    enumerate_matchings(g, [&](const Matching& m) {
        if (m.size() * 2 == g.order() - 1) found = true;
    });
    return found;
}

std::vector<NearFactor> all_near_factors(const Graph& g) {
    std::vector<NearFactor> out;
    enumerate_matchings(g, [&](const Matching& m) {
        if (m.size() * 2 != g.order() - 1) return;
        std::vector<char> hit(g.order(), 0);
        for (const auto& [u, v] : m.edges) hit[u] = hit[v] = 1;
        for (Vertex v = 0; v < g.order(); ++v)
            if (!hit[v]) {
                out.push_back(NearFactor{m, v});
                break;
            }
    });
    return out;
}

}  // namespace oracle
}  // namespace nfc

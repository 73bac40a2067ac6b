#include "nfc/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace nfc {

std::vector<Vertex> Matching::saturated() const {
    std::vector<Vertex> out;
    out.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        out.push_back(u);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void validate_matching(const Graph& g, const Matching& m) {
    std::vector<int> mate(g.order(), -1);
    for (const auto& [u, v] : m.edges) {
        if (!g.has_edge(u, v))
            throw GraphError("matching uses non-edge (" + std::to_string(u) +
                             ", " + std::to_string(v) + ")");
        for (Vertex x : {u, v}) {
            if (mate[x] != -1)
                throw GraphError("matching edges share endpoint " +
                                 std::to_string(x) + ": (" + std::to_string(u) +
                                 ", " + std::to_string(v) + ")");
        }
        mate[u] = v;
        mate[v] = u;
    }
}

std::vector<Vertex> unsaturated_vertices(const Graph& g, const Matching& m) {
    validate_matching(g, m);
    std::vector<char> hit(g.order(), 0);
    for (const auto& [u, v] : m.edges) hit[u] = hit[v] = 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!hit[v]) out.push_back(v);
    return out;
}

namespace {

// Edmonds' blossom algorithm over contracted blossom bases. base[v] is the
// representative of the blossom currently containing v; p[] stores the
// alternating forest parents used to unroll augmenting paths.
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g)
        : g_(g), n_(g.order()), mate_(n_, -1) {}

    void seed_greedy() {
        for (const auto& [u, v] : g_.edges())
            if (mate_[u] == -1 && mate_[v] == -1) {
                mate_[u] = v;
                mate_[v] = u;
            }
    }

    void set_matching(const Matching& m) {
        for (const auto& [u, v] : m.edges) {
            mate_[u] = v;
            mate_[v] = u;
        }
    }

    void solve() {
        for (Vertex v = 0; v < n_; ++v)
            if (mate_[v] == -1) {
                Vertex tail = find_augmenting_path(v);
                if (tail != -1) augment(tail);
            }
    }

    bool any_augmenting_path() {
        for (Vertex v = 0; v < n_; ++v)
            if (mate_[v] == -1 && find_augmenting_path(v) != -1) return true;
        return false;
    }

    Matching matching() const {
        Matching m;
        for (Vertex v = 0; v < n_; ++v)
            if (mate_[v] > v) m.edges.emplace_back(v, mate_[v]);
        return m;
    }

private:
    // BFS from root over the alternating forest; returns the free vertex
    // ending an augmenting path, or -1.
    Vertex find_augmenting_path(Vertex root) {
        parent_.assign(n_, -1);
        in_tree_.assign(n_, 0);
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        std::queue<Vertex> q;
        in_tree_[root] = 1;
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root ||
                    (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    // Both ends are even vertices of the tree: blossom.
                    contract_blossom(v, to, q);
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    in_tree_[mate_[to]] = 1;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    Vertex lowest_common_base(Vertex a, Vertex b) const {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(Vertex v, Vertex stem, Vertex child,
                   std::vector<char>& in_blossom) {
        while (base_[v] != stem) {
            in_blossom[base_[v]] = 1;
            in_blossom[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    void contract_blossom(Vertex v, Vertex to, std::queue<Vertex>& q) {
        Vertex stem = lowest_common_base(v, to);
        std::vector<char> in_blossom(n_, 0);
        mark_path(v, stem, to, in_blossom);
        mark_path(to, stem, v, in_blossom);
        for (Vertex i = 0; i < n_; ++i)
            if (in_blossom[base_[i]]) {
                base_[i] = stem;
                if (!in_tree_[i]) {
                    in_tree_[i] = 1;
                    q.push(i);
                }
            }
    }

    void augment(Vertex tail) {
        while (tail != -1) {
            Vertex pv = parent_[tail];
            Vertex next = mate_[pv];
            mate_[tail] = pv;
            mate_[pv] = tail;
            tail = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> in_tree_;
};

}  // namespace

Matching max_matching(const Graph& g) {
    BlossomSolver solver(g);
    solver.seed_greedy();
    solver.solve();
    return solver.matching();
}

bool has_perfect_matching(const Graph& g) {
    if (g.order() % 2 != 0) return false;
    return max_matching(g).size() * 2 == g.order();
}

std::optional<NearFactor> find_near_factor(const Graph& g) {
    if (g.order() % 2 != 1) return std::nullopt;
    Matching m = max_matching(g);
    if (m.size() * 2 != g.order() - 1) return std::nullopt;
    Vertex u = unsaturated_vertices(g, m).front();
    return NearFactor{std::move(m), u};
}

bool has_augmenting_path(const Graph& g, const Matching& m) {
    validate_matching(g, m);
    BlossomSolver solver(g);
    solver.set_matching(m);
    return solver.any_augmenting_path();
}

std::string serialize_matching(const Matching& m) {
    std::vector<Edge> sorted = m.edges;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    for (const auto& [u, v] : sorted) out << u << ' ' << v << '\n';
    return out.str();
}

std::string serialize_near_factor(const NearFactor& nf) {
    return serialize_matching(nf.matching) +
           "unsaturated: " + std::to_string(nf.unsaturated) + '\n';
}

}  // namespace nfc

#include "nfc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace nfc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw GraphError("negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) +
                             ", " + std::to_string(v) + ") with n=" +
                             std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw GraphError("duplicate edge (" + std::to_string(dup->first) + ", " +
                         std::to_string(dup->second) + ")");
    adj_.resize(n_);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    if (v < 0 || v >= n_)
        throw GraphError("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int ComponentDecomposition::odd_count() const {
    int k = 0;
    for (const auto& c : components)
        if (c.size() % 2 == 1) ++k;
    return k;
}

ComponentDecomposition components(const Graph& g) {
    const int n = g.order();
    std::vector<int> label(n, -1);
    ComponentDecomposition dec;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        int id = dec.count();
        dec.components.emplace_back();
        label[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            dec.components[id].push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (label[w] == -1) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(dec.components[id].begin(), dec.components[id].end());
    }
    // DFS roots are taken in increasing id order, so components are
    // already sorted by minimum vertex.
    return dec;
}

bool is_connected(const Graph& g) { return components(g).count() <= 1; }

VertexDeletion delete_vertices(const Graph& g, const std::vector<Vertex>& s) {
    const int n = g.order();
    std::vector<char> deleted(n, 0);
    for (Vertex v : s) {
        if (v < 0 || v >= n)
            throw GraphError("vertex out of range: " + std::to_string(v));
        deleted[v] = 1;
    }
    VertexDeletion out;
    out.old_to_new.assign(n, -1);
    int next = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!deleted[v]) out.old_to_new[v] = next++;
    std::vector<Edge> kept;
    for (const auto& [u, v] : g.edges())
        if (!deleted[u] && !deleted[v])
            kept.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    out.graph = Graph(next, std::move(kept));
    return out;
}

int count_odd_components(const Graph& g, const std::vector<Vertex>& s) {
    return components(delete_vertices(g, s).graph).odd_count();
}

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

// Tokenizes on whitespace; '#' kills the rest of its line.
std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() &&
                   !std::isspace(static_cast<unsigned char>(line[j])))
                ++j;
            tokens.push_back(
                {line.substr(i, j - i), lineno, static_cast<int>(i) + 1});
            i = j;
        }
    }
    return tokens;
}

int parse_int(const Token& t, const char* what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(t.text, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected ") + what + ", got '" + t.text +
                             "'",
                         t.line, t.column);
    }
    if (pos != t.text.size() || value < 0)
        throw ParseError(std::string("expected ") + what + ", got '" + t.text +
                             "'",
                         t.line, t.column);
    return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    auto tokens = tokenize(in);
    std::size_t pos = 0;
    auto take = [&](const char* what) -> const Token& {
        if (pos >= tokens.size()) {
            int line = tokens.empty() ? 1 : tokens.back().line;
            throw ParseError(std::string("unexpected end of input, expected ") +
                                 what,
                             line, 1);
        }
        return tokens[pos++];
    };
    int n = parse_int(take("vertex count"), "vertex count");
    int m = parse_int(take("edge count"), "edge count");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        const Token& tu = take("edge endpoint");
        const Token& tv = take("edge endpoint");
        int u = parse_int(tu, "edge endpoint");
        int v = parse_int(tv, "edge endpoint");
        if (u == v) throw ParseError("self-loop", tu.line, tu.column);
        if (u >= n || v >= n)
            throw ParseError("endpoint out of range (n=" + std::to_string(n) +
                                 ")",
                             u >= n ? tu.line : tv.line,
                             u >= n ? tu.column : tv.column);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (pos != tokens.size())
        throw ParseError("trailing input after " + std::to_string(m) + " edges",
                         tokens[pos].line, tokens[pos].column);
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        dup != sorted.end())
        throw ParseError("duplicate edge (" + std::to_string(dup->first) + ", " +
                             std::to_string(dup->second) + ")",
                         tokens[pos - 1].line, 1);
    return Graph(n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const int offset = a.order();
    for (const auto& [u, v] : b.edges())
        edges.emplace_back(u + offset, v + offset);
    return Graph(a.order() + b.order(), std::move(edges));
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw GraphError("edge probability outside [0, 1]");
    Xorshift64Star rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace nfc

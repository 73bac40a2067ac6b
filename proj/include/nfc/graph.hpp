#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nfc {

using Vertex = int;
/// Unordered edge stored as (u, v) with u < v.
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse failure with 1-based line/column of the offending token.
class ParseError : public GraphError {
public:
    ParseError(const std::string& msg, int line, int column)
        : GraphError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted and deduplicated; self-loops, duplicates and
/// out-of-range endpoints are rejected at construction. Instances are
/// immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Partition of V(G) into connected components.
/// Components are ordered by minimum vertex id; vertices within a
/// component are sorted.
struct ComponentDecomposition {
    std::vector<std::vector<Vertex>> components;

    int count() const { return static_cast<int>(components.size()); }
    int odd_count() const;
};

ComponentDecomposition components(const Graph& g);

bool is_connected(const Graph& g);

/// Result of deleting a vertex set: the induced subgraph with ids
/// compacted to 0..n-|s|-1, plus the old->new id map (-1 for deleted).
struct VertexDeletion {
    Graph graph;
    std::vector<int> old_to_new;
};

VertexDeletion delete_vertices(const Graph& g, const std::vector<Vertex>& s);

/// Number of odd components of g \ s, i.e. o(G \ S).
int count_odd_components(const Graph& g, const std::vector<Vertex>& s);

// Text format: '#' comment lines, then "n m", then m lines "u v".
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Deterministic generators.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);  // vertex 0 joined to 1..n-1
Graph empty_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

/// xorshift64* generator; fully specified so seeds reproduce across
/// languages:
///   x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;
///   output = x * 0x2545F4914F6CDD1D
/// A seed of 0 is replaced by 0x9E3779B97F4A7C15.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform double in [0, 1) using the top 53 bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// G(n, p) with each candidate edge (u, v), u < v in lexicographic order,
/// kept when the next PRNG double is < p. Deterministic per seed.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace nfc

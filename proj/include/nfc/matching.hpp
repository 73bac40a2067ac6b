#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nfc/graph.hpp"

namespace nfc {

/// Set of pairwise vertex-disjoint edges of a host graph.
struct Matching {
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(edges.size()); }
    std::vector<Vertex> saturated() const;
};

/// Matching saturating all vertices of the host graph except one.
struct NearFactor {
    Matching matching;
    Vertex unsaturated;
};

/// Throws GraphError naming the offending pair if m uses a non-edge of g
/// or two of its edges share an endpoint.
void validate_matching(const Graph& g, const Matching& m);

std::vector<Vertex> unsaturated_vertices(const Graph& g, const Matching& m);

/// Maximum-cardinality matching via Edmonds' blossom algorithm with
/// explicit blossom contraction, O(n^3). Deterministic: a greedy pass over
/// the sorted edge list seeds the matching, then free vertices are scanned
/// in increasing id order and augmenting paths found by BFS with lowest-id
/// tie-breaking.
Matching max_matching(const Graph& g);

/// True iff the maximum matching saturates every vertex. The order-0
/// graph has the empty perfect matching.
bool has_perfect_matching(const Graph& g);

/// Present iff g has odd order and a matching saturating all but one
/// vertex. Absent for the order-0 graph.
std::optional<NearFactor> find_near_factor(const Graph& g);

/// True iff the matching admits no augmenting path; a maximality
/// certificate checkable by one extra search pass.
bool has_augmenting_path(const Graph& g, const Matching& m);

std::string serialize_matching(const Matching& m);
std::string serialize_near_factor(const NearFactor& nf);

}  // namespace nfc

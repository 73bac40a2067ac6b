#pragma once

#include <functional>
#include <vector>

#include "nfc/graph.hpp"
#include "nfc/matching.hpp"

namespace nfc {
// Brute-force ground truth for small graphs. Plain backtracking over the
// sorted edge list, no shared code with the blossom engine.
namespace oracle {

inline constexpr int kMaxOrder = 16;

/// Calls visit once per matching of g (the empty matching included),
/// in backtracking order over sorted edges. Throws GraphError beyond
/// the size guard.
void enumerate_matchings(const Graph& g,
                         const std::function<void(const Matching&)>& visit);

std::vector<Matching> all_matchings(const Graph& g);

int max_matching_size_brute(const Graph& g);
bool has_perfect_brute(const Graph& g);
bool has_near_factor_brute(const Graph& g);

/// Every matching saturating all vertices but one, with its unsaturated
/// vertex.
std::vector<NearFactor> all_near_factors(const Graph& g);

}  // namespace oracle
}  // namespace nfc

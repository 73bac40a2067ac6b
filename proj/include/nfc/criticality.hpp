#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nfc/graph.hpp"
#include "nfc/matching.hpp"

namespace nfc {

/// Why a graph is near-factor-critical, when it is.
enum class StructuralCase {
    /// Connected with a 1-factor.
    kConnectedWithOneFactor,
    /// Disconnected, all components even, each with a 1-factor.
    kAllEvenComponents,
    /// Disconnected with exactly two components, both factor-critical.
    kTwoFactorCriticalComponents,
};

std::string to_string(StructuralCase c);

/// Set S with o(G \ S) > |S|, certifying that no perfect matching exists.
struct TutteWitness {
    std::vector<Vertex> s;
    int odd_count = 0;
};

/// Vertex v whose deletion leaves no 1-factor / near-factor.
struct FailingVertex {
    Vertex v;
};

/// The order alone rules the property out.
struct ParityFailure {};

using Witness = std::variant<std::monostate, FailingVertex, TutteWitness,
                             StructuralCase, ParityFailure>;

/// Boolean verdict plus a machine-checkable witness. Negative witnesses
/// re-validate as genuine violations against the definitional checkers;
/// positive verdicts carry the structural case that applies.
struct CriticalityVerdict {
    bool holds = false;
    Witness witness;
};

/// Definitional test: G - v has a 1-factor for every v. Order-0 graph
/// holds vacuously. On failure the witness is the lowest failing vertex.
CriticalityVerdict is_factor_critical(const Graph& g);

/// Definitional test: G - v has a near-factor for every v. Order-0 graph
/// holds vacuously.
CriticalityVerdict is_nfc_by_definition(const Graph& g);

/// Characterization-based test. Odd order fails outright. A connected
/// graph is near-factor-critical iff it has a 1-factor. A disconnected
/// graph is near-factor-critical iff all components are even and each has
/// a 1-factor, or there are exactly two components and both are
/// factor-critical. Negative non-parity verdicts carry the lowest failing
/// vertex so they re-check definitionally.
CriticalityVerdict is_nfc_by_theorem(const Graph& g);

inline constexpr int kTutteSearchBound = 20;

/// Exhaustive search for S with o(G \ S) > |S|. Returns the witness of
/// smallest cardinality, lexicographically least within that cardinality,
/// or nullopt if the Tutte condition holds everywhere. Refuses n > max_n
/// unless force is set (the search is 2^n).
std::optional<TutteWitness> tutte_witness(const Graph& g,
                                          int max_n = kTutteSearchBound,
                                          bool force = false);

/// Checks the matched-edge crossing property: given connected g, an odd
/// component h of g \ s, a vertex v outside h, and a near-factor m of
/// g - v (edges in g's vertex ids) whose unsaturated vertex lies outside
/// h, returns true iff some edge of m joins s to h. Preconditions are
/// validated and violations reported individually via GraphError.
bool check_lemma1(const Graph& g, const std::vector<Vertex>& s,
                  const std::vector<Vertex>& h, Vertex v, const Matching& m);

/// One-line JSON verdict report:
/// {"property": ..., "holds": ..., "witness": {...}, "route": ...,
///  "n": ..., "m": ...}
std::string verdict_report(const std::string& property,
                           const std::string& route, const Graph& g,
                           const CriticalityVerdict& verdict);

}  // namespace nfc

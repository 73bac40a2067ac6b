#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nfc/graph.hpp"

namespace nfc {

/// A graph on which two routes that must agree did not.
struct Mismatch {
    int order;
    std::string kind;   // "nfc-route", "tutte", "matching-size"
    std::string graph;  // serialized offending graph
};

struct VerificationReport {
    int order = 0;
    std::uint64_t graphs_checked = 0;
    std::uint64_t nfc_count = 0;
    std::uint64_t factor_critical_count = 0;
    std::uint64_t perfect_matching_count = 0;
    std::vector<Mismatch> mismatches;
};

inline constexpr int kEnumerationBound = 7;

/// All 2^(n choose 2) labeled graphs on n vertices, by edge-bitmask
/// counting order. n <= 7 unless allow_large (n = 8 is 2^28 graphs).
void enumerate_labeled_graphs(int n,
                              const std::function<void(const Graph&)>& visit,
                              bool allow_large = false);

struct VerifyOptions {
    enum class Mode { kExhaustive, kRandom };
    Mode mode = Mode::kExhaustive;
    /// Random mode: graphs per order, G(n, 1/2) from this seed.
    int random_count = 1000;
    std::uint64_t seed = 1;
    /// Per-graph cross-checks are skipped above these orders (the Tutte
    /// check is a 2^n subset search, the oracle a full matching
    /// enumeration).
    int tutte_check_max_n = 6;
    int oracle_check_max_n = kEnumerationBound;
    /// Worker threads; the graph stream is partitioned by bitmask range
    /// and per-order reports merged deterministically.
    int jobs = 1;
    bool allow_large = false;
};

/// Checks, for every graph of the given order, that the definitional and
/// characterization NFC routes agree, that a perfect matching exists iff
/// no Tutte witness does, and that the engine's matching size matches the
/// brute-force oracle. Mismatches are collected, not thrown.
VerificationReport verify_order(int n, const VerifyOptions& options);

std::vector<VerificationReport> verify_theorems(int n_max,
                                                const VerifyOptions& options);

/// CSV rows: order,graphs_checked,nfc_count,factor_critical_count,
/// perfect_matching_count,mismatch_count (with header).
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace nfc

#pragma once

#include "solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pexeq {

struct ScanConfig {
    unsigned long a_max = 2, b_max = 2, c_max = 2;
    Int height;
    /// Skip bases that are perfect powers (the census hypothesis). When
    /// false, rows outside the known set are expected and labeled as such.
    bool exclude_perfect_powers = true;
    unsigned workers = 1;
};

/// One census row: a pairwise-coprime triple with at least two solutions
/// below the bound. N_H is solutions.size().
struct ScanRow {
    unsigned long a = 0, b = 0, c = 0;
    std::vector<Solution> solutions;
    bool exceptional = false;

    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

struct ScanReport {
    ScanConfig config;
    unsigned long c_lo = 2, c_hi = 2; // base range this report covers
    std::vector<ScanRow> rows;        // sorted by (a, b, c)
    /// Bound-check observations (odd-base count > 2, unexpected even-base
    /// count 3). Expected to stay empty; never silently dropped.
    std::vector<std::string> findings;
    uint64_t checksum = 0; // FNV-1a 64 over the canonical JSONL rows
};

/// Census over every pairwise-coprime (a, b, c) in range. Deterministic:
/// rows, findings and checksum do not depend on the worker count.
ScanReport scan_range(const ScanConfig& cfg);

/// Same census restricted to c in [c_lo, c_hi]; building blocks for merge.
ScanReport scan_shard(const ScanConfig& cfg, unsigned long c_lo, unsigned long c_hi);

/// Sorted, deduplicated union of disjoint shards of one configuration.
/// Throws std::invalid_argument when parts are empty, configs differ, or
/// base ranges overlap.
ScanReport merge_reports(const std::vector<ScanReport>& parts);

} // namespace pexeq

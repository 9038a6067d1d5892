#pragma once

// Exhaustive (t,u) search minimizing the certified bound for a fixed k.

#include "wgcert/certifier.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wgcert {

struct SearchConfig {
    // Unset bounds default to t in [floor((k+3)/2), ceil(2k log k)] and
    // u in [1, ceil(3k log k)].
    std::optional<long> t_min;
    std::optional<long> t_max;
    std::optional<long> u_min;
    std::optional<long> u_max;
    bool report_all_optima = true;
    bool parallel = false;
    unsigned jobs = 0; // 0: hardware concurrency
};

struct SearchBox {
    long t_min = 0;
    long t_max = 0;
    long u_min = 0;
    long u_max = 0;

    friend bool operator==(const SearchBox&, const SearchBox&) = default;
};

/// Throws std::invalid_argument for t_min below the threshold or an empty range.
SearchBox resolve_box(long k, const SearchConfig& cfg);

struct Witness {
    long t = 0;
    long u = 0;
    long v = 0;
    int h = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct SearchResult {
    long k = 0;
    SearchBox box;
    std::optional<long> best_s; // nullopt: no valid certificate in range
    std::vector<Witness> witnesses; // ordered by (t+u, t)
    std::uint64_t points_scanned = 0;
    std::uint64_t pruned = 0;
    std::uint64_t valid_points = 0;
    std::vector<std::string> warnings;

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

inline constexpr const char* kNoValidCertificate = "no valid certificate in range";

/// Exact minimum of 2(t+u+v)+h over valid points of the box. A point is skipped
/// once 2(t+u)+1 exceeds the best bound of its t-row, or once k - Lambda < 0
/// (Lambda increases with u). The result, including the counters, does not
/// depend on cfg.parallel or cfg.jobs. Every valid point is rechecked with
/// satisfies_side_conditions(); a violation throws std::logic_error.
SearchResult optimize(long k, const SearchConfig& cfg = {});

/// optimize() for every k in [k_lo, k_hi].
std::vector<SearchResult> sweep(long k_lo, long k_hi, const SearchConfig& cfg = {});

/// Every valid certificate in the box, no pruning. Used for property checks.
std::vector<BoundCertificate> scan_valid_points(long k, const SearchConfig& cfg = {});

} // namespace wgcert

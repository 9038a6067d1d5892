#pragma once

// Reference tables for 7 <= k <= 20 and verification reports against them.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wgcert {

struct TableParams {
    long t = 0;
    long u = 0;
    long v = 0;
    int h = 0;

    friend bool operator==(const TableParams&, const TableParams&) = default;
};

struct ReferenceTables {
    std::map<long, long> table1;           // k -> s(k)
    std::map<long, TableParams> table2;    // k -> (t_k, u_k, v_k, h_k)
    std::map<long, std::string> table3;    // k -> h_k^* to five decimals
    std::map<long, long> small_k_bounds;   // k -> earlier bound, 1 <= k <= 7
    std::map<long, long> prior_bounds;     // k -> earlier bound, 8 <= k <= 20

    friend bool operator==(const ReferenceTables&, const ReferenceTables&) = default;
};

const ReferenceTables& reference_tables();

/// Canonical CSV export: one "table,k,field,value" line per datum.
std::string tables_csv(const ReferenceTables& tables);
/// Inverse of tables_csv. Throws std::invalid_argument on malformed input.
ReferenceTables parse_tables_csv(std::string_view csv);

/// FNV-1a 64 of tables_csv(); compared against kTablesChecksum.
std::uint64_t tables_checksum(const ReferenceTables& tables);
inline constexpr std::uint64_t kTablesChecksum = 0xE8576231FCC25E90ULL;

struct ReportRow {
    long k = 0;
    std::vector<std::string> cells;
    bool match = false;
    std::string note;
};

struct VerificationReport {
    std::string title;
    std::vector<std::string> columns; // names of ReportRow::cells
    std::vector<ReportRow> rows;
    bool pass = false;
    double seconds = 0.0;
};

/// certify(k, t_k, u_k) for every tabulated (t_k, u_k), checked against v_k, h_k and s(k).
VerificationReport verify_table2_and_1();
/// Five-decimal ceiling of 2 eta*/sigma_k against the tabulated h*, plus the exact
/// strict inequality 2 eta*/sigma_k < h_k^*.
VerificationReport verify_table3();
/// s(k) strictly below the earlier bound for each 7 <= k <= 20.
VerificationReport verify_improvement_over_prior();

} // namespace wgcert

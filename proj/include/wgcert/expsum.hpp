#pragma once

// Desk-scale evaluation of the Weyl sums
//   f_k(alpha; X) = sum_{X < x <= 2X} e(alpha x^k),
//   g_k(alpha; X) = sum_{X < p <= 2X, p prime} e(alpha p^k),
// and the multiplicative weight w_k(q).
//
// alpha = a/q + beta with beta an exact rational, so alpha x^k mod 1 is reduced
// exactly by modular exponentiation modulo the denominator of alpha. Only the
// final unit-phase evaluation runs in double precision, through the SIMD
// dispatch in simd/phase_kernels.hpp. Block sums are combined by a fixed
// pairwise tree, so results do not depend on the number of jobs.

#include "wgcert/exactnum.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wgcert {

inline constexpr std::uint64_t kDeskScaleMaxX = 10'000'000;
inline constexpr std::uint64_t kScanMaxX = 1'000'000;
inline constexpr long kScanMaxQ = 200;

struct RationalPoint {
    std::int64_t a = 0;
    std::uint64_t q = 1;
    Rational beta; // offset from a/q

    Rational alpha() const { return Rational(a, static_cast<unsigned long>(q)) + beta; }
};

/// Throws std::invalid_argument unless q >= 1 and gcd(|a|, q) = 1.
RationalPoint make_point(std::int64_t a, std::uint64_t q, Rational beta = Rational(0));

/// "a/q", "a", "a/q+beta" or "a/q-beta"; beta in any Rational::parse form
/// (decimal, "m/n", binary exponent "3p-20" or "0x1.8p-3").
RationalPoint parse_alpha(std::string_view text);

struct SumValue {
    double re = 0.0;
    double im = 0.0;
    std::uint64_t terms = 0;

    double modulus() const;
};

struct SumOptions {
    unsigned jobs = 1;
};

/// Requires k >= 1 and X <= kDeskScaleMaxX.
SumValue weyl_sum(long k, const RationalPoint& alpha, std::uint64_t X, const SumOptions& opt = {});
SumValue prime_weyl_sum(long k, const RationalPoint& alpha, std::uint64_t X, const SumOptions& opt = {});

/// Primes in (lo, hi], segmented sieve.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// w_k(q) = prod over p^e || q, e = uk + v with 1 <= v <= k, of
/// k p^(-u-1/2) when v = 1 and p^(-u-1) otherwise. Requires k >= 3, q >= 1.
double w_weight(long k, std::uint64_t q);

struct ArcRow {
    std::int64_t a = 0;
    std::uint64_t q = 1;
    double abs_f = 0.0;
    double prediction = 0.0; // w_k(q) X
    double ratio = 0.0;
};

struct ArcScan {
    long k = 0;
    std::uint64_t X = 0;
    long q_max = 0;
    std::vector<std::string> notes;
    std::vector<ArcRow> rows; // a/q in [0,1), gcd(a,q) = 1, q <= q_max
};

/// |f_k(a/q; X)| against w_k(q) X at every Farey fraction of order q_max.
/// Exploratory only: the size comparison carries an unspecified constant.
/// Requires k >= 3, q_max in [1, kScanMaxQ], X in [1, kScanMaxX].
ArcScan major_arc_scan(long k, std::uint64_t X, long q_max, const SumOptions& opt = {});

std::string arc_scan_csv(const ArcScan& scan);

} // namespace wgcert

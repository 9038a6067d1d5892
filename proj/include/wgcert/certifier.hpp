#pragma once

// Certificates for H(k) <= 2(t+u+v)+h.
//
// From (k,t,u): v = floor((k - Lambda) / (2 sigma_k)), eta* = k - Lambda - 2 v sigma_k,
// and h in {1,2,3} by the band of eta* against sigma_k/2, sigma_k, 2 sigma_k.
// The bound holds when t >= floor((k+3)/2), 2(t+u+v)+h >= 3k+1 and, for
// h in {1,2}, either v >= 3 or eta* < h sigma_k / 3.

#include "wgcert/exactnum.hpp"
#include "wgcert/hpreal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wgcert {

namespace check_names {
inline constexpr const char* kDegree = "k >= 3";
inline constexpr const char* kThreshold = "t >= floor((k+3)/2)";
inline constexpr const char* kNonnegative = "k - Lambda >= 0";
inline constexpr const char* kVariableCount = "2(t+u+v)+h >= 3k+1";
inline constexpr const char* kSideCondition = "h in {1,2} => v >= 3 or eta* < h*sigma_k/3";
} // namespace check_names

struct HypothesisCheck {
    std::string name;
    bool passed = false;
    std::string detail;

    friend bool operator==(const HypothesisCheck&, const HypothesisCheck&) = default;
};

struct BoundCertificate {
    long k = 0;
    long t = 0;
    long u = 0;
    // Absent when Lambda was not evaluated (t below the threshold).
    std::optional<Rational> Lambda;
    std::optional<Rational> k_minus_Lambda;
    // Absent when k - Lambda < 0.
    std::optional<long> v;
    std::optional<Rational> eta_star;
    std::optional<int> h;
    std::optional<Rational> hstar_ratio; // 2 eta* / sigma_k
    std::vector<HypothesisCheck> checks;
    std::optional<long> bound_s;
    bool valid = false;

    /// Names of failed checks, in evaluation order.
    std::vector<std::string> failures() const;

    friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

/// Requires k >= 4, t >= 1, u >= 1 (std::invalid_argument otherwise). Failed
/// hypotheses are reported inside the certificate, never thrown.
BoundCertificate certify(long k, long t, long u);

/// Same as certify() with Lambda supplied by the caller (the optimizer's ladder).
/// t must already satisfy the threshold.
BoundCertificate certify_with_lambda(long k, long t, long u, const Rational& Lambda);

/// Independent recheck of the count and side conditions on a valid certificate.
bool satisfies_side_conditions(const BoundCertificate& cert);

/// ceil_decimals(2 eta*/sigma_k, digits). Throws std::invalid_argument when the
/// certificate has no eta* (k - Lambda < 0 or Lambda not evaluated).
std::string hstar_rounded(const BoundCertificate& cert, int digits = 5);

struct AsymptoticReport {
    long k = 0;
    long t_k = 0;
    long u_k = 0;
    HighPrecisionReal gamma_frac;       // ceil(k(2 log k - log 2)) - k(2 log k - log 2)
    BoundCertificate certificate;
    HighPrecisionReal asymptotic_bound; // (4k-2) log k - (2 log 2 - 1) k - 3
    bool certified_le_asymptotic = false;
    Precision precision_used = 0;
};

/// Runs the large-k parameter schedule t = ceil(k log k / 2),
/// u = ceil(k(2 log k - log 2)) - t at k and compares the certified bound with
/// the closed-form asymptotic bound. Requires k >= 4.
AsymptoticReport theorem1_report(long k, Precision start = default_precision());

} // namespace wgcert

#pragma once

// Weyl exponent sigma_k, the admissible exponent ladder lambda_1..lambda_{t+u}
// and its sum Lambda, and the mean-value exponent eta.

#include "wgcert/exactnum.hpp"

#include <vector>

namespace wgcert {

/// 1 / min(2^(k-1), k(k-1)). Throws std::invalid_argument for k < 3.
Rational sigma(long k);

/// Smallest t allowed by the mean-value estimate: floor((k+3)/2).
constexpr long t_threshold(long k) { return (k + 3) / 2; }

struct LambdaProfile {
    long k = 0;
    long t = 0;
    long u = 0;
    Rational theta;     // 1 - 1/k
    Rational sigma_km1; // sigma_{k-1}
    Rational phi;       // theta + sigma_{k-1}/k
    std::vector<Rational> lambdas; // lambda_1 .. lambda_{t+u}
    Rational Lambda;
};

/// Builds the full ladder by direct recurrence and sums it.
/// Requires k >= 4, t >= floor((k+3)/2), u >= 1; throws std::invalid_argument otherwise.
LambdaProfile lambda_profile(long k, long t, long u);

/// k - Lambda through the closed form in sigma = sigma_{k-1}, theta and phi.
/// Kept as an independent cross-check of lambda_profile; same preconditions.
Rational k_minus_lambda_closed_form(long k, long t, long u);

struct MeanValueExponent {
    long k = 0;
    long t = 0;
    long u = 0;
    long w = 0;
    Rational eta;             // max(0, k - Lambda - 2 w sigma_k)
    Rational moment_exponent; // 2 Lambda + 2w - k + eta
};

MeanValueExponent mean_value_exponent(long k, long t, long u, long w);

// Cached powers and partial sums for a fixed k.
//
// Lambda(t,u) = sum_{i<=u} phi^i + phi^u * R(t), where R(t) is the sum of the
// tail ratios lambda_{u+j} / lambda_{u+1} for 2 <= j <= t. Both pieces are
// prefix sums of the same terms lambda_profile adds one by one, so the result
// is exactly the direct sum. reserve() populates eagerly; after that the
// ladder is read-only and safe to share between threads.
class ExponentLadder {
public:
    explicit ExponentLadder(long k);

    void reserve(long t_max, long u_max);

    long k() const { return k_; }
    const Rational& sigma_k() const { return sigma_k_; }
    const Rational& phi() const { return phi_; }
    const Rational& theta() const { return theta_; }
    long t_max() const { return t_min_ + static_cast<long>(tail_.size()) - 1; }
    long u_max() const { return static_cast<long>(geo_.size()) - 1; }

    /// Throws std::out_of_range outside the reserved box, std::invalid_argument
    /// for t below the threshold or u < 1.
    Rational Lambda(long t, long u) const;

private:
    long k_;
    long t_min_;
    Rational sigma_k_;
    Rational theta_;
    Rational phi_;
    std::vector<Rational> phi_pow_;   // phi^u
    std::vector<Rational> geo_;       // sum_{i=0}^{u} phi^i
    std::vector<Rational> tail_;      // R(t), indexed by t - t_min_
    std::vector<Rational> theta_geo_; // sum_{j=0}^{n} theta^j
    Rational theta_pow_;              // theta^(t_max - 3)
};

} // namespace wgcert

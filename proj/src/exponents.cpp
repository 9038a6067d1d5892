#include "wgcert/exponents.hpp"

#include <stdexcept>
#include <string>

namespace wgcert {

namespace {

void check_ktu(long k, long t, long u)
{
    if (k < 4) {
        throw std::invalid_argument("exponent ladder needs k >= 4 (sigma_{k-1} requires k-1 >= 3), got k=" +
                                    std::to_string(k));
    }
    if (t < t_threshold(k)) {
        throw std::invalid_argument("hypothesis t >= floor((k+3)/2) fails: t=" + std::to_string(t) +
                                    " < " + std::to_string(t_threshold(k)));
    }
    if (u < 1) {
        throw std::invalid_argument("u must be >= 1, got " + std::to_string(u));
    }
}

Rational make_theta(long k) { return Rational(1) - Rational(1, k); }

Rational make_phi(long k) { return make_theta(k) + sigma(k - 1) / Rational(k); }

// (c2, c3): lambda_{u+2} = c2 lambda_{u+1}, lambda_{u+j} = c3 theta^(j-3) lambda_{u+1}.
std::pair<Rational, Rational> tail_coefficients(long k, const Rational& theta_t3)
{
    const Rational kk(k);
    const Rational den = kk * kk + kk - kk * theta_t3;
    return {(kk * kk - theta_t3) / den, (kk * kk - kk - 1) / den};
}

} // namespace

Rational sigma(long k)
{
    if (k < 3) {
        throw std::invalid_argument("sigma_k is defined only for k >= 3, got k=" + std::to_string(k));
    }
    const BigInt kk(k);
    const BigInt quadratic = kk * (kk - 1);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(k - 1));
    return {BigInt(1), power < quadratic ? power : quadratic};
}

LambdaProfile lambda_profile(long k, long t, long u)
{
    check_ktu(k, t, u);
    LambdaProfile out;
    out.k = k;
    out.t = t;
    out.u = u;
    out.theta = make_theta(k);
    out.sigma_km1 = sigma(k - 1);
    out.phi = out.theta + out.sigma_km1 / Rational(k);
    out.lambdas.reserve(static_cast<std::size_t>(t + u));

    Rational lam(1);
    out.lambdas.push_back(lam);
    for (long i = 2; i <= u + 1; ++i) {
        lam *= out.phi;
        out.lambdas.push_back(lam);
    }
    const Rational anchor = lam; // lambda_{u+1}
    const auto [c2, c3] = tail_coefficients(k, out.theta.pow(t - 3));
    if (t >= 2) {
        out.lambdas.push_back(c2 * anchor);
    }
    Rational tail = c3 * anchor;
    for (long j = 3; j <= t; ++j) {
        out.lambdas.push_back(tail);
        tail *= out.theta;
    }

    for (const Rational& l : out.lambdas) {
        out.Lambda += l;
    }
    return out;
}

Rational k_minus_lambda_closed_form(long k, long t, long u)
{
    check_ktu(k, t, u);
    const Rational s = sigma(k - 1);
    const Rational theta = make_theta(k);
    const Rational phi = theta + s / Rational(k);
    const Rational tp = theta.pow(t - 3);
    const Rational kk(k);
    const Rational k2 = kk * kk;
    const Rational k3 = k2 * kk;

    const Rational lead = -(kk * s) / (Rational(1) - s);
    const Rational num = k2 * (kk + 1) * s + tp * ((k3 - 3 * k2 + kk + 2) - s * (k3 - 2 * k2 + kk + 2));
    const Rational den = (k2 + kk - kk * tp) * (Rational(1) - s);
    return lead + num / den * phi.pow(u);
}

MeanValueExponent mean_value_exponent(long k, long t, long u, long w)
{
    if (w < 0) {
        throw std::invalid_argument("w must be nonnegative, got " + std::to_string(w));
    }
    const LambdaProfile prof = lambda_profile(k, t, u);
    MeanValueExponent out;
    out.k = k;
    out.t = t;
    out.u = u;
    out.w = w;
    const Rational raw = Rational(k) - prof.Lambda - Rational(2 * w) * sigma(k);
    out.eta = raw.sign() > 0 ? raw : Rational(0);
    out.moment_exponent = Rational(2) * prof.Lambda + Rational(2 * w) - Rational(k) + out.eta;
    return out;
}

ExponentLadder::ExponentLadder(long k)
    : k_(k), t_min_(t_threshold(k)), sigma_k_(sigma(k)), theta_(make_theta(k)), phi_(make_phi(k)),
      theta_pow_(1)
{
    if (k < 4) {
        throw std::invalid_argument("exponent ladder needs k >= 4, got k=" + std::to_string(k));
    }
    phi_pow_.push_back(Rational(1));
    geo_.push_back(Rational(1));
    theta_geo_.push_back(Rational(1));
    // theta_pow_ tracks theta^(t-3) for the last tail entry; t_min_ >= 3 for k >= 4.
    theta_pow_ = theta_.pow(t_min_ - 3);
    for (long j = 1; j <= t_min_ - 3; ++j) {
        theta_geo_.push_back(theta_geo_.back() + theta_.pow(j));
    }
    const auto [c2, c3] = tail_coefficients(k_, theta_pow_);
    tail_.push_back(c2 + c3 * theta_geo_[static_cast<std::size_t>(t_min_ - 3)]);
}

void ExponentLadder::reserve(long t_max, long u_max)
{
    while (u_max > this->u_max()) {
        phi_pow_.push_back(phi_pow_.back() * phi_);
        geo_.push_back(geo_.back() + phi_pow_.back());
    }
    while (t_max > this->t_max()) {
        const long t = this->t_max() + 1;
        theta_pow_ *= theta_;
        theta_geo_.push_back(theta_geo_.back() + theta_pow_);
        const auto [c2, c3] = tail_coefficients(k_, theta_pow_);
        tail_.push_back(c2 + c3 * theta_geo_[static_cast<std::size_t>(t - 3)]);
    }
}

Rational ExponentLadder::Lambda(long t, long u) const
{
    check_ktu(k_, t, u);
    if (t > t_max() || u > u_max()) {
        throw std::out_of_range("ExponentLadder: (t,u)=(" + std::to_string(t) + "," + std::to_string(u) +
                                ") outside reserved box");
    }
    const auto ui = static_cast<std::size_t>(u);
    return geo_[ui] + phi_pow_[ui] * tail_[static_cast<std::size_t>(t - t_min_)];
}

} // namespace wgcert

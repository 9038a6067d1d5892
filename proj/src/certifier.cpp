#include "wgcert/certifier.hpp"

#include "wgcert/exponents.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace wgcert {

namespace {

void add_check(BoundCertificate& c, const char* name, bool passed, std::string detail = {})
{
    c.checks.push_back({name, passed, std::move(detail)});
}

void finish_with_lambda(BoundCertificate& c, const Rational& Lambda)
{
    const Rational sk = sigma(c.k);
    c.Lambda = Lambda;
    c.k_minus_Lambda = Rational(c.k) - Lambda;
    if (c.k_minus_Lambda->sign() < 0) {
        add_check(c, check_names::kNonnegative, false, "Lambda exceeds k - no nonnegative v exists");
        c.valid = false;
        return;
    }
    add_check(c, check_names::kNonnegative, true);

    const BigInt v = floor_ratio(*c.k_minus_Lambda, Rational(2) * sk);
    if (!v.fits_slong_p()) {
        throw std::overflow_error("v does not fit in a long");
    }
    c.v = v.get_si();
    c.eta_star = *c.k_minus_Lambda - Rational(2 * *c.v) * sk;
    c.hstar_ratio = Rational(2) * *c.eta_star / sk;
    if (*c.hstar_ratio < Rational(1)) {
        c.h = 1;
    } else if (*c.hstar_ratio < Rational(2)) {
        c.h = 2;
    } else {
        c.h = 3;
    }
    c.bound_s = 2 * (c.t + c.u + *c.v) + *c.h;

    const bool count_ok = *c.bound_s >= 3 * c.k + 1;
    add_check(c, check_names::kVariableCount, count_ok,
              std::to_string(*c.bound_s) + (count_ok ? " >= " : " < ") + std::to_string(3 * c.k + 1));

    bool side_ok = true;
    std::string detail = "not required for h=3";
    if (*c.h != 3) {
        const bool small_eta = *c.eta_star < Rational(*c.h) * sk / Rational(3);
        side_ok = *c.v >= 3 || small_eta;
        detail = *c.v >= 3 ? "v >= 3" : (small_eta ? "eta* < h*sigma_k/3" : "v < 3 and eta* >= h*sigma_k/3");
    }
    add_check(c, check_names::kSideCondition, side_ok, detail);

    c.valid = true;
    for (const auto& chk : c.checks) {
        c.valid = c.valid && chk.passed;
    }
}

BoundCertificate start_certificate(long k, long t, long u)
{
    if (k < 4) {
        throw std::invalid_argument("certify requires k >= 4, got k=" + std::to_string(k));
    }
    if (t < 1 || u < 1) {
        throw std::invalid_argument("certify requires t >= 1 and u >= 1");
    }
    BoundCertificate c;
    c.k = k;
    c.t = t;
    c.u = u;
    add_check(c, check_names::kDegree, true);
    const bool t_ok = t >= t_threshold(k);
    add_check(c, check_names::kThreshold, t_ok,
              "t=" + std::to_string(t) + (t_ok ? " >= " : " < ") + std::to_string(t_threshold(k)));
    return c;
}

} // namespace

std::vector<std::string> BoundCertificate::failures() const
{
    std::vector<std::string> out;
    for (const auto& c : checks) {
        if (!c.passed) {
            out.push_back(c.name);
        }
    }
    return out;
}

BoundCertificate certify(long k, long t, long u)
{
    BoundCertificate c = start_certificate(k, t, u);
    if (!c.checks.back().passed) {
        c.valid = false;
        return c;
    }
    finish_with_lambda(c, lambda_profile(k, t, u).Lambda);
    return c;
}

BoundCertificate certify_with_lambda(long k, long t, long u, const Rational& Lambda)
{
    BoundCertificate c = start_certificate(k, t, u);
    if (!c.checks.back().passed) {
        throw std::invalid_argument("certify_with_lambda: t below threshold");
    }
    finish_with_lambda(c, Lambda);
    return c;
}

bool satisfies_side_conditions(const BoundCertificate& c)
{
    if (!c.v || !c.h || !c.eta_star || !c.bound_s) {
        return false;
    }
    const Rational sk = sigma(c.k);
    if (2 * (c.t + c.u + *c.v) + *c.h != *c.bound_s || *c.bound_s < 3 * c.k + 1) {
        return false;
    }
    if (*c.h == 1 || *c.h == 2) {
        return *c.v >= 3 || *c.eta_star * Rational(3) < Rational(*c.h) * sk;
    }
    return true;
}

std::string hstar_rounded(const BoundCertificate& cert, int digits)
{
    if (!cert.hstar_ratio) {
        throw std::invalid_argument("hstar_rounded: certificate has no eta* (k - Lambda < 0 or not evaluated)");
    }
    return ceil_decimals(*cert.hstar_ratio, digits);
}

AsymptoticReport theorem1_report(long k, Precision start)
{
    if (k < 4) {
        throw std::invalid_argument("theorem1_report requires k >= 4, got k=" + std::to_string(k));
    }
    const auto uk = static_cast<unsigned long>(k);
    const Rational kr(k);

    struct Schedule {
        long t;
        long total;
        HighPrecisionReal gamma;
        Precision prec;
    };
    Schedule sched = with_precision_escalation(
        [&](Precision prec) -> std::optional<Schedule> {
            const HighPrecisionReal logk = hp_log(uk, prec);
            const HighPrecisionReal log2 = hp_log(2, prec);
            const HighPrecisionReal half_klogk = logk.scaled(Rational(k, 2));
            const HighPrecisionReal total = logk.scaled(Rational(2 * k)) - log2.scaled(kr);
            const auto t = half_klogk.certified_ceil();
            const auto tot = total.certified_ceil();
            if (!t || !tot) {
                return std::nullopt;
            }
            return Schedule{t->get_si(), tot->get_si(),
                            HighPrecisionReal::from_rational(Rational(*tot), prec) - total, prec};
        },
        "large-k schedule at k=" + std::to_string(k), start);

    AsymptoticReport r{k, sched.t, sched.total - sched.t, sched.gamma, certify(k, sched.t, sched.total - sched.t),
                       HighPrecisionReal::from_rational(Rational(0), start), false, sched.prec};

    auto bound_at = [&](Precision prec) {
        const HighPrecisionReal logk = hp_log(uk, prec);
        const HighPrecisionReal log2 = hp_log(2, prec);
        return logk.scaled(Rational(4 * k - 2)) - (log2.scaled(Rational(2)) - HighPrecisionReal::from_rational(1, prec)).scaled(kr) -
               HighPrecisionReal::from_rational(3, prec);
    };

    r.asymptotic_bound = bound_at(sched.prec);
    if (r.certificate.valid) {
        const BigInt s(*r.certificate.bound_s);
        const auto decided = with_precision_escalation(
            [&](Precision prec) -> std::optional<std::pair<bool, Precision>> {
                const HighPrecisionReal a = bound_at(prec);
                const auto ord = a.compare(s);
                if (!ord) {
                    return std::nullopt;
                }
                return std::pair{*ord != std::strong_ordering::less, prec};
            },
            "asymptotic comparison at k=" + std::to_string(k), sched.prec);
        r.certified_le_asymptotic = decided.first;
        if (decided.second > r.precision_used) {
            r.precision_used = decided.second;
            r.asymptotic_bound = bound_at(decided.second);
        }
    }
    return r;
}

} // namespace wgcert

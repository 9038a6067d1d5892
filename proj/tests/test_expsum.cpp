#include "doctest.h"

#include "oracles/hp_direct_sum.hpp"
#include "support.hpp"
#include "wgcert/expsum.hpp"

#include <numeric>
#include <random>

using wgcert::Rational;

namespace {

bool matches_oracle(const wgcert::SumValue& v, long k, const wgcert::RationalPoint& p,
                    const std::vector<std::uint64_t>& xs)
{
    const auto ref = wgcert::oracle::hp_direct_sum(k, p.alpha().raw(), xs);
    return wgcert::test::agrees_to_10_digits(v.re, v.im, ref.re, ref.im);
}

} // namespace

TEST_CASE("Weyl sum at alpha = 0 counts the interval")
{
    for (long k : {1L, 3L, 9L}) {
        const auto v = wgcert::weyl_sum(k, wgcert::make_point(0, 1), 100);
        CHECK(v.re == 100.0);
        CHECK(v.im == 0.0);
        CHECK(v.terms == 100);
    }
}

TEST_CASE("Weyl sum at alpha = 1/2, k = 2, X = 4 cancels")
{
    // x = 5..8: e(x^2/2) = -1, +1, -1, +1.
    const auto v = wgcert::weyl_sum(2, wgcert::make_point(1, 2), 4);
    CHECK(std::abs(v.re) < 1e-12);
    CHECK(std::abs(v.im) < 1e-12);
}

TEST_CASE("Weyl sum matches the high-precision oracle")
{
    const auto p = wgcert::make_point(1, 7);
    CHECK(matches_oracle(wgcert::weyl_sum(3, p, 1000), 3, p, wgcert::oracle::interval_integers(1000)));

    const auto shifted = wgcert::parse_alpha("1/7+1e-9");
    CHECK(matches_oracle(wgcert::weyl_sum(3, shifted, 2000), 3, shifted, wgcert::oracle::interval_integers(2000)));

    // Denominator beyond 64 bits takes the big-integer phase path.
    const auto huge = wgcert::make_point(3, 11, Rational::parse("1/1180591620717411303449"));
    CHECK(matches_oracle(wgcert::weyl_sum(5, huge, 500), 5, huge, wgcert::oracle::interval_integers(500)));
}

TEST_CASE("prime Weyl sums")
{
    const auto zero = wgcert::prime_weyl_sum(5, wgcert::make_point(0, 1), 10);
    CHECK(zero.re == 4.0);
    CHECK(zero.im == 0.0);
    CHECK(zero.terms == 4);

    const auto half = wgcert::prime_weyl_sum(1, wgcert::make_point(1, 2), 10);
    CHECK(half.re == doctest::Approx(-4.0).epsilon(1e-15));
    CHECK(std::abs(half.im) < 1e-12);

    const auto p = wgcert::make_point(1, 5);
    CHECK(matches_oracle(wgcert::prime_weyl_sum(4, p, 10000), 4, p, wgcert::oracle::interval_primes_trial(10000)));
}

TEST_CASE("segmented sieve agrees with trial division")
{
    for (std::uint64_t X : {0ULL, 1ULL, 2ULL, 10ULL, 97ULL, 1000ULL, 300000ULL}) {
        CHECK(wgcert::primes_in_range(X, 2 * X) == wgcert::oracle::interval_primes_trial(X));
    }
}

TEST_CASE("sum invariants")
{
    std::mt19937_64 rng(wgcert::test::seed());
    for (int i = 0; i < 40; ++i) {
        const long k = std::uniform_int_distribution<long>(1, 8)(rng);
        const std::uint64_t q = std::uniform_int_distribution<std::uint64_t>(1, 1000)(rng);
        std::int64_t a = std::uniform_int_distribution<std::int64_t>(-2000, 2000)(rng);
        while (std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), q) != 1) {
            ++a;
        }
        const std::uint64_t X = std::uniform_int_distribution<std::uint64_t>(1, 20000)(rng);
        const auto p = wgcert::make_point(a, q, Rational(std::uniform_int_distribution<long>(-50, 50)(rng), 1000003));

        const auto f = wgcert::weyl_sum(k, p, X);
        CHECK(f.modulus() <= static_cast<double>(X) * (1 + 1e-15));
        const auto g = wgcert::prime_weyl_sum(k, p, X);
        CHECK(g.modulus() <= static_cast<double>(g.terms) * (1 + 1e-15) + 1e-12);

        const auto shifted = wgcert::make_point(a + static_cast<std::int64_t>(q), q, p.beta);
        const auto f1 = wgcert::weyl_sum(k, shifted, X);
        CHECK(f1.re == f.re);
        CHECK(f1.im == f.im);

        const auto conj = wgcert::weyl_sum(k, wgcert::make_point(-a, q, -p.beta), X);
        CHECK(std::abs(conj.re - f.re) <= 1e-12 * std::max(1.0, f.modulus()));
        CHECK(std::abs(conj.im + f.im) <= 1e-12 * std::max(1.0, f.modulus()));
    }
}

TEST_CASE("job count does not change the bits")
{
    const auto p = wgcert::parse_alpha("2/9-3p-40");
    const auto one = wgcert::weyl_sum(3, p, 100000, {1});
    const auto many = wgcert::weyl_sum(3, p, 100000, {5});
    CHECK(one.re == many.re);
    CHECK(one.im == many.im);
}

TEST_CASE("argument checks")
{
    CHECK_THROWS_AS(wgcert::make_point(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(wgcert::make_point(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(wgcert::weyl_sum(3, wgcert::make_point(0, 1), wgcert::kDeskScaleMaxX + 1), std::invalid_argument);
    CHECK_THROWS_AS(wgcert::weyl_sum(0, wgcert::make_point(0, 1), 10), std::invalid_argument);

    const auto p = wgcert::parse_alpha("-3/8+0.25");
    CHECK(p.a == -3);
    CHECK(p.q == 8);
    CHECK(p.beta == Rational(1, 4));
    CHECK(wgcert::parse_alpha("5").q == 1);
    CHECK(wgcert::parse_alpha("1/7-0x1p-30").beta == -Rational(1, 1 << 30));
    CHECK_THROWS_AS(wgcert::parse_alpha("x/7"), std::invalid_argument);
    CHECK_THROWS_AS(wgcert::parse_alpha("1/"), std::invalid_argument);
    CHECK_THROWS_AS(wgcert::parse_alpha("2/4"), std::invalid_argument);
    CHECK_THROWS_AS(wgcert::parse_alpha("1/7*2"), std::invalid_argument);
}

TEST_CASE("w_k(q)")
{
    CHECK(wgcert::w_weight(3, 1) == 1.0);
    CHECK(wgcert::w_weight(3, 2) == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(wgcert::w_weight(3, 8) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(wgcert::w_weight(3, 6) ==
          doctest::Approx(wgcert::w_weight(3, 2) * wgcert::w_weight(3, 3)).epsilon(1e-15));
    // 2^4 with k = 3: e = 4 = 1*3 + 1, so u = 1, v = 1: 3 * 2^(-3/2).
    CHECK(wgcert::w_weight(3, 16) == doctest::Approx(3.0 * std::pow(2.0, -1.5)).epsilon(1e-15));
    // 2^6 with k = 3: e = 6 = 1*3 + 3, so u = 1, v = 3: 2^-2.
    CHECK(wgcert::w_weight(3, 64) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(wgcert::w_weight(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(wgcert::w_weight(3, 0), std::invalid_argument);
}

TEST_CASE("w_k is multiplicative on coprime arguments")
{
    std::mt19937_64 rng(wgcert::test::seed());
    std::uniform_int_distribution<std::uint64_t> qd(1, 10000);
    int checked = 0;
    while (checked < 300) {
        const std::uint64_t a = qd(rng);
        const std::uint64_t b = qd(rng);
        if (std::gcd(a, b) != 1) {
            continue;
        }
        const long k = std::uniform_int_distribution<long>(3, 12)(rng);
        CHECK(wgcert::w_weight(k, a * b) ==
              doctest::Approx(wgcert::w_weight(k, a) * wgcert::w_weight(k, b)).epsilon(1e-12));
        ++checked;
    }
}

TEST_CASE("major arc scan")
{
    const auto scan = wgcert::major_arc_scan(3, 10000, 10);
    long phi_sum = 0;
    for (long q = 1; q <= 10; ++q) {
        for (long a = 0; a < q; ++a) {
            phi_sum += std::gcd(a, q) == 1 ? 1 : 0;
        }
    }
    CHECK(phi_sum == 32);
    CHECK(scan.rows.size() == static_cast<std::size_t>(phi_sum));
    CHECK(scan.rows.front().a == 0);
    CHECK(scan.rows.front().q == 1);
    CHECK(scan.rows.front().abs_f == doctest::Approx(10000.0));
    CHECK(scan.rows.front().ratio == doctest::Approx(1.0));
    const auto csv = wgcert::arc_scan_csv(scan);
    CHECK(csv.find("a,q,abs_f,w_q_X,ratio") != std::string::npos);
    CHECK(csv.find("# exploratory") != std::string::npos);
    CHECK_THROWS_AS(wgcert::major_arc_scan(3, 10000, 201), std::invalid_argument);
    CHECK_THROWS_AS(wgcert::major_arc_scan(3, 2'000'000, 5), std::invalid_argument);
}

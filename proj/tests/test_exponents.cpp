#include "doctest.h"

#include "support.hpp"
#include "wgcert/exponents.hpp"

#include <random>

using wgcert::Rational;

TEST_CASE("sigma_k")
{
    CHECK(wgcert::sigma(3) == Rational(1, 4));
    CHECK(wgcert::sigma(7) == Rational(1, 42));
    CHECK(wgcert::sigma(20) == Rational(1, 380));
    for (long k = 3; k <= 5; ++k) {
        CHECK(wgcert::sigma(k) == Rational(2).pow(1 - k));
    }
    for (long k = 6; k <= 60; ++k) {
        CHECK(wgcert::sigma(k) == Rational(wgcert::BigInt(1), wgcert::BigInt(k * (k - 1))));
    }
    CHECK_THROWS_AS(wgcert::sigma(2), std::invalid_argument);
}

TEST_CASE("lambda profile at k=7, t=7, u=13")
{
    const auto p = wgcert::lambda_profile(7, 7, 13);
    CHECK(p.lambdas.size() == 20);
    CHECK(p.lambdas.front() == Rational(1));
    // theta = 6/7, sigma_6 = 1/30, phi = 6/7 + 1/210.
    CHECK(p.theta == Rational(6, 7));
    CHECK(p.sigma_km1 == Rational(1, 30));
    CHECK(p.phi == Rational(181, 210));
    for (long i = 1; i <= 13; ++i) {
        CHECK(p.lambdas[static_cast<std::size_t>(i)] == p.phi.pow(i));
    }
    const auto v = wgcert::floor_ratio(Rational(7) - p.Lambda, Rational(2) * wgcert::sigma(7));
    CHECK(v == 2);
}

TEST_CASE("lambda profile rejects t below the mean-value threshold")
{
    CHECK_THROWS_WITH_AS(wgcert::lambda_profile(7, 4, 13), doctest::Contains("t >= floor((k+3)/2)"),
                         std::invalid_argument);
    CHECK_NOTHROW(wgcert::lambda_profile(7, 5, 13));
    CHECK_THROWS_AS(wgcert::lambda_profile(3, 5, 13), std::invalid_argument);
    CHECK_THROWS_AS(wgcert::lambda_profile(7, 7, 0), std::invalid_argument);
}

TEST_CASE("closed form matches direct summation")
{
    for (auto [k, t, u] : {std::tuple{7L, 7L, 13L}, {10L, 10L, 25L}, {20L, 37L, 63L}, {4L, 3L, 1L}}) {
        CHECK(wgcert::k_minus_lambda_closed_form(k, t, u) == Rational(k) - wgcert::lambda_profile(k, t, u).Lambda);
    }
}

TEST_CASE("ladder invariants on random triples")
{
    std::mt19937_64 rng(wgcert::test::seed());
    std::uniform_int_distribution<long> kd(4, 30);
    for (int i = 0; i < 60; ++i) {
        const long k = kd(rng);
        const long t = std::uniform_int_distribution<long>(wgcert::t_threshold(k), wgcert::t_threshold(k) + 30)(rng);
        const long u = std::uniform_int_distribution<long>(1, 80)(rng);
        const auto p = wgcert::lambda_profile(k, t, u);
        CHECK(p.lambdas.size() == static_cast<std::size_t>(t + u));
        CHECK(p.lambdas.front() == Rational(1));
        Rational sum;
        for (std::size_t j = 0; j < p.lambdas.size(); ++j) {
            CHECK(p.lambdas[j].sign() > 0);
            CHECK(p.lambdas[j] <= Rational(1));
            if (j > 0) {
                CHECK(p.lambdas[j] < p.lambdas[j - 1]);
            }
            sum += p.lambdas[j];
        }
        CHECK(sum == p.Lambda);
        CHECK(wgcert::lambda_profile(k, t, u + 1).Lambda > p.Lambda);

        wgcert::ExponentLadder ladder(k);
        ladder.reserve(t, u);
        CHECK(ladder.Lambda(t, u) == p.Lambda);
    }
}

TEST_CASE("ladder bounds")
{
    wgcert::ExponentLadder ladder(9);
    ladder.reserve(20, 30);
    CHECK(ladder.t_max() == 20);
    CHECK(ladder.u_max() == 30);
    CHECK_THROWS_AS(ladder.Lambda(21, 5), std::out_of_range);
    CHECK_THROWS_AS(ladder.Lambda(5, 5), std::invalid_argument);
    CHECK(ladder.Lambda(wgcert::t_threshold(9), 1) == wgcert::lambda_profile(9, wgcert::t_threshold(9), 1).Lambda);
}

TEST_CASE("mean value exponent")
{
    const auto p = wgcert::lambda_profile(7, 7, 13);
    const Rational km = Rational(7) - p.Lambda;
    REQUIRE(km.sign() > 0);

    const auto m0 = wgcert::mean_value_exponent(7, 7, 13, 0);
    CHECK(m0.eta == km);
    CHECK(m0.moment_exponent == Rational(2) * p.Lambda - Rational(7) + m0.eta);

    const auto m_big = wgcert::mean_value_exponent(7, 7, 13, 100);
    CHECK(m_big.eta == Rational(0));
    CHECK(m_big.moment_exponent == Rational(2) * p.Lambda + Rational(200) - Rational(7));

    // With w = v = 2, eta is the certificate's eta*.
    const auto m2 = wgcert::mean_value_exponent(7, 7, 13, 2);
    CHECK(m2.eta == km - Rational(4) * wgcert::sigma(7));
    CHECK_THROWS_AS(wgcert::mean_value_exponent(7, 7, 13, -1), std::invalid_argument);
}

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
//   wgcert_acceptance [--seed N] [--crossover-k-max K]

#include "oracles/divisor_oracle.hpp"
#include "oracles/hp_direct_sum.hpp"
#include "oracles/naive_search.hpp"
#include "support.hpp"

#include "wgcert/certifier.hpp"
#include "wgcert/congruence.hpp"
#include "wgcert/expsum.hpp"
#include "wgcert/exponents.hpp"
#include "wgcert/optimizer.hpp"
#include "wgcert/tables.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace {

using wgcert::Rational;

struct Outcome {
    bool pass = true;
    std::string detail;

    // Records the first failure only; later ones are usually consequences.
    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::uint64_t g_seed = 20161016;
long g_crossover_k_max = 150;

std::string k_str(long k) { return "k=" + std::to_string(k); }

Outcome golden_parameters()
{
    Outcome o;
    const auto& tab = wgcert::reference_tables();
    for (const auto& [k, p] : tab.table2) {
        const auto c = wgcert::certify(k, p.t, p.u);
        o.require(c.valid, k_str(k) + " not valid");
        o.require(c.v && *c.v == p.v, k_str(k) + " v mismatch");
        o.require(c.h && *c.h == p.h, k_str(k) + " h mismatch");
        o.require(c.bound_s && *c.bound_s == tab.table1.at(k), k_str(k) + " s mismatch");
    }
    if (o.pass) {
        o.detail = std::to_string(tab.table2.size()) + " parameter triples, s(7)=45 .. s(20)=223";
    }
    return o;
}

Outcome hstar_rounding()
{
    Outcome o;
    int flagged = 0;
    for (const auto& [k, ref] : wgcert::reference_tables().table3) {
        const auto& p = wgcert::reference_tables().table2.at(k);
        const auto c = wgcert::certify(k, p.t, p.u);
        if (!c.hstar_ratio) {
            o.require(false, k_str(k) + " has no h* ratio");
            continue;
        }
        const std::string ceil5 = wgcert::ceil_decimals(*c.hstar_ratio, 5);
        if (ceil5 == ref) {
            continue;
        }
        // One unit in the last place is tolerated only when the exact ratio is
        // still strictly below the tabulated value.
        const Rational diff = (Rational::parse(ceil5) - Rational::parse(ref)) * Rational(100000);
        const bool one_unit = diff == Rational(1) || diff == Rational(-1);
        o.require(one_unit && *c.hstar_ratio < Rational::parse(ref), k_str(k) + " ceil5=" + ceil5 + " vs " + ref);
        ++flagged;
    }
    o.require(wgcert::verify_table3().pass, "verify_table3 reported FAIL");
    if (o.pass) {
        o.detail = "14 ratios, " + std::to_string(flagged) + " flagged one-unit cells";
    }
    return o;
}

Outcome optimizer_reproduction()
{
    Outcome o;
    const auto& tab = wgcert::reference_tables();
    wgcert::SearchConfig cfg;
    cfg.parallel = true;
    const auto results = wgcert::sweep(7, 20, cfg);
    for (const auto& r : results) {
        o.require(r.best_s && *r.best_s == tab.table1.at(r.k), k_str(r.k) + " best_s differs");
        const auto& p = tab.table2.at(r.k);
        bool found = false;
        for (const auto& w : r.witnesses) {
            found = found || (w.t == p.t && w.u == p.u);
        }
        o.require(found, k_str(r.k) + " tabulated (t,u) is not an optimum");
    }
    if (o.pass) {
        o.detail = "best_s matches for k=7..20; tabulated (t,u) among optima";
    }
    return o;
}

Outcome closed_form_identity()
{
    Outcome o;
    std::vector<std::tuple<long, long, long>> triples;
    for (const auto& [k, p] : wgcert::reference_tables().table2) {
        triples.emplace_back(k, p.t, p.u);
    }
    std::mt19937_64 rng(g_seed);
    for (int i = 0; i < 100; ++i) {
        const long k = std::uniform_int_distribution<long>(7, 30)(rng);
        const long t = std::uniform_int_distribution<long>(wgcert::t_threshold(k), 3 * k)(rng);
        const long u = std::uniform_int_distribution<long>(1, 4 * k)(rng);
        triples.emplace_back(k, t, u);
    }
    for (const auto& [k, t, u] : triples) {
        const Rational direct = Rational(k) - wgcert::lambda_profile(k, t, u).Lambda;
        o.require(direct == wgcert::k_minus_lambda_closed_form(k, t, u),
                  "mismatch at (" + std::to_string(k) + "," + std::to_string(t) + "," + std::to_string(u) + ")");
    }
    if (o.pass) {
        o.detail = std::to_string(triples.size()) + " triples, exact rational equality";
    }
    return o;
}

Outcome side_conditions()
{
    Outcome o;
    std::uint64_t n = 0;
    for (long k = 7; k <= 20; ++k) {
        for (const auto& c : wgcert::scan_valid_points(k)) {
            ++n;
            const long v = *c.v;
            const int h = *c.h;
            o.require(2 * (c.t + c.u + v) + h >= 3 * k + 1, "variable count fails at " + k_str(k));
            if (h == 1 || h == 2) {
                o.require(v >= 3 || *c.eta_star < Rational(h) * wgcert::sigma(k) / Rational(3),
                          "side condition fails at " + k_str(k));
            }
        }
    }
    o.require(n > 0, "no valid points scanned");
    if (o.pass) {
        o.detail = std::to_string(n) + " valid certificates over the default boxes, k=7..20";
    }
    return o;
}

Outcome search_oracle()
{
    Outcome o;
    for (long k : {7L, 8L, 9L}) {
        const long t_lo = wgcert::t_threshold(k);
        const auto naive = wgcert::oracle::naive_search(k, t_lo, 40, 1, 60);
        for (unsigned jobs : {1U, 4U}) {
            wgcert::SearchConfig cfg;
            cfg.t_min = t_lo;
            cfg.t_max = 40;
            cfg.u_min = 1;
            cfg.u_max = 60;
            cfg.parallel = jobs > 1;
            cfg.jobs = jobs;
            const auto r = wgcert::optimize(k, cfg);
            std::set<std::tuple<long, long, long, int>> got;
            for (const auto& w : r.witnesses) {
                got.insert({w.t, w.u, w.v, w.h});
            }
            o.require(r.best_s == naive.best_s, k_str(k) + " best_s differs from naive");
            o.require(got == naive.optima, k_str(k) + " optima set differs from naive");
        }
    }
    if (o.pass) {
        o.detail = "k=7,8,9 on t<=40, u<=60, serial and 4 threads";
    }
    return o;
}

Outcome large_k_machinery(std::string& crossover_note)
{
    Outcome o;
    const auto r100 = wgcert::theorem1_report(100);
    o.require(r100.t_k == 231 && r100.u_k == 621, "k=100 schedule is not (231,621)");
    o.require(r100.certificate.valid, "k=100 certificate invalid");
    o.require(r100.certificate.bound_s == 1791L, "k=100 bound is not 1791");
    o.require(r100.certified_le_asymptotic, "k=100 comparison should be true");
    const auto enclosed = [](const wgcert::HighPrecisionReal& x, double lo, double hi) {
        return x.lower().to_double() >= lo && x.upper().to_double() <= hi;
    };
    o.require(enclosed(r100.asymptotic_bound, 1791.2282979112, 1791.2282979113), "k=100 enclosure off");

    const auto r7 = wgcert::theorem1_report(7);
    o.require(!r7.certified_le_asymptotic, "k=7 comparison should be false");
    o.require(enclosed(r7.asymptotic_bound, 44.889603347, 44.889603348), "k=7 enclosure off");

    long last_above = 0;
    for (long k = 7; k <= g_crossover_k_max; ++k) {
        if (!wgcert::theorem1_report(k).certified_le_asymptotic) {
            last_above = k;
        }
    }
    std::ostringstream os;
    os << "largest k <= " << g_crossover_k_max << " with certified > asymptotic: " << last_above;
    crossover_note = os.str();
    if (o.pass) {
        o.detail = "k=100: (231,621) s=1791 <= 1791.228..; k=7: 45 > 44.889..";
    }
    return o;
}

Outcome congruence_modulus()
{
    Outcome o;
    const std::uint64_t expected[] = {2, 24, 2, 240};
    for (std::uint64_t k = 1; k <= 4; ++k) {
        const auto d = wgcert::modulus_K(k);
        o.require(d.modulus_K == expected[k - 1], "K(" + std::to_string(k) + ") wrong");
        o.require(wgcert::oracle::brute_K(k) == expected[k - 1], "oracle K(" + std::to_string(k) + ") wrong");
    }
    for (std::uint64_t k = 1; k <= 200; ++k) {
        const auto d = wgcert::modulus_K(k);
        const auto brute = wgcert::oracle::brute_factors(k);
        bool same = d.factors.size() == brute.size();
        for (std::size_t i = 0; same && i < brute.size(); ++i) {
            same = d.factors[i].p == brute[i].p && d.factors[i].gamma == brute[i].gamma;
        }
        o.require(same, "prime set or exponent differs at k=" + std::to_string(k));
        wgcert::BigInt product = 1;
        for (const auto& f : brute) {
            wgcert::BigInt pp;
            mpz_ui_pow_ui(pp.get_mpz_t(), f.p, f.gamma);
            product *= pp;
        }
        o.require(d.modulus_K == product, "K differs at k=" + std::to_string(k));
    }
    if (o.pass) {
        o.detail = "K(1..4) = 2, 24, 2, 240; complete for k <= 200";
    }
    return o;
}

Outcome expsum_properties()
{
    Outcome o;
    std::mt19937_64 rng(g_seed);
    auto coprime_point = [&](std::uint64_t q_max) {
        const std::uint64_t q = std::uniform_int_distribution<std::uint64_t>(1, q_max)(rng);
        std::int64_t a = std::uniform_int_distribution<std::int64_t>(0, static_cast<std::int64_t>(q))(rng);
        while (std::gcd(static_cast<std::uint64_t>(a), q) != 1) {
            ++a;
        }
        const long bnum = std::uniform_int_distribution<long>(-1000, 1000)(rng);
        return wgcert::make_point(a, q, Rational(bnum, 1000000007L));
    };

    int compared = 0;
    for (int i = 0; i < 50; ++i) {
        const long k = std::uniform_int_distribution<long>(1, 7)(rng);
        const auto p = coprime_point(500);
        const std::uint64_t X = std::uniform_int_distribution<std::uint64_t>(1, 20000)(rng);
        const bool primes = i % 5 == 4;
        const auto v = primes ? wgcert::prime_weyl_sum(k, p, X) : wgcert::weyl_sum(k, p, X);
        const auto xs = primes ? wgcert::oracle::interval_primes_trial(X) : wgcert::oracle::interval_integers(X);
        const auto ref = wgcert::oracle::hp_direct_sum(k, p.alpha().raw(), xs);
        o.require(wgcert::test::agrees_to_10_digits(v.re, v.im, ref.re, ref.im),
                  "oracle disagreement at case " + std::to_string(i));
        o.require(v.modulus() <= static_cast<double>(v.terms) * (1 + 1e-15), "trivial bound violated");
        ++compared;

        if (!primes) {
            const auto shifted = wgcert::make_point(p.a + static_cast<std::int64_t>(p.q), p.q, p.beta);
            const auto f1 = wgcert::weyl_sum(k, shifted, X);
            o.require(f1.re == v.re && f1.im == v.im, "periodicity not exact at case " + std::to_string(i));
            const auto conj = wgcert::weyl_sum(k, wgcert::make_point(-p.a, p.q, -p.beta), X);
            const double tol = 1e-12 * std::max(1.0, v.modulus());
            o.require(std::abs(conj.re - v.re) <= tol && std::abs(conj.im + v.im) <= tol,
                      "conjugate symmetry fails at case " + std::to_string(i));
        }
    }

    int mult = 0;
    std::uniform_int_distribution<std::uint64_t> qd(1, 10000);
    while (mult < 200) {
        const std::uint64_t a = qd(rng);
        const std::uint64_t b = qd(rng);
        if (std::gcd(a, b) != 1) {
            continue;
        }
        const long k = std::uniform_int_distribution<long>(3, 12)(rng);
        const double lhs = wgcert::w_weight(k, a * b);
        const double rhs = wgcert::w_weight(k, a) * wgcert::w_weight(k, b);
        o.require(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs), "w_k not multiplicative");
        ++mult;
    }
    if (o.pass) {
        o.detail = std::to_string(compared) + " oracle comparisons, " + std::to_string(mult) +
                   " multiplicativity pairs";
    }
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance suite"};
    app.add_option("--seed", g_seed, "Seed for the randomized criteria");
    app.add_option("--crossover-k-max", g_crossover_k_max, "Upper k for the large-k crossover scan")
        ->check(CLI::Range(7L, 400L));
    CLI11_PARSE(app, argc, argv);

    std::string crossover_note;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"golden parameter triples certify the tabulated bounds", golden_parameters},
        {"h* ratios round to the tabulated 5-decimal values", hstar_rounding},
        {"default-box optimizer reproduces best s(k) for k=7..20", optimizer_reproduction},
        {"closed form of k - Lambda equals direct summation", closed_form_identity},
        {"every valid certificate meets the variable-count and side conditions", side_conditions},
        {"pruned/parallel search equals the naive double loop", search_oracle},
        {"large-k schedule and asymptotic comparison", [&] { return large_k_machinery(crossover_note); }},
        {"congruence modulus K(k) against divisor enumeration", congruence_modulus},
        {"exponential sum properties and oracle agreement", expsum_properties},
    };

    std::printf("seed %llu\n", static_cast<unsigned long long>(g_seed));
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += out.pass ? 0 : 1;
        std::printf("%s  %zu  %s  (%.2f s; %s)\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    secs, out.detail.c_str());
        std::fflush(stdout);
    }
    if (!crossover_note.empty()) {
        std::printf("note: %s\n", crossover_note.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

#include "wgcert/congruence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wgcert {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e != 0) {
        if ((e & 1U) != 0) {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1U;
    }
    return r;
}

void check_k(std::uint64_t k)
{
    if (k == 0 || k > kMaxCongruenceK) {
        throw std::invalid_argument("k must lie in [1, 10^9], got " + std::to_string(k));
    }
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // These twelve bases are a deterministic witness set below 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

unsigned theta_of(std::uint64_t k, std::uint64_t p)
{
    if (k == 0) {
        throw std::invalid_argument("theta_of: k must be positive");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("theta_of: " + std::to_string(p) + " is not prime");
    }
    unsigned theta = 0;
    while (k % p == 0) {
        k /= p;
        ++theta;
    }
    return theta;
}

unsigned gamma_of(std::uint64_t k, std::uint64_t p)
{
    const unsigned theta = theta_of(k, p);
    return (p == 2 && theta > 0) ? theta + 2 : theta + 1;
}

CongruenceData modulus_K(std::uint64_t k)
{
    check_k(k);
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d * d <= k; ++d) {
        if (k % d == 0) {
            divisors.push_back(d);
            if (d != k / d) {
                divisors.push_back(k / d);
            }
        }
    }
    std::sort(divisors.begin(), divisors.end());

    CongruenceData out;
    out.k = k;
    out.modulus_K = 1;
    for (std::uint64_t d : divisors) {
        const std::uint64_t p = d + 1;
        if (!is_prime(p)) {
            continue;
        }
        PrimeLocalData f{p, theta_of(k, p), gamma_of(k, p)};
        BigInt pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, f.gamma);
        out.modulus_K *= pk;
        out.factors.push_back(f);
    }
    return out;
}

} // namespace wgcert

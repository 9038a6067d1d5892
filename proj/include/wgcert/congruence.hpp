#pragma once

// Local data for the Waring-Goldbach congruence condition.

#include "wgcert/exactnum.hpp"

#include <cstdint>
#include <vector>

namespace wgcert {

/// Upper limit for k accepted by the congruence functions.
inline constexpr std::uint64_t kMaxCongruenceK = 1'000'000'000;

struct PrimeLocalData {
    std::uint64_t p = 0;
    unsigned theta = 0; // p^theta || k
    unsigned gamma = 0;

    friend bool operator==(const PrimeLocalData&, const PrimeLocalData&) = default;
};

struct CongruenceData {
    std::uint64_t k = 0;
    std::vector<PrimeLocalData> factors; // primes p with (p-1) | k, increasing
    BigInt modulus_K;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Largest theta with p^theta | k. Throws std::invalid_argument if p is not prime or k == 0.
unsigned theta_of(std::uint64_t k, std::uint64_t p);

/// theta + 2 when p == 2 and theta > 0, otherwise theta + 1.
unsigned gamma_of(std::uint64_t k, std::uint64_t p);

/// K(k) = prod over primes p with (p-1) | k of p^gamma(k,p).
/// Throws std::invalid_argument unless 1 <= k <= kMaxCongruenceK.
CongruenceData modulus_K(std::uint64_t k);

} // namespace wgcert

#pragma once

#include <cstdint>
#include <cstdlib>

namespace wgcert::test {

// Seed for randomized checks; WGCERT_TEST_SEED overrides the fixed default.
inline std::uint64_t seed()
{
    if (const char* env = std::getenv("WGCERT_TEST_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 20161016ULL;
}

} // namespace wgcert::test

#include <algorithm>
#include <cmath>

namespace wgcert::test {

// Ten significant digits relative to the reference modulus; a reference sum of
// modulus below 1 is compared at absolute 1e-10.
inline bool agrees_to_10_digits(double re, double im, double ref_re, double ref_im)
{
    const double err = std::hypot(re - ref_re, im - ref_im);
    return err <= 1e-10 * std::max(1.0, std::hypot(ref_re, ref_im));
}

} // namespace wgcert::test

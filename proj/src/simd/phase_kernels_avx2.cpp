#include "wgcert/simd/phase_kernels.hpp"

#include <immintrin.h>

#include <cmath>
#include <numbers>

namespace wgcert::simd {

namespace {

// Minimax coefficients for sin and cos on [-pi/4, pi/4] (fdlibm kernels).
constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;

constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

// pi/2 split so that f * (hi + lo) keeps ~70 bits before the final rounding.
constexpr double kHalfPiHi = 1.57079632679489655800e+00;
constexpr double kHalfPiLo = 6.12323399573676603587e-17;

inline __m256d poly6(__m256d z, double c1, double c2, double c3, double c4, double c5, double c6)
{
    __m256d r = _mm256_set1_pd(c6);
    r = _mm256_fmadd_pd(r, z, _mm256_set1_pd(c5));
    r = _mm256_fmadd_pd(r, z, _mm256_set1_pd(c4));
    r = _mm256_fmadd_pd(r, z, _mm256_set1_pd(c3));
    r = _mm256_fmadd_pd(r, z, _mm256_set1_pd(c2));
    return _mm256_fmadd_pd(r, z, _mm256_set1_pd(c1));
}

// cos(2 pi p), sin(2 pi p) for four lanes.
inline void sincos_turns(__m256d p, __m256d& c, __m256d& s)
{
    constexpr int kNearest = _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC;
    p = _mm256_sub_pd(p, _mm256_round_pd(p, kNearest));
    const __m256d y = _mm256_mul_pd(p, _mm256_set1_pd(4.0)); // exact
    const __m256d n = _mm256_round_pd(y, kNearest);            // quadrant in {-2..2}
    const __m256d f = _mm256_sub_pd(y, n);                      // exact, |f| <= 1/2
    const __m256d r = _mm256_fmadd_pd(f, _mm256_set1_pd(kHalfPiHi), _mm256_mul_pd(f, _mm256_set1_pd(kHalfPiLo)));
    const __m256d z = _mm256_mul_pd(r, r);

    const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(z, r), poly6(z, kS1, kS2, kS3, kS4, kS5, kS6), r);
    const __m256d half_z = _mm256_mul_pd(z, _mm256_set1_pd(0.5));
    const __m256d w = _mm256_sub_pd(_mm256_set1_pd(1.0), half_z);
    const __m256d corr = _mm256_sub_pd(_mm256_sub_pd(_mm256_set1_pd(1.0), w), half_z);
    const __m256d cos_r =
        _mm256_add_pd(w, _mm256_fmadd_pd(_mm256_mul_pd(z, z), poly6(z, kC1, kC2, kC3, kC4, kC5, kC6), corr));

    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d abs_n = _mm256_andnot_pd(_mm256_set1_pd(-0.0), n);
    const __m256d odd = _mm256_cmp_pd(abs_n, one, _CMP_EQ_OQ);
    const __m256d half_turn = _mm256_cmp_pd(abs_n, two, _CMP_EQ_OQ);
    const __m256d n_is_1 = _mm256_cmp_pd(n, one, _CMP_EQ_OQ);
    const __m256d n_is_m1 = _mm256_cmp_pd(n, _mm256_set1_pd(-1.0), _CMP_EQ_OQ);

    // Quadrant q = n mod 4: q=0 (c,s), q=1 (-s,c), q=2 (-c,-s), q=3 (s,-c).
    __m256d re = _mm256_blendv_pd(cos_r, sin_r, odd);
    __m256d im = _mm256_blendv_pd(sin_r, cos_r, odd);
    const __m256d sign = _mm256_set1_pd(-0.0);
    const __m256d neg_re = _mm256_or_pd(n_is_1, half_turn);
    const __m256d neg_im = _mm256_or_pd(n_is_m1, half_turn);
    re = _mm256_xor_pd(re, _mm256_and_pd(neg_re, sign));
    im = _mm256_xor_pd(im, _mm256_and_pd(neg_im, sign));
    c = re;
    s = im;
}

} // namespace

PhaseSum sum_unit_phases_avx2(std::span<const double> turns)
{
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    const std::size_t n = turns.size();
    for (; i + 4 <= n; i += 4) {
        __m256d c;
        __m256d s;
        sincos_turns(_mm256_loadu_pd(turns.data() + i), c, s);
        acc_re = _mm256_add_pd(acc_re, c);
        acc_im = _mm256_add_pd(acc_im, s);
    }
    if (i < n) {
        alignas(32) double tail[4] = {0.0, 0.0, 0.0, 0.0};
        const std::size_t rem = n - i;
        for (std::size_t j = 0; j < rem; ++j) {
            tail[j] = turns[i + j];
        }
        __m256d c;
        __m256d s;
        sincos_turns(_mm256_load_pd(tail), c, s);
        // Padding lanes hold e(0) = 1 + 0i; mask them out.
        alignas(32) double cr[4];
        alignas(32) double sr[4];
        _mm256_store_pd(cr, c);
        _mm256_store_pd(sr, s);
        for (std::size_t j = rem; j < 4; ++j) {
            cr[j] = 0.0;
            sr[j] = 0.0;
        }
        acc_re = _mm256_add_pd(acc_re, _mm256_load_pd(cr));
        acc_im = _mm256_add_pd(acc_im, _mm256_load_pd(sr));
    }
    alignas(32) double re[4];
    alignas(32) double im[4];
    _mm256_store_pd(re, acc_re);
    _mm256_store_pd(im, acc_im);
    return {(re[0] + re[1]) + (re[2] + re[3]), (im[0] + im[1]) + (im[2] + im[3])};
}

} // namespace wgcert::simd

// AVX2/FMA kernel set. This translation unit is compiled with -mavx2 -mfma;
// nothing here may run unless the dispatcher confirmed CPU support.

#include <immintrin.h>

#include "rcq/kernels.hpp"

namespace rcq::kernels {

namespace {

// Two packed complex doubles per __m256d, interleaved (re, im, re, im).
// Coefficient vectors carry the factor's re broadcast in `re` and im in `im`;
// lanes may hold different factors when rows are processed pairwise.
inline __m256d cmul(__m256d v, __m256d re, __m256d im) {
    __m256d sw = _mm256_permute_pd(v, 0x5);
    return _mm256_fmaddsub_pd(v, re, _mm256_mul_pd(sw, im));
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void apply_1q_avx2(Amplitude* amp, const Amplitude* u, int bit) {
    double* d = reinterpret_cast<double*>(amp);
    if (bit == 0) {
        // Pair partners are adjacent; keep each pair in one vector and pick
        // rows via per-lane coefficients: low lane row 0, high lane row 1.
        const __m256d reA = _mm256_set_pd(u[2].real(), u[2].real(), u[0].real(), u[0].real());
        const __m256d imA = _mm256_set_pd(u[2].imag(), u[2].imag(), u[0].imag(), u[0].imag());
        const __m256d reB = _mm256_set_pd(u[3].real(), u[3].real(), u[1].real(), u[1].real());
        const __m256d imB = _mm256_set_pd(u[3].imag(), u[3].imag(), u[1].imag(), u[1].imag());
        for (int g = 0; g < 8; ++g) {
            __m256d v = _mm256_loadu_pd(d + 4 * g);
            __m256d aa = _mm256_permute2f128_pd(v, v, 0x00);
            __m256d bb = _mm256_permute2f128_pd(v, v, 0x11);
            __m256d out = _mm256_add_pd(cmul(aa, reA, imA), cmul(bb, reB, imB));
            _mm256_storeu_pd(d + 4 * g, out);
        }
        return;
    }
    const __m256d re00 = _mm256_set1_pd(u[0].real()), im00 = _mm256_set1_pd(u[0].imag());
    const __m256d re01 = _mm256_set1_pd(u[1].real()), im01 = _mm256_set1_pd(u[1].imag());
    const __m256d re10 = _mm256_set1_pd(u[2].real()), im10 = _mm256_set1_pd(u[2].imag());
    const __m256d re11 = _mm256_set1_pd(u[3].real()), im11 = _mm256_set1_pd(u[3].imag());
    const int stride = 1 << bit;
    for (int base = 0; base < 16; base += 2 * stride) {
        for (int off = 0; off < stride; off += 2) {
            double* p0 = d + 2 * (base + off);
            double* p1 = p0 + 2 * stride;
            __m256d a = _mm256_loadu_pd(p0);
            __m256d b = _mm256_loadu_pd(p1);
            __m256d na = _mm256_add_pd(cmul(a, re00, im00), cmul(b, re01, im01));
            __m256d nb = _mm256_add_pd(cmul(a, re10, im10), cmul(b, re11, im11));
            _mm256_storeu_pd(p0, na);
            _mm256_storeu_pd(p1, nb);
        }
    }
}

void apply_2q_avx2(Amplitude* amp, const Amplitude* u, int bit_hi, int bit_lo) {
    double* d = reinterpret_cast<double*>(amp);
    // Row-pair coefficient vectors: creL[m] applies u[0][m] on the low lane and
    // u[1][m] on the high lane; creH[m] the same for rows 2 and 3.
    __m256d creL[4], cimL[4], creH[4], cimH[4];
    for (int m = 0; m < 4; ++m) {
        creL[m] = _mm256_set_pd(u[4 + m].real(), u[4 + m].real(), u[m].real(), u[m].real());
        cimL[m] = _mm256_set_pd(u[4 + m].imag(), u[4 + m].imag(), u[m].imag(), u[m].imag());
        creH[m] = _mm256_set_pd(u[12 + m].real(), u[12 + m].real(), u[8 + m].real(), u[8 + m].real());
        cimH[m] = _mm256_set_pd(u[12 + m].imag(), u[12 + m].imag(), u[8 + m].imag(), u[8 + m].imag());
    }
    const int s_hi = 1 << bit_hi;
    const int s_lo = 1 << bit_lo;
    for (int base = 0; base < 16; ++base) {
        if (base & (s_hi | s_lo)) continue;
        double* p0 = d + 2 * base;
        double* p1 = d + 2 * (base + s_lo);
        double* p2 = d + 2 * (base + s_hi);
        double* p3 = d + 2 * (base + s_hi + s_lo);
        __m256d lo = _mm256_set_m128d(_mm_loadu_pd(p1), _mm_loadu_pd(p0));
        __m256d hi = _mm256_set_m128d(_mm_loadu_pd(p3), _mm_loadu_pd(p2));
        __m256d v[4] = {
            _mm256_permute2f128_pd(lo, lo, 0x00), _mm256_permute2f128_pd(lo, lo, 0x11),
            _mm256_permute2f128_pd(hi, hi, 0x00), _mm256_permute2f128_pd(hi, hi, 0x11)};
        __m256d out_lo = cmul(v[0], creL[0], cimL[0]);
        __m256d out_hi = cmul(v[0], creH[0], cimH[0]);
        for (int m = 1; m < 4; ++m) {
            out_lo = _mm256_add_pd(out_lo, cmul(v[m], creL[m], cimL[m]));
            out_hi = _mm256_add_pd(out_hi, cmul(v[m], creH[m], cimH[m]));
        }
        _mm_storeu_pd(p0, _mm256_castpd256_pd128(out_lo));
        _mm_storeu_pd(p1, _mm256_extractf128_pd(out_lo, 1));
        _mm_storeu_pd(p2, _mm256_castpd256_pd128(out_hi));
        _mm_storeu_pd(p3, _mm256_extractf128_pd(out_hi, 1));
    }
}

void probabilities_avx2(const Amplitude* amp, double* out16) {
    const double* d = reinterpret_cast<const double*>(amp);
    for (int i = 0; i < 16; i += 4) {
        __m256d a = _mm256_loadu_pd(d + 2 * i);
        __m256d b = _mm256_loadu_pd(d + 2 * i + 4);
        __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
        // hadd yields (p0, p2, p1, p3); restore index order.
        _mm256_storeu_pd(out16 + i, _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0)));
    }
}

Amplitude inner_product_avx2(const Amplitude* x, const Amplitude* y) {
    const double* dx = reinterpret_cast<const double*>(x);
    const double* dy = reinterpret_cast<const double*>(y);
    __m256d dotv = _mm256_setzero_pd();
    __m256d crossv = _mm256_setzero_pd();
    for (int g = 0; g < 8; ++g) {
        __m256d a = _mm256_loadu_pd(dx + 4 * g);
        __m256d b = _mm256_loadu_pd(dy + 4 * g);
        dotv = _mm256_fmadd_pd(a, b, dotv);
        crossv = _mm256_fmadd_pd(a, _mm256_permute_pd(b, 0x5), crossv);
    }
    const __m256d alt = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    return {hsum(dotv), hsum(_mm256_mul_pd(crossv, alt))};
}

constexpr Ops kAvx2Ops{
    "avx2",
    apply_1q_avx2,
    apply_2q_avx2,
    probabilities_avx2,
    inner_product_avx2,
};

}  // namespace

const Ops* avx2_ops_table() { return &kAvx2Ops; }

}  // namespace rcq::kernels

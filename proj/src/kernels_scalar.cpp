#include "rcq/kernels.hpp"

namespace rcq::kernels {

namespace {

void apply_1q_scalar(Amplitude* amp, const Amplitude* u, int bit) {
    const int stride = 1 << bit;
    for (int base = 0; base < 16; base += 2 * stride) {
        for (int off = 0; off < stride; ++off) {
            const int i0 = base + off;
            const int i1 = i0 + stride;
            const Amplitude a = amp[i0], b = amp[i1];
            amp[i0] = u[0] * a + u[1] * b;
            amp[i1] = u[2] * a + u[3] * b;
        }
    }
}

void apply_2q_scalar(Amplitude* amp, const Amplitude* u, int bit_hi, int bit_lo) {
    const int s_hi = 1 << bit_hi;
    const int s_lo = 1 << bit_lo;
    for (int base = 0; base < 16; ++base) {
        if (base & (s_hi | s_lo)) continue;
        const int i0 = base;
        const int i1 = base + s_lo;
        const int i2 = base + s_hi;
        const int i3 = base + s_hi + s_lo;
        const Amplitude v0 = amp[i0], v1 = amp[i1], v2 = amp[i2], v3 = amp[i3];
        amp[i0] = u[0] * v0 + u[1] * v1 + u[2] * v2 + u[3] * v3;
        amp[i1] = u[4] * v0 + u[5] * v1 + u[6] * v2 + u[7] * v3;
        amp[i2] = u[8] * v0 + u[9] * v1 + u[10] * v2 + u[11] * v3;
        amp[i3] = u[12] * v0 + u[13] * v1 + u[14] * v2 + u[15] * v3;
    }
}

void probabilities_scalar(const Amplitude* amp, double* out16) {
    for (int i = 0; i < 16; ++i) out16[i] = std::norm(amp[i]);
}

Amplitude inner_product_scalar(const Amplitude* x, const Amplitude* y) {
    Amplitude s = 0.0;
    for (int i = 0; i < 16; ++i) s += std::conj(x[i]) * y[i];
    return s;
}

constexpr Ops kScalarOps{
    "scalar",
    apply_1q_scalar,
    apply_2q_scalar,
    probabilities_scalar,
    inner_product_scalar,
};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

}  // namespace rcq::kernels

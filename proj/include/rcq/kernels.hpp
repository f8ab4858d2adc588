#pragma once

#include <string_view>

#include "rcq/complexmat.hpp"

namespace rcq::kernels {

// Inner-loop primitives on a 16-amplitude register. The scalar set is the
// reference; a vectorized set may be selected at runtime when the CPU
// supports it. Both must agree to floating-point roundoff (equivalence is
// tested, not assumed).
//
// apply_1q: u is a 2x2 row-major matrix, bit the target's bit position.
// apply_2q: u is 4x4 row-major; local index = 2*(bit_hi value) + (bit_lo value),
//           i.e. bit_hi is the first wire of the gate.
struct Ops {
    const char* name;
    void (*apply_1q)(Amplitude* amp, const Amplitude* u, int bit);
    void (*apply_2q)(Amplitude* amp, const Amplitude* u, int bit_hi, int bit_lo);
    void (*probabilities)(const Amplitude* amp, double* out16);
    Amplitude (*inner_product)(const Amplitude* x, const Amplitude* y);
};

const Ops& scalar_ops();

// Null when the binary was built without AVX2 support or the CPU lacks it.
const Ops* avx2_ops();

// Dispatch target. Chosen once: RCQ_KERNELS env var ("scalar"/"avx2") if set,
// otherwise the widest supported set.
const Ops& active_ops();

// Test hook. Returns false if the named set is unknown or unavailable.
bool set_active(std::string_view name);

}  // namespace rcq::kernels

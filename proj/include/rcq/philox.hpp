#pragma once

#include <array>
#include <cstdint>

namespace rcq {

// Philox4x32-10 counter-based generator. Streams are cheap: any (seed, stream)
// pair addresses an independent sequence, so parallel consumers stay
// reproducible without sharing state.
class Philox {
  public:
    Philox(uint64_t seed, uint64_t stream = 0) {
        key_[0] = static_cast<uint32_t>(seed);
        key_[1] = static_cast<uint32_t>(seed >> 32);
        ctr_[2] = static_cast<uint32_t>(stream);
        ctr_[3] = static_cast<uint32_t>(stream >> 32);
    }

    // One 4x32 block for the given counter/key; exposed for known-answer tests.
    static std::array<uint32_t, 4> block(std::array<uint32_t, 4> ctr,
                                         std::array<uint32_t, 2> key);

    uint32_t next_u32();
    uint64_t next_u64() {
        uint64_t lo = next_u32();
        return lo | (static_cast<uint64_t>(next_u32()) << 32);
    }
    // Uniform in [0,1), 53-bit mantissa.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }
    // Uniform integer in [0, n) by rejection; n >= 1.
    uint64_t next_below(uint64_t n);
    // Standard normal via Marsaglia polar; second value cached.
    double next_gaussian();

  private:
    std::array<uint32_t, 2> key_{};
    std::array<uint32_t, 4> ctr_{};
    std::array<uint32_t, 4> buf_{};
    int pos_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;

    void refill();
};

}  // namespace rcq

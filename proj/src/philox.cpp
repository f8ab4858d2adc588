#include "rcq/philox.hpp"

#include <cmath>
#include <stdexcept>

namespace rcq {

namespace {

constexpr uint32_t kMul0 = 0xD2511F53u;
constexpr uint32_t kMul1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
    uint64_t p = static_cast<uint64_t>(a) * b;
    hi = static_cast<uint32_t>(p >> 32);
    lo = static_cast<uint32_t>(p);
}

inline std::array<uint32_t, 4> round_once(const std::array<uint32_t, 4>& c,
                                          const std::array<uint32_t, 2>& k) {
    uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<uint32_t, 4> Philox::block(std::array<uint32_t, 4> ctr,
                                      std::array<uint32_t, 2> key) {
    for (int round = 0;; ++round) {
        ctr = round_once(ctr, key);
        if (round == 9) break;
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

void Philox::refill() {
    buf_ = block(ctr_, key_);
    pos_ = 0;
    // 64-bit block counter in words 0..1; words 2..3 hold the stream id.
    if (++ctr_[0] == 0) ++ctr_[1];
}

uint32_t Philox::next_u32() {
    if (pos_ == 4) refill();
    return buf_[pos_++];
}

uint64_t Philox::next_below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: n must be positive");
    if (n == 1) return 0;
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
    for (;;) {
        uint64_t v = next_u64();
        if (v < limit) return v % n;
    }
}

double Philox::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    for (;;) {
        double u = 2.0 * next_double() - 1.0;
        double v = 2.0 * next_double() - 1.0;
        double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            double f = std::sqrt(-2.0 * std::log(s) / s);
            spare_ = v * f;
            have_spare_ = true;
            return u * f;
        }
    }
}

}  // namespace rcq

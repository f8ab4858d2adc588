#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "rcq/complexmat.hpp"

namespace rcq {

// The register is fixed at four labeled wires. Outcome strings are written
// a,p,q,c with wire A as the most significant bit.
enum class Wire : uint8_t { A = 0, P = 1, Q = 2, C = 3 };

inline constexpr int kNumWires = 4;
inline constexpr int kDim = 16;

inline int wire_bit(Wire w) { return 3 - static_cast<int>(w); }

inline char wire_name(Wire w) {
    constexpr const char* names = "APQC";
    return names[static_cast<int>(w)];
}

inline std::string outcome_string(int index) {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i)
        if (index & (1 << (3 - i))) s[static_cast<size_t>(i)] = '1';
    return s;
}

inline int outcome_index(std::string_view s) {
    if (s.size() != 4) throw std::invalid_argument("outcome string must have 4 bits");
    int idx = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("outcome string must be binary");
        idx = (idx << 1) | (ch - '0');
    }
    return idx;
}

struct StateVector {
    alignas(32) std::array<Amplitude, kDim> amp{};

    static StateVector zero_state() {
        StateVector s;
        s.amp[0] = 1.0;
        return s;
    }

    double norm_sq() const {
        double n = 0.0;
        for (const auto& a : amp) n += std::norm(a);
        return n;
    }

    // |<this|other>| -- the phase-insensitive overlap used for state comparisons.
    double overlap(const StateVector& other) const {
        Amplitude s = 0.0;
        for (int i = 0; i < kDim; ++i) s += std::conj(amp[i]) * other.amp[i];
        return std::abs(s);
    }
};

}  // namespace rcq

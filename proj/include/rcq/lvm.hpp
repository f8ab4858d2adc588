#pragma once

#include <array>
#include <cstdint>

namespace rcq {

struct LvmOptions {
    // Permutations to include, canonical order (123, 231, 312, 132, 213, 321).
    std::array<bool, 6> include_eta{true, true, true, true, true, true};
    // Diagnostic mode: replace every sign factor by +1.
    bool force_positive_signs = false;
};

struct LvmStrategy {
    std::array<int, 3> a{1, 1, 1};       // a_x in {+1,-1}
    std::array<int, 3> c{1, 1, 1};       // c_z in {+1,-1}
    std::array<int, 6> b_of_eta{0, 0, 0, 0, 0, 0};
};

struct LvmResult {
    long long best_value = 0;
    LvmStrategy argmax;
    uint64_t strategies_examined = 0;  // 8 * 8 * 4^6 = 262144
};

// Exhaustive maximum of the witness over deterministic local strategies:
// dichotomic assignments for the outer parties and one fixed four-valued
// outcome per middle setting.
LvmResult lvm_max(const LvmOptions& opts = {});

}  // namespace rcq

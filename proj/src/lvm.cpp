#include "rcq/lvm.hpp"

#include "rcq/witness.hpp"

namespace rcq {

LvmResult lvm_max(const LvmOptions& opts) {
    const auto& etas = Permutation::all();

    // score[eta][b][a_idx][c_idx] = sum over z of the signed a*c contribution.
    static_assert(sizeof(int8_t) == 1);
    std::array<std::array<std::array<std::array<int8_t, 8>, 8>, 4>, 6> score{};
    for (int e = 0; e < 6; ++e) {
        if (!opts.include_eta[static_cast<size_t>(e)]) continue;
        const Permutation& eta = etas[static_cast<size_t>(e)];
        for (int b = 0; b < 4; ++b)
            for (int ai = 0; ai < 8; ++ai)
                for (int ci = 0; ci < 8; ++ci) {
                    int sum = 0;
                    for (int z = 1; z <= 3; ++z) {
                        const int sign = opts.force_positive_signs ? 1 : term_sign(eta, z, b);
                        const int a = (ai >> (eta(z) - 1)) & 1 ? -1 : 1;
                        const int c = (ci >> (z - 1)) & 1 ? -1 : 1;
                        sum += sign * a * c;
                    }
                    score[static_cast<size_t>(e)][static_cast<size_t>(b)][static_cast<size_t>(ai)]
                         [static_cast<size_t>(ci)] = static_cast<int8_t>(sum);
                }
    }

    LvmResult res;
    res.best_value = -1000;
    for (int ai = 0; ai < 8; ++ai) {
        for (int ci = 0; ci < 8; ++ci) {
            for (int bvec = 0; bvec < 4096; ++bvec) {
                long long value = 0;
                for (int e = 0; e < 6; ++e) {
                    const int b = (bvec >> (2 * e)) & 3;
                    value += score[static_cast<size_t>(e)][static_cast<size_t>(b)]
                                  [static_cast<size_t>(ai)][static_cast<size_t>(ci)];
                }
                ++res.strategies_examined;
                if (value > res.best_value) {
                    res.best_value = value;
                    for (int i = 0; i < 3; ++i) {
                        res.argmax.a[static_cast<size_t>(i)] = (ai >> i) & 1 ? -1 : 1;
                        res.argmax.c[static_cast<size_t>(i)] = (ci >> i) & 1 ? -1 : 1;
                    }
                    for (int e = 0; e < 6; ++e)
                        res.argmax.b_of_eta[static_cast<size_t>(e)] = (bvec >> (2 * e)) & 3;
                }
            }
        }
    }
    return res;
}

}  // namespace rcq

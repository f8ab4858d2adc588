#include "rcq/complexmax.hpp"

#include <cmath>

namespace rcq {

namespace {

const Amplitude kI{0.0, 1.0};

UMatrix sigma(int j) {
    UMatrix u(2);
    switch (j) {
        case 0: u.at(0, 0) = u.at(1, 1) = 1.0; break;
        case 1: u.at(0, 1) = u.at(1, 0) = 1.0; break;
        case 2: u.at(0, 1) = -kI; u.at(1, 0) = kI; break;
        case 3: u.at(0, 0) = 1.0; u.at(1, 1) = -1.0; break;
    }
    return u;
}

}  // namespace

std::array<UMatrix, 6> axis_permutation_rotations() {
    const double r = 1.0 / std::sqrt(2.0);
    // (1 - i sigma1 - i sigma2 - i sigma3)/2: a third-turn about the main
    // diagonal, cycling the three axes.
    UMatrix w = sigma(0);
    for (int j = 1; j <= 3; ++j) w = w - sigma(j).scaled(kI);
    w = w.scaled(0.5);
    std::array<UMatrix, 6> rot = {
        sigma(0),                          // 123
        w,                                 // 231
        w * w,                             // 312
        (sigma(3) - sigma(2)).scaled(r),   // 132: half-turn about the y-z diagonal
        (sigma(2) - sigma(1)).scaled(r),   // 213
        (sigma(1) - sigma(3)).scaled(r),   // 321
    };
    return rot;
}

WitnessResult complex_construction() {
    const auto rotations = axis_permutation_rotations();
    const auto& etas = Permutation::all();

    std::vector<CorrelationTerm> terms;
    for (size_t e = 0; e < etas.size(); ++e) {
        const Permutation& eta = etas[e];
        const UMatrix& rot = rotations[e];
        for (int z = 1; z <= 3; ++z) {
            const SettingTuple setting = SettingTuple::witness_setting(eta, z);
            for (int b = 0; b < 4; ++b) {
                // -tr(R^dag A_x R s_b C_z s_b)/8 for the singlet-pair strategy.
                const UMatrix inner =
                    rot.dagger() * sigma(setting.x) * rot * sigma(b) * sigma(z) * sigma(b);
                const double corr = -inner.trace().real() / 8.0;
                CorrelationTerm term;
                term.setting = setting;
                term.b = b;
                term.raw_correlation = corr;
                term.signed_value = term_sign(eta, z, b) * corr;
                terms.push_back(term);
            }
        }
    }
    return witness_value(terms);
}

}  // namespace rcq

#pragma once

#include <array>
#include <cstdint>

#include "rcq/complexmat.hpp"
#include "rcq/philox.hpp"

namespace rcq {

enum class NumberField { real_amplitudes, complex_amplitudes };

// A complete product strategy: two pair states, rotations diagonalizing the
// outer parties' observables (rows are the measurement bras) and one joint
// measurement basis per middle setting (row b is outcome b).
struct Strategy {
    std::array<Amplitude, 4> psi_ap{};
    std::array<Amplitude, 4> psi_qc{};
    std::array<UMatrix, 3> a_rot;
    std::array<UMatrix, 3> c_rot;
    std::array<UMatrix, 6> b_rot;
};

// Witness value of a strategy, evaluated through the statevector kernels.
double evaluate_strategy(const Strategy& s);

// The analytic maximum: singlet pairs, axis observables, rotated Bell bases.
// Evaluates to the algebraic maximum 18.
Strategy optimal_complex_strategy();

// Independent draw addressed by (seed, trial).
Strategy random_strategy(NumberField field, uint64_t seed, uint64_t trial);

// Gaussian perturbation of the analytic maximum; epsilon scales the noise
// added before re-orthonormalization.
Strategy perturbed_optimal_strategy(double epsilon, uint64_t seed, uint64_t trial);

struct SamplerOptions {
    NumberField field = NumberField::real_amplitudes;
    uint64_t trials = 1000;
    uint64_t seed = 1;
    bool around_optimum = false;   // complex field only
    double max_perturbation = 0.15;
    int threads = 0;               // 0 = hardware concurrency
};

struct SamplerResult {
    double best_value = 0.0;
    uint64_t best_trial = 0;
    uint64_t trials = 0;
};

// Best witness value over seeded random strategies. Trials are independent
// substreams, so the result does not depend on the thread count.
SamplerResult random_strategy_max(const SamplerOptions& opts);

}  // namespace rcq

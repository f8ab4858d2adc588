#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rcq/gates.hpp"
#include "rcq/statevector.hpp"

namespace rcq {

struct Circuit {
    std::vector<GateOp> gates;

    void push(GateOp op) { gates.push_back(std::move(op)); }
    // Stable content hash; used to derive per-circuit RNG substreams.
    uint64_t fingerprint() const;
};

struct NoiseModel {
    // Probability of a uniformly random two-qubit Pauli after each two-qubit
    // gate (identity included, so p = 1 is the fully depolarizing channel).
    double two_qubit_depolarizing = 0.0;
    // Per-wire readout flips, indexed by Wire: {p(0->1), p(1->0)}.
    std::array<std::array<double, 2>, kNumWires> readout_flip{};

    bool is_zero() const;
    void validate() const;  // throws if any probability is outside [0,1]
};

struct Distribution {
    std::array<double, 16> p{};

    double total_variation(const Distribution& other) const;
    std::map<std::string, double> as_map() const;
    void validate(double tol = 1e-12) const;  // nonnegative, sums to 1
};

struct Permutation;  // witness.hpp
struct SettingTuple;

struct CountsRecord {
    int x = 1;
    std::string eta = "123";
    int z = 1;
    uint64_t shots = 0;
    std::array<uint64_t, 16> counts{};

    uint64_t total() const;
    // Count fractions as a probability vector; throws on empty counts.
    std::array<double, 16> fractions() const;
};

// Applies one gate; throws on duplicate target wires. Norm is preserved to
// 1e-12 (checked).
StateVector apply(const StateVector& state, const GateOp& gate);

void apply_in_place(StateVector& state, const GateOp& gate);

// Born-rule outcome weights of the circuit run on |0000>.
Distribution exact_distribution(const Circuit& circuit);

// Exact outcome weights under the noise model, by enumerating the Pauli
// branches of each depolarizing event and applying readout flips to the
// final probability vector. Reduces to exact_distribution bit-for-bit when
// the model is zero.
Distribution noisy_distribution(const Circuit& circuit, const NoiseModel& noise);

// Multinomial shot sampling from the (noisy) outcome distribution. The RNG
// substream is derived from (seed, circuit fingerprint), so results do not
// depend on evaluation order across circuits. shots must be >= 1.
CountsRecord sample(const Circuit& circuit, uint64_t shots, uint64_t seed,
                    const NoiseModel& noise = {});

}  // namespace rcq

#include "rcq/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "rcq/kernels.hpp"
#include "rcq/philox.hpp"

namespace rcq {

namespace {

uint64_t fnv1a(uint64_t h, const void* data, size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ull;
    }
    return h;
}

}  // namespace

uint64_t Circuit::fingerprint() const {
    uint64_t h = 0xCBF29CE484222325ull;
    for (const GateOp& op : gates) {
        const uint8_t kind = static_cast<uint8_t>(op.kind);
        h = fnv1a(h, &kind, 1);
        h = fnv1a(h, &op.theta, sizeof(op.theta));
        for (Wire w : op.targets) {
            const uint8_t wb = static_cast<uint8_t>(w);
            h = fnv1a(h, &wb, 1);
        }
        if (op.custom) h = fnv1a(h, op.custom->m.data(), sizeof(Amplitude) * op.custom->m.size());
    }
    return h;
}

bool NoiseModel::is_zero() const {
    if (two_qubit_depolarizing != 0.0) return false;
    for (const auto& rf : readout_flip)
        if (rf[0] != 0.0 || rf[1] != 0.0) return false;
    return true;
}

void NoiseModel::validate() const {
    auto check = [](double p, const char* what) {
        if (!(p >= 0.0 && p <= 1.0)) {
            std::ostringstream msg;
            msg << what << " probability " << p << " outside [0,1]";
            throw std::invalid_argument(msg.str());
        }
    };
    check(two_qubit_depolarizing, "two-qubit depolarizing");
    for (const auto& rf : readout_flip) {
        check(rf[0], "readout 0->1");
        check(rf[1], "readout 1->0");
    }
}

double Distribution::total_variation(const Distribution& other) const {
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += std::abs(p[i] - other.p[i]);
    return 0.5 * s;
}

std::map<std::string, double> Distribution::as_map() const {
    std::map<std::string, double> m;
    for (int i = 0; i < 16; ++i) m[outcome_string(i)] = p[i];
    return m;
}

void Distribution::validate(double tol) const {
    double sum = 0.0;
    for (double v : p) {
        if (v < -tol) throw std::runtime_error("distribution has a negative probability");
        sum += v;
    }
    if (std::abs(sum - 1.0) > tol) throw std::runtime_error("distribution does not sum to 1");
}

uint64_t CountsRecord::total() const {
    uint64_t t = 0;
    for (uint64_t c : counts) t += c;
    return t;
}

std::array<double, 16> CountsRecord::fractions() const {
    const uint64_t t = total();
    if (t == 0) throw std::invalid_argument("counts record is empty");
    std::array<double, 16> f{};
    for (int i = 0; i < 16; ++i) f[i] = static_cast<double>(counts[i]) / static_cast<double>(t);
    return f;
}

void apply_in_place(StateVector& state, const GateOp& gate) {
    if (gate.targets.empty() || gate.targets.size() > 2)
        throw std::invalid_argument("gate must target 1 or 2 wires");
    const auto& ops = kernels::active_ops();
    const UMatrix u = gate_matrix(gate);
    if (gate.targets.size() == 1) {
        if (u.dim != 2) throw std::invalid_argument("matrix size does not match target count");
        ops.apply_1q(state.amp.data(), u.m.data(), wire_bit(gate.targets[0]));
    } else {
        if (gate.targets[0] == gate.targets[1])
            throw std::invalid_argument("two-qubit gate with duplicate targets");
        if (u.dim != 4) throw std::invalid_argument("matrix size does not match target count");
        ops.apply_2q(state.amp.data(), u.m.data(), wire_bit(gate.targets[0]),
                     wire_bit(gate.targets[1]));
    }
    const double n = state.norm_sq();
    if (std::abs(n - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "state norm drifted to " << n << " after gate " << gate_kind_name(gate.kind);
        throw std::runtime_error(msg.str());
    }
}

StateVector apply(const StateVector& state, const GateOp& gate) {
    StateVector out = state;
    apply_in_place(out, gate);
    return out;
}

namespace {

Distribution probabilities_of(const StateVector& state) {
    Distribution d;
    kernels::active_ops().probabilities(state.amp.data(), d.p.data());
    return d;
}

// One two-qubit Pauli branch: index 0..15 encodes (P_hi, P_lo) in base 4
// over {I, X, Y, Z}.
void apply_pauli_branch(StateVector& state, int pauli_index, Wire w_hi, Wire w_lo) {
    static const GateKind kPauli[4] = {GateKind::I, GateKind::X, GateKind::Y, GateKind::Z};
    const int hi = pauli_index >> 2, lo = pauli_index & 3;
    if (hi != 0) apply_in_place(state, GateOp::one_q(kPauli[hi], w_hi));
    if (lo != 0) apply_in_place(state, GateOp::one_q(kPauli[lo], w_lo));
}

void accumulate_branches(const Circuit& circuit, size_t gate_index, StateVector state,
                         double weight, double depol, Distribution& out) {
    for (size_t g = gate_index; g < circuit.gates.size(); ++g) {
        const GateOp& op = circuit.gates[g];
        apply_in_place(state, op);
        if (op.targets.size() == 2 && depol > 0.0) {
            const double keep = 1.0 - depol + depol / 16.0;
            const double each = depol / 16.0;
            for (int pauli = 1; pauli < 16; ++pauli) {
                StateVector branch = state;
                apply_pauli_branch(branch, pauli, op.targets[0], op.targets[1]);
                accumulate_branches(circuit, g + 1, branch, weight * each, depol, out);
            }
            weight *= keep;
        }
    }
    const Distribution d = probabilities_of(state);
    for (int i = 0; i < 16; ++i) out.p[i] += weight * d.p[i];
}

void apply_readout_flips(Distribution& d, const NoiseModel& noise) {
    for (int w = 0; w < kNumWires; ++w) {
        const double p01 = noise.readout_flip[static_cast<size_t>(w)][0];
        const double p10 = noise.readout_flip[static_cast<size_t>(w)][1];
        if (p01 == 0.0 && p10 == 0.0) continue;
        const int mask = 1 << wire_bit(static_cast<Wire>(w));
        std::array<double, 16> next{};
        for (int s = 0; s < 16; ++s) {
            const bool bit = s & mask;
            const double stay = bit ? 1.0 - p10 : 1.0 - p01;
            const double flip = bit ? p10 : p01;
            next[static_cast<size_t>(s)] += stay * d.p[static_cast<size_t>(s)];
            next[static_cast<size_t>(s ^ mask)] += flip * d.p[static_cast<size_t>(s)];
        }
        d.p = next;
    }
}

}  // namespace

Distribution exact_distribution(const Circuit& circuit) {
    StateVector state = StateVector::zero_state();
    for (const GateOp& op : circuit.gates) apply_in_place(state, op);
    Distribution d = probabilities_of(state);
    d.validate();
    return d;
}

Distribution noisy_distribution(const Circuit& circuit, const NoiseModel& noise) {
    noise.validate();
    if (noise.is_zero()) return exact_distribution(circuit);
    Distribution d;
    accumulate_branches(circuit, 0, StateVector::zero_state(), 1.0,
                        noise.two_qubit_depolarizing, d);
    apply_readout_flips(d, noise);
    d.validate(1e-9);
    return d;
}

CountsRecord sample(const Circuit& circuit, uint64_t shots, uint64_t seed,
                    const NoiseModel& noise) {
    if (shots == 0) throw std::invalid_argument("sample: shots must be >= 1");
    const Distribution d = noisy_distribution(circuit, noise);

    std::array<double, 16> cdf{};
    double acc = 0.0;
    for (int i = 0; i < 16; ++i) {
        acc += d.p[static_cast<size_t>(i)];
        cdf[static_cast<size_t>(i)] = acc;
    }
    cdf[15] = 1.0;

    Philox rng(seed, circuit.fingerprint());
    CountsRecord rec;
    rec.shots = shots;
    for (uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto idx = static_cast<size_t>(std::min<long>(it - cdf.begin(), 15));
        ++rec.counts[idx];
    }
    return rec;
}

}  // namespace rcq

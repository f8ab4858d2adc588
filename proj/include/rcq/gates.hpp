#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcq/complexmat.hpp"
#include "rcq/statevector.hpp"

namespace rcq {

// Two-qubit kinds carry an orientation: Up is Down conjugated by SWAP
// (<a'b'|G_up|ab> = <b'a'|G_down|ba>).
enum class GateKind : uint8_t {
    I,
    X,
    Y,
    Z,
    XHalf,   // (1 - iX)/sqrt(2)
    ZTheta,  // diag(e^{-i theta/2}, e^{i theta/2})
    ZPlus,
    ZMinus,
    YPlus,
    YMinus,
    H,
    CnotDown,
    CnotUp,
    EcrDown,
    EcrUp,
    CrPlus,   // exp(-i pi (Z x X)/8)
    CrMinus,  // exp(+i pi (Z x X)/8)
    Custom,
};

const char* gate_kind_name(GateKind k);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
int gate_arity(GateKind k);

struct GateOp {
    GateKind kind = GateKind::I;
    double theta = 0.0;  // ZTheta only
    std::vector<Wire> targets;
    std::shared_ptr<const UMatrix> custom;  // Custom only; validated unitary

    static GateOp one_q(GateKind k, Wire w) { return GateOp{k, 0.0, {w}, nullptr}; }
    static GateOp z_theta(double theta, Wire w) { return GateOp{GateKind::ZTheta, theta, {w}, nullptr}; }
    static GateOp two_q(GateKind k, Wire w1, Wire w2) { return GateOp{k, 0.0, {w1, w2}, nullptr}; }
    // Throws if the matrix is not unitary within 1e-12 (message carries the deviation).
    static GateOp custom_gate(const UMatrix& u, std::vector<Wire> targets);
};

// Exact matrix for a gate kind; theta is only read for ZTheta.
UMatrix gate_matrix(GateKind k, double theta = 0.0);
UMatrix gate_matrix(const GateOp& op);

// Ordered in time: front() is applied first, so the operator product runs
// right-to-left over the list.
using GateSequence = std::vector<GateOp>;

// Operator product of a sequence over an explicit wire ordering (first wire =
// most significant local bit). Throws if a gate touches a wire outside `wires`.
UMatrix sequence_matrix(const GateSequence& seq, std::span<const Wire> wires);
// Convenience for sequences living on one or two implicit wires.
UMatrix sequence_matrix_1q(const GateSequence& seq);
UMatrix sequence_matrix_2q(const GateSequence& seq);

struct EquivalenceReport {
    bool equivalent = false;
    Amplitude phase = 1.0;  // aligning factor, |phase| = 1
    double deviation = 0.0; // Frobenius distance after phase alignment
};

EquivalenceReport unitary_equiv(const UMatrix& a, const UMatrix& b, double tol = 1e-12);
EquivalenceReport unitary_equiv(const GateSequence& a, const GateSequence& b, double tol = 1e-12);

// The six B-setting pre-rotations, keyed by permutation digits "123".."321",
// as time-ordered single-qubit sequences. The identity setting is the empty
// sequence.
GateSequence g_eta(std::string_view eta_digits);

// Native basis accepted by the transpiler: X, XHalf, ZTheta (ZPlus/ZMinus are
// fixed-angle aliases) and EcrDown.
bool is_native_kind(GateKind k);

// Time-ordered native realization of one gate. Supported: CnotDown, CnotUp,
// EcrUp, H, YPlus, YMinus (plus the trivially rewritable I, Z, Y). Two-qubit
// results use local slots 0 -> targets[0], 1 -> targets[1] mapped by the
// caller. Throws on unsupported kinds.
GateSequence decompose(GateKind k);

}  // namespace rcq

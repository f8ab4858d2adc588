#include "rcq/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rcq {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;
const Amplitude kI{0.0, 1.0};

UMatrix mat2(Amplitude a, Amplitude b, Amplitude c, Amplitude d) {
    UMatrix u(2);
    u.at(0, 0) = a;
    u.at(0, 1) = b;
    u.at(1, 0) = c;
    u.at(1, 1) = d;
    return u;
}

UMatrix swap_matrix() {
    UMatrix s(4);
    s.at(0, 0) = s.at(1, 2) = s.at(2, 1) = s.at(3, 3) = 1.0;
    return s;
}

struct KindInfo {
    GateKind kind;
    const char* name;
    int arity;
};

constexpr KindInfo kKinds[] = {
    {GateKind::I, "I", 1},          {GateKind::X, "X", 1},
    {GateKind::Y, "Y", 1},          {GateKind::Z, "Z", 1},
    {GateKind::XHalf, "X+", 1},     {GateKind::ZTheta, "Ztheta", 1},
    {GateKind::ZPlus, "Z+", 1},     {GateKind::ZMinus, "Z-", 1},
    {GateKind::YPlus, "Y+", 1},     {GateKind::YMinus, "Y-", 1},
    {GateKind::H, "H", 1},          {GateKind::CnotDown, "CNOTv", 2},
    {GateKind::CnotUp, "CNOT^", 2}, {GateKind::EcrDown, "ECRv", 2},
    {GateKind::EcrUp, "ECR^", 2},   {GateKind::CrPlus, "CR+", 2},
    {GateKind::CrMinus, "CR-", 2},  {GateKind::Custom, "custom", 0},
};

}  // namespace

const char* gate_kind_name(GateKind k) {
    for (const auto& info : kKinds)
        if (info.kind == k) return info.name;
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const auto& info : kKinds)
        if (name == info.name) return info.kind;
    return std::nullopt;
}

int gate_arity(GateKind k) {
    for (const auto& info : kKinds)
        if (info.kind == k) return info.arity;
    throw std::invalid_argument("unknown gate kind");
}

GateOp GateOp::custom_gate(const UMatrix& u, std::vector<Wire> targets) {
    const double dev = u.unitarity_deviation();
    if (dev > 1e-12) {
        std::ostringstream msg;
        msg << "custom gate is not unitary: deviation " << dev;
        throw std::invalid_argument(msg.str());
    }
    const size_t want = u.dim == 2 ? 1 : 2;
    if (targets.size() != want)
        throw std::invalid_argument("custom gate: target count does not match matrix size");
    GateOp op;
    op.kind = GateKind::Custom;
    op.targets = std::move(targets);
    op.custom = std::make_shared<UMatrix>(u);
    return op;
}

UMatrix gate_matrix(GateKind k, double theta) {
    switch (k) {
        case GateKind::I:
            return UMatrix::identity(2);
        case GateKind::X:
            return mat2(0, 1, 1, 0);
        case GateKind::Y:
            return mat2(0, -kI, kI, 0);
        case GateKind::Z:
            return mat2(1, 0, 0, -1);
        case GateKind::XHalf:
            return mat2(kInvSqrt2, -kI * kInvSqrt2, -kI * kInvSqrt2, kInvSqrt2);
        case GateKind::ZTheta: {
            if (!std::isfinite(theta)) throw std::invalid_argument("Ztheta: angle must be finite");
            return mat2(std::exp(-kI * (theta / 2.0)), 0, 0, std::exp(kI * (theta / 2.0)));
        }
        case GateKind::ZPlus:
            return gate_matrix(GateKind::ZTheta, std::numbers::pi / 2);
        case GateKind::ZMinus:
            return gate_matrix(GateKind::ZTheta, -std::numbers::pi / 2);
        case GateKind::YPlus:
            return mat2(kInvSqrt2, -kInvSqrt2, kInvSqrt2, kInvSqrt2);
        case GateKind::YMinus:
            return mat2(kInvSqrt2, kInvSqrt2, -kInvSqrt2, kInvSqrt2);
        case GateKind::H:
            return mat2(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
        case GateKind::CnotDown: {
            UMatrix u(4);
            u.at(0, 0) = u.at(1, 1) = u.at(2, 3) = u.at(3, 2) = 1.0;
            return u;
        }
        case GateKind::CnotUp: {
            UMatrix u(4);
            u.at(0, 0) = u.at(1, 3) = u.at(2, 2) = u.at(3, 1) = 1.0;
            return u;
        }
        case GateKind::EcrDown: {
            UMatrix u(4);
            u.at(0, 2) = kInvSqrt2;
            u.at(0, 3) = kI * kInvSqrt2;
            u.at(1, 2) = kI * kInvSqrt2;
            u.at(1, 3) = kInvSqrt2;
            u.at(2, 0) = kInvSqrt2;
            u.at(2, 1) = -kI * kInvSqrt2;
            u.at(3, 0) = -kI * kInvSqrt2;
            u.at(3, 1) = kInvSqrt2;
            return u;
        }
        case GateKind::EcrUp: {
            // ((I x X) - (X x Y))/sqrt(2), stated independently of EcrDown so
            // the orientation identity stays a real cross-check.
            UMatrix u(4);
            u.at(0, 1) = kInvSqrt2;
            u.at(0, 3) = kI * kInvSqrt2;
            u.at(1, 0) = kInvSqrt2;
            u.at(1, 2) = -kI * kInvSqrt2;
            u.at(2, 1) = kI * kInvSqrt2;
            u.at(2, 3) = kInvSqrt2;
            u.at(3, 0) = -kI * kInvSqrt2;
            u.at(3, 2) = kInvSqrt2;
            return u;
        }
        case GateKind::CrPlus:
        case GateKind::CrMinus: {
            // exp(-i alpha Z x X) with alpha = +-pi/8.
            const double alpha = (k == GateKind::CrPlus ? 1.0 : -1.0) * std::numbers::pi / 8;
            const Amplitude c = std::cos(alpha);
            const Amplitude is = kI * std::sin(alpha);
            UMatrix u(4);
            u.at(0, 0) = u.at(1, 1) = u.at(2, 2) = u.at(3, 3) = c;
            u.at(0, 1) = u.at(1, 0) = -is;
            u.at(2, 3) = u.at(3, 2) = is;
            return u;
        }
        case GateKind::Custom:
            throw std::invalid_argument("custom gates carry their own matrix");
    }
    throw std::invalid_argument("unknown gate kind");
}

UMatrix gate_matrix(const GateOp& op) {
    if (op.kind == GateKind::Custom) {
        if (!op.custom) throw std::invalid_argument("custom gate without matrix");
        return *op.custom;
    }
    return gate_matrix(op.kind, op.theta);
}

namespace {

// Embed `g` acting on local bit positions `pos` (0 = most significant) into
// an n-wire operator.
UMatrix embed(const UMatrix& g, const std::vector<int>& pos, int n) {
    const int dim = 1 << n;
    UMatrix out(dim);
    const int gbits = g.dim == 2 ? 1 : 2;
    for (int row = 0; row < dim; ++row) {
        for (int col = 0; col < dim; ++col) {
            bool rest_equal = true;
            for (int b = 0; b < n; ++b) {
                if (std::find(pos.begin(), pos.end(), b) != pos.end()) continue;
                const int shift = n - 1 - b;
                if (((row >> shift) & 1) != ((col >> shift) & 1)) {
                    rest_equal = false;
                    break;
                }
            }
            if (!rest_equal) continue;
            int grow = 0, gcol = 0;
            for (int k = 0; k < gbits; ++k) {
                const int shift = n - 1 - pos[static_cast<size_t>(k)];
                grow = (grow << 1) | ((row >> shift) & 1);
                gcol = (gcol << 1) | ((col >> shift) & 1);
            }
            out.at(row, col) = g.at(grow, gcol);
        }
    }
    return out;
}

}  // namespace

UMatrix sequence_matrix(const GateSequence& seq, std::span<const Wire> wires) {
    const int n = static_cast<int>(wires.size());
    if (n < 1 || n > 2) throw std::invalid_argument("sequence_matrix: 1 or 2 wires");
    UMatrix product = UMatrix::identity(1 << n);
    for (const GateOp& op : seq) {
        std::vector<int> pos;
        for (Wire t : op.targets) {
            auto it = std::find(wires.begin(), wires.end(), t);
            if (it == wires.end())
                throw std::invalid_argument("sequence_matrix: gate target outside wire set");
            pos.push_back(static_cast<int>(it - wires.begin()));
        }
        if (pos.size() == 2 && pos[0] == pos[1])
            throw std::invalid_argument("two-qubit gate with duplicate targets");
        product = embed(gate_matrix(op), pos, n) * product;
    }
    return product;
}

namespace {

std::vector<Wire> distinct_wires(const GateSequence& seq) {
    std::vector<Wire> ws;
    for (const GateOp& op : seq)
        for (Wire t : op.targets)
            if (std::find(ws.begin(), ws.end(), t) == ws.end()) ws.push_back(t);
    std::sort(ws.begin(), ws.end());
    return ws;
}

}  // namespace

UMatrix sequence_matrix_1q(const GateSequence& seq) {
    std::vector<Wire> ws = distinct_wires(seq);
    if (ws.empty()) ws.push_back(Wire::A);
    if (ws.size() != 1) throw std::invalid_argument("sequence is not single-qubit");
    return sequence_matrix(seq, ws);
}

UMatrix sequence_matrix_2q(const GateSequence& seq) {
    std::vector<Wire> ws = distinct_wires(seq);
    if (ws.size() > 2) throw std::invalid_argument("sequence is not two-qubit");
    while (ws.size() < 2) {
        for (Wire cand : {Wire::A, Wire::P}) {
            if (std::find(ws.begin(), ws.end(), cand) == ws.end()) {
                ws.push_back(cand);
                break;
            }
        }
    }
    std::sort(ws.begin(), ws.end());
    return sequence_matrix(seq, ws);
}

EquivalenceReport unitary_equiv(const UMatrix& a, const UMatrix& b, double tol) {
    if (a.dim != b.dim) throw std::invalid_argument("unitary_equiv: dimension mismatch");
    EquivalenceReport rep;
    rep.phase = aligning_phase(a, b);
    rep.deviation = (a - b.scaled(rep.phase)).frobenius_norm();
    rep.equivalent = rep.deviation <= tol;
    return rep;
}

EquivalenceReport unitary_equiv(const GateSequence& a, const GateSequence& b, double tol) {
    const size_t na = std::max<size_t>(distinct_wires(a).size(), 1);
    const size_t nb = std::max<size_t>(distinct_wires(b).size(), 1);
    if (na != nb) throw std::invalid_argument("unitary_equiv: dimension mismatch");
    if (na == 1) return unitary_equiv(sequence_matrix_1q(a), sequence_matrix_1q(b), tol);
    return unitary_equiv(sequence_matrix_2q(a), sequence_matrix_2q(b), tol);
}

GateSequence g_eta(std::string_view eta_digits) {
    const Wire p = Wire::P;
    auto g = [&](std::initializer_list<GateKind> kinds) {
        GateSequence seq;
        for (GateKind k : kinds) seq.push_back(GateOp::one_q(k, p));
        return seq;
    };
    if (eta_digits == "123") return {};
    if (eta_digits == "231") return g({GateKind::XHalf, GateKind::ZPlus});
    if (eta_digits == "312") return g({GateKind::ZPlus, GateKind::XHalf, GateKind::Z});
    if (eta_digits == "132") return g({GateKind::ZPlus});
    if (eta_digits == "213") return g({GateKind::XHalf});
    if (eta_digits == "321") return g({GateKind::ZMinus, GateKind::XHalf, GateKind::ZPlus});
    throw std::invalid_argument("g_eta: not a permutation of 123");
}

bool is_native_kind(GateKind k) {
    switch (k) {
        case GateKind::X:
        case GateKind::XHalf:
        case GateKind::ZTheta:
        case GateKind::ZPlus:
        case GateKind::ZMinus:
        case GateKind::EcrDown:
            return true;
        default:
            return false;
    }
}

GateSequence decompose(GateKind k) {
    const Wire s0 = Wire::A, s1 = Wire::P;
    auto one = [](GateKind g, Wire w) { return GateOp::one_q(g, w); };
    auto h_on = [&](Wire w) {
        return GateSequence{one(GateKind::ZPlus, w), one(GateKind::XHalf, w),
                            one(GateKind::ZPlus, w)};
    };
    auto append = [](GateSequence& seq, const GateSequence& extra) {
        seq.insert(seq.end(), extra.begin(), extra.end());
    };
    switch (k) {
        case GateKind::I:
            return {};
        case GateKind::Z:
            return {GateOp::z_theta(std::numbers::pi, s0)};
        case GateKind::Y:
            return {one(GateKind::X, s0), GateOp::z_theta(std::numbers::pi, s0)};
        case GateKind::H:
            return h_on(s0);
        case GateKind::YPlus:
            return {one(GateKind::ZMinus, s0), one(GateKind::XHalf, s0), one(GateKind::ZPlus, s0)};
        case GateKind::YMinus:
            return {one(GateKind::ZPlus, s0), one(GateKind::XHalf, s0), one(GateKind::ZMinus, s0)};
        case GateKind::CnotDown:
            return {one(GateKind::X, s0), one(GateKind::XHalf, s1),
                    GateOp::two_q(GateKind::EcrDown, s0, s1), one(GateKind::ZPlus, s0)};
        case GateKind::CnotUp: {
            GateSequence seq{one(GateKind::ZMinus, s0)};
            append(seq, h_on(s1));
            seq.push_back(one(GateKind::XHalf, s0));
            seq.push_back(one(GateKind::XHalf, s1));
            seq.push_back(GateOp::two_q(GateKind::EcrDown, s0, s1));
            append(seq, h_on(s0));
            append(seq, h_on(s1));
            return seq;
        }
        case GateKind::EcrUp: {
            // (HH) ECRv (Y+ Y-) with the Y half-turns spelled natively.
            GateSequence seq{one(GateKind::ZMinus, s0), one(GateKind::XHalf, s0),
                             one(GateKind::ZPlus, s0),  one(GateKind::ZPlus, s1),
                             one(GateKind::XHalf, s1),  one(GateKind::ZMinus, s1)};
            seq.push_back(GateOp::two_q(GateKind::EcrDown, s0, s1));
            append(seq, h_on(s0));
            append(seq, h_on(s1));
            return seq;
        }
        default:
            throw std::invalid_argument(std::string("no native decomposition for gate kind ") +
                                        gate_kind_name(k));
    }
}

}  // namespace rcq

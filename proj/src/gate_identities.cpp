#include "rcq/gate_identities.hpp"

#include <cmath>

namespace rcq {

namespace {

const Amplitude kI{0.0, 1.0};

UMatrix pauli(char p) {
    switch (p) {
        case 'X': return gate_matrix(GateKind::X);
        case 'Y': return gate_matrix(GateKind::Y);
        case 'Z': return gate_matrix(GateKind::Z);
        default: return gate_matrix(GateKind::I);
    }
}

}  // namespace

std::vector<GateIdentityCheck> verify_gate_identities(bool inject_cr_sign_error) {
    std::vector<GateIdentityCheck> checks;
    auto mat = [](GateKind k) { return gate_matrix(k); };
    auto add = [&](const std::string& name, const UMatrix& got, const UMatrix& want) {
        const double dev = unitary_equiv(got, want).deviation;
        checks.push_back({name, dev, dev < 1e-12});
    };

    UMatrix swap(4);
    swap.at(0, 0) = swap.at(1, 2) = swap.at(2, 1) = swap.at(3, 3) = 1.0;
    const UMatrix hh = kron(mat(GateKind::H), mat(GateKind::H));
    const UMatrix cr_first = inject_cr_sign_error ? mat(GateKind::CrPlus) : mat(GateKind::CrMinus);

    add("ECRv = CR-.(X I).CR+",
        cr_first * kron(mat(GateKind::X), mat(GateKind::I)) * mat(GateKind::CrPlus),
        mat(GateKind::EcrDown));
    add("ECRv.ECRv = II", mat(GateKind::EcrDown) * mat(GateKind::EcrDown), UMatrix::identity(4));
    add("ECR^ = (HH).ECRv.(Y+ Y-)",
        hh * mat(GateKind::EcrDown) * kron(mat(GateKind::YPlus), mat(GateKind::YMinus)),
        mat(GateKind::EcrUp));
    add("ECR^ = SWAP.ECRv.SWAP", swap * mat(GateKind::EcrDown) * swap, mat(GateKind::EcrUp));
    add("CNOTv = (Z+ I).ECRv.(X X+)",
        kron(mat(GateKind::ZPlus), mat(GateKind::I)) * mat(GateKind::EcrDown) *
            kron(mat(GateKind::X), mat(GateKind::XHalf)),
        mat(GateKind::CnotDown));
    add("CNOT^ = (HH).CNOTv.(HH)", hh * mat(GateKind::CnotDown) * hh, mat(GateKind::CnotUp));
    add("CNOT^ = (HH).ECRv.(X+ X+).(Z- H)",
        hh * mat(GateKind::EcrDown) * kron(mat(GateKind::XHalf), mat(GateKind::XHalf)) *
            kron(mat(GateKind::ZMinus), mat(GateKind::H)),
        mat(GateKind::CnotUp));
    add("CNOT^ = SWAP.CNOTv.SWAP", swap * mat(GateKind::CnotDown) * swap, mat(GateKind::CnotUp));
    add("H = Z+.X+.Z+", mat(GateKind::ZPlus) * mat(GateKind::XHalf) * mat(GateKind::ZPlus),
        mat(GateKind::H));
    add("Y+ = Z+.X+.Z-", mat(GateKind::ZPlus) * mat(GateKind::XHalf) * mat(GateKind::ZMinus),
        mat(GateKind::YPlus));
    add("Y- = Z-.X+.Z+", mat(GateKind::ZMinus) * mat(GateKind::XHalf) * mat(GateKind::ZPlus),
        mat(GateKind::YMinus));
    add("Y+ = H.Z", mat(GateKind::H) * mat(GateKind::Z), mat(GateKind::YPlus));
    add("Y- = Z.H", mat(GateKind::Z) * mat(GateKind::H), mat(GateKind::YMinus));

    const double r = 1.0 / std::sqrt(2.0);
    auto closed = [&](std::string_view d) -> UMatrix {
        if (d == "123") return UMatrix::identity(2);
        if (d == "231")
            return (pauli('I') - (pauli('Z') + pauli('X') + pauli('Y')).scaled(kI)).scaled(0.5);
        if (d == "312")
            return (pauli('I') + (pauli('X') + pauli('Y') + pauli('Z')).scaled(kI)).scaled(0.5);
        if (d == "132") return (pauli('I') - pauli('Z').scaled(kI)).scaled(r);
        if (d == "213") return (pauli('I') - pauli('X').scaled(kI)).scaled(r);
        return (pauli('I') - pauli('Y').scaled(kI)).scaled(r);
    };
    for (const char* d : {"123", "231", "312", "132", "213", "321"})
        add(std::string("G_") + d + " closed form", sequence_matrix_1q(g_eta(d)), closed(d));

    // Same closed forms with the axis signs flipped (X,Y,Z) -> (X,-Y,-Z).
    const UMatrix Xf = pauli('X');
    const UMatrix Yf = pauli('Y').scaled(-1.0);
    const UMatrix Zf = pauli('Z').scaled(-1.0);
    auto flipped = [&](std::string_view d) -> UMatrix {
        if (d == "231")
            return (Zf * (UMatrix::identity(2) - (Zf + Yf + Xf).scaled(kI))).scaled(0.5);
        if (d == "312")
            return (Yf * (UMatrix::identity(2) + (Xf + Yf + Zf).scaled(kI))).scaled(0.5);
        if (d == "132") return (Yf * (Yf - Xf)).scaled(r);
        if (d == "213") return (Yf * (Yf - Zf)).scaled(r);
        return (Xf * (Xf - Zf)).scaled(r);
    };
    for (const char* d : {"231", "312", "132", "213", "321"})
        add(std::string("G_") + d + " flipped-axes form", sequence_matrix_1q(g_eta(d)), flipped(d));

    for (GateKind k : {GateKind::CnotDown, GateKind::CnotUp, GateKind::EcrUp, GateKind::H,
                       GateKind::YPlus, GateKind::YMinus}) {
        const GateSequence seq = decompose(k);
        const UMatrix want = gate_matrix(k);
        const UMatrix got = want.dim == 2 ? sequence_matrix_1q(seq) : sequence_matrix_2q(seq);
        add(std::string("native rewrite of ") + gate_kind_name(k), got, want);
    }
    return checks;
}

}  // namespace rcq

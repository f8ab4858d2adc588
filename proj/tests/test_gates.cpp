#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "rcq/gates.hpp"

using namespace rcq;

namespace {

const Amplitude kI{0.0, 1.0};

UMatrix pauli(char p) {
    UMatrix u(2);
    switch (p) {
        case 'I': u.at(0, 0) = u.at(1, 1) = 1.0; break;
        case 'X': u.at(0, 1) = u.at(1, 0) = 1.0; break;
        case 'Y': u.at(0, 1) = -kI; u.at(1, 0) = kI; break;
        case 'Z': u.at(0, 0) = 1.0; u.at(1, 1) = -1.0; break;
    }
    return u;
}

UMatrix kron2(char a, char b) { return kron(pauli(a), pauli(b)); }

GateSequence seq1(std::initializer_list<GateKind> kinds, Wire w = Wire::A) {
    GateSequence s;
    for (GateKind k : kinds) s.push_back(GateOp::one_q(k, w));
    return s;
}

}  // namespace

TEST_CASE("single-qubit gate matrices match their defining forms") {
    const double r = 1.0 / std::sqrt(2.0);

    const UMatrix ym = gate_matrix(GateKind::YMinus);
    CHECK(std::abs(ym.at(0, 0) - r) < 1e-15);
    CHECK(std::abs(ym.at(0, 1) - r) < 1e-15);
    CHECK(std::abs(ym.at(1, 0) + r) < 1e-15);
    CHECK(std::abs(ym.at(1, 1) - r) < 1e-15);

    // Zero-angle rotation is the identity.
    const UMatrix z0 = gate_matrix(GateKind::ZTheta, 0.0);
    CHECK(unitary_equiv(z0, UMatrix::identity(2)).equivalent);

    // V_+ = (1 - iV)/sqrt(2) for X and Z.
    const UMatrix xp = gate_matrix(GateKind::XHalf);
    const UMatrix xp_ref = (pauli('I').scaled(r)) - (pauli('X').scaled(kI * r));
    CHECK((xp - xp_ref).frobenius_norm() < 1e-15);
    const UMatrix zp = gate_matrix(GateKind::ZPlus);
    const UMatrix zp_ref = (pauli('I').scaled(r)) - (pauli('Z').scaled(kI * r));
    CHECK((zp - zp_ref).frobenius_norm() < 1e-15);
}

TEST_CASE("ECRv matrix has the stated block form") {
    const UMatrix ecr = gate_matrix(GateKind::EcrDown);
    const double r = 1.0 / std::sqrt(2.0);
    const Amplitude expect[16] = {0, 0, r,       kI * r, 0,      0,      kI * r, r,
                                  r, -kI * r, 0, 0,      -kI * r, r,     0,      0};
    for (int i = 0; i < 16; ++i) CHECK(std::abs(ecr.m[static_cast<size_t>(i)] - expect[i]) < 1e-15);
    // ((X I) - (Y X))/sqrt(2) agrees entrywise.
    const UMatrix form = (kron2('X', 'I') - kron2('Y', 'X')).scaled(r);
    CHECK((ecr - form).frobenius_norm() < 1e-15);
}

TEST_CASE("every gate kind is unitary") {
    for (GateKind k : {GateKind::I, GateKind::X, GateKind::Y, GateKind::Z, GateKind::XHalf,
                       GateKind::ZPlus, GateKind::ZMinus, GateKind::YPlus, GateKind::YMinus,
                       GateKind::H, GateKind::CnotDown, GateKind::CnotUp, GateKind::EcrDown,
                       GateKind::EcrUp, GateKind::CrPlus, GateKind::CrMinus}) {
        CAPTURE(gate_kind_name(k));
        CHECK(gate_matrix(k).unitarity_deviation() < 1e-12);
    }
    for (double theta : {0.3, -1.7, 3.9}) CHECK(gate_matrix(GateKind::ZTheta, theta).unitarity_deviation() < 1e-12);
}

TEST_CASE("orientation: up variants are swap conjugates of down variants") {
    UMatrix swap(4);
    swap.at(0, 0) = swap.at(1, 2) = swap.at(2, 1) = swap.at(3, 3) = 1.0;
    for (auto [down, up] : {std::pair{GateKind::CnotDown, GateKind::CnotUp},
                            std::pair{GateKind::EcrDown, GateKind::EcrUp}}) {
        const UMatrix lhs = gate_matrix(up);
        const UMatrix rhs = swap * gate_matrix(down) * swap;
        CHECK((lhs - rhs).frobenius_norm() < 1e-12);
    }
}

TEST_CASE("non-unitary custom gates are rejected with the deviation") {
    UMatrix bad(2);
    bad.at(0, 0) = 1.0;
    bad.at(1, 1) = 2.0;
    CHECK_THROWS_WITH_AS(GateOp::custom_gate(bad, {Wire::A}),
                         doctest::Contains("deviation"), std::invalid_argument);
}

TEST_CASE("ECR identities") {
    const UMatrix ecr = gate_matrix(GateKind::EcrDown);

    SUBCASE("CR- (X I) CR+ composition") {
        const UMatrix prod =
            gate_matrix(GateKind::CrMinus) * kron2('X', 'I') * gate_matrix(GateKind::CrPlus);
        CHECK(unitary_equiv(prod, ecr).deviation < 1e-12);
    }
    SUBCASE("self inverse") {
        CHECK(unitary_equiv(ecr * ecr, UMatrix::identity(4)).deviation < 1e-12);
    }
    SUBCASE("ECR^ = (HH) ECRv (Y+ Y-)") {
        const UMatrix lhs = gate_matrix(GateKind::EcrUp);
        const UMatrix rhs = kron(gate_matrix(GateKind::H), gate_matrix(GateKind::H)) * ecr *
                            kron(gate_matrix(GateKind::YPlus), gate_matrix(GateKind::YMinus));
        CHECK(unitary_equiv(lhs, rhs).deviation < 1e-12);
    }
}

TEST_CASE("CNOT decompositions through ECRv") {
    const UMatrix ecr = gate_matrix(GateKind::EcrDown);
    const UMatrix h = gate_matrix(GateKind::H);

    const UMatrix cnot_down_ref = kron(gate_matrix(GateKind::ZPlus), pauli('I')) * ecr *
                                  kron(pauli('X'), gate_matrix(GateKind::XHalf));
    CHECK(unitary_equiv(cnot_down_ref, gate_matrix(GateKind::CnotDown)).deviation < 1e-12);

    const UMatrix hh = kron(h, h);
    CHECK(unitary_equiv(hh * gate_matrix(GateKind::CnotDown) * hh, gate_matrix(GateKind::CnotUp))
              .deviation < 1e-12);

    const UMatrix cnot_up_ref = hh * ecr *
                                kron(gate_matrix(GateKind::XHalf), gate_matrix(GateKind::XHalf)) *
                                kron(gate_matrix(GateKind::ZMinus), h);
    CHECK(unitary_equiv(cnot_up_ref, gate_matrix(GateKind::CnotUp)).deviation < 1e-12);
}

TEST_CASE("half-turn identities") {
    const UMatrix h = gate_matrix(GateKind::H);
    // H = Z+ X+ Z+ up to phase, and equals (Z + X)/sqrt(2) exactly.
    CHECK(unitary_equiv(sequence_matrix_1q(seq1({GateKind::ZPlus, GateKind::XHalf, GateKind::ZPlus})),
                        h).deviation < 1e-12);
    CHECK((h - (pauli('Z') + pauli('X')).scaled(1.0 / std::sqrt(2.0))).frobenius_norm() < 1e-12);
    // Z+- X+ Z-+ = Y+- exactly, plus Y+ = HZ and Y- = ZH.
    CHECK((sequence_matrix_1q(seq1({GateKind::ZMinus, GateKind::XHalf, GateKind::ZPlus})) -
           gate_matrix(GateKind::YPlus)).frobenius_norm() < 1e-12);
    CHECK((sequence_matrix_1q(seq1({GateKind::ZPlus, GateKind::XHalf, GateKind::ZMinus})) -
           gate_matrix(GateKind::YMinus)).frobenius_norm() < 1e-12);
    CHECK((h * pauli('Z') - gate_matrix(GateKind::YPlus)).frobenius_norm() < 1e-12);
    CHECK((pauli('Z') * h - gate_matrix(GateKind::YMinus)).frobenius_norm() < 1e-12);
}

TEST_CASE("pre-rotation sequences hit their closed forms up to phase") {
    auto closed = [&](const char* digits) -> UMatrix {
        const double r = 1.0 / std::sqrt(2.0);
        const std::string_view d(digits);
        if (d == "123") return UMatrix::identity(2);
        if (d == "231")  // (1 - iZ - iX - iY)/2
            return (pauli('I') - (pauli('Z') + pauli('X') + pauli('Y')).scaled(kI)).scaled(0.5);
        if (d == "312")  // (1 + iX + iY + iZ)/2
            return (pauli('I') + (pauli('X') + pauli('Y') + pauli('Z')).scaled(kI)).scaled(0.5);
        if (d == "132") return (pauli('I') - pauli('Z').scaled(kI)).scaled(r);
        if (d == "213") return (pauli('I') - pauli('X').scaled(kI)).scaled(r);
        return (pauli('I') - pauli('Y').scaled(kI)).scaled(r);  // 321
    };
    for (const char* digits : {"123", "231", "312", "132", "213", "321"}) {
        CAPTURE(digits);
        const auto rep = unitary_equiv(sequence_matrix_1q(g_eta(digits)), closed(digits));
        CHECK(rep.equivalent);
        CHECK(rep.deviation < 1e-12);
    }
    CHECK(g_eta("123").empty());
    CHECK_THROWS_AS(g_eta("112"), std::invalid_argument);
}

TEST_CASE("pre-rotations also satisfy the sign-flipped algebra forms") {
    // With X' = X, Y' = -Y, Z' = -Z the closed forms pick up a leading factor.
    auto flipped = [&](const char* digits) -> UMatrix {
        auto Xp = pauli('X');
        auto Yp = pauli('Y').scaled(-1.0);
        auto Zp = pauli('Z').scaled(-1.0);
        const double r = 1.0 / std::sqrt(2.0);
        std::string_view d(digits);
        if (d == "231") {
            UMatrix inner = pauli('I') - Zp.scaled(kI) - Yp.scaled(kI) - Xp.scaled(kI);
            return (Zp * inner).scaled(0.5);
        }
        if (d == "312") {
            UMatrix inner = pauli('I') - Xp.scaled(-kI) - Yp.scaled(-kI) - Zp.scaled(-kI);
            return (Yp * inner).scaled(0.5);
        }
        if (d == "132") return (Yp * (Yp - Xp)).scaled(r);
        if (d == "213") return (Yp * (Yp - Zp)).scaled(r);
        return (Xp * (Xp - Zp)).scaled(r);  // 321
    };
    for (const char* digits : {"231", "312", "132", "213", "321"}) {
        CAPTURE(digits);
        CHECK(unitary_equiv(sequence_matrix_1q(g_eta(digits)), flipped(digits)).deviation < 1e-12);
    }
}

TEST_CASE("unitary_equiv reports phase and deviation") {
    // Orthogonal Paulis: no aligning phase helps; Frobenius distance is 2.
    const auto rep = unitary_equiv(pauli('X'), pauli('Z'));
    CHECK_FALSE(rep.equivalent);
    CHECK(rep.deviation == doctest::Approx(2.0).epsilon(1e-12));

    // A pure global phase is equivalent with the phase recovered.
    const Amplitude phase = std::exp(kI * 0.7);
    const auto rep2 = unitary_equiv(pauli('X').scaled(phase), pauli('X'));
    CHECK(rep2.equivalent);
    CHECK(std::abs(rep2.phase - phase) < 1e-12);

    CHECK_THROWS_AS(unitary_equiv(pauli('X'), gate_matrix(GateKind::CnotDown)),
                    std::invalid_argument);
}

TEST_CASE("decompose emits native-only sequences equal to their targets") {
    for (GateKind k : {GateKind::CnotDown, GateKind::CnotUp, GateKind::EcrUp, GateKind::H,
                       GateKind::YPlus, GateKind::YMinus}) {
        CAPTURE(gate_kind_name(k));
        const GateSequence seq = decompose(k);
        for (const GateOp& op : seq) CHECK(is_native_kind(op.kind));
        const UMatrix want = gate_matrix(k);
        const UMatrix got = want.dim == 2 ? sequence_matrix_1q(seq) : sequence_matrix_2q(seq);
        CHECK(unitary_equiv(got, want).deviation < 1e-12);
    }
    CHECK_THROWS_AS(decompose(GateKind::CrPlus), std::invalid_argument);
}

TEST_CASE("sequence product order is time order") {
    // X then Z as a product is ZX = iY.
    const UMatrix prod = sequence_matrix_1q(seq1({GateKind::X, GateKind::Z}));
    CHECK(unitary_equiv(prod, pauli('Y')).equivalent);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rcq/gates.hpp"
#include "rcq/kernels.hpp"
#include "rcq/philox.hpp"
#include "rcq/statevector.hpp"

using namespace rcq;

namespace {

StateVector random_state(Philox& rng) {
    StateVector s;
    double n = 0.0;
    for (auto& a : s.amp) {
        a = {rng.next_gaussian(), rng.next_gaussian()};
        n += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(n);
    for (auto& a : s.amp) a *= inv;
    return s;
}

UMatrix random_unitary(int dim, Philox& rng) {
    UMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = {rng.next_gaussian(), rng.next_gaussian()};
    for (int r = 0; r < dim; ++r) {
        for (int prev = 0; prev < r; ++prev) {
            Amplitude ov = 0.0;
            for (int c = 0; c < dim; ++c) ov += std::conj(m.at(prev, c)) * m.at(r, c);
            for (int c = 0; c < dim; ++c) m.at(r, c) -= ov * m.at(prev, c);
        }
        double n = 0.0;
        for (int c = 0; c < dim; ++c) n += std::norm(m.at(r, c));
        const double inv = 1.0 / std::sqrt(n);
        for (int c = 0; c < dim; ++c) m.at(r, c) *= inv;
    }
    return m;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
    double m = 0.0;
    for (int i = 0; i < kDim; ++i) m = std::max(m, std::abs(a.amp[i] - b.amp[i]));
    return m;
}

}  // namespace

TEST_CASE("counter RNG reproduces the published test vectors") {
    // philox4x32-10 known-answer vectors.
    auto out = Philox::block({0, 0, 0, 0}, {0, 0});
    CHECK(out == std::array<uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});

    out = Philox::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                        {0xffffffffu, 0xffffffffu});
    CHECK(out == std::array<uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});

    out = Philox::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                        {0xa4093822u, 0x299f31d0u});
    CHECK(out == std::array<uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("RNG streams are independent and reproducible") {
    Philox a(42, 0), b(42, 0), c(42, 1);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    bool any_diff = false;
    Philox a2(42, 0);
    for (int i = 0; i < 100; ++i) any_diff |= (a2.next_u64() != c.next_u64());
    CHECK(any_diff);
    Philox d(7, 0);
    for (int i = 0; i < 1000; ++i) {
        const double u = d.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("gaussian draws have sane moments") {
    Philox rng(11, 0);
    double sum = 0.0, sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double g = rng.next_gaussian();
        sum += g;
        sum2 += g * g;
    }
    CHECK(std::abs(sum / n) < 0.02);
    CHECK(std::abs(sum2 / n - 1.0) < 0.02);
}

TEST_CASE("scalar kernels: probabilities and inner product") {
    Philox rng(3, 0);
    const StateVector s = random_state(rng);
    double p[16];
    kernels::scalar_ops().probabilities(s.amp.data(), p);
    double sum = 0.0;
    for (int i = 0; i < 16; ++i) {
        CHECK(p[i] == doctest::Approx(std::norm(s.amp[i])).epsilon(1e-14));
        sum += p[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    const Amplitude self = kernels::scalar_ops().inner_product(s.amp.data(), s.amp.data());
    CHECK(self.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(self.imag()) < 1e-14);
}

TEST_CASE("vector kernels agree with the scalar reference") {
    const kernels::Ops* avx2 = kernels::avx2_ops();
    if (!avx2) {
        MESSAGE("AVX2 not available on this host; scalar path is the only kernel set");
        return;
    }
    Philox rng(17, 0);
    for (int round = 0; round < 200; ++round) {
        StateVector a = random_state(rng);
        StateVector b = a;
        const int bit = static_cast<int>(rng.next_below(4));
        const UMatrix u2 = random_unitary(2, rng);
        kernels::scalar_ops().apply_1q(a.amp.data(), u2.m.data(), bit);
        avx2->apply_1q(b.amp.data(), u2.m.data(), bit);
        CHECK(max_abs_diff(a, b) < 1e-14);

        int hi = static_cast<int>(rng.next_below(4));
        int lo = static_cast<int>(rng.next_below(4));
        if (hi == lo) lo = (lo + 1) % 4;
        const UMatrix u4 = random_unitary(4, rng);
        kernels::scalar_ops().apply_2q(a.amp.data(), u4.m.data(), hi, lo);
        avx2->apply_2q(b.amp.data(), u4.m.data(), hi, lo);
        CHECK(max_abs_diff(a, b) < 1e-13);

        double pa[16], pb[16];
        kernels::scalar_ops().probabilities(a.amp.data(), pa);
        avx2->probabilities(b.amp.data(), pb);
        for (int i = 0; i < 16; ++i) CHECK(pa[i] == doctest::Approx(pb[i]).epsilon(1e-12));

        StateVector other = random_state(rng);
        const Amplitude ip_s = kernels::scalar_ops().inner_product(a.amp.data(), other.amp.data());
        const Amplitude ip_v = avx2->inner_product(b.amp.data(), other.amp.data());
        CHECK(std::abs(ip_s - ip_v) < 1e-13);
    }
}

TEST_CASE("kernel selection") {
    CHECK(kernels::set_active("scalar"));
    CHECK(std::string_view(kernels::active_ops().name) == "scalar");
    if (kernels::avx2_ops()) {
        CHECK(kernels::set_active("avx2"));
        CHECK(std::string_view(kernels::active_ops().name) == "avx2");
    } else {
        CHECK_FALSE(kernels::set_active("avx2"));
    }
    CHECK_FALSE(kernels::set_active("neon"));
    kernels::set_active("scalar");
}

TEST_CASE("kernels preserve the norm under unitaries") {
    Philox rng(23, 0);
    for (const auto* ops : {&kernels::scalar_ops(), kernels::avx2_ops()}) {
        if (!ops) continue;
        StateVector s = random_state(rng);
        for (int step = 0; step < 50; ++step) {
            const UMatrix u = random_unitary(2, rng);
            ops->apply_1q(s.amp.data(), u.m.data(), static_cast<int>(rng.next_below(4)));
        }
        CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-11));
    }
}

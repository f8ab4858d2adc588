#include "rcq/sampler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rcq/kernels.hpp"
#include "rcq/statevector.hpp"
#include "rcq/witness.hpp"

namespace rcq {

namespace {

const Amplitude kI{0.0, 1.0};

Amplitude draw(NumberField field, Philox& rng) {
    const double re = rng.next_gaussian();
    return field == NumberField::real_amplitudes ? Amplitude{re, 0.0}
                                                 : Amplitude{re, rng.next_gaussian()};
}

template <size_t N>
void normalize(std::array<Amplitude, N>& v) {
    double n = 0.0;
    for (const Amplitude& a : v) n += std::norm(a);
    const double inv = 1.0 / std::sqrt(n);
    for (Amplitude& a : v) a *= inv;
}

template <size_t N>
std::array<Amplitude, N> random_state(NumberField field, Philox& rng) {
    for (;;) {
        std::array<Amplitude, N> v;
        double n = 0.0;
        for (Amplitude& a : v) {
            a = draw(field, rng);
            n += std::norm(a);
        }
        if (n > 1e-12) {
            normalize(v);
            return v;
        }
    }
}

// Row-wise Gram-Schmidt; the input rows are redrawn jointly if the frame is
// too close to degenerate (measure-zero for Gaussian draws).
UMatrix orthonormalized_rows(UMatrix m) {
    for (int r = 0; r < m.dim; ++r) {
        for (int prev = 0; prev < r; ++prev) {
            Amplitude overlap = 0.0;
            for (int c = 0; c < m.dim; ++c) overlap += std::conj(m.at(prev, c)) * m.at(r, c);
            for (int c = 0; c < m.dim; ++c) m.at(r, c) -= overlap * m.at(prev, c);
        }
        double n = 0.0;
        for (int c = 0; c < m.dim; ++c) n += std::norm(m.at(r, c));
        if (n < 1e-20) throw std::runtime_error("degenerate frame in orthonormalization");
        const double inv = 1.0 / std::sqrt(n);
        for (int c = 0; c < m.dim; ++c) m.at(r, c) *= inv;
    }
    return m;
}

UMatrix random_frame(int dim, NumberField field, Philox& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        UMatrix m(dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) m.at(r, c) = draw(field, rng);
        try {
            return orthonormalized_rows(m);
        } catch (const std::runtime_error&) {
        }
    }
    throw std::runtime_error("could not draw a nondegenerate frame");
}

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

// Real dichotomic observable cos(theta) Z + sin(theta) X, as the rotation
// whose rows are its eigenbras.
UMatrix planar_observable_rotation(double theta) {
    UMatrix u(2);
    u.at(0, 0) = std::cos(theta / 2);
    u.at(0, 1) = std::sin(theta / 2);
    u.at(1, 0) = -std::sin(theta / 2);
    u.at(1, 1) = std::cos(theta / 2);
    return u;
}

}  // namespace

Strategy optimal_complex_strategy() {
    Strategy s;
    const double r = 1.0 / std::sqrt(2.0);
    s.psi_ap = {0.0, r, -r, 0.0};  // (|01> - |10>)/sqrt(2)
    s.psi_qc = s.psi_ap;

    // Axis observables: rows are the conjugated eigenbras of sigma_x.
    UMatrix mx(2), my(2), mz(2);
    mx.at(0, 0) = r; mx.at(0, 1) = r;
    mx.at(1, 0) = r; mx.at(1, 1) = -r;
    my.at(0, 0) = r; my.at(0, 1) = -kI * r;
    my.at(1, 0) = r; my.at(1, 1) = kI * r;
    mz = UMatrix::identity(2);
    s.a_rot = {mx, my, mz};
    s.c_rot = s.a_rot;

    // Basis vectors vec(R_eta sigma_b sigma_2)/sqrt(2); rows carry the bras.
    const auto rotations = [] {
        UMatrix w = sigma(0);
        for (int j = 1; j <= 3; ++j) w = w - sigma(j).scaled(kI);
        w = w.scaled(0.5);
        const double rr = 1.0 / std::sqrt(2.0);
        return std::array<UMatrix, 6>{
            sigma(0), w, w * w,
            (sigma(3) - sigma(2)).scaled(rr),
            (sigma(2) - sigma(1)).scaled(rr),
            (sigma(1) - sigma(3)).scaled(rr)};
    }();
    for (size_t e = 0; e < 6; ++e) {
        UMatrix basis(4);
        for (int b = 0; b < 4; ++b) {
            const UMatrix psi = (rotations[e] * sigma(b) * sigma(2)).scaled(r);
            for (int idx = 0; idx < 4; ++idx)
                basis.at(b, idx) = std::conj(psi.m[static_cast<size_t>(idx)]);
        }
        s.b_rot[e] = basis;
    }
    return s;
}

Strategy random_strategy(NumberField field, uint64_t seed, uint64_t trial) {
    Philox rng(seed, trial);
    Strategy s;
    s.psi_ap = random_state<4>(field, rng);
    s.psi_qc = random_state<4>(field, rng);
    if (field == NumberField::real_amplitudes) {
        for (int i = 0; i < 3; ++i) {
            s.a_rot[static_cast<size_t>(i)] =
                planar_observable_rotation(2 * std::numbers::pi * rng.next_double());
            s.c_rot[static_cast<size_t>(i)] =
                planar_observable_rotation(2 * std::numbers::pi * rng.next_double());
        }
    } else {
        for (int i = 0; i < 3; ++i) {
            s.a_rot[static_cast<size_t>(i)] = random_frame(2, field, rng);
            s.c_rot[static_cast<size_t>(i)] = random_frame(2, field, rng);
        }
    }
    for (int e = 0; e < 6; ++e) s.b_rot[static_cast<size_t>(e)] = random_frame(4, field, rng);
    return s;
}

Strategy perturbed_optimal_strategy(double epsilon, uint64_t seed, uint64_t trial) {
    Philox rng(seed, trial);
    Strategy s = optimal_complex_strategy();
    const NumberField field = NumberField::complex_amplitudes;
    auto jiggle_state = [&](std::array<Amplitude, 4>& v) {
        for (Amplitude& a : v) a += epsilon * draw(field, rng);
        normalize(v);
    };
    auto jiggle_frame = [&](UMatrix& m) {
        for (int r = 0; r < m.dim; ++r)
            for (int c = 0; c < m.dim; ++c) m.at(r, c) += epsilon * draw(field, rng);
        m = orthonormalized_rows(m);
    };
    jiggle_state(s.psi_ap);
    jiggle_state(s.psi_qc);
    for (auto& m : s.a_rot) jiggle_frame(m);
    for (auto& m : s.c_rot) jiggle_frame(m);
    for (auto& m : s.b_rot) jiggle_frame(m);
    return s;
}

namespace {

// contrib[eta][z-1][outcome string] = sign * a * c, so each partial witness
// contribution is a 16-term dot product with the outcome weights.
struct ContributionTable {
    double v[6][3][16];

    ContributionTable() {
        const auto& etas = Permutation::all();
        for (size_t e = 0; e < 6; ++e)
            for (int z = 1; z <= 3; ++z)
                for (int s = 0; s < 16; ++s) {
                    const int b = (s >> 1) & 3;  // middle outcome is the basis row
                    const double ac = ((s >> 3) & 1) == (s & 1) ? 1.0 : -1.0;
                    v[e][z - 1][s] = term_sign(etas[e], z, b) * ac;
                }
    }
};

const ContributionTable& contribution_table() {
    static const ContributionTable table;
    return table;
}

}  // namespace

double evaluate_strategy(const Strategy& s) {
    const auto& ops = kernels::active_ops();
    const auto& table = contribution_table();
    const auto& etas = Permutation::all();

    StateVector base;
    for (int a = 0; a < 2; ++a)
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q)
                for (int c = 0; c < 2; ++c)
                    base.amp[static_cast<size_t>(8 * a + 4 * p + 2 * q + c)] =
                        s.psi_ap[static_cast<size_t>(2 * a + p)] * s.psi_qc[static_cast<size_t>(2 * q + c)];

    double total = 0.0;
    for (size_t e = 0; e < 6; ++e) {
        StateVector rotated = base;
        ops.apply_2q(rotated.amp.data(), s.b_rot[e].m.data(), wire_bit(Wire::P), wire_bit(Wire::Q));
        for (int z = 1; z <= 3; ++z) {
            const int x = etas[e](z);
            StateVector st = rotated;
            ops.apply_1q(st.amp.data(), s.a_rot[static_cast<size_t>(x - 1)].m.data(), wire_bit(Wire::A));
            ops.apply_1q(st.amp.data(), s.c_rot[static_cast<size_t>(z - 1)].m.data(), wire_bit(Wire::C));
            double w[16];
            ops.probabilities(st.amp.data(), w);
            double partial = 0.0;
            for (int out = 0; out < 16; ++out) partial += table.v[e][z - 1][out] * w[out];
            total += partial;
        }
    }
    return total;
}

SamplerResult random_strategy_max(const SamplerOptions& opts) {
    if (opts.trials == 0) throw std::invalid_argument("sampler: trials must be >= 1");
    if (opts.around_optimum && opts.field == NumberField::real_amplitudes)
        throw std::invalid_argument("sampler: the analytic optimum is a complex strategy");

    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned threads =
        opts.threads > 0 ? static_cast<unsigned>(opts.threads) : (hw == 0 ? 1 : hw);

    auto trial_value = [&](uint64_t trial) {
        if (opts.around_optimum) {
            Philox eps_rng(opts.seed ^ 0x70657274ull, trial);
            const double eps = opts.max_perturbation * eps_rng.next_double();
            return evaluate_strategy(perturbed_optimal_strategy(eps, opts.seed, trial));
        }
        return evaluate_strategy(random_strategy(opts.field, opts.seed, trial));
    };

    std::vector<SamplerResult> partials(threads);
    std::vector<std::thread> pool;
    for (unsigned tid = 0; tid < threads; ++tid) {
        pool.emplace_back([&, tid] {
            SamplerResult local;
            local.best_value = -1e300;
            for (uint64_t trial = tid; trial < opts.trials; trial += threads) {
                const double f = trial_value(trial);
                if (f > local.best_value ||
                    (f == local.best_value && trial < local.best_trial)) {
                    local.best_value = f;
                    local.best_trial = trial;
                }
            }
            partials[tid] = local;
        });
    }
    for (auto& th : pool) th.join();

    SamplerResult best;
    best.best_value = -1e300;
    best.trials = opts.trials;
    for (const SamplerResult& local : partials) {
        if (local.best_value > best.best_value ||
            (local.best_value == best.best_value && local.best_trial < best.best_trial)) {
            best.best_value = local.best_value;
            best.best_trial = local.best_trial;
        }
    }
    return best;
}

}  // namespace rcq

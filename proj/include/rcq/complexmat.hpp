#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace rcq {

using Amplitude = std::complex<double>;

// Small dense unitary, dim 2 or 4, row-major. Everything in this project is
// at most two qubits wide, so a fixed 16-slot buffer covers both sizes.
struct UMatrix {
    int dim = 2;
    std::array<Amplitude, 16> m{};

    UMatrix() = default;
    explicit UMatrix(int d) : dim(d) {
        if (d != 2 && d != 4) throw std::invalid_argument("UMatrix: dim must be 2 or 4");
    }

    Amplitude& at(int r, int c) { return m[static_cast<size_t>(r) * dim + c]; }
    const Amplitude& at(int r, int c) const { return m[static_cast<size_t>(r) * dim + c]; }

    static UMatrix identity(int d) {
        UMatrix u(d);
        for (int i = 0; i < d; ++i) u.at(i, i) = 1.0;
        return u;
    }

    UMatrix dagger() const {
        UMatrix u(dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) u.at(r, c) = std::conj(at(c, r));
        return u;
    }

    friend UMatrix operator*(const UMatrix& a, const UMatrix& b) {
        if (a.dim != b.dim) throw std::invalid_argument("UMatrix product: dimension mismatch");
        UMatrix out(a.dim);
        for (int r = 0; r < a.dim; ++r)
            for (int c = 0; c < a.dim; ++c) {
                Amplitude s = 0.0;
                for (int k = 0; k < a.dim; ++k) s += a.at(r, k) * b.at(k, c);
                out.at(r, c) = s;
            }
        return out;
    }

    friend UMatrix operator-(const UMatrix& a, const UMatrix& b) {
        if (a.dim != b.dim) throw std::invalid_argument("UMatrix difference: dimension mismatch");
        UMatrix out(a.dim);
        for (size_t i = 0; i < out.m.size(); ++i) out.m[i] = a.m[i] - b.m[i];
        return out;
    }

    friend UMatrix operator+(const UMatrix& a, const UMatrix& b) {
        if (a.dim != b.dim) throw std::invalid_argument("UMatrix sum: dimension mismatch");
        UMatrix out(a.dim);
        for (size_t i = 0; i < out.m.size(); ++i) out.m[i] = a.m[i] + b.m[i];
        return out;
    }

    UMatrix scaled(Amplitude s) const {
        UMatrix out(dim);
        for (size_t i = 0; i < m.size(); ++i) out.m[i] = m[i] * s;
        return out;
    }

    Amplitude trace() const {
        Amplitude t = 0.0;
        for (int i = 0; i < dim; ++i) t += at(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) s += std::norm(at(r, c));
        return std::sqrt(s);
    }

    // Distance from the unitary group: ||U^dag U - 1||_F.
    double unitarity_deviation() const {
        return (dagger() * *this - identity(dim)).frobenius_norm();
    }
};

inline UMatrix kron(const UMatrix& a, const UMatrix& b) {
    if (a.dim != 2 || b.dim != 2) throw std::invalid_argument("kron: expects two 2x2 factors");
    UMatrix out(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out.at(r, c) = a.at(r >> 1, c >> 1) * b.at(r & 1, c & 1);
    return out;
}

// Global phase aligning v to u in the Frobenius sense: phase = arg tr(V^dag U).
// Falls back to 1 when the trace vanishes (orthogonal matrices).
inline Amplitude aligning_phase(const UMatrix& u, const UMatrix& v) {
    Amplitude t = (v.dagger() * u).trace();
    double a = std::abs(t);
    if (a < 1e-300) return 1.0;
    return t / a;
}

inline double phase_aligned_distance(const UMatrix& u, const UMatrix& v) {
    return (u - v.scaled(aligning_phase(u, v))).frobenius_norm();
}

}  // namespace rcq

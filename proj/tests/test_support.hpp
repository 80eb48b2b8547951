#pragma once

// Independent oracles for the tests. Nothing here calls the eigensolver.

#include "numrad/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace testing_support {

using numrad::Complex;
using numrad::ComplexMatrix;

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> e(n * n);
    for (Complex& z : e) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = scale * Complex(re, im);
    }
    return ComplexMatrix(n, std::move(e));
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    const ComplexMatrix g = random_matrix(rng, n);
    return numrad::HermitianWitness::hermitian_part(g).matrix();
}

inline std::vector<Complex> random_unit_vector(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> x(n);
    double s = 0.0;
    for (Complex& z : x) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = {re, im};
        s += std::norm(z);
    }
    for (Complex& z : x) {
        z /= std::sqrt(s);
    }
    return x;
}

/// Eigenvalues of the Hermitian [[a, b], [conj b, d]] by the quadratic formula.
inline std::pair<double, double> hermitian2_eigenvalues(double a, Complex b, double d) {
    const double mid = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), std::abs(b));
    return {mid - rad, mid + rad};
}

/// ||Re(e^{i theta} T)|| for a 2x2 T, in closed form.
inline double rotated_norm2(const ComplexMatrix& t, double theta) {
    const Complex e(std::cos(theta), std::sin(theta));
    const double a = (e * t(0, 0)).real();
    const double d = (e * t(1, 1)).real();
    const Complex b = 0.5 * (e * t(0, 1) + std::conj(e * t(1, 0)));
    const auto [lo, hi] = hermitian2_eigenvalues(a, b, d);
    return std::max(std::abs(lo), std::abs(hi));
}

/// Max of rotated_norm2 over a uniform grid of step h on [0, pi).
inline double dense_sweep2(const ComplexMatrix& t, double h) {
    double best = 0.0;
    const auto steps = static_cast<long>(std::numbers::pi / h);
    for (long j = 0; j <= steps; ++j) {
        best = std::max(best, rotated_norm2(t, j * h));
    }
    return best;
}

/// max |<Tx, x>| over random unit vectors.
inline double rayleigh_sample(const ComplexMatrix& t, long count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = t.dim();
    double best = 0.0;
    for (long c = 0; c < count; ++c) {
        const auto x = random_unit_vector(rng, n);
        Complex acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex row = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                row += t(i, j) * x[j];
            }
            acc += row * std::conj(x[i]);
        }
        best = std::max(best, std::abs(acc));
    }
    return best;
}

/// w(T) for 2x2 T from the elliptical range theorem: W(T) is the ellipse
/// with foci l1, l2 and minor axis sqrt(||T||_F^2 - |l1|^2 - |l2|^2).
inline double ellipse_radius2(const ComplexMatrix& t, int samples = 200000) {
    const Complex tr = t(0, 0) + t(1, 1);
    const Complex det = t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0);
    const Complex disc = std::sqrt(tr * tr - 4.0 * det);
    const Complex l1 = 0.5 * (tr + disc);
    const Complex l2 = 0.5 * (tr - disc);
    double frob = 0.0;
    for (const Complex& z : t.entries()) {
        frob += std::norm(z);
    }
    const double minor = std::sqrt(std::max(0.0, frob - std::norm(l1) - std::norm(l2)));
    const double focal = std::abs(l1 - l2);
    const double major = std::hypot(minor, focal);
    const Complex centre = 0.5 * (l1 + l2);
    const Complex dir = focal > 0.0 ? (l1 - l2) / focal : Complex(1.0, 0.0);
    double best = 0.0;
    for (int s = 0; s < samples; ++s) {
        const double phi = 2.0 * std::numbers::pi * s / samples;
        const Complex p = centre + dir * Complex(0.5 * major * std::cos(phi), 0.5 * minor * std::sin(phi));
        best = std::max(best, std::abs(p));
    }
    return best;
}

/// Largest singular value of a 2x2 matrix in closed form.
inline double norm2x2(const ComplexMatrix& m) {
    double frob = 0.0;
    for (const Complex& z : m.entries()) {
        frob += std::norm(z);
    }
    const double det = std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    return std::sqrt(0.5 * (frob + std::sqrt(std::max(0.0, frob * frob - 4.0 * det * det))));
}

}  // namespace testing_support

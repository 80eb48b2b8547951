#include "numrad/eigen.hpp"

#include "numrad/errors.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>

namespace numrad {

namespace kernels {

namespace {

double off_diagonal_sq(std::span<const Complex> a, std::size_t n) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            off += std::norm(a[p * n + q]);
        }
    }
    return off;
}

}  // namespace

int jacobi_hermitian(std::span<Complex> a, std::size_t n, std::span<Complex> vectors, int max_sweeps) {
    const bool want_vectors = !vectors.empty();

    double frob_sq = 0.0;
    for (const Complex& z : a) {
        frob_sq += std::norm(z);
    }
    // converged once the off-diagonal mass is far below one ulp of ||A||_F
    const double stop_sq = frob_sq * (1e-3 * DBL_EPSILON) * (1e-3 * DBL_EPSILON);

    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = a[i * n + i].real();
    }

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double off = off_diagonal_sq(a, n);
        if (off == 0.0 || off <= stop_sq) {
            return sweep;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a[p * n + q];
                const double x = std::abs(apq);
                if (x == 0.0) {
                    continue;
                }
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                if (sweep > 3 && std::abs(app) + 100.0 * x == std::abs(app) &&
                    std::abs(aqq) + 100.0 * x == std::abs(aqq)) {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }

                // real rotation diagonalising [[app, x], [x, aqq]]
                const double tau = (aqq - app) / (2.0 * x);
                double t;
                if (std::abs(tau) > 1e150) {
                    t = 0.5 / tau;
                } else {
                    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex phase = apq / x;            // e^{i phi}
                const Complex sconj = s * std::conj(phase);  // s e^{-i phi}
                const Complex cconj = c * std::conj(phase);  // c e^{-i phi}

                // A <- G* A G with G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    const Complex akp = a[k * n + p];
                    const Complex akq = a[k * n + q];
                    const Complex nkp = c * akp - sconj * akq;
                    const Complex nkq = s * akp + cconj * akq;
                    a[k * n + p] = nkp;
                    a[k * n + q] = nkq;
                    a[p * n + k] = std::conj(nkp);
                    a[q * n + k] = std::conj(nkq);
                }
                a[p * n + p] = app - t * x;
                a[q * n + q] = aqq + t * x;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                if (want_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = vectors[k * n + p];
                        const Complex vkq = vectors[k * n + q];
                        vectors[k * n + p] = c * vkp - sconj * vkq;
                        vectors[k * n + q] = s * vkp + cconj * vkq;
                    }
                }
            }
        }
    }
    if (off_diagonal_sq(a, n) <= stop_sq) {
        return max_sweeps;
    }
    throw IllConditioned("Jacobi eigensolver did not converge within " + std::to_string(max_sweeps) + " sweeps");
}

Extremes extreme_eigenvalues(std::span<Complex> a, std::size_t n, int max_sweeps) {
    jacobi_hermitian(a, n, {}, max_sweeps);
    double lo = a[0].real();
    double hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
        const double v = a[i * n + i].real();
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

}  // namespace kernels

namespace {

EigenSystem solve(const HermitianWitness& h, const Tolerances& tol) {
    const HermitianWitness sym = HermitianWitness::hermitian_part(h.matrix());
    const ComplexMatrix& m = sym.matrix();
    const std::size_t n = m.dim();

    std::vector<Complex> work(m.entries().begin(), m.entries().end());
    std::vector<Complex> vec(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        vec[i * n + i] = 1.0;
    }
    kernels::jacobi_hermitian(work, n, vec, tol.max_sweeps);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return work[i * n + i].real() < work[j * n + j].real();
    });

    std::vector<double> values(n);
    std::vector<Complex> sorted(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        values[k] = work[src * n + src].real();
        for (std::size_t r = 0; r < n; ++r) {
            sorted[r * n + k] = vec[r * n + src];
        }
    }

    double residual = 0.0;
    std::vector<Complex> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = 0; r < n; ++r) {
            v[r] = sorted[r * n + k];
        }
        std::vector<Complex> hv = mat_vec(m, v);
        for (std::size_t r = 0; r < n; ++r) {
            hv[r] -= values[k] * v[r];
        }
        residual = std::max(residual, vector_norm(hv));
    }
    if (residual > tol.eigen * m.frobenius_norm()) {
        throw IllConditioned("eigen residual " + std::to_string(residual) + " exceeds tolerance");
    }
    return EigenSystem{std::move(values), ComplexMatrix(n, std::move(sorted)), residual};
}

}  // namespace

EigenResult hermitian_eigenvalues(const HermitianWitness& h, const Tolerances& tol) {
    EigenSystem sys = solve(h, tol);
    return EigenResult{std::move(sys.values), sys.residual};
}

EigenSystem hermitian_eigensystem(const HermitianWitness& h, const Tolerances& tol) { return solve(h, tol); }

}  // namespace numrad

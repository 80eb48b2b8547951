#include "numrad/norms.hpp"

#include "numrad/eigen.hpp"
#include "numrad/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace numrad {

double spectral_norm(const ComplexMatrix& m, const Tolerances& tol) {
    if (hermitian_asymmetry(m) == 0.0) {
        const EigenResult eig = hermitian_eigenvalues(HermitianWitness::certify(m, tol), tol);
        return std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
    }
    const EigenResult eig = hermitian_eigenvalues(HermitianWitness::hermitian_part(adjoint(m) * m), tol);
    return std::sqrt(std::max(eig.values.back(), 0.0));
}

namespace {

// Right singular vectors from the eigenvectors of M*M; sigma_k = ||M v_k||
// keeps absolute error near eps ||M|| even for zero singular values, where
// sqrt(lambda_k) would amplify rounding in lambda_k to sqrt(eps) ||M||.
struct RightSingular {
    std::vector<double> values;  // ascending with the eigenvalues of M*M
    ComplexMatrix vectors;
};

RightSingular right_singular(const ComplexMatrix& m, const Tolerances& tol) {
    const HermitianWitness gram = HermitianWitness::hermitian_part(adjoint(m) * m);
    EigenSystem sys = hermitian_eigensystem(gram, tol);
    const std::size_t n = m.dim();
    std::vector<double> sv(n);
    std::vector<Complex> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = sys.vectors(i, k);
        }
        sv[k] = vector_norm(mat_vec(m, v));
    }
    return RightSingular{std::move(sv), std::move(sys.vectors)};
}

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& m, const Tolerances& tol) {
    std::vector<double> sv = right_singular(m, tol).values;
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double schatten_norm(const ComplexMatrix& m, double p, const Tolerances& tol) {
    if (std::isnan(p) || p < 1.0) {
        throw InvalidArgument("Schatten exponent must satisfy p >= 1");
    }
    if (std::isinf(p)) {
        return spectral_norm(m, tol);
    }
    const std::vector<double> sv = singular_values(m, tol);
    const double top = sv.front();
    if (top == 0.0) {
        return 0.0;
    }
    // scaled by the top singular value to keep the powers in range
    double acc = 0.0;
    for (double s : sv) {
        acc += std::pow(s / top, p);
    }
    return top * std::pow(acc, 1.0 / p);
}

ComplexMatrix psd_sqrt(const HermitianWitness& h, const Tolerances& tol) {
    const EigenSystem sys = hermitian_eigensystem(h, tol);
    const std::size_t n = h.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        const double r = std::sqrt(std::max(sys.values[k], 0.0));
        if (r == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vi = r * sys.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                e[i * n + j] += vi * std::conj(sys.vectors(j, k));
            }
        }
    }
    return HermitianWitness::hermitian_part(ComplexMatrix(n, std::move(e))).matrix();
}

ComplexMatrix absolute_value(const ComplexMatrix& m, const Tolerances& tol) {
    const RightSingular rs = right_singular(m, tol);
    const std::size_t n = m.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        if (rs.values[k] == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vi = rs.values[k] * rs.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                e[i * n + j] += vi * std::conj(rs.vectors(j, k));
            }
        }
    }
    return HermitianWitness::hermitian_part(ComplexMatrix(n, std::move(e))).matrix();
}

}  // namespace numrad

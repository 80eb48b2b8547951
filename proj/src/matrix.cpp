#include "numrad/matrix.hpp"

#include "numrad/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace numrad {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()) + ")");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0) {
        throw DimensionError("matrix dimension must be positive");
    }
    if (entries_.size() != dim_ * dim_) {
        throw DimensionError("expected " + std::to_string(dim_ * dim_) + " entries, got " +
                             std::to_string(entries_.size()));
    }
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidArgument("matrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) { return ComplexMatrix(dim, std::vector<Complex>(dim * dim)); }

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        e[i * dim + i] = 1.0;
    }
    return ComplexMatrix(dim, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    const std::size_t n = diag.size();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i * n + i] = diag[i];
    }
    return ComplexMatrix(n, std::move(e));
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t n = rows.size();
    std::vector<Complex> e;
    e.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw DimensionError("from_rows: matrix must be square");
        }
        e.insert(e.end(), row.begin(), row.end());
    }
    return ComplexMatrix(n, std::move(e));
}

double ComplexMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (const Complex& z : entries_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double ComplexMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (const Complex& z : entries_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e[i * n + j] = std::conj(m(j, i));
        }
    }
    return ComplexMatrix(n, std::move(e));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "add");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] += b.entries()[k];
    }
    return ComplexMatrix(a.dim(), std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "subtract");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] -= b.entries()[k];
    }
    return ComplexMatrix(a.dim(), std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& a) {
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (Complex& z : e) {
        z = -z;
    }
    return ComplexMatrix(a.dim(), std::move(e));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "multiply");
    const std::size_t n = a.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                e[i * n + j] += aik * b(k, j);
            }
        }
    }
    return ComplexMatrix(n, std::move(e));
}

ComplexMatrix operator*(Complex c, const ComplexMatrix& m) {
    std::vector<Complex> e(m.entries().begin(), m.entries().end());
    for (Complex& z : e) {
        z *= c;
    }
    return ComplexMatrix(m.dim(), std::move(e));
}

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "max_entry_diff");
    double d = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return d;
}

ComplexMatrix block_2x2(const ComplexMatrix& p, const ComplexMatrix& q, const ComplexMatrix& r,
                        const ComplexMatrix& s) {
    require_same_dim(p, q, "block_2x2");
    require_same_dim(p, r, "block_2x2");
    require_same_dim(p, s, "block_2x2");
    const std::size_t n = p.dim();
    const std::size_t m = 2 * n;
    std::vector<Complex> e(m * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e[i * m + j] = p(i, j);
            e[i * m + (j + n)] = q(i, j);
            e[(i + n) * m + j] = r(i, j);
            e[(i + n) * m + (j + n)] = s(i, j);
        }
    }
    return ComplexMatrix(m, std::move(e));
}

std::vector<Complex> mat_vec(const ComplexMatrix& m, std::span<const Complex> x) {
    const std::size_t n = m.dim();
    if (x.size() != n) {
        throw DimensionError("mat_vec: vector length does not match matrix dimension");
    }
    std::vector<Complex> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += m(i, j) * x[j];
        }
        y[i] = acc;
    }
    return y;
}

double vector_norm(std::span<const Complex> x) noexcept {
    double s = 0.0;
    for (const Complex& z : x) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

Complex rayleigh(const ComplexMatrix& m, std::span<const Complex> x) {
    if (std::abs(vector_norm(x) - 1.0) > 1e-12) {
        throw InvalidArgument("rayleigh: probe vector must have unit norm");
    }
    const std::vector<Complex> mx = mat_vec(m, x);
    Complex acc = 0.0;
    for (std::size_t k = 0; k < mx.size(); ++k) {
        acc += mx[k] * std::conj(x[k]);
    }
    return acc;
}

double hermitian_asymmetry(const ComplexMatrix& m) noexcept {
    const std::size_t n = m.dim();
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return d;
}

HermitianWitness HermitianWitness::certify(ComplexMatrix m, const Tolerances& tol) {
    const double asym = hermitian_asymmetry(m);
    if (asym > tol.hermitian * m.max_abs()) {
        throw InvalidArgument("matrix is not Hermitian within tolerance (asymmetry " + std::to_string(asym) + ")");
    }
    return HermitianWitness(std::move(m), asym);
}

HermitianWitness HermitianWitness::hermitian_part(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e[i * n + j] = (m(i, j) + std::conj(m(j, i))) * 0.5;
        }
    }
    ComplexMatrix h(n, std::move(e));
    const double asym = hermitian_asymmetry(h);
    return HermitianWitness(std::move(h), asym);
}

}  // namespace numrad

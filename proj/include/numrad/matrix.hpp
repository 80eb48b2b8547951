#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace numrad {

using Complex = std::complex<double>;

/// Dense n x n complex matrix stored row-major.
///
/// Values are immutable once built: every operation returns a fresh matrix,
/// so instances can be shared between threads freely. Construction rejects
/// non-finite entries and a zero dimension.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix zero(std::size_t dim);
    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    /// Row-by-row literal, e.g. `from_rows({{1, 1}, {0, 1}})`.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t dim() const noexcept { return dim_; }
    const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const noexcept { return entries_; }

    /// Largest entry modulus.
    double max_abs() const noexcept;
    double frobenius_norm() const noexcept;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex c, const ComplexMatrix& m);

/// Largest entrywise modulus of a - b.
double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// 2n x 2n matrix with blocks laid out [[p, q], [r, s]].
ComplexMatrix block_2x2(const ComplexMatrix& p, const ComplexMatrix& q, const ComplexMatrix& r,
                        const ComplexMatrix& s);

/// <Mx, x> = sum_k (Mx)_k conj(x_k). `x` must have unit norm within 1e-12.
Complex rayleigh(const ComplexMatrix& m, std::span<const Complex> x);

/// Matrix-vector product.
std::vector<Complex> mat_vec(const ComplexMatrix& m, std::span<const Complex> x);

double vector_norm(std::span<const Complex> x) noexcept;

/// Tolerances shared by the Hermitian checks and the eigensolver.
struct Tolerances {
    double hermitian = 1e-10;  ///< relative to the largest entry modulus
    double eigen = 1e-12;      ///< residual bound relative to the Frobenius norm
    int max_sweeps = 100;
};

/// A matrix certified Hermitian: max |M[i,j] - conj(M[j,i])| is within
/// `hermitian` tolerance times the largest entry modulus.
class HermitianWitness {
public:
    /// Throws InvalidArgument if `m` is not Hermitian within tolerance.
    static HermitianWitness certify(ComplexMatrix m, const Tolerances& tol = {});
    /// (M + M*)/2, which is exactly Hermitian in floating point.
    static HermitianWitness hermitian_part(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    double asymmetry() const noexcept { return asymmetry_; }
    std::size_t dim() const noexcept { return matrix_.dim(); }

private:
    HermitianWitness(ComplexMatrix m, double asymmetry) : matrix_(std::move(m)), asymmetry_(asymmetry) {}

    ComplexMatrix matrix_;
    double asymmetry_;
};

/// max |M[i,j] - conj(M[j,i])|.
double hermitian_asymmetry(const ComplexMatrix& m) noexcept;

}  // namespace numrad

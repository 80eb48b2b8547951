#pragma once

#include "numrad/matrix.hpp"

#include <limits>
#include <vector>

namespace numrad {

/// Passing this as `p` selects the operator norm.
inline constexpr double kSchattenInfinity = std::numeric_limits<double>::infinity();

/// Largest singular value. Exactly Hermitian input is dispatched to its
/// extreme eigenvalues; everything else goes through M*M.
double spectral_norm(const ComplexMatrix& m, const Tolerances& tol = {});

/// Singular values (descending), square roots of the eigenvalues of M*M
/// clamped at zero.
std::vector<double> singular_values(const ComplexMatrix& m, const Tolerances& tol = {});

/// (sum_i sigma_i^p)^(1/p); p = kSchattenInfinity dispatches to spectral_norm.
/// Throws InvalidArgument for p < 1 or NaN.
double schatten_norm(const ComplexMatrix& m, double p, const Tolerances& tol = {});

/// Principal square root of a positive semidefinite Hermitian matrix, with
/// negative rounding noise in the spectrum clamped to zero.
ComplexMatrix psd_sqrt(const HermitianWitness& h, const Tolerances& tol = {});

/// |M| = (M*M)^(1/2).
ComplexMatrix absolute_value(const ComplexMatrix& m, const Tolerances& tol = {});

}  // namespace numrad

#pragma once

#include "numrad/matrix.hpp"

#include <span>
#include <vector>

namespace numrad {

struct EigenResult {
    std::vector<double> values;  ///< ascending
    double residual = 0.0;       ///< max ||Hv - lambda v|| over computed pairs
};

struct EigenSystem {
    std::vector<double> values;  ///< ascending
    ComplexMatrix vectors;       ///< column k belongs to values[k]
    double residual = 0.0;
};

/// Eigenvalues of (H + H*)/2 by cyclic complex Jacobi rotations.
///
/// Throws IllConditioned when the sweep cap is hit or the residual exceeds
/// `tol.eigen * ||H||_F`. Deterministic for a fixed input.
EigenResult hermitian_eigenvalues(const HermitianWitness& h, const Tolerances& tol = {});

/// Same as hermitian_eigenvalues but also returns the accumulated eigenvectors.
EigenSystem hermitian_eigensystem(const HermitianWitness& h, const Tolerances& tol = {});

namespace kernels {

/// In-place cyclic Jacobi on a row-major Hermitian buffer `a` of size n*n.
/// On return the diagonal holds the (unsorted) eigenvalues. When `vectors`
/// is non-empty it must hold n*n entries initialised to the identity; the
/// rotations are accumulated into it column-wise. Returns the sweep count.
int jacobi_hermitian(std::span<Complex> a, std::size_t n, std::span<Complex> vectors, int max_sweeps);

struct Extremes {
    double min;
    double max;
};

/// Smallest and largest eigenvalue of the Hermitian buffer `a` (destroyed).
Extremes extreme_eigenvalues(std::span<Complex> a, std::size_t n, int max_sweeps = 100);

}  // namespace kernels

}  // namespace numrad

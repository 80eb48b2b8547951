#pragma once

#include "numrad/matrix.hpp"

namespace numrad {

/// Hermitian pair (H, K) with T = H + iK.
struct CartesianPair {
    HermitianWitness h;
    HermitianWitness k;
};

/// H = (T + T*)/2, K = (T - T*)/(2i).
CartesianPair decompose(const ComplexMatrix& t);

/// H + iK. Throws DimensionError if the parts disagree in size.
ComplexMatrix recompose(const CartesianPair& pair);

/// Re(e^{i theta} T) = (e^{i theta} T + e^{-i theta} T*)/2.
///
/// The value is cross-checked against (cos theta) H - (sin theta) K; the check
/// runs on every call in debug builds and on a sample of calls otherwise.
/// A disagreement beyond 1e-13 (scaled by max(1, max|T_ij|)) throws
/// NumericalError.
HermitianWitness rotated_real_part(const ComplexMatrix& t, double theta);

/// Largest entrywise gap between the two formulas for Re(e^{i theta} T).
double rotated_real_part_discrepancy(const ComplexMatrix& t, double theta);

/// alpha H + beta K for a point on the unit circle (|alpha^2 + beta^2 - 1| <= 1e-12).
HermitianWitness circle_combination(const CartesianPair& pair, double alpha, double beta);

}  // namespace numrad

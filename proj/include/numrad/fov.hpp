#pragma once

#include "numrad/matrix.hpp"
#include "numrad/sweep.hpp"

#include <vector>

namespace numrad {

inline constexpr int kDefaultFovAngles = 360;

/// Boundary sample of the numerical range W(T).
///
/// For each angle theta_j the point p_j = <T x_j, x_j> is taken at a top
/// eigenvector x_j of Re(e^{i theta_j} T), so Re(e^{i theta_j} p_j) equals
/// support_values[j], the largest eigenvalue.
struct FovBoundary {
    std::vector<double> angles;
    std::vector<Complex> points;
    std::vector<double> support_values;
};

/// theta_j = 2 pi j / n_angles for j < n_angles; n_angles >= 8.
FovBoundary fov_boundary(const ComplexMatrix& t, int n_angles = kDefaultFovAngles,
                         Execution execution = Execution::Parallel);

/// True iff z lies in the convex hull of boundary.points inflated by tol.
/// Collinear samples fall back to a distance-to-segment test.
bool fov_contains(const FovBoundary& boundary, Complex z, double tol);

/// Top eigenpair of a Hermitian matrix, refined by shifted inverse iteration
/// from the Jacobi vector until ||Mx - lambda x|| <= 1e-10 * max(1, ||M||_F).
struct TopEigenpair {
    double value;
    std::vector<Complex> vector;
    double residual;
};
TopEigenpair top_eigenpair(const HermitianWitness& m);

}  // namespace numrad

#pragma once

#include "numrad/matrix.hpp"
#include "numrad/sweep.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace numrad {

inline constexpr double kDefaultRadiusTol = 1e-9;

/// Certified enclosure of the numerical radius w(T).
struct RadiusCertificate {
    double lower = 0.0;       ///< g(theta_star), an attained value
    double upper = 0.0;       ///< proven bound on w(T)
    double theta_star = 0.0;  ///< in [0, pi); smallest maximising grid angle
    int grid_evals = 0;
    int refinement_rounds = 0;
    std::vector<SweepRound> history;

    double midpoint() const noexcept { return 0.5 * (lower + upper); }
    double width() const noexcept { return upper - lower; }
};

struct RadiusOptions {
    Execution execution = Execution::Parallel;
    Tolerances tolerances{};
    int initial_grid = 64;
    /// Cap the enclosure with the a-priori bounds ||T|| and (|| |T| + |T*| ||)/2.
    bool a_priori_caps = true;
};

/// w(T) = sup_theta ||Re(e^{i theta} T)||, enclosed to width <= tol.
///
/// g(theta) = ||(cos theta) H - (sin theta) K|| is sampled on a uniform grid
/// over [0, pi) (g has period pi) and refined by branch and bound with the
/// Lipschitz constant ||H|| + ||K||. Throws Unachievable when
/// tol < 1e3 * eps * ||T||.
RadiusCertificate radius_certified(const ComplexMatrix& t, double tol = kDefaultRadiusTol,
                                   const RadiusOptions& options = {});

/// Same enclosure, parametrised over the unit circle: sup ||alpha H + beta K||
/// with (alpha, beta) = (cos phi, sin phi). theta_star holds the maximising phi.
RadiusCertificate radius_via_circle(const ComplexMatrix& t, double tol = kDefaultRadiusTol,
                                    const RadiusOptions& options = {});

/// Max of |<Tx, x>| over `trials` seeded random unit vectors plus any
/// `forced` probes (normalised before use). Always a lower bound on w(T).
double rayleigh_lower_bound(const ComplexMatrix& t, int trials, std::uint64_t seed,
                            std::span<const std::vector<Complex>> forced = {});

/// g(theta) = ||Re(e^{i theta} T)|| evaluated from the Cartesian parts.
double rotated_norm(const ComplexMatrix& h, const ComplexMatrix& k, double theta, int max_sweeps = 100);

}  // namespace numrad

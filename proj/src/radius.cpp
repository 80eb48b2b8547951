#include "numrad/radius.hpp"

#include "numrad/cartesian.hpp"
#include "numrad/eigen.hpp"
#include "numrad/errors.hpp"
#include "numrad/norms.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace numrad {

namespace {

double norm_of_combination(const ComplexMatrix& h, double alpha, const ComplexMatrix& k, double beta,
                           int max_sweeps) {
    const std::size_t n = h.dim();
    std::vector<Complex> buf(n * n);
    for (std::size_t i = 0; i < buf.size(); ++i) {
        buf[i] = alpha * h.entries()[i] + beta * k.entries()[i];
    }
    const kernels::Extremes ex = kernels::extreme_eigenvalues(buf, n, max_sweeps);
    return std::max(std::abs(ex.min), std::abs(ex.max));
}

struct Prepared {
    CartesianPair pair;
    double lipschitz;
    double cap;
};

Prepared prepare(const ComplexMatrix& t, double tol, const RadiusOptions& options) {
    if (!(tol > 0.0)) {
        throw InvalidArgument("radius tolerance must be positive");
    }
    const double norm_t = spectral_norm(t, options.tolerances);
    if (tol < 1e3 * DBL_EPSILON * norm_t) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "tolerance %.3g is below 1e3 * eps * ||T|| = %.3g", tol,
                      1e3 * DBL_EPSILON * norm_t);
        throw Unachievable(msg);
    }
    CartesianPair pair = decompose(t);
    const double lipschitz =
        spectral_norm(pair.h.matrix(), options.tolerances) + spectral_norm(pair.k.matrix(), options.tolerances);

    double cap = std::numeric_limits<double>::infinity();
    if (options.a_priori_caps) {
        const ComplexMatrix mixed = absolute_value(t, options.tolerances) + absolute_value(adjoint(t), options.tolerances);
        const double half_mixed = 0.5 * spectral_norm(HermitianWitness::hermitian_part(mixed).matrix(), options.tolerances);
        // both are rounding-exact only to a few ulps
        cap = std::min(norm_t, half_mixed) * (1.0 + 64.0 * DBL_EPSILON) + 64.0 * DBL_EPSILON * norm_t;
    }
    return Prepared{std::move(pair), lipschitz, cap};
}

RadiusCertificate to_certificate(const SweepResult& r) {
    RadiusCertificate c;
    c.lower = r.lower;
    c.upper = r.upper;
    c.theta_star = r.argmax;
    c.grid_evals = r.grid_evals;
    c.refinement_rounds = r.refinement_rounds;
    c.history = r.history;
    return c;
}

}  // namespace

double rotated_norm(const ComplexMatrix& h, const ComplexMatrix& k, double theta, int max_sweeps) {
    return norm_of_combination(h, std::cos(theta), k, -std::sin(theta), max_sweeps);
}

RadiusCertificate radius_certified(const ComplexMatrix& t, double tol, const RadiusOptions& options) {
    const Prepared prep = prepare(t, tol, options);
    const ComplexMatrix& h = prep.pair.h.matrix();
    const ComplexMatrix& k = prep.pair.k.matrix();
    const int sweeps = options.tolerances.max_sweeps;

    // g is a max of |Re(e^{i theta} z)| over z in W(T): sinusoids of
    // amplitude <= w(T) <= ||H|| + ||K||, so that constant bounds both slope
    // and curvature.
    SweepObjective objective{std::numbers::pi, prep.lipschitz, prep.lipschitz,
                             [&](double theta) { return rotated_norm(h, k, theta, sweeps); }};
    SweepOptions sweep_opts;
    sweep_opts.initial_grid = options.initial_grid;
    sweep_opts.execution = options.execution;
    sweep_opts.upper_cap = prep.cap;
    return to_certificate(certified_sweep(objective, tol, sweep_opts));
}

RadiusCertificate radius_via_circle(const ComplexMatrix& t, double tol, const RadiusOptions& options) {
    const Prepared prep = prepare(t, tol, options);
    const CartesianPair& pair = prep.pair;
    const int sweeps = options.tolerances.max_sweeps;

    SweepObjective objective{std::numbers::pi, prep.lipschitz, prep.lipschitz, [&](double phi) {
                                 return norm_of_combination(pair.h.matrix(), std::cos(phi), pair.k.matrix(),
                                                            std::sin(phi), sweeps);
                             }};
    SweepOptions sweep_opts;
    sweep_opts.initial_grid = options.initial_grid;
    sweep_opts.execution = options.execution;
    sweep_opts.upper_cap = prep.cap;
    return to_certificate(certified_sweep(objective, tol, sweep_opts));
}

double rayleigh_lower_bound(const ComplexMatrix& t, int trials, std::uint64_t seed,
                            std::span<const std::vector<Complex>> forced) {
    if (trials < 1) {
        throw InvalidArgument("rayleigh_lower_bound needs at least one trial");
    }
    const std::size_t n = t.dim();
    auto modulus = [&](std::vector<Complex> x) {
        const double len = vector_norm(x);
        if (len == 0.0) {
            return 0.0;
        }
        for (Complex& z : x) {
            z /= len;
        }
        // normalisation can leave |x| a few ulps off 1; <Tx, x> is formed directly
        const std::vector<Complex> tx = mat_vec(t, x);
        Complex acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += tx[i] * std::conj(x[i]);
        }
        return std::abs(acc);
    };

    double best = 0.0;
    for (const auto& probe : forced) {
        if (probe.size() != n) {
            throw DimensionError("forced probe length does not match matrix dimension");
        }
        best = std::max(best, modulus(probe));
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> x(n);
    for (int trial = 0; trial < trials; ++trial) {
        for (Complex& z : x) {
            const double re = normal(rng);
            const double im = normal(rng);
            z = {re, im};
        }
        best = std::max(best, modulus(x));
    }
    return best;
}

}  // namespace numrad

#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace numrad {

enum class Execution { Serial, Parallel };

/// A periodic scalar function g whose global maximum is to be enclosed.
///
/// `lipschitz` bounds |g(a) - g(b)| / |a - b|. `curvature` is a constant
/// kappa such that g is a pointwise maximum of functions with second
/// derivative >= -kappa; that yields the interval bound
/// max(g(a), g(b)) + kappa (b - a)^2 / 8. `evaluate` must be pure and
/// thread-safe.
struct SweepObjective {
    double period = 0.0;
    double lipschitz = 0.0;
    double curvature = 0.0;
    std::function<double(double)> evaluate;
};

struct SweepOptions {
    int initial_grid = 64;
    int max_rounds = 200;
    Execution execution = Execution::Parallel;
    /// An upper bound on sup g known from elsewhere; tightens the enclosure.
    double upper_cap = std::numeric_limits<double>::infinity();
};

struct SweepRound {
    double lower;
    double upper;
    int evaluations;  ///< cumulative
};

struct SweepResult {
    double lower = 0.0;   ///< g(argmax), the best evaluated value
    double upper = 0.0;   ///< certified bound on sup g
    double argmax = 0.0;  ///< smallest angle attaining `lower`
    int grid_evals = 0;
    int refinement_rounds = 0;
    std::vector<SweepRound> history;  ///< one entry per round, lower/upper monotone
};

/// Branch-and-bound enclosure of max g over one period.
///
/// Evaluates a uniform grid, bounds every interval with the Lipschitz and
/// curvature constants, and bisects every interval whose bound exceeds the
/// incumbent by more than `tol` until upper - lower <= tol. Grid points of a
/// round are evaluated concurrently under Execution::Parallel; the result is
/// bitwise identical to Execution::Serial.
///
/// Throws NumericalError if `max_rounds` is exhausted.
SweepResult certified_sweep(const SweepObjective& objective, double tol, const SweepOptions& options = {});

/// Evaluates `fn` on every angle, concurrently when requested and not
/// already inside a parallel region. The first exception (lowest index) is
/// rethrown after the loop.
std::vector<double> evaluate_all(const std::function<double(double)>& fn, const std::vector<double>& thetas,
                                 Execution execution);

}  // namespace numrad

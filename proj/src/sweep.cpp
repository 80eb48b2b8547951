#include "numrad/sweep.hpp"

#include "numrad/errors.hpp"
#include "numrad/parallel.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

namespace numrad {

namespace {

struct Interval {
    double a, ga, b, gb;
};

double interval_bound(const Interval& iv, double lipschitz, double curvature, double pad) {
    const double h = iv.b - iv.a;
    const double by_slope = 0.5 * (iv.ga + iv.gb) + 0.5 * lipschitz * h;
    const double by_curvature = std::max(iv.ga, iv.gb) + 0.125 * curvature * h * h;
    return std::min(by_slope, by_curvature) + pad;
}

}  // namespace

std::vector<double> evaluate_all(const std::function<double(double)>& fn, const std::vector<double>& thetas,
                                 Execution execution) {
    std::vector<double> values(thetas.size());
    parallel_for(thetas.size(), execution, [&](std::size_t i) { values[i] = fn(thetas[i]); });
    return values;
}

SweepResult certified_sweep(const SweepObjective& objective, double tol, const SweepOptions& options) {
    if (!(tol > 0.0)) {
        throw InvalidArgument("sweep tolerance must be positive");
    }
    if (!(objective.period > 0.0) || options.initial_grid < 2) {
        throw InvalidArgument("sweep needs a positive period and at least two grid points");
    }
    const double lipschitz = std::max(objective.lipschitz, 0.0);
    const double curvature = std::max(objective.curvature, 0.0);

    SweepResult out;
    double best = -std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    auto absorb = [&](const std::vector<double>& thetas, const std::vector<double>& values) {
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            if (values[i] > best || (values[i] == best && thetas[i] < best_theta)) {
                best = values[i];
                best_theta = thetas[i];
            }
        }
        out.grid_evals += static_cast<int>(thetas.size());
    };

    const int n0 = options.initial_grid;
    std::vector<double> thetas(n0);
    for (int j = 0; j < n0; ++j) {
        thetas[j] = objective.period * j / n0;
    }
    const std::vector<double> values = evaluate_all(objective.evaluate, thetas, options.execution);
    absorb(thetas, values);

    std::vector<Interval> live;
    live.reserve(n0);
    for (int j = 0; j < n0; ++j) {
        const bool last = j + 1 == n0;
        live.push_back({thetas[j], values[j], last ? objective.period : thetas[j + 1], last ? values[0] : values[j + 1]});
    }

    double scale = lipschitz;
    for (double v : values) {
        scale = std::max(scale, std::abs(v));
    }
    // evaluations carry a few ulps of ||M|| rounding error
    const double pad = 32.0 * DBL_EPSILON * scale;

    double upper = std::numeric_limits<double>::infinity();
    for (int round = 0;; ++round) {
        double bound = best;
        std::vector<double> bounds(live.size());
        for (std::size_t i = 0; i < live.size(); ++i) {
            bounds[i] = interval_bound(live[i], lipschitz, curvature, pad);
            bound = std::max(bound, bounds[i]);
        }
        upper = std::max(best, std::min({upper, bound, options.upper_cap}));
        out.history.push_back({best, upper, out.grid_evals});
        out.refinement_rounds = round;
        if (upper - best <= tol) {
            break;
        }
        if (round == options.max_rounds) {
            throw NumericalError("certified sweep did not close the gap within " + std::to_string(options.max_rounds) +
                                 " refinement rounds");
        }

        // classify against the incumbent before evaluating new points
        std::vector<Interval> kept;
        std::vector<Interval> split;
        std::vector<double> mids;
        for (std::size_t i = 0; i < live.size(); ++i) {
            if (bounds[i] <= best) {
                continue;  // cannot beat the incumbent
            }
            if (bounds[i] <= best + tol) {
                kept.push_back(live[i]);
            } else {
                split.push_back(live[i]);
                mids.push_back(0.5 * (live[i].a + live[i].b));
            }
        }
        const std::vector<double> mid_values = evaluate_all(objective.evaluate, mids, options.execution);
        absorb(mids, mid_values);

        std::vector<Interval> next;
        next.reserve(kept.size() + 2 * split.size());
        next.insert(next.end(), kept.begin(), kept.end());
        for (std::size_t i = 0; i < split.size(); ++i) {
            next.push_back({split[i].a, split[i].ga, mids[i], mid_values[i]});
            next.push_back({mids[i], mid_values[i], split[i].b, split[i].gb});
        }
        live = std::move(next);
    }

    out.lower = best;
    out.upper = upper;
    out.argmax = best_theta;
    return out;
}

}  // namespace numrad

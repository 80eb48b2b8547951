#include "numrad/fov.hpp"

#include "numrad/cartesian.hpp"
#include "numrad/eigen.hpp"
#include "numrad/errors.hpp"
#include "numrad/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace numrad {

namespace {

// Solves (M - sigma I) y = x by Gaussian elimination with partial pivoting.
std::vector<Complex> shifted_solve(const ComplexMatrix& m, double sigma, std::vector<Complex> x) {
    const std::size_t n = m.dim();
    std::vector<Complex> a(m.entries().begin(), m.entries().end());
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] -= sigma;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) {
                piv = r;
            }
        }
        if (a[piv * n + col] == Complex{}) {
            throw IllConditioned("singular shifted system in inverse iteration");
        }
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a[piv * n + c], a[col * n + c]);
            }
            std::swap(x[piv], x[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = a[r * n + col] / a[col * n + col];
            for (std::size_t c = col; c < n; ++c) {
                a[r * n + c] -= f * a[col * n + c];
            }
            x[r] -= f * x[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex acc = x[i];
        for (std::size_t c = i + 1; c < n; ++c) {
            acc -= a[i * n + c] * x[c];
        }
        x[i] = acc / a[i * n + i];
    }
    return x;
}

double eigen_residual(const ComplexMatrix& m, const std::vector<Complex>& x, double& value) {
    std::vector<Complex> mx = mat_vec(m, x);
    Complex q = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        q += std::conj(x[i]) * mx[i];
    }
    value = q.real();
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx[i] -= value * x[i];
    }
    return vector_norm(mx);
}

void normalise(std::vector<Complex>& x) {
    const double len = vector_norm(x);
    for (Complex& z : x) {
        z /= len;
    }
}

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(Complex z, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) {
        return std::abs(z - a);
    }
    const double t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
}

// Andrew's monotone chain; returns the hull counter-clockwise without repeats.
std::vector<Complex> convex_hull(std::vector<Complex> pts) {
    std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) {
        return pts;
    }
    std::vector<Complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Complex& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) {
            --k;
        }
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

TopEigenpair top_eigenpair(const HermitianWitness& hm) {
    const ComplexMatrix& m = hm.matrix();
    const std::size_t n = m.dim();
    const EigenSystem sys = hermitian_eigensystem(hm);
    const double scale = std::max(1.0, m.frobenius_norm());
    const double target = 1e-10 * scale;

    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = sys.vectors(i, n - 1);
    }
    double value = sys.values.back();
    double residual = eigen_residual(m, x, value);

    // shift just above the top eigenvalue: M - sigma I stays nonsingular
    const double sigma = sys.values.back() + 1e-8 * scale;
    for (int it = 0; it < 3; ++it) {
        std::vector<Complex> y = shifted_solve(m, sigma, x);
        normalise(y);
        double y_value = 0.0;
        const double y_residual = eigen_residual(m, y, y_value);
        if (y_residual <= residual) {
            x = std::move(y);
            residual = y_residual;
            value = y_value;
        }
        if (residual <= target) {
            break;
        }
    }
    if (residual > target) {
        throw IllConditioned("top eigenvector residual " + std::to_string(residual) + " above 1e-10");
    }
    return TopEigenpair{value, std::move(x), residual};
}

FovBoundary fov_boundary(const ComplexMatrix& t, int n_angles, Execution execution) {
    if (n_angles < 8) {
        throw InvalidArgument("fov_boundary needs at least 8 angles");
    }
    FovBoundary out;
    const auto count = static_cast<std::size_t>(n_angles);
    out.angles.resize(count);
    out.points.resize(count);
    out.support_values.resize(count);
    parallel_for(count, execution, [&](std::size_t j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / n_angles;
        const TopEigenpair top = top_eigenpair(rotated_real_part(t, theta));
        const std::vector<Complex> tx = mat_vec(t, top.vector);
        Complex p = 0.0;
        for (std::size_t i = 0; i < tx.size(); ++i) {
            p += tx[i] * std::conj(top.vector[i]);
        }
        out.angles[j] = theta;
        out.points[j] = p;
        out.support_values[j] = top.value;
    });
    return out;
}

bool fov_contains(const FovBoundary& boundary, Complex z, double tol) {
    if (boundary.points.size() < 8) {
        throw InvalidArgument("fov_contains needs a boundary with at least 8 points");
    }
    const std::vector<Complex> hull = convex_hull(boundary.points);
    if (hull.size() == 1) {
        return std::abs(z - hull[0]) <= tol;
    }
    if (hull.size() == 2) {
        return segment_distance(z, hull[0], hull[1]) <= tol;
    }
    bool inside = true;
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Complex a = hull[i];
        const Complex b = hull[(i + 1) % hull.size()];
        if (cross(a, b, z) < 0.0) {
            inside = false;
        }
        nearest = std::min(nearest, segment_distance(z, a, b));
    }
    return inside || nearest <= tol;
}

}  // namespace numrad

#include "numrad/example.hpp"

#include "numrad/checks.hpp"
#include "numrad/fov.hpp"
#include "numrad/norms.hpp"
#include "numrad/radius.hpp"

#include <cmath>
#include <cstdio>

namespace numrad {

ComplexMatrix example_a() { return ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}}); }

ComplexMatrix example_b() { return ComplexMatrix::from_rows({{0.0, -1.0}, {0.0, 0.0}}); }

ComplexMatrix example_t() {
    const ComplexMatrix z = ComplexMatrix::zero(2);
    return block_2x2(z, example_a(), adjoint(example_b()), z);
}

std::vector<Complex> example_probe() {
    return {Complex(0.0, 0.5), Complex(0.5, 0.0), Complex(0.5, 0.0), Complex(0.5, 0.0)};
}

ExampleReport reproduce_example(double radius_tol, double strict_margin) {
    const ComplexMatrix a = example_a();
    const ComplexMatrix b = example_b();
    const ComplexMatrix t = example_t();

    ExampleReport r;
    r.strict_margin = strict_margin;
    r.norm_A_plus_B = spectral_norm(a + b);
    r.norm_A = spectral_norm(a);
    r.norm_B = spectral_norm(b);

    RadiusOptions opts;
    opts.execution = Execution::Serial;
    const RadiusCertificate wt = radius_certified(t, radius_tol, opts);
    r.two_w_T_lower = 2.0 * wt.lower;
    r.two_w_T_upper = 2.0 * wt.upper;
    const SweepResult sup = sup_two_sided_rotation(a, b, radius_tol);
    r.sup_rotation = 0.5 * (sup.lower + sup.upper);

    const std::vector<Complex> x = example_probe();
    r.rayleigh_probe = std::abs(rayleigh(t, x));

    const ComplexMatrix astar_b = adjoint(a) * b;
    const RadiusCertificate wab = radius_certified(astar_b, radius_tol, opts);
    r.w_AstarB = wab.midpoint();
    r.w_AstarB_lower = wab.lower;
    r.w_AstarB_upper = wab.upper;

    r.product_norms = r.norm_A * r.norm_B;
    r.paper_product_claim = (3.0 + std::sqrt(5.0)) / 2.0;
    r.product_discrepancy = std::abs(r.product_norms - r.paper_product_claim) > 1e-6;
    r.product_in_range = fov_contains(fov_boundary(astar_b, kDefaultFovAngles, Execution::Serial),
                                      Complex(r.product_norms, 0.0), 1e-9);

    r.strict_left = r.two_w_T_lower - r.norm_A_plus_B >= strict_margin;
    r.strict_right = (r.norm_A + r.norm_B) - r.two_w_T_upper >= strict_margin;
    return r;
}

std::vector<ExampleAssertion> example_assertions(const ExampleReport& r) {
    auto near = [](std::string name, double value, double expected, double tol) {
        return ExampleAssertion{std::move(name), value, expected, tol, std::abs(value - expected) <= tol};
    };
    std::vector<ExampleAssertion> out;
    out.push_back(near("norm_A_plus_B", r.norm_A_plus_B, 1.0, 1e-10));
    out.push_back(near("rayleigh_probe", r.rayleigh_probe, std::sqrt(10.0) / 4.0, 1e-12));
    out.push_back(near("w_AstarB", r.w_AstarB, (1.0 + std::sqrt(2.0)) / 2.0, 1e-9));
    out.push_back({"strict_left", r.two_w_T_lower - r.norm_A_plus_B, r.strict_margin, 0.0, r.strict_left});
    out.push_back({"strict_right", r.norm_A + r.norm_B - r.two_w_T_upper, r.strict_margin, 0.0, r.strict_right});
    const double floor = std::sqrt(10.0) / 2.0 - 1e-9;
    out.push_back({"two_w_T_above_probe", r.two_w_T_upper, floor, 0.0, r.two_w_T_upper >= floor});
    out.push_back({"product_outside_range", r.product_in_range ? 1.0 : 0.0, 0.0, 0.0, !r.product_in_range});
    return out;
}

std::string discrepancy_note(const ExampleReport& r) {
    if (!r.product_discrepancy) {
        return {};
    }
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "||A|| ||B|| computes to %.12g; the stated value %.12g is its square. "
                  "w(A*B) = %.12g stays below both, so the strict inequality stands either way.",
                  r.product_norms, r.paper_product_claim, r.w_AstarB);
    return buf;
}

}  // namespace numrad

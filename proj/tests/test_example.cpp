#include "numrad/example.hpp"
#include "numrad/norms.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace numrad;
using namespace testing_support;

namespace {

const ExampleReport& report() {
    static const ExampleReport r = reproduce_example();
    return r;
}

// sup over theta of ||e^{i theta} A + e^{-i theta} B|| on a fine grid
double dense_rotation_sup(double h) {
    const ComplexMatrix a = example_a();
    const ComplexMatrix b = example_b();
    double best = 0.0;
    for (double t = 0.0; t < M_PI; t += h) {
        const Complex e = std::polar(1.0, t);
        best = std::max(best, norm2x2(e * a + std::conj(e) * b));
    }
    return best;
}

}  // namespace

TEST_CASE("stated golden values") {
    const ExampleReport& r = report();
    CHECK(std::abs(r.norm_A_plus_B - 1.0) <= 1e-10);
    CHECK(std::abs(r.rayleigh_probe - std::sqrt(10.0) / 4.0) <= 1e-12);
    CHECK(std::abs(r.w_AstarB - (1.0 + std::sqrt(2.0)) / 2.0) <= 1e-9);
    CHECK(r.two_w_T_lower >= std::sqrt(10.0) / 2.0 - 1e-9);
    CHECK(r.strict_left);
    CHECK(r.strict_right);
    CHECK(r.two_w_T_lower - r.norm_A_plus_B >= 1e-6);
    CHECK(r.norm_A + r.norm_B - r.two_w_T_upper >= 1e-6);
}

TEST_CASE("norms of the two blocks") {
    const ExampleReport& r = report();
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(r.norm_A - golden) <= 1e-12);
    CHECK(std::abs(r.norm_B - 1.0) <= 1e-12);
    CHECK(std::abs(r.product_norms - golden) <= 1e-12);
    // the value quoted with the example is ||A||^2, not ||A|| ||B||
    CHECK(std::abs(r.paper_product_claim - golden * golden) <= 1e-12);
    CHECK(r.product_discrepancy);
    CHECK_FALSE(r.product_in_range);
    CHECK_FALSE(discrepancy_note(r).empty());
}

TEST_CASE("2w(T) against a dense rotation sweep and the rotation sup") {
    const ExampleReport& r = report();
    const double oracle = dense_rotation_sup(1e-5);
    CHECK(r.two_w_T_upper - r.two_w_T_lower <= 2e-10);
    CHECK(oracle <= r.two_w_T_upper + 1e-12);
    CHECK(std::abs(oracle - r.two_w_T_lower) <= 1e-8);
    CHECK(std::abs(r.sup_rotation - 0.5 * (r.two_w_T_lower + r.two_w_T_upper)) <= 2e-10);
    CHECK(std::abs(r.two_w_T_lower - (1.0 + std::sqrt(2.0))) <= 1e-9);
}

TEST_CASE("w(A*B) against the elliptical range") {
    const ExampleReport& r = report();
    const ComplexMatrix astar_b = adjoint(example_a()) * example_b();
    CHECK(max_entry_diff(astar_b, ComplexMatrix::from_rows({{0.0, -1.0}, {0.0, -1.0}})) == 0.0);
    CHECK(std::abs(r.w_AstarB - ellipse_radius2(astar_b)) <= 1e-8);
    CHECK(r.w_AstarB_lower <= r.w_AstarB);
    CHECK(r.w_AstarB <= r.w_AstarB_upper);
}

TEST_CASE("Rayleigh probe is a unit vector and sampling stays below 2w(T)") {
    const std::vector<Complex> x = example_probe();
    CHECK(std::abs(vector_norm(x) - 1.0) <= 1e-15);
    const double sampled = rayleigh_sample(example_t(), 200000, 7);
    CHECK(sampled <= 0.5 * report().two_w_T_upper);
    CHECK(sampled >= std::sqrt(10.0) / 4.0 - 1e-2);
}

TEST_CASE("every pinned assertion holds") {
    for (const ExampleAssertion& a : example_assertions(report())) {
        INFO(a.quantity);
        CHECK(a.ok);
    }
}

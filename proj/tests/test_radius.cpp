#include "numrad/cartesian.hpp"
#include "numrad/errors.hpp"
#include "numrad/instances.hpp"
#include "numrad/norms.hpp"
#include "numrad/radius.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

using namespace numrad;
using testing_support::random_matrix;

namespace {

const double kSqrt2 = std::sqrt(2.0);

bool encloses(const RadiusCertificate& c, double value, double tol) {
    return c.lower <= value + 1e-15 && value <= c.upper + 1e-15 && c.upper - c.lower <= tol;
}

}  // namespace

TEST_CASE("radius of Hermitian matrices is the norm") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix h = testing_support::random_hermitian(rng, 2 + trial % 7);
        const RadiusCertificate c = radius_certified(h, 1e-9);
        CHECK(encloses(c, spectral_norm(h), 1e-9));
        CHECK(c.lower <= c.upper);
    }
}

TEST_CASE("radius of the nilpotent 2x2 shift is one half") {
    const RadiusCertificate c = radius_certified(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}), 1e-9);
    CHECK(encloses(c, 0.5, 1e-9));
}

TEST_CASE("radius of [[0, -1], [0, -1]]") {
    const ComplexMatrix t = ComplexMatrix::from_rows({{0.0, -1.0}, {0.0, -1.0}});
    const double expected = (1.0 + kSqrt2) / 2.0;
    CHECK(encloses(radius_certified(t, 1e-9), expected, 1e-9));
    CHECK(encloses(radius_via_circle(t, 1e-9), expected, 1e-9));
    CHECK(std::abs(testing_support::ellipse_radius2(t) - expected) <= 1e-9);
}

TEST_CASE("radius of the Jordan block: 3/2 confirmed by independent oracles") {
    const ComplexMatrix t = ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
    const double dense = testing_support::dense_sweep2(t, 1e-5);
    const double sampled = testing_support::rayleigh_sample(t, 1000000, 42);
    const double ellipse = testing_support::ellipse_radius2(t);
    // the dense grid misses the peak by at most L h^2 / 8-type terms
    CHECK(std::abs(dense - 1.5) <= 1e-9);
    CHECK(sampled <= 1.5 + 1e-12);
    CHECK(sampled >= 1.5 - 1e-3);
    CHECK(std::abs(ellipse - 1.5) <= 1e-9);

    const RadiusCertificate c = radius_certified(t, 1e-9);
    CHECK(encloses(c, 1.5, 1e-9));
    CHECK(c.lower >= dense - 1e-12);
    CHECK(c.upper >= sampled);
}

TEST_CASE("2x2 radii match the elliptical range on random matrices") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix t = random_matrix(rng, 2);
        const RadiusCertificate c = radius_certified(t, 1e-9);
        const double ellipse = testing_support::ellipse_radius2(t);
        CHECK(ellipse <= c.upper + 1e-9);
        CHECK(ellipse >= c.lower - 1e-9);
    }
}

TEST_CASE("certificate fields and angle range") {
    std::mt19937_64 rng(2);
    const ComplexMatrix t = random_matrix(rng, 6);
    const RadiusCertificate c = radius_certified(t, 1e-9);
    CHECK(c.theta_star >= 0.0);
    CHECK(c.theta_star < std::numbers::pi);
    CHECK(c.grid_evals >= 64);
    // lower is an attained value of g at theta_star
    const CartesianPair p = decompose(t);
    CHECK(c.lower == rotated_norm(p.h.matrix(), p.k.matrix(), c.theta_star));
    CHECK(c.width() <= 1e-9);
    CHECK(c.midpoint() == 0.5 * (c.lower + c.upper));
}

TEST_CASE("circle and theta parametrisations agree") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix t = random_matrix(rng, 2 + trial % 7);
        const double a = radius_certified(t, 1e-9).midpoint();
        const double b = radius_via_circle(t, 1e-9).midpoint();
        CHECK(std::abs(a - b) <= 2e-9);
    }
    std::mt19937_64 hr(4);
    const ComplexMatrix h = testing_support::random_hermitian(hr, 5);
    CHECK(encloses(radius_via_circle(h, 1e-9), spectral_norm(h), 1e-9));
}

TEST_CASE("parallel and serial certificates are bitwise identical") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix t = random_matrix(rng, 3 + trial);
        RadiusOptions serial;
        serial.execution = Execution::Serial;
        const RadiusCertificate a = radius_certified(t, 1e-9, serial);
        const RadiusCertificate b = radius_certified(t, 1e-9);
        CHECK(std::memcmp(&a.lower, &b.lower, sizeof(double)) == 0);
        CHECK(std::memcmp(&a.upper, &b.upper, sizeof(double)) == 0);
        CHECK(a.theta_star == b.theta_star);
        CHECK(a.grid_evals == b.grid_evals);
    }
}

TEST_CASE("tolerance errors") {
    const ComplexMatrix t = ComplexMatrix::identity(2);
    CHECK_THROWS_AS(radius_certified(t, 0.0), InvalidArgument);
    CHECK_THROWS_AS(radius_certified(t, -1.0), InvalidArgument);
    CHECK_THROWS_AS(radius_certified(t, 1e-20), Unachievable);
    CHECK_THROWS_AS(radius_via_circle(t, 1e-20), Unachievable);
    CHECK_NOTHROW(radius_certified(t, 1e-12));
    // Unachievable is a numerical error
    CHECK_THROWS_AS(radius_certified(t, 1e-20), NumericalError);
}

TEST_CASE("zero matrix") {
    const RadiusCertificate c = radius_certified(ComplexMatrix::zero(3), 1e-9);
    CHECK(c.lower == 0.0);
    CHECK(c.upper == 0.0);
}

TEST_CASE("Rayleigh lower bound examples") {
    const ComplexMatrix z = ComplexMatrix::zero(2);
    const ComplexMatrix a = ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{0.0, -1.0}, {0.0, 0.0}});
    const ComplexMatrix t = block_2x2(z, a, adjoint(b), z);
    const std::vector<std::vector<Complex>> forced{{Complex(0.0, 0.5), 0.5, 0.5, 0.5}};
    CHECK(rayleigh_lower_bound(t, 10, 1, forced) >= std::sqrt(10.0) / 4.0 - 1e-15);

    const ComplexMatrix d = ComplexMatrix::diagonal(std::vector<Complex>{5.0, 1.0});
    CHECK(rayleigh_lower_bound(d, 500, 9) <= 5.0);
    const std::vector<std::vector<Complex>> e1{{1.0, 0.0}};
    CHECK(rayleigh_lower_bound(d, 1, 9, e1) == 5.0);
    CHECK(rayleigh_lower_bound(d, 50, 3) == rayleigh_lower_bound(d, 50, 3));
    CHECK_THROWS_AS(rayleigh_lower_bound(d, 0, 1), InvalidArgument);
    const std::vector<std::vector<Complex>> wrong{{1.0}};
    CHECK_THROWS_AS(rayleigh_lower_bound(d, 1, 1, wrong), DimensionError);
}

TEST_CASE("enclosure soundness and the norm sandwiches on 1000 random matrices") {
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 7;
        const Family family = kAllFamilies[(trial / 7) % kAllFamilies.size()];
        const ComplexMatrix t = gen_instance({n, static_cast<std::uint64_t>(trial), family, 0.5, {}}).matrix;
        const RadiusCertificate c = radius_certified(t, 1e-9);
        const double norm_t = spectral_norm(t);
        CHECK(rayleigh_lower_bound(t, 200, static_cast<std::uint64_t>(trial)) <= c.upper);
        CHECK(c.width() <= 1e-9);
        CHECK(c.lower >= norm_t / 2.0 - 1e-8);
        CHECK(c.upper <= norm_t + 1e-8);
        CHECK(spectral_norm(t + adjoint(t)) / 2.0 <= c.upper + 1e-8);
        CHECK(spectral_norm(t - adjoint(t)) / 2.0 <= c.upper + 1e-8);
    }
}

TEST_CASE("weak unitary invariance and scaling") {
    std::mt19937_64 rng(6);
    const double tol = 1e-9;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 7;
        const auto seed = static_cast<std::uint64_t>(trial);
        const ComplexMatrix t = gen_instance({n, seed, Family::GeneralComplex, 0.0, {}}).matrix;
        const ComplexMatrix u = gen_instance({n, seed + 77, Family::Unitary, 0.0, {}}).matrix;
        const double w = radius_certified(t, tol).midpoint();
        CHECK(std::abs(radius_certified(adjoint(u) * t * u, tol).midpoint() - w) <= 2.0 * tol);
        const Complex c = testing_support::random_unit_vector(rng, 1)[0] * (0.1 + trial % 5);
        CHECK(std::abs(radius_certified(c * t, tol).midpoint() - std::abs(c) * w) <= 2.0 * tol * std::max(1.0, std::abs(c)));
    }
}

TEST_CASE("refinement is monotone on logged runs") {
    RadiusOptions no_caps;
    no_caps.a_priori_caps = false;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 7;
        const ComplexMatrix t = gen_instance({n, static_cast<std::uint64_t>(trial), Family::GeneralComplex, 0.0, {}}).matrix;
        const RadiusCertificate c = radius_certified(t, 1e-9, no_caps);
        REQUIRE(c.history.size() == static_cast<std::size_t>(c.refinement_rounds) + 1);
        for (std::size_t i = 1; i < c.history.size(); ++i) {
            CHECK(c.history[i].lower >= c.history[i - 1].lower);
            CHECK(c.history[i].upper <= c.history[i - 1].upper);
        }
    }
}

TEST_CASE("a-priori caps never cut below the attained value") {
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 7;
        const Family family = kAllFamilies[trial % kAllFamilies.size()];
        const ComplexMatrix t = gen_instance({n, static_cast<std::uint64_t>(trial) + 500, family, 0.3, {}}).matrix;
        RadiusOptions no_caps;
        no_caps.a_priori_caps = false;
        // uncapped sweeps of flat g (disk-shaped ranges) are slow at tight tolerances
        const RadiusCertificate capped = radius_certified(t, 1e-9);
        const RadiusCertificate plain = radius_certified(t, 1e-7, no_caps);
        CHECK(capped.upper >= plain.lower);
        CHECK(plain.upper >= capped.lower);
    }
}

TEST_CASE("square-zero matrices have radius half the norm") {
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix a = gen_instance({2 + trial % 7, static_cast<std::uint64_t>(trial), Family::SquareZero, 0.0, {}}).matrix;
        const RadiusCertificate c = radius_certified(a, 1e-9);
        CHECK(std::abs(c.midpoint() - spectral_norm(a) / 2.0) <= 2e-9);
    }
}

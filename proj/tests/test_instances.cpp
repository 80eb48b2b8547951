#include "numrad/eigen.hpp"
#include "numrad/errors.hpp"
#include "numrad/instances.hpp"
#include "numrad/norms.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace numrad;

TEST_CASE("family names round-trip") {
    for (Family f : kAllFamilies) {
        CHECK(parse_family(family_name(f)) == f);
    }
    CHECK_THROWS_AS(parse_family("orthogonal"), ParseError);
}

TEST_CASE("square-zero draws are nilpotent") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const ComplexMatrix a = gen_instance({2 + static_cast<int>(seed % 15), seed, Family::SquareZero, 0.0, {}}).matrix;
        const double n = spectral_norm(a);
        CHECK(spectral_norm(a * a) <= 1e-12 * n * n);
        CHECK(n > 0.0);
    }
}

TEST_CASE("positive draws are bounded below by the certified m") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const GeneratedMatrix g = gen_instance({2 + static_cast<int>(seed % 15), seed, Family::PositiveBoundedBelow, 0.5, {}});
        CHECK(g.certified_m == 0.5);
        const EigenResult eig = hermitian_eigenvalues(HermitianWitness::certify(g.matrix));
        CHECK(eig.values.front() >= 0.5 - 1e-10);
        CHECK(hermitian_asymmetry(g.matrix) == 0.0);
    }
}

TEST_CASE("unitary draws are unitary") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 2 + static_cast<int>(seed % 15);
        const ComplexMatrix u = gen_instance({n, seed, Family::Unitary, 0.0, {}}).matrix;
        const ComplexMatrix id = ComplexMatrix::identity(static_cast<std::size_t>(n));
        CHECK(spectral_norm(adjoint(u) * u - id) <= 1e-10);
        CHECK(spectral_norm(u * adjoint(u) - id) <= 1e-10);
    }
}

TEST_CASE("Hermitian draws are exactly Hermitian and general draws have unit variance") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(hermitian_asymmetry(gen_instance({6, seed, Family::Hermitian, 0.0, {}}).matrix) == 0.0);
    }
    double sum = 0.0;
    int count = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const ComplexMatrix g = gen_instance({8, seed, Family::GeneralComplex, 0.0, {}}).matrix;
        for (const Complex& z : g.entries()) {
            sum += std::norm(z);
            ++count;
        }
    }
    CHECK(std::abs(sum / count - 1.0) <= 0.02);
}

TEST_CASE("generation is deterministic per seed and distinct across seeds") {
    for (Family f : kAllFamilies) {
        const InstanceSpec spec{5, 1234, f, 0.4, {}};
        CHECK(gen_instance(spec).matrix == gen_instance(spec).matrix);
        InstanceSpec other = spec;
        other.seed = 1235;
        CHECK_FALSE(gen_instance(spec).matrix == gen_instance(other).matrix);
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(gen_instance({1, 0, Family::GeneralComplex, 0.0, {}}), InvalidArgument);
    CHECK_THROWS_AS(gen_instance({17, 0, Family::GeneralComplex, 0.0, {}}), InvalidArgument);
    CHECK_THROWS_AS(gen_instance({3, 0, Family::PositiveBoundedBelow, 0.0, {}}), InvalidArgument);
    CHECK_THROWS_AS(gen_instance({3, 0, Family::PositiveBoundedBelow, -1.0, {}}), InvalidArgument);
}

TEST_CASE("validators reject matrices outside the family") {
    const ComplexMatrix j = ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
    CHECK_FALSE(validate_instance({2, 0, Family::Hermitian, 0.0, {}}, j).empty());
    CHECK_FALSE(validate_instance({2, 0, Family::Unitary, 0.0, {}}, j).empty());
    CHECK_FALSE(validate_instance({2, 0, Family::SquareZero, 0.0, {}}, j).empty());
    CHECK_FALSE(validate_instance({2, 0, Family::PositiveBoundedBelow, 2.0, {}}, ComplexMatrix::identity(2)).empty());
    CHECK(validate_instance({2, 0, Family::PositiveBoundedBelow, 1.0, {}}, ComplexMatrix::identity(2)).empty());
    CHECK(validate_instance({2, 0, Family::GeneralComplex, 0.0, {}}, j).empty());
}

TEST_CASE("validators never fail on 100000 seeded draws") {
    int failures = 0;
    for (std::uint64_t i = 0; i < 100000; ++i) {
        const Family f = kAllFamilies[i % kAllFamilies.size()];
        const int dim = 2 + static_cast<int>((i / kAllFamilies.size()) % 7);
        const InstanceSpec spec{dim, derive_seed(99, i), f, 0.1 + 0.9 * static_cast<double>(i % 10) / 9.0, {}};
        try {
            const GeneratedMatrix g = gen_instance(spec);
            if (!validate_instance(spec, g.matrix).empty()) {
                ++failures;
            }
        } catch (const NumericalError&) {
            ++failures;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("seed derivation") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        seen.insert(derive_seed(7, i));
    }
    CHECK(seen.size() == 10000);
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
    CHECK(derive_seed(7, 3) != derive_seed(8, 3));
    CHECK(stable_hash("basic_bounds") == stable_hash("basic_bounds"));
    CHECK(stable_hash("basic_bounds") != stable_hash("prop_l1"));
    // FNV-1a reference value for the empty string
    CHECK(stable_hash("") == 0xcbf29ce484222325ULL);
}

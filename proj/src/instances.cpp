#include "numrad/instances.hpp"

#include "numrad/eigen.hpp"
#include "numrad/errors.hpp"
#include "numrad/norms.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace numrad {

namespace {

std::vector<Complex> normal_vector(std::mt19937_64& rng, std::size_t n) {
    std::vector<Complex> v(n);
    for (Complex& z : v) {
        z = complex_normal(rng);
    }
    return v;
}

ComplexMatrix normal_matrix(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    std::vector<Complex> e(n * n);
    for (Complex& z : e) {
        z = scale * complex_normal(rng);
    }
    return ComplexMatrix(n, std::move(e));
}

// Column-wise modified Gram-Schmidt, applied twice for orthogonality to
// working precision. The implied R has a positive real diagonal.
ComplexMatrix orthonormalise(const ComplexMatrix& g) {
    const std::size_t n = g.dim();
    std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            cols[j][i] = g(i, j);
        }
    }
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    dot += std::conj(cols[k][i]) * cols[j][i];
                }
                for (std::size_t i = 0; i < n; ++i) {
                    cols[j][i] -= dot * cols[k][i];
                }
            }
            const double len = vector_norm(cols[j]);
            if (len == 0.0) {
                throw NumericalError("rank-deficient draw in unitary generator");
            }
            for (Complex& z : cols[j]) {
                z /= len;
            }
        }
    }
    std::vector<Complex> e(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            e[i * n + j] = cols[j][i];
        }
    }
    return ComplexMatrix(n, std::move(e));
}

}  // namespace

std::string_view family_name(Family f) noexcept {
    switch (f) {
        case Family::GeneralComplex: return "general_complex";
        case Family::Hermitian: return "hermitian";
        case Family::PositiveBoundedBelow: return "positive_bounded_below";
        case Family::Unitary: return "unitary";
        case Family::SquareZero: return "square_zero";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : kAllFamilies) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw ParseError("unknown matrix family '" + std::string(name) + "'");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t stable_hash(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Complex complex_normal(std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

GeneratedMatrix gen_instance(const InstanceSpec& spec) {
    if (spec.dim < 2 || spec.dim > 16) {
        throw InvalidArgument("instance dimension must lie in [2, 16]");
    }
    const auto n = static_cast<std::size_t>(spec.dim);
    std::mt19937_64 rng(spec.seed);

    GeneratedMatrix out{ComplexMatrix::zero(n), 0.0};
    switch (spec.family) {
        case Family::GeneralComplex:
            out.matrix = normal_matrix(rng, n);
            break;
        case Family::Hermitian:
            out.matrix = HermitianWitness::hermitian_part(normal_matrix(rng, n)).matrix();
            break;
        case Family::PositiveBoundedBelow: {
            if (!(spec.m > 0.0)) {
                throw InvalidArgument("PositiveBoundedBelow needs m > 0");
            }
            const ComplexMatrix r = normal_matrix(rng, n, 1.0 / std::sqrt(static_cast<double>(n)));
            const ComplexMatrix gram = HermitianWitness::hermitian_part(adjoint(r) * r).matrix();
            out.matrix = gram + ComplexMatrix::diagonal(std::vector<Complex>(n, spec.m));
            out.certified_m = spec.m;
            break;
        }
        case Family::Unitary:
            out.matrix = orthonormalise(normal_matrix(rng, n));
            break;
        case Family::SquareZero: {
            const std::vector<Complex> u = normal_vector(rng, n);
            std::vector<Complex> v = normal_vector(rng, n);
            // v <- v - (u*v / u*u) u, twice, so that v*u = 0 to working precision
            for (int pass = 0; pass < 2; ++pass) {
                Complex uv = 0.0;
                double uu = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    uv += std::conj(u[i]) * v[i];
                    uu += std::norm(u[i]);
                }
                for (std::size_t i = 0; i < n; ++i) {
                    v[i] -= (uv / uu) * u[i];
                }
            }
            std::vector<Complex> e(n * n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    e[i * n + j] = u[i] * std::conj(v[j]);
                }
            }
            out.matrix = ComplexMatrix(n, std::move(e));
            break;
        }
    }
    const std::string problem = validate_instance(spec, out.matrix);
    if (!problem.empty()) {
        throw NumericalError("generated instance failed validation: " + problem);
    }
    return out;
}

std::string validate_instance(const InstanceSpec& spec, const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    switch (spec.family) {
        case Family::GeneralComplex:
            return {};
        case Family::Hermitian: {
            const double asym = hermitian_asymmetry(m);
            if (asym > Tolerances{}.hermitian * m.max_abs()) {
                return "asymmetry " + std::to_string(asym);
            }
            return {};
        }
        case Family::PositiveBoundedBelow: {
            if (hermitian_asymmetry(m) > Tolerances{}.hermitian * m.max_abs()) {
                return "X is not Hermitian";
            }
            const ComplexMatrix shifted = m - ComplexMatrix::diagonal(std::vector<Complex>(n, spec.m));
            const EigenResult eig = hermitian_eigenvalues(HermitianWitness::hermitian_part(shifted));
            if (eig.values.front() < -1e-10) {
                return "X - mI has eigenvalue " + std::to_string(eig.values.front());
            }
            return {};
        }
        case Family::Unitary: {
            const double gap = max_entry_diff(adjoint(m) * m, ComplexMatrix::identity(n));
            const double err = spectral_norm(adjoint(m) * m - ComplexMatrix::identity(n));
            if (err > 1e-10 || gap > 1e-10) {
                return "U*U deviates from I by " + std::to_string(err);
            }
            return {};
        }
        case Family::SquareZero: {
            const double norm_a = spectral_norm(m);
            const double norm_sq = spectral_norm(m * m);
            if (norm_sq > 1e-12 * norm_a * norm_a) {
                return "||A^2|| = " + std::to_string(norm_sq);
            }
            return {};
        }
    }
    return "unknown family";
}

}  // namespace numrad

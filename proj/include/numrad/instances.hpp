#pragma once

#include "numrad/matrix.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace numrad {

enum class Family { GeneralComplex, Hermitian, PositiveBoundedBelow, Unitary, SquareZero };

inline constexpr std::array<Family, 5> kAllFamilies = {Family::GeneralComplex, Family::Hermitian,
                                                       Family::PositiveBoundedBelow, Family::Unitary,
                                                       Family::SquareZero};

std::string_view family_name(Family f) noexcept;
/// Accepts the names produced by family_name. Throws ParseError.
Family parse_family(std::string_view name);

/// Recipe for one seeded random matrix.
struct InstanceSpec {
    int dim = 2;  ///< in [2, 16]
    std::uint64_t seed = 0;
    Family family = Family::GeneralComplex;
    double m = 0.0;              ///< lower bound for PositiveBoundedBelow
    std::optional<double> p;     ///< Schatten exponent, when the check uses one
};

struct GeneratedMatrix {
    ComplexMatrix matrix;
    double certified_m = 0.0;  ///< X >= certified_m I (PositiveBoundedBelow only)
};

/// Draws the matrix described by `spec` and validates the family constraint:
///   GeneralComplex        i.i.d. complex standard normal entries
///   Hermitian             (G + G*)/2
///   PositiveBoundedBelow  mI + R*R, R complex normal scaled by 1/sqrt(n)
///   Unitary               Gram-Schmidt orthonormalisation of a complex normal matrix
///   SquareZero            u v* with <u, v> = 0
/// Throws InvalidArgument on a bad spec and NumericalError if validation fails.
GeneratedMatrix gen_instance(const InstanceSpec& spec);

/// Re-checks the family constraint on an arbitrary matrix; returns an empty
/// string when it holds, otherwise a description of the violation.
std::string validate_instance(const InstanceSpec& spec, const ComplexMatrix& m);

/// splitmix64 finaliser applied to base + golden-ratio * (index + 1); used to
/// derive independent per-trial and per-operand seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

/// Stable 64-bit FNV-1a hash (check ids -> seed streams).
std::uint64_t stable_hash(std::string_view text) noexcept;

/// Complex standard normal: real and imaginary parts N(0, 1/2).
Complex complex_normal(std::mt19937_64& rng);

}  // namespace numrad

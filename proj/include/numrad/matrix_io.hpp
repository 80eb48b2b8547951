#pragma once

#include "numrad/matrix.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace numrad {

/// Renders "a+bi" / "a-bi" with `digits` significant digits. 17 digits
/// round-trip bit-exactly through parse_complex.
std::string format_complex(Complex z, int digits = 17);

/// Parses "a+bi", "a-bi", or a bare real "a". Throws ParseError.
Complex parse_complex(std::string_view token);

/// Matrix text format: the dimension n on the first line, then n lines of n
/// whitespace-separated entries.
std::string format_matrix(const ComplexMatrix& m, int digits = 17);
ComplexMatrix parse_matrix(std::string_view text);
/// Consecutive matrix blocks, e.g. the output of format_matrix called twice.
std::vector<ComplexMatrix> parse_matrix_sequence(std::string_view text);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

}  // namespace numrad

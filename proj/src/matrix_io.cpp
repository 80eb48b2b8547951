#include "numrad/matrix_io.hpp"

#include "numrad/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace numrad {

namespace {

std::string format_real(double v, int digits) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

const char* parse_real(const char* first, const char* last, double& out, std::string_view token) {
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc() || res.ptr == first) {
        throw ParseError("malformed number in entry '" + std::string(token) + "'");
    }
    if (!std::isfinite(out)) {
        throw ParseError("non-finite number in entry '" + std::string(token) + "'");
    }
    return res.ptr;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

}  // namespace

std::string format_complex(Complex z, int digits) {
    std::string s = format_real(z.real(), digits);
    s += std::signbit(z.imag()) ? '-' : '+';
    s += format_real(std::abs(z.imag()), digits);
    s += 'i';
    return s;
}

Complex parse_complex(std::string_view token) {
    const char* first = token.data();
    const char* last = first + token.size();
    if (first == last) {
        throw ParseError("empty matrix entry");
    }
    if (*first == '+') {
        ++first;
    }
    double re = 0.0;
    const char* p = parse_real(first, last, re, token);
    if (p == last) {
        return {re, 0.0};
    }
    if (*p != '+' && *p != '-') {
        throw ParseError("expected '+' or '-' before imaginary part in '" + std::string(token) + "'");
    }
    const bool negative = *p == '-';
    ++p;
    if (p == last || *p == '+' || *p == '-') {
        throw ParseError("malformed imaginary part in '" + std::string(token) + "'");
    }
    double im = 0.0;
    p = parse_real(p, last, im, token);
    if (p == last || *p != 'i' || p + 1 != last) {
        throw ParseError("imaginary part must end in 'i' in '" + std::string(token) + "'");
    }
    return {re, negative ? -im : im};
}

std::string format_matrix(const ComplexMatrix& m, int digits) {
    std::string out = std::to_string(m.dim()) + "\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j > 0) {
                out += ' ';
            }
            out += format_complex(m(i, j), digits);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string_view> nonblank_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!split_ws(line).empty()) {
            lines.push_back(line);
        }
        start = end + 1;
    }
    return lines;
}

// Parses the block whose header is lines[pos]; advances pos past its rows.
ComplexMatrix parse_block(const std::vector<std::string_view>& lines, std::size_t& pos) {
    const auto header = split_ws(lines[pos]);
    std::size_t n = 0;
    if (header.size() != 1) {
        throw ParseError("first line must hold the dimension only");
    }
    const auto res = std::from_chars(header[0].data(), header[0].data() + header[0].size(), n);
    if (res.ec != std::errc() || res.ptr != header[0].data() + header[0].size() || n == 0) {
        throw ParseError("invalid dimension '" + std::string(header[0]) + "'");
    }
    if (lines.size() - pos - 1 < n) {
        throw ParseError("expected " + std::to_string(n) + " matrix rows, found " +
                         std::to_string(lines.size() - pos - 1));
    }
    std::vector<Complex> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto tokens = split_ws(lines[pos + r + 1]);
        if (tokens.size() != n) {
            throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(tokens.size()) +
                             " entries, expected " + std::to_string(n));
        }
        for (std::string_view tok : tokens) {
            entries.push_back(parse_complex(tok));
        }
    }
    pos += n + 1;
    return ComplexMatrix(n, std::move(entries));
}

}  // namespace

ComplexMatrix parse_matrix(std::string_view text) {
    const auto lines = nonblank_lines(text);
    if (lines.empty()) {
        throw ParseError("empty matrix text");
    }
    std::size_t pos = 0;
    ComplexMatrix m = parse_block(lines, pos);
    if (pos != lines.size()) {
        throw ParseError("expected " + std::to_string(m.dim()) + " matrix rows, found " +
                         std::to_string(lines.size() - 1));
    }
    return m;
}

std::vector<ComplexMatrix> parse_matrix_sequence(std::string_view text) {
    const auto lines = nonblank_lines(text);
    std::vector<ComplexMatrix> out;
    std::size_t pos = 0;
    while (pos < lines.size()) {
        out.push_back(parse_block(lines, pos));
    }
    return out;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open matrix file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

}  // namespace numrad

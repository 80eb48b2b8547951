#include "numrad/cartesian.hpp"

#include "numrad/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace numrad {

namespace {

ComplexMatrix real_combination(const ComplexMatrix& a, double alpha, const ComplexMatrix& b, double beta) {
    const std::size_t n = a.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] = alpha * a.entries()[k] + beta * b.entries()[k];
    }
    return ComplexMatrix(n, std::move(e));
}

bool should_crosscheck() {
#ifndef NDEBUG
    return true;
#else
    thread_local unsigned counter = 0;
    return (counter++ % 64) == 0;
#endif
}

}  // namespace

CartesianPair decompose(const ComplexMatrix& t) {
    const std::size_t n = t.dim();
    std::vector<Complex> k(n * n);
    const Complex half_over_i{0.0, -0.5};  // 1/(2i)
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            k[i * n + j] = (t(i, j) - std::conj(t(j, i))) * half_over_i;
        }
    }
    return CartesianPair{HermitianWitness::hermitian_part(t),
                         HermitianWitness::certify(ComplexMatrix(n, std::move(k)))};
}

ComplexMatrix recompose(const CartesianPair& pair) {
    if (pair.h.dim() != pair.k.dim()) {
        throw DimensionError("recompose: H and K differ in dimension");
    }
    return pair.h.matrix() + Complex{0.0, 1.0} * pair.k.matrix();
}

double rotated_real_part_discrepancy(const ComplexMatrix& t, double theta) {
    const ComplexMatrix direct = HermitianWitness::hermitian_part(std::polar(1.0, theta) * t).matrix();
    const CartesianPair pair = decompose(t);
    const ComplexMatrix via_parts =
        real_combination(pair.h.matrix(), std::cos(theta), pair.k.matrix(), -std::sin(theta));
    return max_entry_diff(direct, via_parts);
}

HermitianWitness rotated_real_part(const ComplexMatrix& t, double theta) {
    HermitianWitness out = HermitianWitness::hermitian_part(std::polar(1.0, theta) * t);
    if (should_crosscheck()) {
        const double gap = rotated_real_part_discrepancy(t, theta);
        if (gap > 1e-13 * std::max(1.0, t.max_abs())) {
            throw NumericalError("Re(e^{i theta} T) formulas disagree by " + std::to_string(gap));
        }
    }
    return out;
}

HermitianWitness circle_combination(const CartesianPair& pair, double alpha, double beta) {
    if (std::abs(alpha * alpha + beta * beta - 1.0) > 1e-12) {
        throw InvalidArgument("circle_combination: (alpha, beta) must lie on the unit circle");
    }
    if (pair.h.dim() != pair.k.dim()) {
        throw DimensionError("circle_combination: H and K differ in dimension");
    }
    return HermitianWitness::certify(real_combination(pair.h.matrix(), alpha, pair.k.matrix(), beta));
}

}  // namespace numrad

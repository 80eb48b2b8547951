#pragma once

#include "numrad/matrix.hpp"

#include <string>
#include <vector>

namespace numrad {

/// Quantities of the strict triangle-inequality example
/// A = [[1, 1], [0, 1]], B = [[0, -1], [0, 0]], T = [[0, A], [B*, 0]].
struct ExampleReport {
    double norm_A = 0.0;
    double norm_B = 0.0;
    double norm_A_plus_B = 0.0;
    double two_w_T_lower = 0.0;
    double two_w_T_upper = 0.0;
    double sup_rotation = 0.0;  ///< sup_theta ||e^{i theta} A + e^{-i theta} B||
    double rayleigh_probe = 0.0;  ///< |<Tx, x>| at x = [i, 1, 1, 1]/2
    double w_AstarB = 0.0;
    double w_AstarB_lower = 0.0;
    double w_AstarB_upper = 0.0;
    double product_norms = 0.0;       ///< ||A|| ||B|| as computed
    double paper_product_claim = 0.0; ///< (3 + sqrt 5)/2, the value stated with the example
    bool product_discrepancy = false; ///< the two differ by more than 1e-6
    bool product_in_range = false;    ///< ||A|| ||B|| inside the closure of W(A*B)
    bool strict_left = false;         ///< ||A + B|| < 2w(T) by at least the margin
    bool strict_right = false;        ///< 2w(T) < ||A|| + ||B|| by at least the margin
    double strict_margin = 1e-6;
};

ComplexMatrix example_a();
ComplexMatrix example_b();
/// [[0, A], [B*, 0]].
ComplexMatrix example_t();
/// [i, 1, 1, 1]/2.
std::vector<Complex> example_probe();

ExampleReport reproduce_example(double radius_tol = 1e-10, double strict_margin = 1e-6);

struct ExampleAssertion {
    std::string quantity;
    double value;
    double expected;
    double tolerance;
    bool ok;
};

/// The pinned golden comparisons; every entry must hold.
std::vector<ExampleAssertion> example_assertions(const ExampleReport& report);

std::string discrepancy_note(const ExampleReport& report);

}  // namespace numrad

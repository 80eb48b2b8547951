#pragma once

#include "numrad/instances.hpp"
#include "numrad/matrix.hpp"
#include "numrad/sweep.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace numrad {

enum class Relation { LessEq, Equal };

/// lhs <= rhs or lhs == rhs outside the main chain.
struct SideRelation {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    Relation relation = Relation::LessEq;
    double slack = 0.0;  ///< rhs - lhs, or -|rhs - lhs| for Equal
};

/// Certified radius computed inside a check together with its Rayleigh audit.
struct CertificateAudit {
    std::string label;
    double lower = 0.0;
    double upper = 0.0;
    double requested_tol = 0.0;
    double rayleigh = 0.0;  ///< best |<Mx, x>| over the random probes
    bool monotone = true;   ///< lower/upper monotone across refinement rounds
};

struct Flag {
    std::string label;
    bool value = false;
};

/// One evaluated inequality chain.
///
/// `slacks[i]` belongs to the pair (chain_values[i], chain_values[i + 1]):
/// right - left for LessEq and -|right - left| for Equal. `min_slack` also
/// covers the side relations and upper - rayleigh of every certificate, and
/// pass holds exactly when min_slack >= -tolerance.
struct CheckOutcome {
    std::string check_id;
    InstanceSpec instance;
    std::vector<std::string> chain_labels;
    std::vector<double> chain_values;
    std::vector<Relation> relations;
    std::vector<double> slacks;
    std::vector<SideRelation> sides;
    std::vector<CertificateAudit> certificates;
    std::vector<Flag> flags;
    double min_slack = 0.0;
    bool pass = true;
    double tolerance = 0.0;

    bool flag(std::string_view label) const;
};

struct CheckContext {
    double tol = 1e-8;          ///< slack tolerance
    double radius_tol = 1e-9;   ///< width requested from every certificate and sweep
    double strict_margin = 1e-6;
    int rayleigh_probes = 200;
    std::uint64_t probe_seed = 0;
    Execution execution = Execution::Serial;
    Tolerances tolerances{};
};

/// Norm used by the commutator check: p = kSchattenInfinity is the operator norm.
struct NormSelector {
    double p;
};

CheckOutcome check_basic_bounds(const ComplexMatrix& t, const CheckContext& ctx);
CheckOutcome check_cartesian_sup(const ComplexMatrix& t, const CheckContext& ctx);
CheckOutcome check_real_imag_bounds(const ComplexMatrix& t, const CheckContext& ctx);
CheckOutcome check_remark_iii_iv(const ComplexMatrix& t, const CheckContext& ctx);
CheckOutcome check_triangle_refinement(const ComplexMatrix& a, const ComplexMatrix& b, const CheckContext& ctx);
CheckOutcome check_equality_conditions(const ComplexMatrix& a, const ComplexMatrix& b, const CheckContext& ctx);
CheckOutcome check_commutator_lemma(const ComplexMatrix& y, const ComplexMatrix& x, double m, NormSelector norm,
                                    const CheckContext& ctx);
CheckOutcome check_prop_l1(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x, double m,
                           const CheckContext& ctx);
CheckOutcome check_prop_schatten(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x, double m,
                                 double p, const CheckContext& ctx);
CheckOutcome check_thm_2_8(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x, double m,
                           const CheckContext& ctx);
CheckOutcome check_cor_2_4(const ComplexMatrix& u, const ComplexMatrix& v, const ComplexMatrix& x, double m,
                           const CheckContext& ctx);
CheckOutcome check_lemma_offdiag(const ComplexMatrix& x, const ComplexMatrix& y, const CheckContext& ctx);
CheckOutcome check_main_chain(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x, double m,
                              const CheckContext& ctx);

inline constexpr std::array<std::string_view, 13> kCheckIds = {
    "basic_bounds",      "cartesian_sup",       "real_imag_bounds", "remark_iii_iv", "triangle_refinement",
    "equality_conditions", "commutator_lemma",  "prop_l1",          "prop_schatten", "thm_2_8",
    "cor_2_4",           "lemma_offdiag",       "main_chain"};

bool is_check_id(std::string_view id) noexcept;

/// Draws the operands of `check_id` from `spec` and runs the check.
///
/// The spec's family is used for operands without a hypothesis; operands
/// with one are drawn from the family the hypothesis names (Hermitian A, B
/// for the two propositions, unitary U, V for the corollary, and X >= mI
/// with m = spec.m wherever a positive X appears). The recorded instance
/// reflects any such substitution of the family.
CheckOutcome run_check(std::string_view check_id, const InstanceSpec& spec, const CheckContext& ctx);

/// sup_theta ||e^{i theta} A + e^{-i theta} B|| enclosed to `tol`.
SweepResult sup_two_sided_rotation(const ComplexMatrix& a, const ComplexMatrix& b, double tol,
                                   Execution execution = Execution::Serial);
/// sup_theta ||P + e^{i theta} Q|| enclosed to `tol`.
SweepResult sup_one_sided_rotation(const ComplexMatrix& p, const ComplexMatrix& q, double tol,
                                   Execution execution = Execution::Serial);

}  // namespace numrad

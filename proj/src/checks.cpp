#include "numrad/checks.hpp"

#include "numrad/cartesian.hpp"
#include "numrad/errors.hpp"
#include "numrad/norms.hpp"
#include "numrad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace numrad {

namespace {

double slack_of(double lhs, double rhs, Relation r) {
    return r == Relation::LessEq ? rhs - lhs : -std::abs(rhs - lhs);
}

class OutcomeBuilder {
public:
    OutcomeBuilder(std::string_view id, const CheckContext& ctx) : ctx_(ctx) {
        out_.check_id = std::string(id);
        out_.tolerance = ctx.tol;
    }

    /// Certified w(M); records the audit and returns the interval midpoint.
    double radius(std::string label, const ComplexMatrix& m, double tol = 0.0) {
        return certificate(std::move(label), m, tol).midpoint();
    }

    RadiusCertificate certificate(std::string label, const ComplexMatrix& m, double tol = 0.0) {
        RadiusOptions opts;
        opts.execution = ctx_.execution;
        opts.tolerances = ctx_.tolerances;
        const double requested = tol > 0.0 ? tol : ctx_.radius_tol;
        RadiusCertificate cert = radius_certified(m, requested, opts);
        CertificateAudit audit;
        audit.lower = cert.lower;
        audit.upper = cert.upper;
        audit.requested_tol = requested;
        audit.rayleigh =
            rayleigh_lower_bound(m, ctx_.rayleigh_probes, derive_seed(ctx_.probe_seed, stable_hash(label)));
        for (std::size_t i = 1; i < cert.history.size(); ++i) {
            if (cert.history[i].lower < cert.history[i - 1].lower || cert.history[i].upper > cert.history[i - 1].upper) {
                audit.monotone = false;
            }
        }
        audit.label = std::move(label);
        out_.certificates.push_back(std::move(audit));
        return cert;
    }

    double norm(const ComplexMatrix& m) const { return spectral_norm(m, ctx_.tolerances); }
    double schatten(const ComplexMatrix& m, double p) const { return schatten_norm(m, p, ctx_.tolerances); }

    void chain(std::vector<std::string> labels, std::vector<double> values, std::vector<Relation> relations) {
        out_.chain_labels = std::move(labels);
        out_.chain_values = std::move(values);
        out_.relations = std::move(relations);
    }
    void chain(std::vector<std::string> labels, std::vector<double> values) {
        std::vector<Relation> rel(values.size() - 1, Relation::LessEq);
        chain(std::move(labels), std::move(values), std::move(rel));
    }

    void side(std::string label, double lhs, double rhs, Relation r) {
        out_.sides.push_back({std::move(label), lhs, rhs, r, slack_of(lhs, rhs, r)});
    }

    void flag(std::string label, bool value) { out_.flags.push_back({std::move(label), value}); }

    const CheckContext& ctx() const { return ctx_; }

    CheckOutcome finish() {
        double min_slack = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < out_.chain_values.size(); ++i) {
            const double s = slack_of(out_.chain_values[i], out_.chain_values[i + 1], out_.relations[i]);
            out_.slacks.push_back(s);
            min_slack = std::min(min_slack, s);
        }
        for (const SideRelation& s : out_.sides) {
            min_slack = std::min(min_slack, s.slack);
        }
        for (const CertificateAudit& c : out_.certificates) {
            min_slack = std::min(min_slack, c.upper - c.rayleigh);
        }
        out_.min_slack = min_slack;
        out_.pass = min_slack >= -out_.tolerance;
        return std::move(out_);
    }

private:
    CheckOutcome out_;
    const CheckContext& ctx_;
};

void require_same(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": operands differ in dimension");
    }
}

void require_m(double m) {
    if (!(m > 0.0)) {
        throw InvalidArgument("the lower bound m must be positive");
    }
}

ComplexMatrix zero_like(const ComplexMatrix& a) { return ComplexMatrix::zero(a.dim()); }

}  // namespace

bool CheckOutcome::flag(std::string_view label) const {
    for (const Flag& f : flags) {
        if (f.label == label) {
            return f.value;
        }
    }
    throw InvalidArgument("no flag named '" + std::string(label) + "'");
}

bool is_check_id(std::string_view id) noexcept {
    return std::find(kCheckIds.begin(), kCheckIds.end(), id) != kCheckIds.end();
}

SweepResult sup_two_sided_rotation(const ComplexMatrix& a, const ComplexMatrix& b, double tol, Execution execution) {
    require_same(a, b, "sup_two_sided_rotation");
    // e^{i theta} A + e^{-i theta} B flips sign at theta + pi
    const double bound = spectral_norm(a) + spectral_norm(b);
    SweepObjective obj{std::numbers::pi, bound, bound, [&](double theta) {
                           const Complex e(std::cos(theta), std::sin(theta));
                           return spectral_norm(e * a + std::conj(e) * b);
                       }};
    SweepOptions opts;
    opts.execution = execution;
    return certified_sweep(obj, tol, opts);
}

SweepResult sup_one_sided_rotation(const ComplexMatrix& p, const ComplexMatrix& q, double tol, Execution execution) {
    require_same(p, q, "sup_one_sided_rotation");
    const double bound = spectral_norm(q);
    SweepObjective obj{2.0 * std::numbers::pi, bound, bound, [&](double theta) {
                           return spectral_norm(p + Complex(std::cos(theta), std::sin(theta)) * q);
                       }};
    SweepOptions opts;
    opts.execution = execution;
    return certified_sweep(obj, tol, opts);
}

CheckOutcome check_basic_bounds(const ComplexMatrix& t, const CheckContext& ctx) {
    OutcomeBuilder b("basic_bounds", ctx);
    const double norm_t = b.norm(t);
    const double w = b.radius("w(T)", t);
    b.chain({"||T||/2", "w(T)", "||T||"}, {0.5 * norm_t, w, norm_t});
    return b.finish();
}

CheckOutcome check_cartesian_sup(const ComplexMatrix& t, const CheckContext& ctx) {
    OutcomeBuilder b("cartesian_sup", ctx);
    const double w_theta = b.radius("w(T) over theta", t);
    RadiusOptions opts;
    opts.execution = ctx.execution;
    opts.tolerances = ctx.tolerances;
    const RadiusCertificate circle = radius_via_circle(t, ctx.radius_tol, opts);
    b.chain({"sup_theta ||Re(e^{i theta} T)||", "sup_{a^2+b^2=1} ||aH + bK||"}, {w_theta, circle.midpoint()},
            {Relation::Equal});
    return b.finish();
}

CheckOutcome check_real_imag_bounds(const ComplexMatrix& t, const CheckContext& ctx) {
    OutcomeBuilder b("real_imag_bounds", ctx);
    const double w = b.radius("w(T)", t);
    const double re = 0.5 * b.norm(t + adjoint(t));
    const double im = 0.5 * b.norm(t - adjoint(t));
    b.chain({"||T + T*||/2", "w(T)"}, {re, w});
    b.side("||T - T*||/2 <= w(T)", im, w, Relation::LessEq);
    return b.finish();
}

CheckOutcome check_remark_iii_iv(const ComplexMatrix& t, const CheckContext& ctx) {
    OutcomeBuilder b("remark_iii_iv", ctx);
    const CartesianPair pair = decompose(t);
    const ComplexMatrix& h = pair.h.matrix();
    const ComplexMatrix& k = pair.k.matrix();
    const ComplexMatrix mixed = adjoint(t) * t + t * adjoint(t);
    const double norm_mixed = b.norm(mixed);
    const double norm_h = b.norm(h);
    const double norm_k = b.norm(k);
    // w enters squared, so its enclosure is tightened by the size of T
    const double w = b.radius("w(T)", t, ctx.radius_tol / std::max(1.0, 2.0 * b.norm(t)));
    b.chain({"||T*T + TT*||/4", "(||H||^2 + ||K||^2)/2", "w(T)^2", "||T*T + TT*||/2"},
            {0.25 * norm_mixed, 0.5 * (norm_h * norm_h + norm_k * norm_k), w * w, 0.5 * norm_mixed});
    b.side("||T*T + TT*||/4 = ||H^2 + K^2||/2", 0.25 * norm_mixed, 0.5 * b.norm(h * h + k * k), Relation::Equal);
    return b.finish();
}

CheckOutcome check_triangle_refinement(const ComplexMatrix& a, const ComplexMatrix& bm, const CheckContext& ctx) {
    require_same(a, bm, "check_triangle_refinement");
    OutcomeBuilder b("triangle_refinement", ctx);
    const ComplexMatrix z = zero_like(a);
    const RadiusCertificate cert = b.certificate("w([0 A; B* 0])", block_2x2(z, a, adjoint(bm), z));
    const double two_w = 2.0 * cert.midpoint();
    const double norm_sum = b.norm(a + bm);
    const double sum_norms = b.norm(a) + b.norm(bm);
    b.chain({"||A + B||", "2w([0 A; B* 0])", "||A|| + ||B||"}, {norm_sum, two_w, sum_norms});

    const SweepResult sup = sup_two_sided_rotation(a, bm, ctx.radius_tol, ctx.execution);
    b.side("2w([0 A; B* 0]) = sup_theta ||e^{i theta} A + e^{-i theta} B||", two_w, 0.5 * (sup.lower + sup.upper),
           Relation::Equal);
    b.flag("strict_left", 2.0 * cert.lower - norm_sum >= ctx.strict_margin);
    b.flag("strict_right", sum_norms - 2.0 * cert.upper >= ctx.strict_margin);
    return b.finish();
}

CheckOutcome check_equality_conditions(const ComplexMatrix& a, const ComplexMatrix& bm, const CheckContext& ctx) {
    require_same(a, bm, "check_equality_conditions");
    OutcomeBuilder b("equality_conditions", ctx);
    const ComplexMatrix z = zero_like(a);
    const ComplexMatrix s = a + bm;
    const double w1 = b.radius("w([0 A; B* 0])", block_2x2(z, a, adjoint(bm), z));
    const double w2 = b.radius("w([0 B; A* 0])", block_2x2(z, bm, adjoint(a), z));
    const double w3 = b.radius("w([0 A+B; (A+B)* 0])", block_2x2(z, s, adjoint(s), z));
    const double w4 = b.radius("w([0 A; 0 0])", block_2x2(z, a, z, z));
    const double w5 = b.radius("w([0 0; B* 0])", block_2x2(z, z, adjoint(bm), z));
    const double norm_sum = b.norm(s);
    const double sum_norms = b.norm(a) + b.norm(bm);

    b.chain({"w([0 A+B; (A+B)* 0])", "w([0 A; B* 0]) + w([0 B; A* 0])", "2(w([0 A; 0 0]) + w([0 0; B* 0]))"},
            {w3, w1 + w2, 2.0 * (w4 + w5)});
    b.side("w([0 A+B; (A+B)* 0]) = ||A + B||", w3, norm_sum, Relation::Equal);
    b.side("2(w([0 A; 0 0]) + w([0 0; B* 0])) = ||A|| + ||B||", 2.0 * (w4 + w5), sum_norms, Relation::Equal);
    b.side("w([0 A; B* 0]) = w([0 B; A* 0])", w1, w2, Relation::Equal);

    // ||A|| + ||B|| - ||A + B|| splits into the residuals of the two
    // w-equalities, so each side of the equivalence controls the other.
    const double gap = sum_norms - norm_sum;
    const double first = (w1 + w2) - w3;
    const double second = w4 + w5 - w1;
    const double tol = ctx.tol;
    const bool norm_equality = gap <= tol;
    const bool w_equalities = std::abs(first) <= tol && std::abs(second) <= tol;
    const double worst = std::max(std::abs(first), std::abs(second));
    const bool violated = (norm_equality && worst > 4.0 * tol) || (w_equalities && gap > 4.0 * tol);
    b.side("||A|| + ||B|| - ||A + B|| = sum of w-equality residuals", gap, first + 2.0 * second,
           Relation::Equal);
    b.side("equivalence violations", violated ? 1.0 : 0.0, 0.0, Relation::LessEq);
    b.flag("norm_equality", norm_equality);
    b.flag("w_equalities", w_equalities);
    return b.finish();
}

CheckOutcome check_commutator_lemma(const ComplexMatrix& y, const ComplexMatrix& x, double m, NormSelector norm,
                                    const CheckContext& ctx) {
    require_same(y, x, "check_commutator_lemma");
    require_m(m);
    OutcomeBuilder b("commutator_lemma", ctx);
    b.chain({"m N(Y)", "N(YX + XY)/2"}, {m * b.schatten(y, norm.p), 0.5 * b.schatten(y * x + x * y, norm.p)});
    return b.finish();
}

CheckOutcome check_prop_l1(const ComplexMatrix& a, const ComplexMatrix& bm, const ComplexMatrix& x, double m,
                           const CheckContext& ctx) {
    require_same(a, bm, "check_prop_l1");
    require_same(a, x, "check_prop_l1");
    require_m(m);
    OutcomeBuilder b("prop_l1", ctx);
    const ComplexMatrix c = a * x - x * bm;
    b.chain({"m ||A - B||", "w(AX - XB)", "||AX - XB||"}, {m * b.norm(a - bm), b.radius("w(AX - XB)", c), b.norm(c)});
    return b.finish();
}

CheckOutcome check_prop_schatten(const ComplexMatrix& a, const ComplexMatrix& bm, const ComplexMatrix& x, double m,
                                 double p, const CheckContext& ctx) {
    require_same(a, bm, "check_prop_schatten");
    require_same(a, x, "check_prop_schatten");
    require_m(m);
    OutcomeBuilder b("prop_schatten", ctx);
    const ComplexMatrix c = a * x - x * bm;
    const double scale = std::pow(static_cast<double>(a.dim()), -1.0 / p);
    b.chain({"m n^(-1/p) ||A - B||_p", "w(AX - XB)", "||AX - XB||_p"},
            {m * scale * b.schatten(a - bm, p), b.radius("w(AX - XB)", c), b.schatten(c, p)});
    return b.finish();
}

CheckOutcome check_thm_2_8(const ComplexMatrix& a, const ComplexMatrix& bm, const ComplexMatrix& x, double m,
                           const CheckContext& ctx) {
    require_same(a, bm, "check_thm_2_8");
    require_same(a, x, "check_thm_2_8");
    require_m(m);
    OutcomeBuilder b("thm_2_8", ctx);
    const ComplexMatrix c = a * x - x * bm;
    const ComplexMatrix d = adjoint(a) * x - x * adjoint(bm);
    const ComplexMatrix z = zero_like(a);
    b.chain({"m ||A - B||", "w([0 AX-XB; A*X-XB* 0])", "(||AX - XB|| + ||A*X - XB*||)/2"},
            {m * b.norm(a - bm), b.radius("w([0 C; D 0])", block_2x2(z, c, d, z)), 0.5 * (b.norm(c) + b.norm(d))});
    return b.finish();
}

CheckOutcome check_cor_2_4(const ComplexMatrix& u, const ComplexMatrix& v, const ComplexMatrix& x, double m,
                           const CheckContext& ctx) {
    require_same(u, v, "check_cor_2_4");
    require_same(u, x, "check_cor_2_4");
    require_m(m);
    OutcomeBuilder b("cor_2_4", ctx);
    const ComplexMatrix c = u * x - x * v;
    const ComplexMatrix d = adjoint(u) * x - x * adjoint(v);
    const ComplexMatrix z = zero_like(u);
    const double norm_c = b.norm(c);
    b.chain({"m ||U - V||", "w([0 UX-XV; U*X-XV* 0])", "||UX - XV||"},
            {m * b.norm(u - v), b.radius("w([0 C; D 0])", block_2x2(z, c, d, z)), norm_c});
    b.side("||U*X - XV*|| = ||UX - XV||", b.norm(d), norm_c, Relation::Equal);
    return b.finish();
}

CheckOutcome check_lemma_offdiag(const ComplexMatrix& x, const ComplexMatrix& y, const CheckContext& ctx) {
    require_same(x, y, "check_lemma_offdiag");
    OutcomeBuilder b("lemma_offdiag", ctx);
    const ComplexMatrix z = zero_like(x);
    const ComplexMatrix c = x + y;
    b.chain({"w(X + Y)", "2w([0 X; Y 0])"},
            {b.radius("w(X + Y)", c), 2.0 * b.radius("w([0 X; Y 0])", block_2x2(z, x, y, z))});
    b.side("w([0 C; C 0]) = w(C)", b.radius("w([0 C; C 0])", block_2x2(z, c, c, z)), b.radius("w(C)", c),
           Relation::Equal);
    return b.finish();
}

CheckOutcome check_main_chain(const ComplexMatrix& a, const ComplexMatrix& bm, const ComplexMatrix& x, double m,
                              const CheckContext& ctx) {
    require_same(a, bm, "check_main_chain");
    require_same(a, x, "check_main_chain");
    require_m(m);
    OutcomeBuilder b("main_chain", ctx);
    const ComplexMatrix re_a = decompose(a).h.matrix();
    const ComplexMatrix re_b = decompose(bm).h.matrix();
    const ComplexMatrix p = a * x - x * bm;
    const ComplexMatrix q = x * a - bm * x;
    const SweepResult sup = sup_one_sided_rotation(p, q, ctx.radius_tol, ctx.execution);
    b.chain({"m ||Re A - Re B||", "w(Re(A) X - X Re(B))", "sup_theta ||P + e^{i theta} Q||/2", "(||P|| + ||Q||)/2"},
            {m * b.norm(re_a - re_b), b.radius("w(Re(A) X - X Re(B))", re_a * x - x * re_b),
             0.25 * (sup.lower + sup.upper), 0.5 * (b.norm(p) + b.norm(q))});
    return b.finish();
}

CheckOutcome run_check(std::string_view check_id, const InstanceSpec& spec, const CheckContext& ctx) {
    if (!is_check_id(check_id)) {
        throw InvalidArgument("unknown check '" + std::string(check_id) + "'");
    }
    InstanceSpec recorded = spec;
    auto draw = [&](std::uint64_t slot, Family family) {
        InstanceSpec s = spec;
        s.seed = derive_seed(spec.seed, slot);
        s.family = family;
        return gen_instance(s).matrix;
    };
    auto free_operand = [&](std::uint64_t slot) { return draw(slot, spec.family); };
    auto positive = [&](std::uint64_t slot) { return draw(slot, Family::PositiveBoundedBelow); };
    const double p = spec.p.value_or(kSchattenInfinity);

    CheckOutcome out;
    if (check_id == "basic_bounds") {
        out = check_basic_bounds(free_operand(0), ctx);
    } else if (check_id == "cartesian_sup") {
        out = check_cartesian_sup(free_operand(0), ctx);
    } else if (check_id == "real_imag_bounds") {
        out = check_real_imag_bounds(free_operand(0), ctx);
    } else if (check_id == "remark_iii_iv") {
        out = check_remark_iii_iv(free_operand(0), ctx);
    } else if (check_id == "triangle_refinement") {
        out = check_triangle_refinement(free_operand(0), free_operand(1), ctx);
    } else if (check_id == "equality_conditions") {
        out = check_equality_conditions(free_operand(0), free_operand(1), ctx);
    } else if (check_id == "commutator_lemma") {
        out = check_commutator_lemma(free_operand(0), positive(2), spec.m, NormSelector{p}, ctx);
    } else if (check_id == "prop_l1") {
        recorded.family = Family::Hermitian;
        out = check_prop_l1(draw(0, Family::Hermitian), draw(1, Family::Hermitian), positive(2), spec.m, ctx);
    } else if (check_id == "prop_schatten") {
        recorded.family = Family::Hermitian;
        out = check_prop_schatten(draw(0, Family::Hermitian), draw(1, Family::Hermitian), positive(2), spec.m, p,
                                  ctx);
    } else if (check_id == "thm_2_8") {
        out = check_thm_2_8(free_operand(0), free_operand(1), positive(2), spec.m, ctx);
    } else if (check_id == "cor_2_4") {
        recorded.family = Family::Unitary;
        out = check_cor_2_4(draw(0, Family::Unitary), draw(1, Family::Unitary), positive(2), spec.m, ctx);
    } else if (check_id == "lemma_offdiag") {
        out = check_lemma_offdiag(free_operand(0), free_operand(1), ctx);
    } else {
        out = check_main_chain(free_operand(0), free_operand(1), positive(2), spec.m, ctx);
    }
    out.instance = recorded;
    return out;
}

}  // namespace numrad

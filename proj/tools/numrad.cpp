#include "numrad/cartesian.hpp"
#include "numrad/errors.hpp"
#include "numrad/example.hpp"
#include "numrad/fov.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/radius.hpp"
#include "numrad/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace numrad;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerification = 4;

std::string num(double v, int digits) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

int cmd_radius(const std::string& path, double tol, const std::string& method, bool as_json, int digits) {
    const ComplexMatrix t = read_matrix_file(path);
    const RadiusCertificate c = method == "circle" ? radius_via_circle(t, tol) : radius_certified(t, tol);
    if (as_json) {
        json doc{{"method", method},      {"tol", tol},
                 {"lower", c.lower},      {"upper", c.upper},
                 {"midpoint", c.midpoint()}, {"width", c.width()},
                 {"theta_star", c.theta_star}, {"grid_evals", c.grid_evals},
                 {"refinement_rounds", c.refinement_rounds}};
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "lower = " << num(c.lower, digits) << "\n"
              << "upper = " << num(c.upper, digits) << "\n"
              << "midpoint = " << num(c.midpoint(), digits) << "\n"
              << "theta_star = " << num(c.theta_star, digits) << "\n"
              << "grid_evals = " << c.grid_evals << "\n"
              << "refinement_rounds = " << c.refinement_rounds << "\n";
    return kExitOk;
}

int cmd_decompose(const std::string& path) {
    const CartesianPair pair = decompose(read_matrix_file(path));
    // 17 digits so that H + iK re-parses to the input
    std::cout << format_matrix(pair.h.matrix(), 17) << "\n" << format_matrix(pair.k.matrix(), 17);
    return kExitOk;
}

int cmd_fov(const std::string& path, int angles, int digits) {
    const FovBoundary b = fov_boundary(read_matrix_file(path), angles);
    std::cout << "theta,re,im,support_value\n";
    for (std::size_t j = 0; j < b.points.size(); ++j) {
        std::cout << num(b.angles[j], digits) << "," << num(b.points[j].real(), digits) << ","
                  << num(b.points[j].imag(), digits) << "," << num(b.support_values[j], digits) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& config_path, bool as_json, bool serial, bool no_wall_time) {
    SuiteConfig config = config_path.empty() ? SuiteConfig{} : read_suite_config(config_path);
    if (const char* seed = std::getenv("NUMRAD_SEED")) {
        const std::string_view text(seed);
        std::uint64_t value = 0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
        if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
            throw ParseError("NUMRAD_SEED must be an unsigned integer");
        }
        config.master_seed = value;
    }
    const TrialReport report = run_suite(config, serial ? Execution::Serial : Execution::Parallel);
    std::cout << (as_json ? render_report_json(report, !no_wall_time) : render_report(report, !no_wall_time));
    return report.pass ? kExitOk : kExitVerification;
}

int cmd_repro_example(bool as_json, int digits, double strict_margin) {
    const ExampleReport r = reproduce_example(1e-10, strict_margin);
    const auto checks = example_assertions(r);
    const std::string note = discrepancy_note(r);
    if (as_json) {
        json doc{{"norm_A", r.norm_A},
                 {"norm_B", r.norm_B},
                 {"norm_A_plus_B", r.norm_A_plus_B},
                 {"two_w_T", {r.two_w_T_lower, r.two_w_T_upper}},
                 {"sup_rotation", r.sup_rotation},
                 {"rayleigh_probe", r.rayleigh_probe},
                 {"w_AstarB", r.w_AstarB},
                 {"product_norms", r.product_norms},
                 {"paper_product_claim", r.paper_product_claim},
                 {"product_discrepancy", r.product_discrepancy},
                 {"product_in_range", r.product_in_range},
                 {"strict_left", r.strict_left},
                 {"strict_right", r.strict_right},
                 {"note", note}};
        json list = json::array();
        for (const auto& a : checks) {
            list.push_back({{"quantity", a.quantity}, {"value", a.value}, {"ok", a.ok}});
        }
        doc["assertions"] = list;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "norm_A = " << num(r.norm_A, digits) << "\n"
                  << "norm_B = " << num(r.norm_B, digits) << "\n"
                  << "norm_A_plus_B = " << num(r.norm_A_plus_B, digits) << "\n"
                  << "two_w_T = [" << num(r.two_w_T_lower, digits) << ", " << num(r.two_w_T_upper, digits) << "]\n"
                  << "sup_rotation = " << num(r.sup_rotation, digits) << "\n"
                  << "rayleigh_probe = " << num(r.rayleigh_probe, digits) << "\n"
                  << "w_AstarB = " << num(r.w_AstarB, digits) << "\n"
                  << "product_norms = " << num(r.product_norms, digits) << "\n"
                  << "paper_product_claim = " << num(r.paper_product_claim, digits) << "\n"
                  << "product_in_range = " << (r.product_in_range ? "true" : "false") << "\n"
                  << "strict_left = " << (r.strict_left ? "true" : "false") << "\n"
                  << "strict_right = " << (r.strict_right ? "true" : "false") << "\n";
        if (!note.empty()) {
            std::cout << "note: " << note << "\n";
        }
    }
    int status = kExitOk;
    for (const auto& a : checks) {
        if (!a.ok) {
            std::cerr << "assertion failed: " << a.quantity << " = " << num(a.value, 17) << "\n";
            status = kExitVerification;
        }
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified numerical radius and inequality verification"};
    app.require_subcommand(1);
    bool full_precision = false;
    app.add_flag("--full-precision", full_precision, "print 17 significant digits instead of 12");

    std::string matrix_path;
    double tol = kDefaultRadiusTol;
    std::string method = "theta";
    bool as_json = false;
    auto* radius = app.add_subcommand("radius", "certified numerical radius of a matrix file");
    radius->add_option("file", matrix_path, "matrix file")->required();
    radius->add_option("--tol", tol, "enclosure width")->capture_default_str();
    radius->add_option("--method", method, "theta or circle")->check(CLI::IsMember({"theta", "circle"}));
    radius->add_flag("--json", as_json, "JSON output");
    radius->add_flag("--full-precision", full_precision, "17 significant digits");

    auto* decomp = app.add_subcommand("decompose", "print H and K with T = H + iK");
    decomp->add_option("file", matrix_path, "matrix file")->required();

    int angles = kDefaultFovAngles;
    std::string out_format = "csv";
    auto* fov = app.add_subcommand("fov", "boundary sample of the numerical range");
    fov->add_option("file", matrix_path, "matrix file")->required();
    fov->add_option("--angles", angles, "number of angles (>= 8)")->capture_default_str();
    fov->add_option("--out", out_format, "output format")->check(CLI::IsMember({"csv"}));
    fov->add_flag("--full-precision", full_precision, "17 significant digits");

    std::string config_path;
    bool serial = false;
    bool no_wall_time = false;
    auto* verify = app.add_subcommand("verify", "run the inequality suite");
    verify->add_option("--config", config_path, "suite config file");
    verify->add_flag("--json", as_json, "JSON output");
    verify->add_flag("--serial", serial, "single-threaded reference run");
    verify->add_flag("--no-wall-time", no_wall_time, "omit wall time for byte-stable output");

    auto* repro = app.add_subcommand("repro-example", "recompute the strict triangle-inequality example");
    repro->add_flag("--json", as_json, "JSON output");
    repro->add_flag("--full-precision", full_precision, "17 significant digits");
    double strict_margin = 1e-6;
    repro->add_option("--strict-margin", strict_margin, "gap required by the strict inequalities")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    const int digits = full_precision ? 17 : 12;
    try {
        if (*radius) return cmd_radius(matrix_path, tol, method, as_json, digits);
        if (*decomp) return cmd_decompose(matrix_path);
        if (*fov) return cmd_fov(matrix_path, angles, digits);
        if (*verify) return cmd_verify(config_path, as_json, serial, no_wall_time);
        return cmd_repro_example(as_json, digits, strict_margin);
    } catch (const numrad::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const numrad::DimensionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const numrad::InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitParse;
    } catch (const numrad::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

#include "numrad/suite.hpp"

#include "numrad/errors.hpp"
#include "numrad/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

namespace numrad {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> items;
    std::string current;
    for (char c : value) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!current.empty()) {
                items.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        items.push_back(std::move(current));
    }
    return items;
}

template <typename T>
T parse_number(std::string_view text, std::string_view key) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("bad value '" + std::string(text) + "' for " + std::string(key));
    }
    return value;
}

double parse_p(std::string_view text) {
    if (text == "inf" || text == "infinity") {
        return kSchattenInfinity;
    }
    const auto p = parse_number<double>(text, "p_list");
    if (!(p >= 1.0)) {
        throw ParseError("p_list entries must be >= 1");
    }
    return p;
}

std::vector<int> parse_dims(std::string_view value) {
    std::vector<int> dims;
    for (const std::string& item : split_list(value)) {
        const auto dash = item.find('-');
        if (dash != std::string::npos) {
            const int lo = parse_number<int>(std::string_view(item).substr(0, dash), "dims");
            const int hi = parse_number<int>(std::string_view(item).substr(dash + 1), "dims");
            if (lo > hi) {
                throw ParseError("empty dims range '" + item + "'");
            }
            for (int d = lo; d <= hi; ++d) {
                dims.push_back(d);
            }
        } else {
            dims.push_back(parse_number<int>(item, "dims"));
        }
    }
    for (int d : dims) {
        if (d < 2 || d > 16) {
            throw ParseError("dims must lie in [2, 16]");
        }
    }
    return dims;
}

std::string format_double(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::size_t slack_bin(double slack, double tol) {
    if (slack < -tol) return 0;
    if (slack <= tol) return 1;
    if (slack <= 1e-6) return 2;
    if (slack <= 1e-3) return 3;
    if (slack <= 1.0) return 4;
    return 5;
}

void absorb(CheckSummary& s, const CheckOutcome& o, double tol) {
    ++s.trials;
    if (!o.pass) {
        ++s.failures;
    }
    s.min_slack = std::min(s.min_slack, o.min_slack);
    ++s.histogram[slack_bin(o.min_slack, tol)];
    if (s.tight_pairs.size() < o.slacks.size()) {
        s.tight_pairs.resize(o.slacks.size(), 0);
    }
    for (std::size_t i = 0; i < o.slacks.size(); ++i) {
        if (std::abs(o.slacks[i]) <= 2.0 * tol) {
            ++s.tight_pairs[i];
        }
    }
    for (const CertificateAudit& c : o.certificates) {
        ++s.certificates;
        const double width = c.upper - c.lower;
        s.max_width = std::max(s.max_width, width);
        if (width > c.requested_tol) {
            ++s.width_violations;
        }
        if (c.rayleigh > c.upper) {
            ++s.soundness_violations;
        }
        if (!c.monotone) {
            ++s.nonmonotone;
        }
    }
}

}  // namespace

SuiteConfig parse_suite_config(std::string_view text) {
    SuiteConfig config;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key == "checks") {
            config.checks.clear();
            for (const std::string& id : split_list(value)) {
                if (id == "all") {
                    config.checks.assign(kCheckIds.begin(), kCheckIds.end());
                } else if (is_check_id(id)) {
                    config.checks.push_back(id);
                } else {
                    throw ParseError("unknown check '" + id + "'");
                }
            }
        } else if (key == "families") {
            config.families.clear();
            for (const std::string& name : split_list(value)) {
                if (name == "all") {
                    config.families.assign(kAllFamilies.begin(), kAllFamilies.end());
                } else {
                    config.families.push_back(parse_family(name));
                }
            }
        } else if (key == "dims") {
            config.dims = parse_dims(value);
        } else if (key == "trials") {
            config.trials = parse_number<int>(value, key);
            if (config.trials < 0) {
                throw ParseError("trials must be non-negative");
            }
        } else if (key == "master_seed") {
            config.master_seed = parse_number<std::uint64_t>(value, key);
        } else if (key == "tol") {
            config.tol = parse_number<double>(value, key);
            if (!(config.tol > 0.0)) {
                throw ParseError("tol must be positive");
            }
        } else if (key == "strict_margin") {
            config.strict_margin = parse_number<double>(value, key);
        } else if (key == "p_list") {
            config.p_list.clear();
            for (const std::string& item : split_list(value)) {
                config.p_list.push_back(parse_p(item));
            }
        } else {
            throw ParseError("unknown config key '" + key + "'");
        }
    }
    if (config.checks.empty() || config.families.empty() || config.dims.empty() || config.p_list.empty()) {
        throw ParseError("checks, families, dims and p_list must not be empty");
    }
    return config;
}

SuiteConfig read_suite_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_suite_config(buf.str());
}

std::string format_suite_config(const SuiteConfig& config) {
    std::ostringstream out;
    auto join = [&](const auto& items, auto fmt) {
        std::string s;
        for (const auto& item : items) {
            if (!s.empty()) {
                s += ",";
            }
            s += fmt(item);
        }
        return s;
    };
    out << "checks = " << join(config.checks, [](const std::string& s) { return s; }) << "\n";
    out << "families = " << join(config.families, [](Family f) { return std::string(family_name(f)); }) << "\n";
    out << "dims = " << join(config.dims, [](int d) { return std::to_string(d); }) << "\n";
    out << "trials = " << config.trials << "\n";
    out << "master_seed = " << config.master_seed << "\n";
    out << "tol = " << format_double(config.tol) << "\n";
    out << "strict_margin = " << format_double(config.strict_margin) << "\n";
    out << "p_list = " << join(config.p_list, [](double p) { return format_double(p); }) << "\n";
    return out.str();
}

InstanceSpec trial_instance(const SuiteConfig& config, std::string_view check_id, int trial) {
    const auto i = static_cast<std::size_t>(trial);
    const std::size_t nd = config.dims.size();
    const std::size_t nf = config.families.size();
    InstanceSpec spec;
    spec.dim = config.dims[i % nd];
    spec.family = config.families[(i / nd) % nf];
    spec.p = config.p_list[(i / (nd * nf)) % config.p_list.size()];
    spec.seed = derive_seed(derive_seed(config.master_seed, stable_hash(check_id)), i);
    std::mt19937_64 rng(derive_seed(spec.seed, 999));
    spec.m = std::uniform_real_distribution<double>(0.1, 1.0)(rng);
    return spec;
}

TrialReport run_suite(const SuiteConfig& config, Execution execution) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t per_check = static_cast<std::size_t>(std::max(config.trials, 0));
    const std::size_t tasks = config.checks.size() * per_check;
    std::vector<CheckOutcome> outcomes(tasks);

    parallel_for(tasks, execution, [&](std::size_t task) {
        const std::string& id = config.checks[task / per_check];
        const InstanceSpec spec = trial_instance(config, id, static_cast<int>(task % per_check));
        CheckContext ctx;
        ctx.tol = config.tol;
        ctx.radius_tol = config.tol / 10.0;
        ctx.strict_margin = config.strict_margin;
        ctx.probe_seed = derive_seed(spec.seed, 1000);
        ctx.execution = Execution::Serial;
        outcomes[task] = run_check(id, spec, ctx);
    });

    TrialReport report;
    report.config = config;
    for (std::size_t c = 0; c < config.checks.size(); ++c) {
        CheckSummary summary;
        summary.check_id = config.checks[c];
        summary.min_slack = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < per_check; ++t) {
            absorb(summary, outcomes[c * per_check + t], config.tol);
        }
        report.failures += summary.failures;
        report.checks.push_back(std::move(summary));
    }
    report.pass = report.failures == 0;
    if (config.keep_outcomes) {
        report.outcomes = std::move(outcomes);
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string render_report(const TrialReport& report, bool include_wall_time) {
    std::ostringstream out;
    out << "[config]\n" << format_suite_config(report.config);
    for (const CheckSummary& s : report.checks) {
        out << "\n[check " << s.check_id << "]\n";
        out << "trials = " << s.trials << "\n";
        out << "failures = " << s.failures << "\n";
        out << "min_slack = " << format_double(s.min_slack) << "\n";
        out << "histogram =";
        for (std::size_t b = 0; b < kSlackBins.size(); ++b) {
            out << " " << s.histogram[b];
        }
        out << "\n";
        out << "tight_pairs =";
        for (int n : s.tight_pairs) {
            out << " " << n;
        }
        out << "\n";
        out << "certificates = " << s.certificates << "\n";
        out << "max_width = " << format_double(s.max_width) << "\n";
        out << "width_violations = " << s.width_violations << "\n";
        out << "soundness_violations = " << s.soundness_violations << "\n";
        out << "nonmonotone = " << s.nonmonotone << "\n";
    }
    out << "\n";
    if (include_wall_time) {
        out << "wall_seconds = " << format_double(report.wall_seconds) << "\n";
    }
    out << "SUITE " << (report.pass ? "PASS" : "FAIL") << " failures=" << report.failures << "\n";
    return out.str();
}

std::string render_report_json(const TrialReport& report, bool include_wall_time) {
    using nlohmann::json;
    auto num = [](double v) -> json {
        if (std::isinf(v)) {
            return v > 0 ? "inf" : "-inf";
        }
        return v;
    };
    json config;
    config["checks"] = report.config.checks;
    config["families"] = json::array();
    for (Family f : report.config.families) {
        config["families"].push_back(std::string(family_name(f)));
    }
    config["dims"] = report.config.dims;
    config["trials"] = report.config.trials;
    config["master_seed"] = report.config.master_seed;
    config["tol"] = report.config.tol;
    config["strict_margin"] = report.config.strict_margin;
    config["p_list"] = json::array();
    for (double p : report.config.p_list) {
        config["p_list"].push_back(num(p));
    }

    json checks = json::array();
    for (const CheckSummary& s : report.checks) {
        json histogram = json::object();
        for (std::size_t b = 0; b < kSlackBins.size(); ++b) {
            histogram[std::string(kSlackBins[b])] = s.histogram[b];
        }
        checks.push_back({{"check_id", s.check_id},
                          {"trials", s.trials},
                          {"failures", s.failures},
                          {"min_slack", num(s.min_slack)},
                          {"histogram", histogram},
                          {"tight_pairs", s.tight_pairs},
                          {"certificates", s.certificates},
                          {"max_width", s.max_width},
                          {"width_violations", s.width_violations},
                          {"soundness_violations", s.soundness_violations},
                          {"nonmonotone", s.nonmonotone}});
    }
    json doc{{"config", config},
             {"checks", checks},
             {"failures", report.failures},
             {"status", report.pass ? "PASS" : "FAIL"}};
    if (include_wall_time) {
        doc["wall_seconds"] = report.wall_seconds;
    }
    return doc.dump(2) + "\n";
}

}  // namespace numrad

#include "wsi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "wsi/errors.hpp"
#include "wsi/json_io.hpp"
#include "wsi/oracle.hpp"
#include "wsi/selftest.hpp"

namespace wsi::cli {

namespace {

using cplx = std::complex<double>;

enum class Format { Csv, Json };

struct RunConfig {
    double mu = 0.0;
    double nu = 0.0;
    int proposition = 1;
    double alpha = 0.0;
    dist::Measure measure = dist::Measure::Lebesgue;
    dist::TestFunction bump{1.0, 0.5, 1.0};
    std::vector<double> eps_schedule = quad::EpsSchedule::default_schedule().values;
    std::optional<double> tol;
    std::string output_path;
    std::string format;  // empty: the command's default
    double s_min = 0.5;
    double s_max = 2.0;
    int s_steps = 16;
    std::string only;
};

Format format_of(const RunConfig& c, Format fallback) {
    if (c.format.empty()) {
        return fallback;
    }
    return c.format == "csv" ? Format::Csv : Format::Json;
}

std::string csv_number(double x) {
    return std::isnan(x) ? "nan" : io::format_number(x);
}

const char* measure_name(dist::Measure m) {
    return m == dist::Measure::Haar ? "haar" : "lebesgue";
}

io::Json config_json(const RunConfig& c) {
    io::Json j;
    j["proposition"] = c.proposition;
    j["mu"] = c.mu;
    j["nu"] = c.nu;
    return j;
}

io::Json bump_json(const dist::TestFunction& g) {
    io::Json j;
    j["center"] = g.center;
    j["halfwidth"] = g.halfwidth;
    j["amplitude"] = g.amplitude;
    return j;
}

void validate_orders(const RunConfig& c) {
    const ws::OrderPair o{c.mu, c.nu};
    if (c.proposition == 1) {
        o.validate_hankel();
    } else {
        o.validate_bessel();
    }
}

std::vector<double> s_grid(const RunConfig& c) {
    if (c.s_steps < 1) {
        throw DomainError("--s-steps must be at least 1");
    }
    if (!(c.s_min > 0.0) || !(c.s_max >= c.s_min)) {
        throw DomainError("s grid requires 0 < s-min <= s-max");
    }
    std::vector<double> s;
    if (c.s_steps == 1) {
        s.push_back(c.s_min);
        return s;
    }
    for (int i = 0; i < c.s_steps; ++i) {
        s.push_back(i + 1 == c.s_steps ? c.s_max : c.s_min + (c.s_max - c.s_min) * i / (c.s_steps - 1));
    }
    return s;
}

int cmd_density(const RunConfig& c, std::string& doc) {
    validate_orders(c);
    const ws::OrderPair o{c.mu, c.nu};
    const std::vector<double> grid = s_grid(c);
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    if (c.proposition == 1) {
        header = {"s", "F_re", "F_im", "h_re", "h_im"};
        for (double s : grid) {
            const cplx f = ws::prop1_density(o, s);
            const cplx h = ws::prop1_remainder(o, s);
            rows.push_back({s, f.real(), f.imag(), h.real(), h.imag()});
        }
    } else {
        header = {"s", "m0", "h"};
        for (double s : grid) {
            rows.push_back({s, ws::prop2_density(o, s), ws::prop2_remainder(o, s)});
        }
    }
    if (format_of(c, Format::Csv) == Format::Csv) {
        std::string out;
        for (std::size_t i = 0; i < header.size(); ++i) {
            out += (i ? "," : "") + header[i];
        }
        out += "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out += (i ? "," : "") + csv_number(row[i]);
            }
            out += "\n";
        }
        doc = out;
    } else {
        io::Json j = config_json(c);
        j["columns"] = header;
        io::Json data = io::Json::array();
        for (const auto& row : rows) {
            data.push_back(row);
        }
        j["rows"] = data;
        doc = io::dump(j);
    }
    return kOk;
}

int cmd_pair(const RunConfig& c, std::string& doc) {
    validate_orders(c);
    const ws::OrderPair o{c.mu, c.nu};
    const dist::DistributionExpansion d =
        c.proposition == 1 ? ws::prop1_distribution(o, c.alpha) : ws::prop2_distribution(o, c.alpha);
    const double tol = c.tol.value_or(1e-10);
    const cplx v = dist::pair(d, c.bump, c.measure, tol);
    if (format_of(c, Format::Json) == Format::Csv) {
        doc = "value_re,value_im\n" + csv_number(v.real()) + "," + csv_number(v.imag()) + "\n";
    } else {
        io::Json j = config_json(c);
        j["alpha"] = c.alpha;
        j["measure"] = measure_name(c.measure);
        j["bump"] = bump_json(c.bump);
        j["tol"] = tol;
        j["value"] = io::complex_json(v);
        doc = io::dump(j);
    }
    return kOk;
}

int cmd_oracle(const RunConfig& c, std::string& doc) {
    validate_orders(c);
    const ws::OrderPair o{c.mu, c.nu};
    const quad::EpsSchedule schedule{c.eps_schedule};
    schedule.validate();
    const double tol = c.tol.value_or(1e-4);
    const oracle::OracleReport r = c.proposition == 1 ? oracle::pairing_oracle(o, c.bump, schedule, tol)
                                                      : oracle::jj_pairing_oracle(o, c.bump, schedule, tol);
    const bool ok = r.rel_deviation <= tol;
    if (format_of(c, Format::Json) == Format::Csv) {
        std::string out = "eps,value_re,value_im\n";
        for (const auto& [eps, v] : r.eps_trace) {
            out += csv_number(eps) + "," + csv_number(v.real()) + "," + csv_number(v.imag()) + "\n";
        }
        out += "0," + csv_number(r.oracle_value.real()) + "," + csv_number(r.oracle_value.imag()) + "\n";
        doc = out;
    } else {
        io::Json j = config_json(c);
        j["bump"] = bump_json(c.bump);
        j["tol"] = tol;
        const io::Json report = oracle::to_json(r);
        for (auto it = report.begin(); it != report.end(); ++it) {
            j[it.key()] = *it;
        }
        j["passed"] = ok;
        doc = io::dump(j);
    }
    return ok ? kOk : kOracleDeviation;
}

int cmd_selftest(const RunConfig& c, std::string& doc) {
    const auto results = selftest::run(c.only, c.tol);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
    }
    if (format_of(c, Format::Csv) == Format::Csv) {
        std::string out = "module,check,deviation,threshold,status\n";
        for (const auto& r : results) {
            out += r.module + "," + r.name + "," + csv_number(r.deviation) + "," + csv_number(r.threshold) + "," +
                   (r.passed ? "pass" : (r.error.empty() ? "FAIL" : "ERROR")) + "\n";
        }
        doc = out;
    } else {
        io::Json checks = io::Json::array();
        for (const auto& r : results) {
            io::Json j;
            j["module"] = r.module;
            j["check"] = r.name;
            j["deviation"] = r.deviation;
            j["threshold"] = r.threshold;
            j["passed"] = r.passed;
            if (!r.error.empty()) {
                j["error"] = r.error;
            }
            checks.push_back(j);
        }
        io::Json j;
        j["checks"] = checks;
        j["passed"] = all;
        doc = io::dump(j);
    }
    return all ? kOk : kInternal;
}

void add_order_options(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--mu", c.mu, "Order mu of the Hankel (or first Bessel) function")->required();
    cmd->add_option("--nu", c.nu, "Order nu of the Bessel function J_nu")->required();
    cmd->add_option("--prop", c.proposition, "1: Hankel-Bessel limit, 2: Bessel-Bessel limit")
        ->check(CLI::IsMember({1, 2}));
}

void add_bump_options(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--center", c.bump.center, "Test function centre");
    cmd->add_option("--halfwidth", c.bump.halfwidth, "Test function half-width");
    cmd->add_option("--amplitude", c.bump.amplitude, "Test function amplitude");
}

void add_common_options(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--tol", c.tol, "Tolerance (overrides WS_TOL)");
    cmd->add_option("-o,--output", c.output_path, "Write the result to this file instead of stdout");
    cmd->add_option("--format", c.format, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distributional Weber-Schafheitlin integrals with exponent 1", "wsi"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* density = app.add_subcommand("density", "Tabulate the limit density and its remainder on an s grid");
    add_order_options(density, cfg);
    add_common_options(density, cfg);
    density->add_option("--s-min", cfg.s_min, "Smallest s");
    density->add_option("--s-max", cfg.s_max, "Largest s");
    density->add_option("--s-steps", cfg.s_steps, "Number of grid points");

    CLI::App* pair = app.add_subcommand("pair", "Pair the limit distribution with a bump test function");
    add_order_options(pair, cfg);
    add_bump_options(pair, cfg);
    add_common_options(pair, cfg);
    pair->add_option("--alpha", cfg.alpha, "Decomposition parameter");
    pair->add_option("--measure", cfg.measure, "Measure on (0, inf)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, dist::Measure>{{"lebesgue", dist::Measure::Lebesgue}, {"haar", dist::Measure::Haar}}));

    CLI::App* orc = app.add_subcommand("oracle", "Compare the closed-form pairing with the eps-extrapolated integral");
    add_order_options(orc, cfg);
    add_bump_options(orc, cfg);
    add_common_options(orc, cfg);
    orc->add_option("--eps", cfg.eps_schedule, "Decreasing eps schedule, comma separated")->delimiter(',');

    CLI::App* self = app.add_subcommand("selftest", "Run the built-in invariant checks");
    add_common_options(self, cfg);
    self->add_option("--only", cfg.only, "Restrict to one module");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConstraint;
    }

    if (!cfg.tol) {
        if (const char* env = std::getenv("WS_TOL"); env != nullptr && *env != '\0') {
            try {
                std::size_t used = 0;
                cfg.tol = std::stod(env, &used);
                if (used != std::string(env).size()) {
                    throw std::invalid_argument("trailing characters");
                }
            } catch (const std::exception&) {
                err << "error: WS_TOL is not a number: " << env << "\n";
                return kConstraint;
            }
        }
    }
    if (cfg.tol && !(*cfg.tol > 0.0)) {
        err << "error: tolerance must be positive\n";
        return kConstraint;
    }

    std::string doc;
    int code = kOk;
    try {
        if (density->parsed()) {
            code = cmd_density(cfg, doc);
        } else if (pair->parsed()) {
            code = cmd_pair(cfg, doc);
        } else if (orc->parsed()) {
            code = cmd_oracle(cfg, doc);
        } else {
            code = cmd_selftest(cfg, doc);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kConstraint;
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << "\n";
        return kNonConvergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternal;
    }

    if (cfg.output_path.empty()) {
        out << doc;
    } else {
        std::ofstream f(cfg.output_path, std::ios::binary);
        f << doc;
        if (!f) {
            err << "error: cannot write " << cfg.output_path << "\n";
            return kInternal;
        }
    }
    return code;
}

}  // namespace wsi::cli

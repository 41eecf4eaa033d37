// puncture-metric: covering-map coefficients, Kobayashi-Royden metric
// asymptotics and Picard radius bounds for punctured spheres, with exact
// rational coefficient data in and out.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "puncture/covering.hpp"
#include "puncture/covering_json.hpp"
#include "puncture/metric.hpp"
#include "puncture/picard.hpp"
#include "puncture/verify.hpp"

namespace {

using puncture::CoveringData;
using puncture::Rational;

struct SourceOptions {
    std::string example;
    std::string coeffs_file;
    int order = 10;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
    auto* ex = cmd->add_option("--example", src.example,
                               "built-in dataset: lambda (punctures 0,1,inf) or gamma3");
    auto* file = cmd->add_option("--coeffs-file", src.coeffs_file,
                                 "covering JSON produced by `coeffs` or `example`");
    cmd->add_option("--order", src.order, "solve depth for --example")->capture_default_str();
    ex->excludes(file);
}

CoveringData load_covering(const SourceOptions& src) {
    if (!src.coeffs_file.empty()) {
        std::ifstream in(src.coeffs_file);
        if (!in) throw puncture::ParseError("cannot open coefficients file: " + src.coeffs_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        return puncture::covering_from_json_string(buf.str());
    }
    if (!src.example.empty()) return puncture::builtin_covering(src.example, src.order);
    throw puncture::DomainError("no covering source: pass --example or --coeffs-file");
}

puncture::Precision resolve_precision(std::string flag_value) {
    if (const char* env = std::getenv("PUNCTURE_METRIC_PRECISION"); env && *env)
        flag_value = env;
    if (flag_value == "double") return puncture::Precision::Double;
    if (flag_value == "extended") return puncture::Precision::Extended;
    throw puncture::DomainError("precision must be 'double' or 'extended', got '" + flag_value + "'");
}

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::json metric_value_json(puncture::ComplexPoint p, double v_norm,
                                 const puncture::MetricValue& mv) {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t i = 0; i < mv.term_breakdown.size(); ++i)
        terms.push_back({{"m", i + 1},
                         {"re", mv.term_breakdown[i].real()},
                         {"im", mv.term_breakdown[i].imag()}});
    return {{"p", {{"re", p.re}, {"im", p.im}}},
            {"v_norm", v_norm},
            {"order", mv.truncation_order},
            {"value", mv.value},
            {"terms", terms}};
}

int cmd_coeffs(int N, const std::string& c1, const std::string& c2, int order) {
    auto cov = puncture::solve_covering_coefficients(N, Rational::from_string(c1),
                                                     Rational::from_string(c2), order);
    std::cout << puncture::covering_to_json_string(cov) << "\n";
    return 0;
}

struct MetricArgs {
    SourceOptions src;
    double p_re = 1e-3, p_im = 0.0, v_norm = 1.0;
    int M = 6;
    std::string grid;
    double rmin = 1e-4, rmax = 1e-2;
    std::string format = "json";
    std::string precision = "double";
    double validity_radius = 0.25;
};

int cmd_metric(const MetricArgs& args) {
    CoveringData cov = load_covering(args.src);
    puncture::EvalOptions opts;
    opts.precision = resolve_precision(args.precision);
    opts.validity_radius = args.validity_radius;

    if (!args.grid.empty()) {
        int nr = 0, ntheta = 0;
        if (std::sscanf(args.grid.c_str(), "%dx%d", &nr, &ntheta) != 2 || nr < 1 || ntheta < 1)
            throw puncture::DomainError("grid must look like '16x16'");
        std::vector<std::array<double, 3>> rows;
        rows.reserve(static_cast<std::size_t>(nr) * static_cast<std::size_t>(ntheta));
        for (int i = 0; i < nr; ++i) {
            const double r = nr == 1 ? args.rmin
                                     : args.rmin * std::pow(args.rmax / args.rmin,
                                                            static_cast<double>(i) / (nr - 1));
            for (int j = 0; j < ntheta; ++j) {
                const double theta = 2.0 * M_PI * j / ntheta;
                puncture::ComplexPoint p{r * std::cos(theta), r * std::sin(theta)};
                auto mv = puncture::metric_expansion_eval(p, args.v_norm, cov, args.M, opts);
                rows.push_back({p.re, p.im, mv.value});
            }
        }
        if (args.format == "csv" || args.format == "human") {
            std::cout << "re,im,chi,order\n";
            for (const auto& row : rows)
                std::cout << fmt_double(row[0]) << "," << fmt_double(row[1]) << ","
                          << fmt_double(row[2]) << "," << args.M << "\n";
        } else {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& row : rows)
                out.push_back({{"re", row[0]}, {"im", row[1]}, {"chi", row[2]}, {"order", args.M}});
            std::cout << out.dump(2) << "\n";
        }
        return 0;
    }

    puncture::ComplexPoint p{args.p_re, args.p_im};
    auto mv = puncture::metric_expansion_eval(p, args.v_norm, cov, args.M, opts);
    if (args.format == "csv") {
        std::cout << "re,im,chi,order\n"
                  << fmt_double(p.re) << "," << fmt_double(p.im) << "," << fmt_double(mv.value)
                  << "," << mv.truncation_order << "\n";
    } else if (args.format == "human") {
        std::cout << "chi(p; v) = " << fmt_double(mv.value) << "  (p = " << fmt_double(p.re)
                  << " + " << fmt_double(p.im) << "i, M = " << mv.truncation_order << ")\n";
    } else {
        std::cout << metric_value_json(p, args.v_norm, mv).dump(2) << "\n";
    }
    return 0;
}

struct RadiusArgs {
    SourceOptions src;
    double p_re = 1e-3, p_im = 0.0;
    int M = 3;
    std::string format = "json";
    std::string precision = "double";
    double validity_radius = 0.25;
};

int cmd_radius(const RadiusArgs& args) {
    CoveringData cov = load_covering(args.src);
    puncture::EvalOptions opts;
    opts.precision = resolve_precision(args.precision);
    opts.validity_radius = args.validity_radius;
    auto rb = puncture::picard_radius_bound(puncture::ComplexPoint{args.p_re, args.p_im}, cov,
                                            args.M, opts);
    const double rel_gap = std::fabs(rb.bound - rb.direct_reciprocal) /
                           std::max(rb.direct_reciprocal, 1e-300);
    if (args.format == "human") {
        std::cout << "R < " << fmt_double(rb.bound) << "  (leading |p log|b1 p|| = "
                  << fmt_double(rb.leading_term) << ", 1/chi_direct = "
                  << fmt_double(rb.direct_reciprocal) << ", relative gap " << fmt_double(rel_gap)
                  << ")\n";
    } else {
        nlohmann::json out = {{"p", {{"re", rb.p.re}, {"im", rb.p.im}}},
                              {"M", rb.truncation_order},
                              {"bound", rb.bound},
                              {"leading_term", rb.leading_term},
                              {"direct_reciprocal", rb.direct_reciprocal},
                              {"relative_gap", rel_gap}};
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(int order, const std::string& profile_name, bool inject) {
    puncture::VerifyProfile profile = puncture::VerifyProfile::Default;
    if (profile_name == "strict")
        profile = puncture::VerifyProfile::Strict;
    else if (profile_name != "default")
        throw puncture::DomainError("profile must be 'default' or 'strict'");
    auto report = puncture::run_verification(order, profile, inject);
    for (const auto& check : report.checks)
        std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << " — " << check.detail
                  << "\n";
    std::cout << (report.all_pass() ? "verification OK" : "verification FAILED") << "\n";
    return report.all_pass() ? 0 : 1;
}

int cmd_example(const std::string& name, int order) {
    std::cout << puncture::covering_to_json_string(puncture::builtin_covering(name, order))
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kobayashi-Royden metric asymptotics on punctured spheres"};
    app.require_subcommand(1);

    // coeffs
    int N = 2, coeffs_order = 10;
    std::string c1 = "16", c2 = "-128";
    auto* coeffs = app.add_subcommand("coeffs", "solve covering coefficients for N = 2,3,4,5");
    coeffs->add_option("--N", N, "level of the covering recursion")->required();
    coeffs->add_option("--c1", c1, "rational c1, e.g. 16 or 1/3")->required();
    coeffs->add_option("--c2", c2, "rational c2")->required();
    coeffs->add_option("--order", coeffs_order, "highest degree to solve")->capture_default_str();

    // metric
    MetricArgs margs;
    auto* metric = app.add_subcommand("metric", "evaluate the metric expansion at a point or grid");
    add_source_options(metric, margs.src);
    metric->add_option("--p-re", margs.p_re, "Re p")->capture_default_str();
    metric->add_option("--p-im", margs.p_im, "Im p")->capture_default_str();
    metric->add_option("--v-norm", margs.v_norm, "||v||")->capture_default_str();
    metric->add_option("--M", margs.M, "expansion truncation order")->capture_default_str();
    metric->add_option("--grid", margs.grid, "evaluate an NRxNTHETA annulus grid, e.g. 16x16");
    metric->add_option("--rmin", margs.rmin, "grid inner radius")->capture_default_str();
    metric->add_option("--rmax", margs.rmax, "grid outer radius")->capture_default_str();
    metric->add_option("--format", margs.format, "json, csv or human")->capture_default_str();
    metric->add_option("--precision", margs.precision, "double or extended")->capture_default_str();
    metric->add_option("--validity-radius", margs.validity_radius, "max allowed |b1 p|")
        ->capture_default_str();

    // radius
    RadiusArgs rargs;
    auto* radius = app.add_subcommand("radius", "Picard maximal-radius upper bound");
    add_source_options(radius, rargs.src);
    radius->add_option("--p-re", rargs.p_re, "Re p")->capture_default_str();
    radius->add_option("--p-im", rargs.p_im, "Im p")->capture_default_str();
    radius->add_option("--M", rargs.M, "expansion truncation order")->capture_default_str();
    radius->add_option("--format", rargs.format, "json or human")->capture_default_str();
    radius->add_option("--precision", rargs.precision, "double or extended")->capture_default_str();
    radius->add_option("--validity-radius", rargs.validity_radius, "max allowed |b1 p|")
        ->capture_default_str();

    // verify
    int verify_order = 14;
    std::string profile = "default";
    bool inject = false;
    auto* verify = app.add_subcommand("verify", "run the self-verification suite");
    verify->add_option("--order", verify_order, "exact-check depth")->capture_default_str();
    verify->add_option("--profile", profile, "default or strict")->capture_default_str();
    verify->add_flag("--inject-corruption", inject,
                     "corrupt one coefficient first (negative control; must fail)");

    // example
    std::string example_name = "lambda";
    int example_order = 10;
    auto* example = app.add_subcommand("example", "emit a built-in dataset as covering JSON");
    example->add_option("--name", example_name, "lambda or gamma3")->capture_default_str();
    example->add_option("--order", example_order, "solve depth")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (coeffs->parsed()) return cmd_coeffs(N, c1, c2, coeffs_order);
        if (metric->parsed()) return cmd_metric(margs);
        if (radius->parsed()) return cmd_radius(rargs);
        if (verify->parsed()) return cmd_verify(verify_order, profile, inject);
        if (example->parsed()) return cmd_example(example_name, example_order);
    } catch (const puncture::Error& e) {
        nlohmann::json err = {{"error", {{"type", "puncture"}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        nlohmann::json err = {{"error", {{"type", "internal"}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 1;
    }
    return 0;
}

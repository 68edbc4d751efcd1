// Command-line front end: exact identity sweeps, coefficient-file
// transforms, and end-to-end model reports with machine-readable output.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.

#include "riesz/cli/commands.hpp"
#include "riesz/exact/rational.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using riesz::exact::Rational;

/// Accepts "p/q", plain integers, and decimal literals like "1.5".
Rational parse_rational(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos) return riesz::exact::rational_from_text(text);
    const std::string head = text.substr(0, dot), tail = text.substr(dot + 1);
    Rational value = head.empty() || head == "-" ? Rational(0)
                                                 : riesz::exact::rational_from_text(head);
    Rational frac = riesz::exact::rational_from_text(tail.empty() ? "0" : tail);
    frac /= riesz::exact::pow_rational(Rational(10), static_cast<long>(tail.size()));
    const bool negative = !head.empty() && head[0] == '-';
    return negative ? Rational(value - frac) : Rational(value + frac);
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

/// Config-file values fill in whatever the command line left unset.
void apply_json_config(const nlohmann::json& j, const CLI::App* cmd,
                       riesz::cli::IdentitiesConfig& cfg) {
    if (!cmd->count("--alpha-max")) cfg.alpha_max = j.value("alpha_max", cfg.alpha_max);
    if (!cmd->count("--m") && j.contains("m_set"))
        cfg.m_set = j.at("m_set").get<std::vector<int>>();
    if (!cmd->count("--sweep-size")) cfg.sweep_size = j.value("sweep_size", cfg.sweep_size);
    if (!cmd->count("--transform-tuples"))
        cfg.transform_tuples = j.value("transform_tuples", cfg.transform_tuples);
    if (!cmd->count("--seed")) cfg.seed = j.value("seed", cfg.seed);
    if (!cmd->count("--out")) cfg.out_path = j.value("out", cfg.out_path);
}

void apply_json_config(const nlohmann::json& j, const CLI::App* cmd,
                       riesz::cli::ModelReportConfig& cfg) {
    if (!cmd->count("--manifold")) cfg.manifold = j.value("manifold", cfg.manifold);
    if (!cmd->count("--bc")) cfg.boundary = j.value("boundary", cfg.boundary);
    if (!cmd->count("--L") && j.contains("L"))
        cfg.L = parse_rational(j.at("L").is_string() ? j.at("L").get<std::string>()
                                                     : nlohmann::to_string(j.at("L")));
    if (!cmd->count("--observable")) cfg.observable = j.value("observable", cfg.observable);
    if (!cmd->count("--x") && j.contains("x"))
        cfg.x = parse_rational(j.at("x").get<std::string>());
    if (!cmd->count("--y") && j.contains("y")) {
        cfg.y = parse_rational(j.at("y").get<std::string>());
        cfg.has_y = true;
    }
    if (!cmd->count("--out")) cfg.out_dir = j.value("out", cfg.out_dir);
    if (!cmd->count("--tol")) cfg.coeff_rel_tol = j.value("coeff_rel_tol", cfg.coeff_rel_tol);
    if (!cmd->count("--kernel-tol")) cfg.kernel_tol = j.value("kernel_tol", cfg.kernel_tol);
    if (!cmd->count("--seed")) cfg.seed = j.value("seed", cfg.seed);
    if (!cmd->count("--alpha") && j.contains("alphas"))
        cfg.alphas = j.at("alphas").get<std::vector<int>>();
    if (!cmd->count("--tmin")) cfg.tmin = j.value("tmin", cfg.tmin);
    if (!cmd->count("--tmax")) cfg.tmax = j.value("tmax", cfg.tmax);
    if (!cmd->count("--smax")) cfg.smax = j.value("smax", cfg.smax);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riesz means of spectral measures: exact coefficient algebra between "
                 "heat- and cylinder-kernel expansions, with numerical verification on "
                 "model manifolds"};
    app.require_subcommand(1);

    riesz::cli::IdentitiesConfig identities;
    std::string identities_config;
    auto* cmd_identities = app.add_subcommand(
        "identities", "run the exact identity sweeps and emit a pass/fail report");
    cmd_identities->add_option("--config", identities_config, "JSON config file");
    cmd_identities->add_option("--alpha-max", identities.alpha_max, "largest mean order");
    cmd_identities->add_option("--m", identities.m_set, "dimension set (repeatable)");
    cmd_identities->add_option("--sweep-size", identities.sweep_size,
                               "rational samples per order");
    cmd_identities->add_option("--transform-tuples", identities.transform_tuples,
                               "random transformation checks");
    cmd_identities->add_option("--seed", identities.seed, "random seed");
    cmd_identities->add_option("--out", identities.out_path, "report JSON path");

    riesz::cli::TransformConfig transform;
    std::string transform_to;
    auto* cmd_transform = app.add_subcommand(
        "transform", "transform a coefficient file between the four table kinds");
    cmd_transform->add_option("--in", transform.input_path, "input coefficient JSON")
        ->required();
    cmd_transform->add_option("--out", transform.output_path, "output coefficient JSON")
        ->required();
    cmd_transform->add_option("--direction", transform.direction,
                              "e.g. heat2lambda-diag, omega-diag2cylinder");
    cmd_transform->add_option("--to", transform_to,
                              "target kind (direction inferred from the input file)");

    riesz::cli::MeansConfig means;
    auto* cmd_means = app.add_subcommand(
        "means", "Riesz means of a measure file on a geometric grid, as CSV");
    cmd_means->add_option("--in", means.measure_path, "measure JSON file")->required();
    cmd_means->add_option("--out", means.out_path, "output CSV path")->required();
    cmd_means->add_option("--alpha", means.alphas, "mean orders");
    cmd_means->add_option("--xmin", means.xmin, "grid start");
    cmd_means->add_option("--xmax", means.xmax, "grid end");
    cmd_means->add_option("--count", means.count, "grid size");

    riesz::cli::ModelReportConfig report;
    std::string report_config, L_text, x_text, y_text;
    auto* cmd_report = app.add_subcommand(
        "model-report", "spectral sums, closed forms, fits and exact tables for a model");
    cmd_report->add_option("--config", report_config, "JSON config file");
    cmd_report->add_option("--manifold", report.manifold, "line|halfline|circle|interval");
    cmd_report->add_option("--L", L_text, "size parameter (rational or decimal)");
    cmd_report->add_option("--observable", report.observable, "trace|diagonal");
    cmd_report->add_option("--x", x_text, "observation point");
    cmd_report->add_option("--y", y_text, "second point for off-diagonal observables");
    cmd_report->add_option("--bc", report.boundary, "dirichlet|neumann (half line)");
    cmd_report->add_option("--out", report.out_dir, "output directory");
    cmd_report->add_option("--tol", report.coeff_rel_tol,
                           "relative tolerance for coefficient comparisons");
    cmd_report->add_option("--kernel-tol", report.kernel_tol,
                           "absolute tolerance for kernel comparisons");
    cmd_report->add_option("--seed", report.seed, "random seed recorded in the report");
    cmd_report->add_option("--alpha", report.alphas, "orders for the means table");
    cmd_report->add_option("--tmin", report.tmin, "fit window override");
    cmd_report->add_option("--tmax", report.tmax, "fit window override");
    cmd_report->add_option("--smax", report.smax, "fit basis order override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : riesz::cli::kExitUsage;
    }

    try {
        if (cmd_identities->parsed()) {
            if (!identities_config.empty())
                apply_json_config(load_json(identities_config), cmd_identities, identities);
            return riesz::cli::cmd_identities(identities, std::cout, std::cerr);
        }
        if (cmd_transform->parsed()) {
            if (transform.direction.empty() && !transform_to.empty()) {
                std::ifstream in(transform.input_path);
                nlohmann::json j;
                if (in) in >> j;
                if (j.contains("kind") && j.at("kind").is_string())
                    transform.direction = j.at("kind").get<std::string>() + "2" + transform_to;
            }
            if (transform.direction.empty()) {
                std::cerr << "transform: need --direction or --to\n";
                return riesz::cli::kExitUsage;
            }
            return riesz::cli::cmd_transform(transform, std::cout, std::cerr);
        }
        if (cmd_means->parsed()) return riesz::cli::cmd_means(means, std::cout, std::cerr);
        if (!L_text.empty()) report.L = parse_rational(L_text);
        if (!x_text.empty()) report.x = parse_rational(x_text);
        if (!y_text.empty()) {
            report.y = parse_rational(y_text);
            report.has_y = true;
        }
        if (!report_config.empty()) apply_json_config(load_json(report_config), cmd_report, report);
        return riesz::cli::cmd_model_report(report, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return riesz::cli::kExitUsage;
    }
}

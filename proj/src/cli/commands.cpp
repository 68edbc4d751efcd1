#include "riesz/cli/commands.hpp"

#include "riesz/hypergeom/identities.hpp"
#include "riesz/coeffs/transforms.hpp"
#include "riesz/engine/fit.hpp"
#include "riesz/engine/riesz_mean.hpp"
#include "riesz/green/kernels.hpp"
#include "riesz/io/coeff_json.hpp"
#include "riesz/io/measure_json.hpp"
#include "riesz/models/models.hpp"
#include "riesz/exact/special_values.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

namespace riesz::cli {

using coeffs::KernelKind;
using exact::pochhammer;
using exact::Rational;
using io::json;
using models::Manifold;
using models::Observable;

namespace {

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

Rational random_rational(std::mt19937_64& rng, long num_span, long den_span) {
    std::uniform_int_distribution<long> num(-num_span, num_span);
    std::uniform_int_distribution<long> den(1, den_span);
    return Rational(num(rng), den(rng));
}

/// z avoiding every pole of both bracket factors at this order.
Rational random_safe_z(std::mt19937_64& rng, int alpha) {
    for (;;) {
        const Rational z = random_rational(rng, 40, 12);
        bool pole = false;
        for (int j = alpha / 2; j <= alpha - 1 && !pole; ++j)
            if (z / 2 + (j + 1) == 0) pole = true;
        for (int j = 0; j <= alpha - 1 && !pole; j += 2)
            if (z + (j + 1) == 0) pole = true;
        const unsigned long len = (alpha % 2 == 0) ? alpha / 2 : (alpha + 1) / 2;
        const Rational den1 = alpha % 2 == 0 ? z / 2 + alpha / 2 + 1
                                             : z / 2 + Rational(alpha, 2) + Rational(1, 2);
        if (!pole && (pochhammer(den1, len) == 0 ||
                      pochhammer(z / 2 + Rational(1, 2), len) == 0))
            pole = true;
        if (!pole) return z;
    }
}

bool write_text_file(const std::string& path, const std::string& body, std::ostream& err) {
    std::ofstream out(path);
    if (!out) {
        err << "cannot open " << path << " for writing\n";
        return false;
    }
    out << body;
    return true;
}

} // namespace

int cmd_identities(const IdentitiesConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.alpha_max < 1 || cfg.sweep_size < 1 || cfg.transform_tuples < 0 ||
        cfg.m_set.empty()) {
        err << "identities: need alpha_max >= 1, sweep_size >= 1 and a nonempty m set\n";
        return kExitUsage;
    }
    for (int m : cfg.m_set)
        if (m < 1) {
            err << "identities: dimensions must be >= 1\n";
            return kExitUsage;
        }

    json results = json::array();
    bool all_pass = true;
    const auto record = [&](json row, bool pass) {
        row["pass"] = pass;
        all_pass = all_pass && pass;
        results.push_back(std::move(row));
    };

    // two-direction consistency identities
    for (int alpha = 1; alpha <= cfg.alpha_max; ++alpha)
        for (int m : cfg.m_set)
            for (int s = 0; s <= alpha; ++s) {
                const auto report = coeffs::verify_consistency(alpha, m, s);
                if (report.product_plain_branch) {
                    record({{"identity", "consistency-product-plain"},
                            {"alpha", alpha},
                            {"m", m},
                            {"s", s},
                            {"value", report.product_plain_branch->to_text()}},
                           *report.product_plain_branch == coeffs::ExactScalar(1));
                }
                if (report.product_log_branch) {
                    record({{"identity", "consistency-product-log"},
                            {"alpha", alpha},
                            {"m", m},
                            {"s", s},
                            {"value", report.product_log_branch->to_text()}},
                           *report.product_log_branch == coeffs::ExactScalar(1));
                }
                if (report.vanishing_sum) {
                    record({{"identity", "vanishing-sum"},
                            {"alpha", alpha},
                            {"m", m},
                            {"s", s},
                            {"value", report.vanishing_sum->to_text()}},
                           report.vanishing_sum->is_zero());
                }
            }

    // bracket factors: defining sums vs closed forms, and the unit product
    std::mt19937_64 rng(cfg.seed);
    for (int alpha = 1; alpha <= cfg.alpha_max; ++alpha) {
        for (int i = 0; i < cfg.sweep_size; ++i) {
            const Rational z = random_safe_z(rng, alpha);
            const Rational first_sum = hypergeom::first_factor_sum(alpha, z);
            const Rational second_sum = hypergeom::second_factor_sum(alpha, z);
            record({{"identity", "first-factor-closed-form"},
                    {"alpha", alpha},
                    {"z", exact::to_text(z)}},
                   first_sum == hypergeom::first_factor_closed(alpha, z));
            record({{"identity", "second-factor-closed-form"},
                    {"alpha", alpha},
                    {"z", exact::to_text(z)}},
                   second_sum == hypergeom::second_factor_closed(alpha, z));
            record({{"identity", "factor-product"},
                    {"alpha", alpha},
                    {"z", exact::to_text(z)},
                    {"value", exact::to_text(hypergeom::factor_product(alpha, z))}},
                   hypergeom::factor_product(alpha, z) == 1);
        }
    }

    // terminating hypergeometric transformation on random valid tuples
    std::uniform_int_distribution<int> ndist(0, 6);
    int accepted = 0;
    while (accepted < cfg.transform_tuples) {
        const int n = ndist(rng);
        const Rational a = random_rational(rng, 12, 6), b = random_rational(rng, 12, 6);
        const Rational e = random_rational(rng, 12, 6), f = random_rational(rng, 12, 6);
        try {
            const auto [lhs, rhs] = hypergeom::transform_check(a, b, n, e, f);
            record({{"identity", "hypergeometric-transform"},
                    {"index", accepted},
                    {"a", exact::to_text(a)},
                    {"b", exact::to_text(b)},
                    {"n", n},
                    {"e", exact::to_text(e)},
                    {"f", exact::to_text(f)}},
                   lhs == rhs);
            ++accepted;
        } catch (const std::invalid_argument&) {
            continue;  // tuple hits a pole; draw another
        }
    }

    const json report{{"command", "identities"},
                      {"version", kVersion},
                      {"seed", cfg.seed},
                      {"config", {{"alpha_max", cfg.alpha_max},
                                  {"m_set", cfg.m_set},
                                  {"sweep_size", cfg.sweep_size},
                                  {"transform_tuples", cfg.transform_tuples}}},
                      {"results", results},
                      {"all_pass", all_pass}};
    if (!cfg.out_path.empty() && !write_text_file(cfg.out_path, report.dump(2) + "\n", err))
        return kExitUsage;
    out << "identities: " << results.size() << " checks, "
        << (all_pass ? "all passed" : "FAILURES PRESENT") << "\n";
    return all_pass ? kExitPass : kExitCheckFailed;
}

int cmd_transform(const TransformConfig& cfg, std::ostream& out, std::ostream& err) {
    json input;
    {
        std::ifstream in(cfg.input_path);
        if (!in) {
            err << "cannot read " << cfg.input_path << "\n";
            return kExitUsage;
        }
        try {
            in >> input;
        } catch (const json::exception& e) {
            err << "input is not valid JSON: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    try {
        const io::CoeffDocument doc = io::coeff_from_json(input);
        io::CoeffDocument result;
        if (cfg.direction == "heat2lambda-diag")
            result = io::CoeffDocument::from(coeffs::lambda_diag_from_heat(doc.expansion()));
        else if (cfg.direction == "lambda-diag2heat")
            result = io::CoeffDocument::from(coeffs::heat_from_lambda_diag(doc.lambda_diag()));
        else if (cfg.direction == "lambda-diag2omega-diag")
            result = io::CoeffDocument::from(
                coeffs::omega_diag_from_lambda_diag(doc.lambda_diag()));
        else if (cfg.direction == "omega-diag2lambda-diag")
            result = io::CoeffDocument::from(
                coeffs::lambda_diag_from_omega_diag(doc.omega_diag()));
        else if (cfg.direction == "omega-diag2cylinder")
            result = io::CoeffDocument::from(
                coeffs::cylinder_from_omega_diag(doc.omega_diag()));
        else if (cfg.direction == "cylinder2omega-diag")
            result = io::CoeffDocument::from(
                coeffs::omega_diag_from_cylinder(doc.expansion()));
        else {
            err << "unknown direction " << cfg.direction
                << " (expected <kind>2<kind> over heat, lambda-diag, omega-diag, "
                   "cylinder)\n";
            return kExitUsage;
        }
        if (!write_text_file(cfg.output_path, io::coeff_to_json(result).dump(2) + "\n", err))
            return kExitUsage;
        out << "transform " << cfg.direction << ": wrote " << cfg.output_path << "\n";
        return kExitPass;
    } catch (const io::SchemaError& e) {
        err << "schema violation: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        // an undetermined entry was consumed where a value is required
        err << "transform failed: " << e.what()
            << " (undetermined square-root-side coefficients cannot be recovered from "
               "the plain side)\n";
        return kExitCheckFailed;
    }
}

int cmd_means(const MeansConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.xmin <= 0 || cfg.xmax <= cfg.xmin || cfg.count < 2 || cfg.alphas.empty()) {
        err << "means: need 0 < xmin < xmax, count >= 2 and at least one order\n";
        return kExitUsage;
    }
    json input;
    {
        std::ifstream in(cfg.measure_path);
        if (!in) {
            err << "cannot read " << cfg.measure_path << "\n";
            return kExitUsage;
        }
        try {
            in >> input;
        } catch (const json::exception& e) {
            err << "input is not valid JSON: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    try {
        const auto mu = io::measure_from_json(input);
        std::string csv = "x,alpha,value\n";
        for (int alpha : cfg.alphas) {
            if (alpha < 0) {
                err << "means: orders must be nonnegative\n";
                return kExitUsage;
            }
            for (int i = 0; i < cfg.count; ++i) {
                const double x = cfg.xmin * std::pow(cfg.xmax / cfg.xmin,
                                                     static_cast<double>(i) / (cfg.count - 1));
                csv += format_double(x) + "," + std::to_string(alpha) + "," +
                       format_double(engine::riesz_mean(mu, alpha, x)) + "\n";
            }
        }
        if (!write_text_file(cfg.out_path, csv, err)) return kExitUsage;
        out << "means: wrote " << cfg.out_path << "\n";
        return kExitPass;
    } catch (const io::SchemaError& e) {
        err << "schema violation: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "means failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

namespace {

struct FitPlan {
    double tmin, tmax;
    int smax;
};

/// Per-kind closed-form reference, where one exists.
double closed_form_value(const Manifold& man, const Observable& obs, KernelKind kind,
                         double t) {
    if (obs.kind == Observable::Kind::point)
        return green::model_kernel(man, kind, t, exact::to_double(obs.x),
                                   exact::to_double(obs.y));
    if (const auto* circle = std::get_if<models::Circle>(&man)) {
        const double L = exact::to_double(circle->L);
        return 2 * L * green::model_kernel(man, kind, t, 0.0, 0.0);
    }
    const auto& interval = std::get<models::Interval>(man);
    const double L = exact::to_double(interval.L);
    if (kind == KernelKind::cylinder) {
        const double z = M_PI * t / L;
        return 0.5 * std::sinh(z) / (std::cosh(z) - 1) - 0.5;
    }
    // heat trace through the image representation of the theta sum
    double images = 1;
    for (int k = 1;; ++k) {
        const double term = 2 * std::exp(-k * k * L * L / t);
        images += term;
        if (term < 1e-17) break;
    }
    return L * std::pow(4 * M_PI * t, -0.5) * images - 0.5;
}

} // namespace

int cmd_model_report(const ModelReportConfig& cfg, std::ostream& out, std::ostream& err) {
    Manifold man;
    Observable obs;
    try {
        if (cfg.manifold == "line") {
            man = models::Line{};
        } else if (cfg.manifold == "halfline") {
            man = models::HalfLine{cfg.boundary == "neumann"
                                       ? models::BoundaryCondition::neumann
                                       : models::BoundaryCondition::dirichlet};
        } else if (cfg.manifold == "circle") {
            man = models::Circle{cfg.L};
        } else if (cfg.manifold == "interval") {
            man = models::Interval{cfg.L};
        } else {
            err << "unknown manifold " << cfg.manifold << "\n";
            return kExitUsage;
        }
        if (cfg.observable == "trace")
            obs = Observable::trace();
        else if (cfg.observable == "diagonal")
            obs = cfg.has_y ? Observable::point_at(cfg.x, cfg.y)
                            : Observable::diagonal_at(cfg.x);
        else {
            err << "unknown observable " << cfg.observable << "\n";
            return kExitUsage;
        }
        if (cfg.L <= 0) {
            err << "L must be positive\n";
            return kExitUsage;
        }
    } catch (const std::exception& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        std::filesystem::create_directories(cfg.out_dir);

        // fit windows: conservative defaults per kind, tuned so that the
        // truncated tail of the expansion stays below the fit resolution
        FitPlan cylinder_plan{0.005, 0.3, 8};
        if (std::holds_alternative<models::HalfLine>(man)) cylinder_plan = {0.005, 0.15, 8};
        if (std::holds_alternative<models::Line>(man)) cylinder_plan = {0.01, 0.3, 4};
        FitPlan heat_plan{0.01, 0.1, 3};
        if (std::holds_alternative<models::Interval>(man)) heat_plan = {0.004, 0.03, 3};
        for (FitPlan* plan : {&cylinder_plan, &heat_plan}) {
            if (cfg.tmin > 0) plan->tmin = cfg.tmin;
            if (cfg.tmax > 0) plan->tmax = cfg.tmax;
            if (cfg.smax >= 0) plan->smax = cfg.smax;
        }

        const double cutoff = 45.0 / std::min(cylinder_plan.tmin, 0.005);
        const auto mu = models::spectral_measure(man, obs, cutoff);
        const auto tables = models::expected_coeffs(
            man, obs, std::max(cylinder_plan.smax, heat_plan.smax));

        constexpr int kSampleCount = 96;
        const auto tgrid = [&](const FitPlan& plan) {
            std::vector<double> ts;
            for (int i = 0; i < kSampleCount; ++i)
                ts.push_back(plan.tmin *
                             std::pow(plan.tmax / plan.tmin,
                                      static_cast<double>(i) / (kSampleCount - 1)));
            return ts;
        };

        bool all_pass = true;
        json kernel_summary;
        std::string kernels_csv = "kind,t,sum,closed_form,abs_diff\n";
        json coefficient_rows = json::array();

        for (KernelKind kind : {KernelKind::cylinder, KernelKind::heat}) {
            const FitPlan& plan = kind == KernelKind::cylinder ? cylinder_plan : heat_plan;
            green::KernelSamples samples{kind, {}, 0.0};
            double max_diff = 0;
            for (double t : tgrid(plan)) {
                const double sum_value = kind == KernelKind::cylinder
                                             ? green::cylinder_trace(mu, t)
                                             : green::heat_trace(mu, t);
                const double closed = closed_form_value(man, obs, kind, t);
                max_diff = std::max(max_diff, std::abs(sum_value - closed));
                samples.points.push_back({t, sum_value});
                kernels_csv += (kind == KernelKind::cylinder ? "cylinder," : "heat,");
                kernels_csv += format_double(t) + "," + format_double(sum_value) + "," +
                               format_double(closed) + "," +
                               format_double(std::abs(sum_value - closed)) + "\n";
            }
            const bool kernel_pass = max_diff <= cfg.kernel_tol;
            all_pass = all_pass && kernel_pass;
            kernel_summary[kind == KernelKind::cylinder ? "cylinder" : "heat"] =
                json{{"max_abs_diff", max_diff}, {"pass", kernel_pass}};

            const auto estimate = green::fit_kernel_expansion(
                samples, 1, plan.smax, plan.tmin, plan.tmax,
                riesz::engine::FitWeighting::none);

            // compare the first three nonzero expected coefficients
            int compared = 0;
            for (int s = 0; s <= plan.smax && compared < 3; ++s) {
                const auto& expected_coeff = kind == KernelKind::cylinder
                                                 ? tables.cylinder.coeff[s]
                                                 : tables.heat.coeff[s];
                if (!expected_coeff.is_determined()) continue;
                const double exact_value = expected_coeff.value().value();
                if (exact_value == 0) continue;
                ++compared;
                const double rel_err =
                    std::abs(estimate.coeff[s] - exact_value) / std::abs(exact_value);
                const bool pass = rel_err <= cfg.coeff_rel_tol;
                all_pass = all_pass && pass;
                coefficient_rows.push_back(
                    {{"kind", kind == KernelKind::cylinder ? "cylinder" : "heat"},
                     {"s", s},
                     {"fitted", estimate.coeff[s]},
                     {"exact", exact_value},
                     {"rel_err", rel_err},
                     {"pass", pass}});
            }
        }

        // Riesz means of the measure on a geometric grid, in its omega variable
        std::string means_csv = "x,alpha,value\n";
        for (int alpha : cfg.alphas) {
            for (int i = 0; i < 33; ++i) {
                const double x = 1.0 * std::pow(100.0, i / 32.0);
                means_csv += format_double(x) + "," + std::to_string(alpha) + "," +
                             format_double(engine::riesz_mean(mu, alpha, x)) + "\n";
            }
        }

        const json summary{
            {"command", "model-report"},
            {"version", kVersion},
            {"seed", cfg.seed},
            {"config",
             {{"manifold", cfg.manifold},
              {"boundary", cfg.boundary},
              {"L", exact::to_text(cfg.L)},
              {"observable", cfg.observable},
              {"x", exact::to_text(cfg.x)},
              {"y", exact::to_text(cfg.has_y ? cfg.y : cfg.x)},
              {"coeff_rel_tol", cfg.coeff_rel_tol},
              {"kernel_tol", cfg.kernel_tol},
              {"windows",
               {{"cylinder", {cylinder_plan.tmin, cylinder_plan.tmax, cylinder_plan.smax}},
                {"heat", {heat_plan.tmin, heat_plan.tmax, heat_plan.smax}}}}}},
            {"kernels", kernel_summary},
            {"coefficients", coefficient_rows},
            {"all_pass", all_pass}};

        namespace fs = std::filesystem;
        if (!write_text_file((fs::path(cfg.out_dir) / "kernels.csv").string(), kernels_csv,
                             err) ||
            !write_text_file((fs::path(cfg.out_dir) / "means.csv").string(), means_csv,
                             err) ||
            !write_text_file((fs::path(cfg.out_dir) / "summary.json").string(),
                             summary.dump(2) + "\n", err))
            return kExitUsage;
        out << "model-report " << cfg.manifold << "/" << cfg.observable << ": "
            << (all_pass ? "all comparisons passed" : "COMPARISON FAILURES") << "\n";
        return all_pass ? kExitPass : kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace riesz::cli

#ifndef RIESZ_CLI_COMMANDS_HPP
#define RIESZ_CLI_COMMANDS_HPP

#include "riesz/exact/rational.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace riesz::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes shared by every subcommand: 0 all checks passed, 1 a check
/// failed, 2 configuration or usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct IdentitiesConfig {
    int alpha_max = 8;
    std::vector<int> m_set = {1, 2, 3};
    int sweep_size = 20;        ///< rational samples per order in the factor sweeps
    int transform_tuples = 50;  ///< random terminating-series transform checks
    unsigned long long seed = 1;
    std::string out_path;       ///< JSON report destination ("" = none)
};
int cmd_identities(const IdentitiesConfig& cfg, std::ostream& out, std::ostream& err);

struct TransformConfig {
    std::string input_path;
    std::string output_path;
    std::string direction;  ///< e.g. "heat2lambda-diag"
};
int cmd_transform(const TransformConfig& cfg, std::ostream& out, std::ostream& err);

struct MeansConfig {
    std::string measure_path;
    std::string out_path;
    std::vector<int> alphas = {0, 1, 2};
    double xmin = 1.0, xmax = 100.0;
    int count = 33;
};
/// Riesz means of a measure file on a geometric grid, written as CSV with
/// columns x, alpha, value.
int cmd_means(const MeansConfig& cfg, std::ostream& out, std::ostream& err);

struct ModelReportConfig {
    std::string manifold = "circle";  ///< line | halfline | circle | interval
    std::string boundary = "dirichlet";
    exact::Rational L = 1;
    std::string observable = "trace";  ///< trace | diagonal
    exact::Rational x = 0;
    exact::Rational y = 0;
    bool has_y = false;
    std::string out_dir = ".";
    double coeff_rel_tol = 1e-3;
    double kernel_tol = 1e-10;
    unsigned long long seed = 1;
    std::vector<int> alphas = {0, 1, 2, 3};
    // window overrides; zero/negative values select the per-case defaults
    double tmin = 0, tmax = 0;
    int smax = -1;
};
int cmd_model_report(const ModelReportConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace riesz::cli

#endif

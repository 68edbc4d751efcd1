#include "riesz/engine/fit.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <set>
#include <stdexcept>

namespace riesz::engine {

FitResult asymptotic_fit(const std::vector<std::pair<double, double>>& samples,
                         const FitSpec& spec) {
    const std::size_t basis = spec.exponents.size();
    if (basis == 0 || spec.log_flags.size() != basis)
        throw std::invalid_argument("asymptotic_fit: basis spec arrays must be nonempty and "
                                    "parallel");
    std::set<std::pair<Rational, bool>> seen;
    for (std::size_t i = 0; i < basis; ++i)
        if (!seen.insert({spec.exponents[i], spec.log_flags[i]}).second)
            throw std::invalid_argument("asymptotic_fit: duplicate (exponent, log) pair");

    std::vector<std::pair<double, double>> used;
    for (const auto& [x, y] : samples)
        if (x >= spec.window_min && x <= spec.window_max) used.push_back({x, y});
    if (used.size() < basis)
        throw std::invalid_argument("asymptotic_fit: fewer samples in window than basis "
                                    "functions");

    Eigen::MatrixXd design(used.size(), basis);
    Eigen::VectorXd rhs(used.size());
    for (std::size_t r = 0; r < used.size(); ++r) {
        const double x = used[r].first;
        double w = 1;
        if (spec.weighting == FitWeighting::geometric)
            w = 1.0 / std::max(std::abs(used[r].second), 1e-30);
        for (std::size_t c = 0; c < basis; ++c) {
            double phi = std::pow(x, exact::to_double(spec.exponents[c]));
            if (spec.log_flags[c]) phi *= std::log(x);
            design(r, c) = w * phi;
        }
        rhs(r) = w * used[r].second;
    }

    // column equilibration keeps wildly different power scales comparable
    Eigen::VectorXd column_scale(basis);
    for (std::size_t c = 0; c < basis; ++c) {
        const double norm = design.col(c).norm();
        column_scale(c) = norm > 0 ? norm : 1.0;
        design.col(c) /= column_scale(c);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv(0) * 1e-13 * std::max<double>(used.size(), basis);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    if (rank < static_cast<int>(basis))
        throw std::invalid_argument("asymptotic_fit: rank-deficient design matrix (rank " +
                                    std::to_string(rank) + " of " + std::to_string(basis) + ")");

    const Eigen::VectorXd scaled_solution = svd.solve(rhs);
    const Eigen::VectorXd residual = design * scaled_solution - rhs;
    const Eigen::VectorXd solution = scaled_solution.cwiseQuotient(column_scale);

    FitResult result;
    result.coefficients.assign(solution.data(), solution.data() + solution.size());
    result.residual_norm = std::sqrt(residual.squaredNorm() / used.size());
    result.condition_number = sv(0) / sv(sv.size() - 1);
    result.rank = rank;
    result.samples_used = static_cast<int>(used.size());

    // standard-error proxy: sigma_hat * sqrt(diag((A^T A)^-1)) through the SVD
    const double dof = std::max<double>(1.0, static_cast<double>(used.size()) - basis);
    const double sigma_hat = std::sqrt(residual.squaredNorm() / dof);
    const Eigen::MatrixXd& v = svd.matrixV();
    result.coefficient_stderr.resize(basis);
    for (std::size_t j = 0; j < basis; ++j) {
        double diag = 0;
        for (int i = 0; i < sv.size(); ++i) diag += std::pow(v(j, i) / sv(i), 2);
        result.coefficient_stderr[j] = sigma_hat * std::sqrt(diag) / column_scale(j);
    }
    return result;
}

} // namespace riesz::engine

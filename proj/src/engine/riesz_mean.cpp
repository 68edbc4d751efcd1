#include "riesz/engine/riesz_mean.hpp"

#include "riesz/coeffs/transforms.hpp"
#include "riesz/engine/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace riesz::engine {

namespace {

double integer_pow(double base, int n) {
    double r = 1;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

void require_in_certified_range(const SpectralMeasure& mu, double x) {
    if (mu.atom_tail && x > mu.atom_tail->start)
        throw std::invalid_argument("evaluation point lies beyond the measure's atom cutoff");
}

/// integral of g(sigma) rho(sigma) over [0, x], substituting sigma = u^2
/// when the density is singular at the origin; oscillatory densities are
/// split per declared period.
double density_integral(const Density& rho, const std::function<double(double)>& g, double x,
                        double rel_tol) {
    if (x <= 0) return 0;
    const double period = rho.oscillation_period();
    if (rho.power_at_zero() < 0) {
        const double top = std::sqrt(x);
        std::vector<double> breaks;
        if (period > 0)
            for (double b = period; b < top; b += period) breaks.push_back(b);
        return integrate_split([&](double u) { return 2 * u * g(u * u) * rho(u * u); }, 0,
                               top, std::move(breaks), rel_tol);
    }
    std::vector<double> breaks;
    if (period > 0)
        for (double b = period; b < x; b += period) breaks.push_back(b);
    return integrate_split([&](double s) { return g(s) * rho(s); }, 0, x, std::move(breaks),
                           rel_tol);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 double abs_floor) {
    if (b <= a) return 0;
    double error = 0, l1 = 0;
    const double result = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, 18, rel_tol, &error, &l1);
    const double scale = std::max(l1, 1e-300);
    if (error > abs_floor && error / scale > 50 * rel_tol && error > 1e-14 * scale)
        throw QuadratureError("quadrature failed to converge: estimated error " +
                              std::to_string(error) + " on L1 mass " + std::to_string(l1));
    return result;
}

double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::vector<double> breaks, double rel_tol, double abs_floor) {
    if (b <= a) return 0;
    breaks.push_back(a);
    breaks.push_back(b);
    std::sort(breaks.begin(), breaks.end());
    double total = 0;
    double left = a;
    for (double point : breaks) {
        if (point <= left || point > b) continue;
        total += integrate(f, left, point, rel_tol, abs_floor);
        left = point;
    }
    if (left < b) total += integrate(f, left, b, rel_tol, abs_floor);
    return total;
}

double riesz_mean(const SpectralMeasure& mu, int alpha, double x, double rel_tol) {
    if (alpha < 0) throw std::invalid_argument("riesz_mean: need alpha >= 0");
    if (x <= 0) throw std::invalid_argument("riesz_mean: need x > 0");
    require_in_certified_range(mu, x);
    double total = 0;
    for (const Atom& a : mu.atoms) {
        if (a.position >= x) break;  // strict inequality: left continuity
        total += a.weight * integer_pow(1 - a.position / x, alpha);
    }
    if (mu.density) {
        total += density_integral(
            *mu.density, [&](double s) { return integer_pow(1 - s / x, alpha); }, x, rel_tol);
    }
    return total;
}

double riesz_integral(const SpectralMeasure& mu, int alpha, double x, double rel_tol) {
    if (alpha < 1) throw std::invalid_argument("riesz_integral: need alpha >= 1");
    if (x <= 0) throw std::invalid_argument("riesz_integral: need x > 0");
    require_in_certified_range(mu, x);
    double inv_factorial = 1;
    for (int i = 2; i <= alpha; ++i) inv_factorial /= i;
    double total = 0;
    for (const Atom& a : mu.atoms) {
        if (a.position >= x) break;
        total += a.weight * integer_pow(x - a.position, alpha);
    }
    if (mu.density) {
        total += density_integral(
            *mu.density, [&](double s) { return integer_pow(x - s, alpha); }, x, rel_tol);
    }
    return inv_factorial * total;
}

namespace {

/// Positions to their square roots (or squares), weights unchanged,
/// densities with the Jacobian, certificates transported.
SpectralMeasure power_map(const SpectralMeasure& mu, bool square_root) {
    SpectralMeasure out;
    out.variable = mu.variable;
    out.atoms.reserve(mu.atoms.size());
    for (const Atom& a : mu.atoms)
        out.atoms.push_back(
            {square_root ? std::sqrt(a.position) : a.position * a.position, a.weight});
    if (mu.density) {
        const Density rho = *mu.density;
        const DensityTailBound tail = rho.tail();
        if (square_root) {
            // rho_new(w) = 2 w rho(w^2); a fixed oscillation period does not
            // survive the square root
            out.density = Density([rho](double w) { return 2 * w * rho(w * w); },
                                  2 * rho.power_at_zero() + 1,
                                  {2 * tail.coefficient, 2 * tail.exponent + 1,
                                   std::sqrt(tail.start)});
        } else {
            // rho_new(s) = rho(sqrt s) / (2 sqrt s); the period carries over
            // to the square-root substitution variable used for quadrature
            out.density = Density(
                [rho](double s) { return rho(std::sqrt(s)) / (2 * std::sqrt(s)); },
                (rho.power_at_zero() - 1) / 2,
                {tail.coefficient / 2, (tail.exponent - 1) / 2, tail.start * tail.start},
                rho.oscillation_period());
        }
    }
    if (mu.atom_tail) {
        const AtomTailBound& t = *mu.atom_tail;
        if (square_root)
            out.atom_tail = AtomTailBound{std::sqrt(t.start), 2 * t.weight_rate,
                                          2 * t.rate_exponent + 1, t.max_single_weight};
        else
            out.atom_tail = AtomTailBound{t.start * t.start, t.weight_rate / 2,
                                          (t.rate_exponent - 1) / 2, t.max_single_weight};
    }
    out.validate();
    return out;
}

} // namespace

SpectralMeasure change_variable(const SpectralMeasure& mu) {
    const bool to_omega = mu.variable == SpectralVariable::lambda;
    SpectralMeasure out = power_map(mu, to_omega);
    out.variable = to_omega ? SpectralVariable::omega : SpectralVariable::lambda;
    return out;
}

double hardy_identity_residual(const SpectralMeasure& mu, const Rational& k, int alpha,
                               double x, double rel_tol) {
    if (!(k == Rational(2) || k == Rational(1, 2)))
        throw std::invalid_argument("hardy_identity_residual: only k = 2 and k = 1/2 are "
                                    "supported as changes of variable");
    if (alpha < 1) throw std::invalid_argument("hardy_identity_residual: need alpha >= 1");

    // the measure is read in the lambda role; its omega version carries
    // positions p^(1/k)
    const bool square_root = k == Rational(2);
    const SpectralMeasure omega_measure = power_map(mu, square_root);

    const double k_d = exact::to_double(k);
    const double omega_arg = std::pow(x, 1.0 / k_d);
    const double lhs = riesz_mean(mu, alpha, x, rel_tol);

    double rhs = std::pow(k_d, alpha) * riesz_mean(omega_measure, alpha, omega_arg, rel_tol);

    const auto coeffs = coeffs::hardy_kernel_coeffs(k, alpha);
    std::vector<double> a_j(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) a_j[j] = coeffs[j].value();

    std::vector<double> breaks;
    for (const Atom& atom : mu.atoms)
        if (atom.position < x) breaks.push_back(atom.position);

    const auto kernel_times_mean = [&](double sigma) {
        double J = 0;
        double sigma_pow = 1;
        for (std::size_t j = 0; j < a_j.size(); ++j) {
            J += a_j[j] * sigma_pow / integer_pow(x, static_cast<int>(j) + 1);
            sigma_pow *= sigma;
        }
        const double tau = std::pow(sigma, 1.0 / k_d);
        return J * riesz_mean(omega_measure, alpha, tau, rel_tol);
    };
    // near-empty pieces between close atoms need an absolute floor; piece
    // errors below rel_tol each stay collectively far inside the contract
    rhs += integrate_split(kernel_times_mean, 0, x, breaks, rel_tol, rel_tol);
    return lhs - rhs;
}

double hormander_identity_residual(const SpectralMeasure& mu, int k, int alpha, double x) {
    if (k < 2) throw std::invalid_argument("hormander_identity_residual: need integer k >= 2");
    if (alpha < 1) throw std::invalid_argument("hormander_identity_residual: need alpha >= 1");
    if (mu.density)
        throw std::invalid_argument("hormander_identity_residual: atomic measures only");

    SpectralMeasure omega_measure = mu;
    for (Atom& a : omega_measure.atoms) a.position = std::pow(a.position, 1.0 / k);
    const double omega_arg = std::pow(x, 1.0 / k);

    double rhs = 0;
    for (const auto& [beta, weight] : coeffs::hormander_weights(k, alpha))
        rhs += exact::to_double(weight) * riesz_mean(omega_measure, beta, omega_arg);
    return riesz_mean(mu, alpha, x) - rhs;
}

double stieltjes_mean(const SmoothWeight& weight, const SpectralMeasure& mu, int alpha,
                      double x, double rel_tol) {
    if (alpha < 0) throw std::invalid_argument("stieltjes_mean: need alpha >= 0");
    if (weight.max_order < alpha + 1)
        throw std::invalid_argument("stieltjes_mean: derivative evaluators up to order "
                                    "alpha + 1 are required");
    double total = weight.derivative(0, x) * riesz_mean(mu, alpha, x, rel_tol);

    std::vector<double> breaks;
    for (const Atom& atom : mu.atoms)
        if (atom.position < x) breaks.push_back(atom.position);
    // dyadic refinement toward the origin so that weights localized far
    // below x stay resolvable by interval bisection
    for (double cut = x / 2; cut > 1e-12 * x; cut /= 2) breaks.push_back(cut);

    double binom = 1;       // C(alpha+1, j)
    double inv_fact = 1;    // 1/(j-1)!
    for (int j = 1; j <= alpha + 1; ++j) {
        binom *= static_cast<double>(alpha + 2 - j) / j;
        if (j >= 2) inv_fact /= (j - 1);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        const double integral = integrate_split(
            [&](double s) {
                return integer_pow(x - s, j - 1) * integer_pow(s, alpha) *
                       weight.derivative(j, s) * riesz_mean(mu, alpha, s, rel_tol);
            },
            0, x, breaks, rel_tol);
        total += sign * binom * inv_fact * integral / integer_pow(x, alpha);
    }
    return total;
}

} // namespace riesz::engine

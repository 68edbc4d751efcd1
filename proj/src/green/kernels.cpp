#include "riesz/green/kernels.hpp"

#include "riesz/coeffs/transforms.hpp"
#include "riesz/engine/quadrature.hpp"
#include "riesz/engine/riesz_mean.hpp"

#include <cmath>
#include <stdexcept>

namespace riesz::green {

using engine::Atom;
using engine::SpectralVariable;
using exact::Rational;
using models::BoundaryCondition;

namespace {

double exp_trace(const SpectralMeasure& mu, double t, double tol) {
    if (t <= 0) throw std::invalid_argument("trace requires t > 0");
    // no atom_tail certificate means the atom list is exhaustive
    double certified = 0;
    if (mu.atom_tail) certified += engine::atom_tail_heat_bound(*mu.atom_tail, t);
    double total = 0;
    for (const Atom& a : mu.atoms) total += a.weight * std::exp(-a.position * t);
    if (mu.density) {
        const auto& rho = *mu.density;
        const auto tail = rho.tail();
        // integrate up to a point where the declared bound certifies the rest
        double cut = std::max(tail.start, 1.0);
        while (engine::exp_tail_integral_bound(tail.coefficient, tail.exponent, cut, t) >
                   tol / 2 &&
               cut < 1e9)
            cut *= 2;
        certified += engine::exp_tail_integral_bound(tail.coefficient, tail.exponent, cut, t);
        const auto integrand = [&](double s) { return rho(s) * std::exp(-s * t); };
        const double period = rho.oscillation_period();
        if (rho.power_at_zero() < 0) {
            // substituting s = u^2 restores the declared period in u
            const double top = std::sqrt(cut);
            std::vector<double> breaks;
            if (period > 0)
                for (double b = period; b < top; b += period) breaks.push_back(b);
            total += engine::integrate_split(
                [&](double u) { return 2 * u * integrand(u * u); }, 0, top,
                std::move(breaks), 1e-13);
        } else {
            std::vector<double> breaks;
            if (period > 0)
                for (double b = period; b < cut; b += period) breaks.push_back(b);
            total += engine::integrate_split(integrand, 0, cut, std::move(breaks), 1e-13);
        }
    }
    if (certified > tol)
        throw std::invalid_argument("trace: certified truncation bound " +
                                    std::to_string(certified) +
                                    " exceeds the requested tolerance; extend the measure "
                                    "cutoff");
    return total;
}

double gaussian_sum(double t, double shift, double period, double tol) {
    // sum over n of exp(-(shift - n * period)^2 / (4 t)), certified by the
    // monotone decay of both wings
    const auto term = [&](long n) {
        const double r = shift - static_cast<double>(n) * period;
        return std::exp(-r * r / (4 * t));
    };
    double total = term(0);
    for (int dir : {+1, -1}) {
        double prev = total;
        (void)prev;
        for (long n = dir;; n += dir) {
            const double v = term(n);
            total += v;
            // beyond the peak the terms decay faster than the geometric
            // ratio between consecutive terms; stop once the next bound is
            // negligible
            const double next = term(n + dir);
            if (v < tol / 8 && next < v) {
                const double q = v > 0 ? next / v : 0;
                if (q < 1 && next / (1 - q) < tol / 4) break;
            }
            if (std::abs(n) > 10000)
                throw std::runtime_error("image sum failed to converge");
        }
    }
    return total;
}

double circle_heat_kernel(double L, double t, double diff, double tol) {
    if (M_PI * t / L < 1.0) {
        return std::pow(4 * M_PI * t, -0.5) * gaussian_sum(t, diff, 2 * L, tol);
    }
    // Fourier form: (1/2L) [1 + 2 sum cos(k pi diff / L) exp(-(k pi / L)^2 t)]
    double total = 1;
    for (long k = 1;; ++k) {
        const double decay = std::exp(-std::pow(k * M_PI / L, 2) * t);
        total += 2 * std::cos(k * M_PI * diff / L) * decay;
        if (2 * decay < tol / 4) break;  // terms are monotone in k
        if (k > 100000) throw std::runtime_error("Fourier sum failed to converge");
    }
    return total / (2 * L);
}

double circle_cylinder_kernel(double L, double t, double diff) {
    const double z = M_PI * t / L;
    return (1 / (2 * L)) * std::sinh(z) / (std::cosh(z) - std::cos(M_PI * diff / L));
}

} // namespace

double heat_trace(const SpectralMeasure& mu, double t, double tol) {
    if (mu.variable != SpectralVariable::lambda)
        return exp_trace(engine::change_variable(mu), t, tol);
    return exp_trace(mu, t, tol);
}

double cylinder_trace(const SpectralMeasure& mu, double t, double tol) {
    if (mu.variable != SpectralVariable::omega)
        return exp_trace(engine::change_variable(mu), t, tol);
    return exp_trace(mu, t, tol);
}

double model_kernel(const models::Manifold& man, KernelKind kind, double t, double x,
                    double y) {
    if (t <= 0) throw std::invalid_argument("model_kernel requires t > 0");
    constexpr double tol = 1e-15;
    const bool heat = kind == KernelKind::heat;

    if (std::holds_alternative<models::Line>(man)) {
        const double d = x - y;
        if (heat) return std::pow(4 * M_PI * t, -0.5) * std::exp(-d * d / (4 * t));
        return (t / M_PI) / (d * d + t * t);
    }
    if (const auto* half = std::get_if<models::HalfLine>(&man)) {
        if (x < 0 || y < 0)
            throw std::invalid_argument("half-line points must be nonnegative");
        const double sign = half->bc == BoundaryCondition::dirichlet ? -1.0 : 1.0;
        const double d = x - y, s = x + y;
        if (heat)
            return std::pow(4 * M_PI * t, -0.5) *
                   (std::exp(-d * d / (4 * t)) + sign * std::exp(-s * s / (4 * t)));
        return (t / M_PI) * (1 / (d * d + t * t) + sign / (s * s + t * t));
    }
    if (const auto* circle = std::get_if<models::Circle>(&man)) {
        const double L = exact::to_double(circle->L);
        if (heat) return circle_heat_kernel(L, t, x - y, tol);
        return circle_cylinder_kernel(L, t, x - y);
    }
    const auto& interval = std::get<models::Interval>(man);
    const double L = exact::to_double(interval.L);
    if (x < 0 || x > L || y < 0 || y > L)
        throw std::invalid_argument("interval points must lie in [0, L]");
    if (heat) {
        if (M_PI * t / L < 1.0) {
            return std::pow(4 * M_PI * t, -0.5) *
                   (gaussian_sum(t, x - y, 2 * L, tol) - gaussian_sum(t, x + y, 2 * L, tol));
        }
        // eigenfunction form: (2/L) sum sin(n pi x / L) sin(n pi y / L) e^(-(n pi/L)^2 t)
        double total = 0;
        for (long n = 1;; ++n) {
            const double decay = std::exp(-std::pow(n * M_PI / L, 2) * t);
            total += (2 / L) * std::sin(n * M_PI * x / L) * std::sin(n * M_PI * y / L) * decay;
            if (2 / L * decay < tol / 4) break;
        }
        return total;
    }
    return circle_cylinder_kernel(L, t, x - y) - circle_cylinder_kernel(L, t, x + y);
}

double weight_derivs(WeightKind kind, int j, double t, double point) {
    if (j < 1) throw std::invalid_argument("weight_derivs: need j >= 1");
    if (kind == WeightKind::gaussian) {
        const auto z = coeffs::gaussian_weight_coeffs(j);
        const double omega = point;
        double sum = 0;
        for (std::size_t i = 0; i < z.size(); ++i)
            sum += exact::to_double(z[i]) * std::pow(omega, j - 2 * static_cast<int>(i)) *
                   std::pow(t, j - static_cast<int>(i));
        return std::exp(-omega * omega * t) * sum;
    }
    if (point <= 0) throw std::invalid_argument("weight_derivs: sqrt weight needs point > 0");
    const auto yc = coeffs::sqrt_exp_weight_coeffs(j);
    const double lambda = point;
    double sum = 0;
    for (std::size_t idx = 0; idx < yc.size(); ++idx) {
        const int i = static_cast<int>(idx) + 1;
        sum += exact::to_double(yc[idx]) * std::pow(t, i) * std::pow(lambda, -j + i / 2.0);
    }
    return std::exp(-t * std::sqrt(lambda)) * sum;
}

ExpansionEstimate fit_kernel_expansion(const KernelSamples& samples, int m, int smax,
                                       double window_min, double window_max,
                                       engine::FitWeighting weighting) {
    if (m < 1 || smax < 0) throw std::invalid_argument("fit_kernel_expansion: bad m or smax");
    engine::FitSpec spec;
    spec.window_min = window_min;
    spec.window_max = window_max;
    spec.weighting = weighting;
    std::vector<int> log_slot_of;  // basis index -> s, for log slots
    for (int s = 0; s <= smax; ++s) {
        if (samples.kind == KernelKind::heat) {
            spec.exponents.push_back(Rational(s - m, 2));
            spec.log_flags.push_back(false);
        } else {
            spec.exponents.push_back(Rational(s - m));
            spec.log_flags.push_back(false);
        }
    }
    if (samples.kind == KernelKind::cylinder) {
        for (int s = m + 1; s <= smax; s += 2) {
            spec.exponents.push_back(Rational(s - m));
            spec.log_flags.push_back(true);
            log_slot_of.push_back(s);
        }
    }

    const auto fit = engine::asymptotic_fit(samples.points, spec);

    ExpansionEstimate estimate;
    estimate.m = m;
    estimate.kind = samples.kind;
    estimate.coeff.assign(fit.coefficients.begin(), fit.coefficients.begin() + smax + 1);
    estimate.log_coeff.assign(smax + 1, 0.0);
    for (std::size_t i = 0; i < log_slot_of.size(); ++i)
        estimate.log_coeff[log_slot_of[i]] = fit.coefficients[smax + 1 + i];
    estimate.coeff_stderr = fit.coefficient_stderr;
    estimate.residual_norm = fit.residual_norm;
    estimate.condition_number = fit.condition_number;
    estimate.window = {window_min, window_max};
    return estimate;
}

} // namespace riesz::green

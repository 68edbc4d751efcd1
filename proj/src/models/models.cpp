#include "riesz/models/models.hpp"

#include "riesz/coeffs/transforms.hpp"
#include "riesz/engine/quadrature.hpp"
#include "riesz/exact/special_values.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riesz::models {

using coeffs::Coeff;
using coeffs::KernelKind;
using engine::AtomTailBound;
using engine::Density;
using engine::SpectralMeasure;
using engine::SpectralVariable;
using exact::bernoulli;
using exact::factorial;
using exact::pow_rational;
using exact::Rational;

namespace {

const ExactScalar inv_pi = ExactScalar::half_pi_power(-2);

SpectralMeasure ladder_measure(double step, double first_weight_at_zero,
                               const std::function<double(long)>& weight, double cutoff,
                               double rate, double max_single) {
    SpectralMeasure mu;
    mu.variable = SpectralVariable::omega;
    if (first_weight_at_zero != 0) mu.atoms.push_back({0.0, first_weight_at_zero});
    for (long n = 1; n * step <= cutoff; ++n) mu.atoms.push_back({n * step, weight(n)});
    mu.atom_tail = AtomTailBound{cutoff, rate, 0.0, max_single};
    mu.validate();
    return mu;
}

/// pi^p as an exact scalar with rational coefficient q.
ExactScalar pi_power(long p, const Rational& q) {
    return ExactScalar::half_pi_power(static_cast<int>(2 * p), q);
}

/// Cylinder coefficients e_s of the flat models, from which everything else
/// follows; m = 1 throughout.
std::vector<ExactScalar> cylinder_diagonal_values(const Manifold& man, const Observable& obs,
                                                  int smax) {
    std::vector<ExactScalar> e(smax + 1);
    if (std::holds_alternative<Line>(man)) {
        if (obs.kind != Observable::Kind::point)
            throw std::invalid_argument("line supports pointwise observables only");
        if (obs.is_diagonal()) {
            e[0] = inv_pi;
        } else {
            const Rational diff = obs.x - obs.y;
            for (int s = 2; s <= smax; s += 2)
                e[s] = pi_power(-1, (s / 2 % 2 == 0 ? -1 : 1) * pow_rational(diff, -s));
        }
        return e;
    }
    if (const auto* half = std::get_if<HalfLine>(&man)) {
        if (obs.kind != Observable::Kind::point)
            throw std::invalid_argument("half-line supports pointwise observables only");
        const Rational image_sign = half->bc == BoundaryCondition::dirichlet ? -1 : 1;
        e[0] = obs.is_diagonal() ? inv_pi : ExactScalar{};
        if (obs.is_diagonal()) {
            if (obs.x <= 0) throw std::invalid_argument("half-line point must be interior");
            for (int s = 2; s <= smax; s += 2) {
                // image distance 2x; Dirichlet keeps (-1)^(s/2)/(pi (2x)^s)
                const Rational mag = pow_rational(2 * obs.x, -s);
                e[s] = pi_power(-1, -image_sign * (s / 2 % 2 == 0 ? 1 : -1) * mag);
            }
        } else {
            const Rational diff = obs.x - obs.y, sum = obs.x + obs.y;
            for (int s = 2; s <= smax; s += 2) {
                const Rational direct = (s / 2 % 2 == 0 ? -1 : 1) * pow_rational(diff, -s);
                const Rational image =
                    image_sign * (s / 2 % 2 == 0 ? -1 : 1) * pow_rational(sum, -s);
                e[s] = pi_power(-1, direct + image);
            }
        }
        return e;
    }
    if (const auto* circle = std::get_if<Circle>(&man)) {
        const Rational L = circle->L;
        const Rational volume = 2 * L;
        if (obs.kind == Observable::Kind::point && !obs.is_diagonal())
            throw std::invalid_argument("off-diagonal circle tables are not provided");
        const bool trace = obs.kind == Observable::Kind::trace;
        // e_s = pi^(s-1) B_s / (L^s s!), times the volume for the trace
        e[0] = trace ? pi_power(-1, volume) : inv_pi;
        for (int s = 2; s <= smax; s += 2) {
            Rational q = bernoulli(s) / (pow_rational(L, s) * Rational(factorial(s)));
            if (trace) q *= volume;
            e[s] = pi_power(s - 1, q);
        }
        return e;
    }
    const auto& interval = std::get<Interval>(man);
    if (obs.kind != Observable::Kind::trace)
        throw std::invalid_argument("interval tables are provided for the trace only");
    const Rational L = interval.L;
    e[0] = pi_power(-1, L);
    if (smax >= 1) e[1] = ExactScalar(Rational(-1, 2));
    for (int s = 2; s <= smax; s += 2)
        e[s] = pi_power(s - 1, bernoulli(s) / (pow_rational(L, s - 1) * Rational(factorial(s))));
    return e;
}

/// Lambda diagonal a_ss of the same pairs (the local data).
std::vector<ExactScalar> lambda_diagonal_values(const Manifold& man, const Observable& obs,
                                                int smax) {
    std::vector<ExactScalar> a(smax + 1);
    if (obs.kind == Observable::Kind::trace) {
        if (const auto* circle = std::get_if<Circle>(&man)) {
            a[0] = pi_power(-1, 2 * circle->L);
        } else if (const auto* interval = std::get_if<Interval>(&man)) {
            a[0] = pi_power(-1, interval->L);
            if (smax >= 1) a[1] = ExactScalar(Rational(-1, 2));
        }
        return a;
    }
    // every pointwise case has the line's local data: a_ss = delta_{s0}/pi
    // on the diagonal and zero off it
    if (obs.is_diagonal()) a[0] = inv_pi;
    return a;
}

} // namespace

engine::SpectralMeasure spectral_measure(const Manifold& man, const Observable& obs,
                                         double cutoff) {
    if (cutoff <= 0) throw std::invalid_argument("spectral_measure: cutoff must be positive");

    if (std::holds_alternative<Line>(man)) {
        if (obs.kind != Observable::Kind::point)
            throw std::invalid_argument("line supports pointwise observables only");
        SpectralMeasure mu;
        mu.variable = SpectralVariable::omega;
        const double diff = exact::to_double(obs.x - obs.y);
        if (obs.is_diagonal()) {
            mu.density = Density([](double) { return 1.0 / M_PI; }, 0.0,
                                 {1.0 / M_PI, 0.0, 1.0});
        } else {
            mu.density = Density(
                [diff](double w) { return std::cos(w * diff) / M_PI; }, 0.0,
                {1.0 / M_PI, 0.0, 1.0}, 2 * M_PI / std::abs(diff));
        }
        return mu;
    }
    if (const auto* half = std::get_if<HalfLine>(&man)) {
        if (obs.kind != Observable::Kind::point || !obs.is_diagonal())
            throw std::invalid_argument("half-line measure is provided on the diagonal only");
        const double x = exact::to_double(obs.x);
        if (x <= 0) throw std::invalid_argument("half-line point must be interior");
        const double image_sign = half->bc == BoundaryCondition::dirichlet ? -1.0 : 1.0;
        SpectralMeasure mu;
        mu.variable = SpectralVariable::omega;
        // derivative of the diagonal spectral function: (1 + sign cos(2 w x))/pi
        mu.density = Density(
            [x, image_sign](double w) { return (1.0 + image_sign * std::cos(2 * w * x)) / M_PI; },
            0.0, {2.0 / M_PI, 0.0, 1.0}, M_PI / x);
        return mu;
    }
    if (const auto* circle = std::get_if<Circle>(&man)) {
        const double L = exact::to_double(circle->L);
        const double step = M_PI / L;
        if (obs.kind == Observable::Kind::trace)
            return ladder_measure(step, 1.0, [](long) { return 2.0; }, cutoff, 2.0 / (M_PI / L),
                                  2.0);
        const double diff = exact::to_double(obs.x - obs.y);
        return ladder_measure(
            step, 1.0 / (2 * L),
            [L, step, diff](long n) { return std::cos(n * step * diff) / L; }, cutoff,
            (1.0 / L) / step, 1.0 / L);
    }
    const auto& interval = std::get<Interval>(man);
    const double L = exact::to_double(interval.L);
    const double step = M_PI / L;
    if (obs.kind == Observable::Kind::trace)
        return ladder_measure(step, 0.0, [](long) { return 1.0; }, cutoff, 1.0 / step, 1.0);
    const double x = exact::to_double(obs.x), y = exact::to_double(obs.y);
    if (x <= 0 || x >= L || y <= 0 || y >= L)
        throw std::invalid_argument("interval points must be interior");
    return ladder_measure(
        step, 0.0,
        [L, step, x, y](long n) {
            return 2.0 / L * std::sin(n * step * x) * std::sin(n * step * y);
        },
        cutoff, (2.0 / L) / step, 2.0 / L);
}

ExpectedCoeffs expected_coeffs(const Manifold& man, const Observable& obs, int smax) {
    if (smax < 0) throw std::invalid_argument("expected_coeffs: smax must be >= 0");
    const int m = 1;
    std::vector<ExactScalar> e = cylinder_diagonal_values(man, obs, smax);
    std::vector<ExactScalar> a = lambda_diagonal_values(man, obs, smax);

    // the models carry no logarithms: f_s = 0, d_ss = 0, and c_ss = s! e_s
    std::vector<Coeff> e_coeffs, c_coeffs;
    std::vector<ExactScalar> zeros(smax + 1);
    for (int s = 0; s <= smax; ++s) {
        e_coeffs.emplace_back(e[s]);
        c_coeffs.emplace_back(Rational(factorial(s)) * e[s]);
    }
    KernelExpansion cylinder(m, KernelKind::cylinder, e_coeffs, zeros);
    DiagonalOmegaCoeffs omega(m, c_coeffs, zeros);
    DiagonalLambdaCoeffs lambda(m, a);
    KernelExpansion heat = coeffs::heat_from_lambda_diag(lambda);
    return ExpectedCoeffs{std::move(lambda), std::move(omega), std::move(heat),
                          std::move(cylinder)};
}

std::pair<ExactScalar, ExactScalar> euler_maclaurin_prediction(const Circle& circle, int s) {
    if (s < 2) throw std::invalid_argument("euler_maclaurin_prediction: need s >= 2");
    const long p = s - 1;  // the derivative order contributing at omega^(1-s)
    // lower-endpoint derivative value of the mean integrand, times the
    // trapezoid-correction weight (-1)^p B_s / s!
    const Rational deriv_magnitude =
        Rational(factorial(s), factorial(1)) / pow_rational(circle.L, p + 1);
    const Rational weight = bernoulli(s) / Rational(factorial(s));
    // the two (-1)^p factors cancel
    const ExactScalar c_ss = pi_power(p, deriv_magnitude * weight);
    const ExactScalar e_s = Rational(1, factorial(s)) * c_ss;
    return {c_ss, e_s};
}

ExactScalar trapezoid_defect(const Manifold& man) {
    if (std::holds_alternative<Interval>(man)) return ExactScalar(Rational(-1, 2));
    if (std::holds_alternative<Circle>(man)) return ExactScalar{};
    throw std::invalid_argument("trapezoid_defect applies to the circle and the interval");
}

DecayReport offdiagonal_decay_check(int s, double x, double y,
                                    const std::vector<double>& lambda_grid) {
    if (x == y) throw std::invalid_argument("offdiagonal_decay_check: need x != y");
    if (lambda_grid.size() < 16)
        throw std::invalid_argument("offdiagonal_decay_check: grid too short");
    const double diff = x - y;

    DecayReport report;
    report.s = s;
    report.bound = (1.0 - s) / 2.0 + 0.1;

    // R^s at lambda of the off-diagonal line spectral function, as a
    // tau-integral with the oscillatory factor cos(tau (x-y))
    std::vector<std::pair<double, double>> values;
    for (double lambda : lambda_grid) {
        const double w = std::sqrt(lambda);
        const double r = engine::integrate(
            [&](double tau) {
                double factor = 1 - tau * tau / lambda;
                double power = 1;
                for (int i = 0; i < s; ++i) power *= factor;
                return power * std::cos(tau * diff) / M_PI;
            },
            0, w, 1e-12);
        values.push_back({lambda, std::abs(r)});
    }

    // block maxima tame the oscillation before the log-log slope fit
    constexpr std::size_t block = 8;
    for (std::size_t i = 0; i + block <= values.size(); i += block) {
        double lam_mid = values[i + block / 2].first;
        double peak = 0;
        for (std::size_t j = i; j < i + block; ++j) peak = std::max(peak, values[j].second);
        report.envelope.push_back({lam_mid, peak});
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto& [lam, peak] : report.envelope) {
        if (peak <= 0) continue;
        const double lx = std::log(lam), ly = std::log(peak);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 4) throw std::runtime_error("offdiagonal_decay_check: degenerate envelope");
    report.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    report.pass = report.fitted_exponent <= report.bound;
    return report;
}

} // namespace riesz::models

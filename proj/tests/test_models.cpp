#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riesz/coeffs/transforms.hpp"
#include "riesz/green/kernels.hpp"
#include "riesz/models/models.hpp"

#include <cmath>

using namespace riesz::models;
using riesz::coeffs::Coeff;
using riesz::coeffs::KernelKind;
using riesz::exact::ExactScalar;
using riesz::exact::Rational;
using riesz::green::KernelSamples;

namespace {

const ExactScalar inv_pi = ExactScalar::half_pi_power(-2);

std::vector<std::pair<double, double>> geometric_grid(double lo, double hi, int n) {
    std::vector<std::pair<double, double>> grid;
    for (int i = 0; i < n; ++i)
        grid.push_back({lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)), 0.0});
    return grid;
}

} // namespace

TEST_CASE("spectral measures of the model observables") {
    const auto circle = spectral_measure(Circle{1}, Observable::trace(), 10.0);
    REQUIRE(circle.atoms.size() == 4);  // 0, pi, 2pi, 3pi
    CHECK(circle.atoms[0].position == 0.0);
    CHECK(circle.atoms[0].weight == 1.0);
    CHECK(circle.atoms[1].position == doctest::Approx(M_PI));
    CHECK(circle.atoms[1].weight == 2.0);
    CHECK(circle.atoms[3].position == doctest::Approx(3 * M_PI));

    const auto interval = spectral_measure(Interval{1}, Observable::trace(), 10.0);
    REQUIRE(interval.atoms.size() == 3);
    CHECK(interval.atoms[0].position == doctest::Approx(M_PI));
    CHECK(interval.atoms[0].weight == 1.0);

    const auto line = spectral_measure(Line{}, Observable::diagonal_at(Rational(1)), 5.0);
    CHECK(line.atoms.empty());
    REQUIRE(line.density.has_value());
    CHECK((*line.density)(2.0) == doctest::Approx(1.0 / M_PI));

    const auto half = spectral_measure(HalfLine{}, Observable::diagonal_at(Rational(1, 2)),
                                       5.0);
    REQUIRE(half.density.has_value());
    // density (1 - cos(2 w x))/pi with x = 1/2
    CHECK((*half.density)(1.3) == doctest::Approx((1 - std::cos(1.3)) / M_PI));

    CHECK_THROWS_AS(spectral_measure(Line{}, Observable::trace(), 5.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(spectral_measure(HalfLine{}, Observable::trace(), 5.0),
                    std::invalid_argument);
}

TEST_CASE("expected coefficient tables") {
    // line diagonal: only the leading entries survive
    const auto line = expected_coeffs(Line{}, Observable::diagonal_at(Rational(2)), 6);
    CHECK(line.lambda_diag.a[0] == inv_pi);
    for (int s = 1; s <= 6; ++s) CHECK(line.lambda_diag.a[s].is_zero());
    CHECK(line.heat.coeff[0].value() == ExactScalar::half_pi_power(-1, Rational(1, 2)));
    CHECK(line.cylinder.coeff[0].value() == inv_pi);
    for (int s = 1; s <= 6; ++s) CHECK(line.cylinder.coeff[s].value().is_zero());

    // line off-diagonal: everything lambda-side vanishes, the cylinder side
    // alternates in the even slots
    const auto off = expected_coeffs(Line{}, Observable::point_at(Rational(3), Rational(1)), 6);
    for (int s = 0; s <= 6; ++s) CHECK(off.lambda_diag.a[s].is_zero());
    CHECK(off.cylinder.coeff[2].value() ==
          ExactScalar::half_pi_power(-2, Rational(1, 4)));   // +1/(pi 2^2)
    CHECK(off.cylinder.coeff[4].value() ==
          ExactScalar::half_pi_power(-2, Rational(-1, 16))); // -1/(pi 2^4)
    // c_ss = s! e_s on the off-diagonal table
    for (int s = 0; s <= 6; ++s)
        CHECK(off.omega_diag.c[s].value() ==
              Rational(riesz::exact::factorial(s)) * off.cylinder.coeff[s].value());

    // half-line Dirichlet diagonal at x: c_ss = s! (-1)^(s/2) / (pi (2x)^s)
    const auto half =
        expected_coeffs(HalfLine{BoundaryCondition::dirichlet},
                        Observable::diagonal_at(Rational(1, 2)), 4);
    CHECK(half.cylinder.coeff[0].value() == inv_pi);
    CHECK(half.cylinder.coeff[2].value() == ExactScalar::half_pi_power(-2, Rational(-1)));
    CHECK(half.cylinder.coeff[4].value() == ExactScalar::half_pi_power(-2, Rational(1)));
    CHECK(half.omega_diag.c[2].value() == ExactScalar::half_pi_power(-2, Rational(-2)));
    CHECK(half.cylinder.coeff[1].value().is_zero());
    // Neumann flips the image contribution
    const auto neumann =
        expected_coeffs(HalfLine{BoundaryCondition::neumann},
                        Observable::diagonal_at(Rational(1, 2)), 4);
    CHECK(neumann.cylinder.coeff[2].value() ==
          ExactScalar::half_pi_power(-2, Rational(1)));

    // interval trace: the boundary shows up as -1/2 in all four tables
    const auto interval = expected_coeffs(Interval{1}, Observable::trace(), 4);
    const ExactScalar minus_half{Rational(-1, 2)};
    CHECK(interval.lambda_diag.a[1] == minus_half);
    CHECK(interval.heat.coeff[1].value() == minus_half);
    CHECK(interval.omega_diag.c[1].value() == minus_half);
    CHECK(interval.cylinder.coeff[1].value() == minus_half);

    // circle trace leading entries carry the volume
    const auto circle = expected_coeffs(Circle{1}, Observable::trace(), 4);
    CHECK(circle.lambda_diag.a[0] == ExactScalar::half_pi_power(-2, Rational(2)));
    CHECK(circle.cylinder.coeff[2].value() == ExactScalar::half_pi_power(2, Rational(1, 6)));

    CHECK_THROWS_AS(expected_coeffs(Interval{1}, Observable::diagonal_at(Rational(1, 2)), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        expected_coeffs(Circle{1}, Observable::point_at(Rational(0), Rational(1, 3)), 4),
        std::invalid_argument);
}

TEST_CASE("euler-maclaurin predictions for the circle") {
    const Circle unit{1};
    const auto [c2, e2] = euler_maclaurin_prediction(unit, 2);
    CHECK(c2 == ExactScalar::half_pi_power(2, Rational(1, 6)));   // pi/6
    CHECK(e2 == ExactScalar::half_pi_power(2, Rational(1, 12)));  // pi/12
    const auto [c3, e3] = euler_maclaurin_prediction(unit, 3);
    CHECK(c3.is_zero());
    CHECK(e3.is_zero());
    const auto [c4, e4] = euler_maclaurin_prediction(unit, 4);
    CHECK(e4 == ExactScalar::half_pi_power(6, Rational(-1, 720)));  // -pi^3/720
    CHECK_THROWS_AS(euler_maclaurin_prediction(unit, 1), std::invalid_argument);

    // the predictions coincide with the expected diagonal tables
    const auto tables = expected_coeffs(unit, Observable::diagonal_at(0), 8);
    for (int s = 2; s <= 8; ++s) {
        const auto [c, e] = euler_maclaurin_prediction(unit, s);
        CHECK(tables.omega_diag.c[s].value() == c);
        CHECK(tables.cylinder.coeff[s].value() == e);
    }

    // exact L-scaling: c_ss * L^s does not depend on L
    const Circle three{3};
    for (int s = 2; s <= 8; s += 2) {
        const auto [c1, e1] = euler_maclaurin_prediction(unit, s);
        const auto [cL, eL] = euler_maclaurin_prediction(three, s);
        CHECK(riesz::exact::pow_rational(Rational(3), s) * cL == c1);
    }
}

TEST_CASE("trapezoid defect") {
    CHECK(trapezoid_defect(Interval{2}) == ExactScalar(Rational(-1, 2)));
    CHECK(trapezoid_defect(Circle{1}).is_zero());
    CHECK_THROWS_AS(trapezoid_defect(Line{}), std::invalid_argument);
}

TEST_CASE("exact transforms connect the expected tables") {
    // the lambda side determines the omega side except on the log branch,
    // where the model's nonlocal values live
    const std::vector<std::pair<Manifold, Observable>> cases = {
        {Line{}, Observable::diagonal_at(Rational(1))},
        {Line{}, Observable::point_at(Rational(2), Rational(1))},
        {HalfLine{BoundaryCondition::dirichlet}, Observable::diagonal_at(Rational(1, 2))},
        {Circle{2}, Observable::diagonal_at(Rational(0))},
        {Circle{1}, Observable::trace()},
        {Interval{1}, Observable::trace()},
    };
    for (const auto& [man, obs] : cases) {
        const auto tables = expected_coeffs(man, obs, 6);
        const auto omega = riesz::coeffs::omega_diag_from_lambda_diag(tables.lambda_diag);
        for (int s = 0; s <= 6; ++s) {
            CHECK(omega.d[s] == tables.omega_diag.d[s]);
            if (omega.c[s].is_determined())
                CHECK(omega.c[s] == tables.omega_diag.c[s]);
            else
                CHECK(s - 1 > 0);  // undetermined only above the dimension, odd offset
        }
        // and the expansions are the diagonal maps of the mean tables
        const auto heat = riesz::coeffs::heat_from_lambda_diag(tables.lambda_diag);
        const auto cylinder = riesz::coeffs::cylinder_from_omega_diag(tables.omega_diag);
        for (int s = 0; s <= 6; ++s) {
            CHECK(heat.coeff[s] == tables.heat.coeff[s]);
            CHECK(cylinder.coeff[s] == tables.cylinder.coeff[s]);
            CHECK(cylinder.log_coeff[s] == tables.cylinder.log_coeff[s]);
        }
    }
}

TEST_CASE("end to end: fitted coefficients match the exact tables") {
    struct Case {
        Manifold man;
        Observable obs;
        KernelKind kind;
        double lo, hi;
        int smax;
        double cutoff;
        std::vector<int> check;  // indices of nonzero coefficients to compare
    };
    const std::vector<Case> cases = {
        {Circle{1}, Observable::diagonal_at(Rational(1, 4)), KernelKind::cylinder, 0.005, 0.3,
         8, 8000.0, {0, 2, 4}},
        {Circle{1}, Observable::trace(), KernelKind::cylinder, 0.005, 0.3, 8, 8000.0,
         {0, 2, 4}},
        {Interval{1}, Observable::trace(), KernelKind::heat, 0.004, 0.03, 3, 900.0, {0, 1}},
        {Interval{1}, Observable::trace(), KernelKind::cylinder, 0.005, 0.3, 8, 8000.0,
         {0, 1, 2}},
        {HalfLine{BoundaryCondition::dirichlet}, Observable::diagonal_at(Rational(1, 2)),
         KernelKind::cylinder, 0.005, 0.15, 8, 8000.0, {0, 2, 4}},
    };
    for (const auto& c : cases) {
        const auto mu = spectral_measure(c.man, c.obs, c.cutoff);
        const auto tables = expected_coeffs(c.man, c.obs, c.smax);
        KernelSamples samples{c.kind, geometric_grid(c.lo, c.hi, 96), 0.0};
        for (auto& [t, v] : samples.points)
            v = c.kind == KernelKind::heat ? riesz::green::heat_trace(mu, t)
                                           : riesz::green::cylinder_trace(mu, t);
        const auto est = riesz::green::fit_kernel_expansion(samples, 1, c.smax, c.lo, c.hi,
                                                            riesz::engine::FitWeighting::none);
        for (int s : c.check) {
            const double exact_value = c.kind == KernelKind::heat
                                           ? tables.heat.coeff[s].value().value()
                                           : tables.cylinder.coeff[s].value().value();
            CHECK(std::abs(est.coeff[s] - exact_value) <=
                  1e-3 * std::max(std::abs(exact_value), 1e-6));
        }
    }
}

TEST_CASE("off-diagonal decay of the line means") {
    std::vector<double> grid;
    for (int i = 0; i < 160; ++i) grid.push_back(50.0 * std::pow(1.05, i));

    const auto r1 = offdiagonal_decay_check(1, 1.0, 0.0, grid);
    CHECK(r1.pass);
    CHECK(r1.fitted_exponent <= 0.1);

    const auto r3 = offdiagonal_decay_check(3, 2.5, 0.5, grid);
    CHECK(r3.pass);
    CHECK(r3.fitted_exponent < -0.9);

    const auto r0 = offdiagonal_decay_check(0, 1.0, 0.0, grid);
    CHECK(r0.fitted_exponent <= 0.6);  // no decay claimed at order zero

    CHECK_THROWS_AS(offdiagonal_decay_check(1, 1.0, 1.0, grid), std::invalid_argument);
    CHECK_THROWS_AS(offdiagonal_decay_check(1, 1.0, 0.0, std::vector<double>{1.0, 2.0}),
                    std::invalid_argument);
}

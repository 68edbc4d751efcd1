#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riesz/coeffs/transforms.hpp"
#include "riesz/exact/special_values.hpp"

#include <random>

using namespace riesz::coeffs;
using riesz::exact::factorial;
using riesz::exact::gamma_ratio;
using riesz::exact::pow_rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 30);
    return Rational(num(rng), den(rng));
}

DiagonalLambdaCoeffs random_lambda_diag(std::mt19937_64& rng, int m, int order) {
    std::vector<ExactScalar> a;
    for (int s = 0; s <= order; ++s) a.emplace_back(random_rational(rng));
    return DiagonalLambdaCoeffs(m, std::move(a));
}

DiagonalOmegaCoeffs random_omega_diag(std::mt19937_64& rng, int m, int order,
                                      bool undetermined_logs = false) {
    std::vector<Coeff> c;
    std::vector<ExactScalar> d(order + 1);
    for (int s = 0; s <= order; ++s) {
        const bool log_slot = s > m && (s - m) % 2 == 1;
        if (log_slot) {
            c.push_back(undetermined_logs ? Coeff::undetermined()
                                          : Coeff(ExactScalar(random_rational(rng))));
            d[s] = ExactScalar(random_rational(rng));
        } else {
            c.push_back(Coeff(ExactScalar(random_rational(rng))));
        }
    }
    return DiagonalOmegaCoeffs(m, std::move(c), std::move(d));
}

const ExactScalar inv_pi = ExactScalar::half_pi_power(-2);            // 1/pi
const ExactScalar inv_sqrt_4pi = ExactScalar::half_pi_power(-1, {1, 2});  // (4 pi)^(-1/2)

} // namespace

TEST_CASE("hardy kernel coefficients") {
    auto c = hardy_kernel_coeffs(Rational(2), 1);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == ExactScalar(Rational(-1)));

    c = hardy_kernel_coeffs(Rational(1, 2), 1);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == ExactScalar(Rational(1, 2)));

    // for the square-root substitution every odd-j coefficient vanishes
    for (int alpha = 2; alpha <= 6; ++alpha) {
        c = hardy_kernel_coeffs(Rational(1, 2), alpha);
        for (int j = 1; j < alpha; j += 2) CHECK(c[j].is_zero());
    }

    CHECK_THROWS_AS(hardy_kernel_coeffs(Rational(1), 2), std::invalid_argument);
    CHECK_THROWS_AS(hardy_kernel_coeffs(Rational(-2), 2), std::invalid_argument);

    // general rational k: numeric cross-check of the gamma ratio factors
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<long> num(1, 9), den(1, 4);
        const Rational k(num(rng), den(rng));
        if (k == 1) continue;
        const int alpha = 1 + static_cast<int>(trial % 4);
        c = hardy_kernel_coeffs(k, alpha);
        for (int j = 0; j < alpha; ++j) {
            const double x = riesz::exact::to_double(k) * (j + 1);
            double expect = 0.0;
            const double xa = x - alpha;
            const bool denominator_pole = xa <= 0 && std::abs(xa - std::round(xa)) < 1e-12;
            if (!denominator_pole) {
                expect = (((alpha - j) % 2 == 0) ? 1.0 : -1.0) /
                         (riesz::exact::to_double(Rational(factorial(j))) *
                          riesz::exact::to_double(Rational(factorial(alpha - 1 - j)))) *
                         std::tgamma(x) / std::tgamma(xa);
            }
            CHECK(c[j].value() == doctest::Approx(expect).epsilon(1e-9));
        }
    }
}

TEST_CASE("hormander weights") {
    auto w = hormander_weights(2, 1);
    CHECK(w.at(1) == 2);
    CHECK(w.at(2) == -1);

    w = hormander_weights(2, 2);
    CHECK(w.at(2) == 4);
    CHECK(w.at(3) == -4);
    CHECK(w.at(4) == 1);

    for (int k = 2; k <= 3; ++k)
        for (int alpha = 1; alpha <= 6; ++alpha) {
            Rational total = 0;
            for (const auto& [beta, b] : hormander_weights(k, alpha)) {
                CHECK(beta >= alpha);
                CHECK(beta <= alpha * k);
                total += b;
            }
            CHECK(total == 1);
        }
}

TEST_CASE("heat expansion from diagonal lambda means") {
    DiagonalLambdaCoeffs line(1, {inv_pi});
    const KernelExpansion heat = heat_from_lambda_diag(line);
    CHECK(heat.coeff[0].value() == inv_sqrt_4pi);

    DiagonalLambdaCoeffs zeros(2, {ExactScalar{}, ExactScalar{}, ExactScalar{}});
    for (const Coeff& b : heat_from_lambda_diag(zeros).coeff) CHECK(b.value().is_zero());

    DiagonalLambdaCoeffs interval(1, {ExactScalar{}, ExactScalar(Rational(-1, 2))});
    CHECK(heat_from_lambda_diag(interval).coeff[1].value() == ExactScalar(Rational(-1, 2)));
}

TEST_CASE("diagonal lambda means from heat expansion") {
    KernelExpansion heat(1, KernelKind::heat, {Coeff(inv_sqrt_4pi)});
    CHECK(lambda_diag_from_heat(heat).a[0] == inv_pi);

    KernelExpansion heat2(2, KernelKind::heat, {Coeff(ExactScalar{}), Coeff(ExactScalar(1))});
    CHECK(lambda_diag_from_heat(heat2).a[1] ==
          ExactScalar::half_pi_power(-1, Rational(4, 3)));

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        for (int m = 1; m <= 3; ++m) {
            const auto diag = random_lambda_diag(rng, m, 1 + static_cast<int>(rng() % 8));
            const auto round = lambda_diag_from_heat(heat_from_lambda_diag(diag));
            CHECK(round.a == diag.a);
        }
    }
}

TEST_CASE("lambda table from diagonal") {
    std::mt19937_64 rng(5);
    const auto diag = random_lambda_diag(rng, 1, 3);
    const CoeffTable table = lambda_table_from_diag(diag, 5);  // construction validates
    CHECK(table.a(3, 0) == Rational(16, 35) * diag.a[0]);
    for (int s = 0; s <= 3; ++s) CHECK(table.a(s, s) == diag.a[s]);

    DiagonalLambdaCoeffs diag2(2, {ExactScalar(1), ExactScalar(1), ExactScalar(1),
                                   ExactScalar(1), ExactScalar(1)});
    const CoeffTable t2 = lambda_table_from_diag(diag2, 4);
    CHECK(t2.a(0, 4).is_zero());  // denominator gamma pole forces zero
    CHECK_FALSE(t2.a(0, 2).is_zero());
}

TEST_CASE("omega diagonal from lambda diagonal") {
    std::mt19937_64 rng(6);
    const auto diag = random_lambda_diag(rng, 1, 2);
    const auto omega = omega_diag_from_lambda_diag(diag);
    CHECK(omega.d[2] == Rational(3, 4) * diag.a[2]);
    CHECK(omega.c[0].value() == diag.a[0]);
    CHECK_FALSE(omega.c[2].is_determined());
}

TEST_CASE("lambda diagonal from omega diagonal") {
    std::mt19937_64 rng(7);
    const auto omega = random_omega_diag(rng, 1, 2, true);
    const auto lambda = lambda_diag_from_omega_diag(omega);
    CHECK(lambda.a[2] == Rational(4, 3) * omega.d[2]);
    CHECK(lambda.a[1] == omega.c[1].value());
    CHECK(lambda.a[0] == omega.c[0].value());

    // lambda -> omega -> lambda is the identity
    for (int trial = 0; trial < 30; ++trial) {
        for (int m = 1; m <= 3; ++m) {
            const auto d0 = random_lambda_diag(rng, m, 1 + static_cast<int>(rng() % 8));
            const auto round = lambda_diag_from_omega_diag(omega_diag_from_lambda_diag(d0));
            CHECK(round.a == d0.a);
        }
    }
}

TEST_CASE("printed diagonal closed forms match the general-order specialization") {
    // The diagonal maps are implemented as the order = s case of the general
    // formulas; the summary table prints them with rearranged prefactors.
    // Both spellings must agree exactly.
    for (int m = 1; m <= 3; ++m) {
        for (int s = 0; s <= 8; ++s) {
            DiagonalLambdaCoeffs unit(m, [&] {
                std::vector<ExactScalar> a(s + 1);
                a[s] = ExactScalar(1);
                return a;
            }());
            const auto omega = omega_diag_from_lambda_diag(unit);
            if (s > m && (s - m) % 2 == 1) {
                // d_ss = (-1)^(m+1) / ((s-m-1)! m!) * Gamma((s-m)/2)/Gamma(-(m+s)/2)
                const Rational printed = (m % 2 == 0 ? -1 : 1) *
                                         Rational(1, factorial(s - m - 1) * factorial(m)) *
                                         gamma_ratio(Rational(s - m, 2), s);
                CHECK(omega.d[s] == ExactScalar(printed));
                CHECK_FALSE(omega.c[s].is_determined());
                // a_ss back from d_ss via the printed bracket
                Rational bracket = 0;
                for (int j = s / 2; j <= s - 1; ++j)
                    bracket += ((s - j) % 2 == 0 ? 1 : -1) *
                               pow_rational(Rational(m - s, 2) + j + 1, -2) *
                               Rational(1, factorial(j) * factorial(s - 1 - j)) *
                               gamma_ratio(Rational(2 * j + 2), s);
                const auto lambda_back = lambda_diag_from_omega_diag(omega);
                CHECK(lambda_back.a[s] ==
                      ExactScalar(Rational(-1, 2) * bracket * printed));
            } else {
                Rational bracket = pow_rational(Rational(2), -s);
                for (int j = 0; j <= s - 1; j += 2)
                    bracket += ((s - j) % 2 == 0 ? 1 : -1) /
                               (Rational(m - s + j + 1)) *
                               Rational(1, factorial(j) * factorial(s - 1 - j)) *
                               gamma_ratio(Rational(j + 1, 2), s);
                CHECK(omega.c[s].value() == ExactScalar(bracket));
            }
        }
    }
}

TEST_CASE("full-order omega row from a lambda table") {
    std::mt19937_64 rng(8);
    const auto diag = random_lambda_diag(rng, 1, 3);
    const CoeffTable table = lambda_table_from_diag(diag, 3);
    const OmegaOrderRow row = omega_full_from_lambda(table, 3);
    CHECK(row.d[2] == Rational(15, 16) * table.a(3, 2));
    CHECK_FALSE(row.c[2].is_determined());

    // order = s reproduces the diagonal map
    const auto omega_diag = omega_diag_from_lambda_diag(diag);
    for (int s = 0; s <= 3; ++s) {
        const OmegaOrderRow r = omega_full_from_lambda(table, s);
        CHECK(r.c[s] == omega_diag.c[s]);
        CHECK(r.d[s] == omega_diag.d[s]);
    }

    // cross-check d_32 against the one-step d recursion from d_22
    const auto d22 = omega_diag.d[2];
    CHECK(Rational(1, 3) * (Rational(1 - 2 + 3) * row.d[2]) == d22);

    // zero table maps to zero
    DiagonalLambdaCoeffs zeros(1, std::vector<ExactScalar>(4));
    const OmegaOrderRow zrow = omega_full_from_lambda(lambda_table_from_diag(zeros, 3), 3);
    for (int s = 0; s <= 3; ++s) CHECK(zrow.d[s].is_zero());
}

TEST_CASE("round trip through full-order maps") {
    std::mt19937_64 rng(9);
    for (int m = 1; m <= 3; ++m) {
        for (int alpha = 1; alpha <= 4; ++alpha) {
            const auto diag = random_lambda_diag(rng, m, alpha);
            const CoeffTable lam = lambda_table_from_diag(diag, alpha);
            const OmegaOrderRow row = omega_full_from_lambda(lam, alpha);

            // rebuild an omega table holding that row via the omega diagonals
            const auto omega_diag = omega_diag_from_lambda_diag(diag);
            const CoeffTable omg = omega_table_from_diag(omega_diag, alpha);
            for (int s = 0; s <= alpha; ++s) {
                CHECK(omg.c(alpha, s) == row.c[s]);
                CHECK(omg.d(alpha, s) == row.d[s]);
            }

            const auto a_back = lambda_full_from_omega(omg, alpha);
            for (int s = 0; s <= alpha; ++s) CHECK(a_back[s] == lam.a(alpha, s));
        }
    }
}

TEST_CASE("consistency identities at hand-checked points") {
    auto r = verify_consistency(1, 1, 0);
    REQUIRE(r.product_plain_branch.has_value());
    CHECK(*r.product_plain_branch == ExactScalar(1));
    CHECK_FALSE(r.vanishing_sum.has_value());

    r = verify_consistency(1, 1, 2);
    REQUIRE(r.vanishing_sum.has_value());
    CHECK(r.vanishing_sum->is_zero());
    REQUIRE(r.product_log_branch.has_value());
    CHECK(*r.product_log_branch == ExactScalar(1));

    r = verify_consistency(2, 1, 2);
    REQUIRE(r.product_log_branch.has_value());
    CHECK(*r.product_log_branch == ExactScalar(1));
}

TEST_CASE("consistency identities sweep") {
    for (int alpha = 1; alpha <= 8; ++alpha)
        for (int m = 1; m <= 3; ++m)
            for (int s = 0; s <= alpha; ++s) {
                const auto r = verify_consistency(alpha, m, s);
                if (s > m && (s - m) % 2 == 1) {
                    CHECK(*r.product_log_branch == ExactScalar(1));
                    CHECK(r.vanishing_sum->is_zero());
                } else {
                    CHECK(*r.product_plain_branch == ExactScalar(1));
                }
            }
}

TEST_CASE("cylinder expansion from omega diagonal") {
    std::mt19937_64 rng(10);
    const auto diag = random_omega_diag(rng, 1, 2);
    const auto cyl = cylinder_from_omega_diag(diag);
    CHECK(cyl.coeff[0].value() == diag.c[0].value());
    CHECK(cyl.log_coeff[2] == Rational(-1, 2) * diag.d[2]);
    const ExactScalar psi2 = ExactScalar(1) + ExactScalar::euler_gamma(-1);
    CHECK(cyl.coeff[2].value() ==
          Rational(1, 2) * (diag.c[2].value() + psi2 * diag.d[2]));

    // undetermined c on the log branch propagates to e
    const auto diag_u = random_omega_diag(rng, 1, 2, true);
    CHECK_FALSE(cylinder_from_omega_diag(diag_u).coeff[2].is_determined());

    // zero d: e_s = (m!/s!) c_ss and no log slots
    DiagonalOmegaCoeffs plain(2, {Coeff(ExactScalar(6)), Coeff(ExactScalar(6)),
                                  Coeff(ExactScalar(6))},
                              std::vector<ExactScalar>(3));
    const auto cyl2 = cylinder_from_omega_diag(plain);
    CHECK(cyl2.coeff[2].value() == ExactScalar(6));
    for (const auto& f : cyl2.log_coeff) CHECK(f.is_zero());
}

TEST_CASE("omega diagonal from cylinder expansion") {
    // circle-style data: f_2 = 0, e_2 = pi/12  ->  c_22 = pi/6, d_22 = 0
    KernelExpansion cyl(1, KernelKind::cylinder,
                        {Coeff(inv_pi), Coeff(ExactScalar{}),
                         Coeff(ExactScalar::half_pi_power(2, Rational(1, 12)))});
    const auto diag = omega_diag_from_cylinder(cyl);
    CHECK(diag.c[2].value() == ExactScalar::half_pi_power(2, Rational(1, 6)));
    CHECK(diag.d[2].is_zero());

    KernelExpansion interval(1, KernelKind::cylinder,
                             {Coeff(ExactScalar{}), Coeff(ExactScalar(Rational(-1, 2)))});
    CHECK(omega_diag_from_cylinder(interval).c[1].value() == ExactScalar(Rational(-1, 2)));

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial)
        for (int m = 1; m <= 3; ++m) {
            const auto d0 = random_omega_diag(rng, m, 1 + static_cast<int>(rng() % 8));
            const auto round = omega_diag_from_cylinder(cylinder_from_omega_diag(d0));
            CHECK(round.c == d0.c);
            CHECK(round.d == d0.d);
        }
}

TEST_CASE("omega table from diagonal") {
    std::mt19937_64 rng(13);
    const auto diag = random_omega_diag(rng, 1, 3, true);
    const CoeffTable table = omega_table_from_diag(diag, 4);  // validates recursions

    // low-order entry on the log branch depends only on d_33
    CHECK(table.c(1, 3) == Coeff(Rational(1, 6) * diag.d[3]));
    CHECK(table.d(1, 3).is_zero());

    // d prefactor: explicit gamma form with pole -> 0
    for (int alpha = 0; alpha <= 4; ++alpha) {
        const Rational pre =
            1 - 3 + alpha < 0
                ? Rational(0)
                : Rational(factorial(alpha) * factorial(1), factorial(1 - 3 + alpha) * factorial(3));
        CHECK(table.d(alpha, 3) == pre * diag.d[3]);
    }

    // the diagonal rows reproduce the input
    for (int s = 0; s <= 3; ++s) {
        CHECK(table.c(s, s) == diag.c[s]);
        CHECK(table.d(s, s) == diag.d[s]);
    }
}

TEST_CASE("moment map") {
    auto terms = moment_map(MomentVariable::lambda, Rational(1), false);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].power == Rational(-1));
    CHECK_FALSE(terms[0].has_log);
    CHECK(terms[0].coefficient == ExactScalar(1));

    terms = moment_map(MomentVariable::omega, Rational(1), true);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].coefficient == ExactScalar::euler_gamma(Rational(-1, 4)));
    CHECK(terms[1].has_log);
    CHECK(terms[1].coefficient == ExactScalar(Rational(-1, 4)));

    terms = moment_map(MomentVariable::omega_for_cylinder, Rational(2), true);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].coefficient == ExactScalar(1) + ExactScalar::euler_gamma(-1));
    CHECK(terms[1].has_log);
    CHECK(terms[1].coefficient == ExactScalar(Rational(-1)));

    CHECK_THROWS_AS(moment_map(MomentVariable::lambda, Rational(0), false),
                    std::invalid_argument);
    CHECK_THROWS_AS(moment_map(MomentVariable::lambda, Rational(-1, 2), false),
                    std::invalid_argument);
}

TEST_CASE("log scale shift") {
    std::mt19937_64 rng(14);
    const auto diag = random_omega_diag(rng, 1, 2);
    const auto shifted = shift_log_scale(diag, ExactScalar::ln_two(3));
    CHECK(shifted.c[2].value() ==
          diag.c[2].value() + ExactScalar::ln_two(3) * diag.d[2]);
    CHECK(shifted.c[0] == diag.c[0]);
    CHECK(shifted.d == diag.d);
}

TEST_CASE("weight derivative tables") {
    CHECK(gaussian_weight_coeffs(1) == std::vector<Rational>{-2});
    CHECK(gaussian_weight_coeffs(4) == std::vector<Rational>{16, -48, 12});
    CHECK(sqrt_exp_weight_coeffs(2) == std::vector<Rational>{Rational(1, 4), Rational(1, 4)});
    CHECK(sqrt_exp_weight_coeffs(4) ==
          std::vector<Rational>{Rational(15, 16), Rational(15, 16), Rational(3, 8),
                                Rational(1, 16)});
}

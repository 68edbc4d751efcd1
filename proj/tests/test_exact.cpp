#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riesz/exact/exact_scalar.hpp"
#include "riesz/exact/special_values.hpp"

#include <cmath>
#include <random>

using namespace riesz::exact;

namespace {

ExactScalar random_scalar(std::mt19937_64& rng, bool symbol_free = false) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> kdist(-4, 4);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    ExactScalar s;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Rational q(num(rng), den(rng));
        ExactScalar term = ExactScalar::half_pi_power(kdist(rng), q);
        if (!symbol_free && bit(rng)) term = term * ExactScalar::euler_gamma();
        if (!symbol_free && bit(rng)) term = term * ExactScalar::ln_two();
        s += term;
    }
    return s;
}

} // namespace

TEST_CASE("gamma at half integers") {
    CHECK(gamma_half(1).value() == ExactScalar::half_pi_power(1));          // Gamma(1/2)
    CHECK(gamma_half(4).value() == ExactScalar(1));                          // Gamma(2)
    CHECK(gamma_half(2).value() == ExactScalar(1));                          // Gamma(1)
    CHECK(gamma_half(6).value() == ExactScalar(2));                          // Gamma(3)
    CHECK(gamma_half(-3).value() == ExactScalar::half_pi_power(1, Rational(4, 3)));
    CHECK(gamma_half(5).value() == ExactScalar::half_pi_power(1, Rational(3, 4)));
    CHECK(!gamma_half(0).has_value());
    CHECK(!gamma_half(-2).has_value());

    // numeric cross-check against std::tgamma on poles-free arguments
    for (long k = -7; k <= 9; k += 2) {
        const double expect = std::tgamma(k / 2.0);
        CHECK(gamma_half(k).value().value() == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("gamma ratio as falling product") {
    CHECK(gamma_ratio(Rational(2), 1) == 1);
    CHECK(gamma_ratio(Rational(1, 2), 2) == Rational(3, 4));
    // cross-check with explicit gamma values: Gamma(1/2)/Gamma(-3/2)
    const ExactScalar g1 = gamma_half(1).value();
    const ExactScalar g2 = gamma_half(-3).value();
    CHECK(g2 * ExactScalar(gamma_ratio(Rational(1, 2), 2)) == g1);
    // finite numerator over a denominator pole is forced to zero
    CHECK(gamma_ratio(Rational(1), 3) == 0);
    // reciprocal direction
    CHECK(gamma_ratio(Rational(1, 2), -2) == Rational(4, 3));  // 1/((1/2)(3/2))
    // numerator pole against finite denominator must be loud
    CHECK_THROWS_AS((void)gamma_ratio(Rational(0), -1), std::domain_error);
    CHECK_THROWS_AS((void)gamma_ratio(Rational(-2), -4), std::domain_error);
}

TEST_CASE("gamma ratio composition law") {
    for (long twox = -8; twox <= 8; ++twox) {
        const Rational x(twox, 2);
        for (long n = 0; n <= 4; ++n)
            for (long m = 0; m <= 4; ++m)
                CHECK(gamma_ratio(x, n) * gamma_ratio(x - n, m) == gamma_ratio(x, n + m));
    }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rational(5), 0) == 1);
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pochhammer(Rational(-2), 3) == 0);
    for (long twox = -9; twox <= 9; ++twox)
        for (unsigned long n = 0; n <= 5; ++n)
            CHECK(pochhammer(Rational(twox, 2), n) ==
                  gamma_ratio(Rational(twox, 2) + Rational(static_cast<long>(n)),
                              static_cast<long>(n)));
}

TEST_CASE("digamma at integers and half odd integers") {
    CHECK(psi_eval(Rational(1)) == ExactScalar::euler_gamma(-1));
    CHECK(psi_eval(Rational(2)) == ExactScalar(1) + ExactScalar::euler_gamma(-1));
    CHECK(psi_eval(Rational(1, 2)) == ExactScalar::euler_gamma(-1) + ExactScalar::ln_two(-2));
    CHECK_THROWS_AS(psi_eval(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(psi_eval(Rational(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(psi_eval(Rational(1, 3)), std::invalid_argument);

    // psi(p+1) - psi(p) = 1/p
    for (long twop = 1; twop <= 40; ++twop) {
        const Rational p(twop, 2);
        CHECK(psi_eval(p + 1) - psi_eval(p) == ExactScalar(Rational(1) / p));
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(5) == 0);
    CHECK(bernoulli(12) == Rational(-691, 2730));

    // Independent oracle: series inversion of (e^z - 1)/z gives the
    // coefficients of (z/2) coth(z/2) - 1 = sum_{s>=2} B_s z^s/s! after
    // dropping the degree-one term.  a_k = 1/(k+1)! ; c = 1/a by convolution.
    constexpr int order = 10;
    std::vector<Rational> a(order + 1), c(order + 1);
    for (int k = 0; k <= order; ++k) a[k] = Rational(1, factorial(k + 1));
    c[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) acc += a[k] * c[n - k];
        c[n] = -acc;
    }
    for (int s = 2; s <= order; ++s)
        CHECK(bernoulli(s) == c[s] * Rational(factorial(s)));
}

TEST_CASE("residue ratio of psi and gamma") {
    CHECK(gamma_psi_residue(0) == -1);
    CHECK(gamma_psi_residue(1) == 1);
    CHECK(gamma_psi_residue(2) == -2);
    CHECK(gamma_psi_residue(3) == 6);
}

TEST_CASE("exact scalar ring axioms") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 200; ++trial) {
        const ExactScalar a = random_scalar(rng, true);
        const ExactScalar b = random_scalar(rng);
        const ExactScalar c = random_scalar(rng);
        const ExactScalar d = random_scalar(rng, true);

        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(b - b == ExactScalar{});
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * d == a * (b * d));  // symbol-free outer factors
        CHECK(a * b == b * a);

        // double evaluation is a homomorphism up to rounding
        CHECK(std::abs((a + b).value() - (a.value() + b.value())) < 1e-9);
        CHECK(std::abs((a * b).value() - a.value() * b.value()) < 1e-9);
    }
}

TEST_CASE("exact scalar degree guard") {
    const ExactScalar g = ExactScalar::euler_gamma();
    const ExactScalar l = ExactScalar::ln_two();
    CHECK_THROWS_AS(g * g, std::domain_error);
    CHECK_THROWS_AS(l * l, std::domain_error);
    CHECK_NOTHROW(g * l);
}

TEST_CASE("exact scalar text round trip") {
    CHECK(ExactScalar{}.to_text() == "0");
    CHECK(ExactScalar::from_text("0") == ExactScalar{});
    const ExactScalar v = ExactScalar::half_pi_power(-1, Rational(1, 2)) +
                          ExactScalar::euler_gamma(Rational(-3, 4)) * ExactScalar::ln_two();
    CHECK(ExactScalar::from_text(v.to_text()) == v);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const ExactScalar s = random_scalar(rng);
        CHECK(ExactScalar::from_text(s.to_text()) == s);
    }
    CHECK_THROWS_AS(ExactScalar::from_text("1 * pi"), std::invalid_argument);
}

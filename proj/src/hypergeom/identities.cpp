#include "riesz/hypergeom/identities.hpp"

#include "riesz/exact/special_values.hpp"

#include <stdexcept>

namespace riesz::hypergeom {

using exact::factorial;
using exact::gamma_ratio;
using exact::pochhammer;
using exact::pow_rational;

namespace {

Rational sign(long n) { return n % 2 == 0 ? 1 : -1; }

Rational pochhammer_quotient(const Rational& num_base, const Rational& den_base,
                             unsigned long length) {
    const Rational den = pochhammer(den_base, length);
    if (den == 0) throw std::domain_error("pole of the closed Pochhammer form");
    return pochhammer(num_base, length) / den;
}

void require_alpha(int alpha) {
    if (alpha < 1) throw std::invalid_argument("factor sums need alpha >= 1");
}

} // namespace

Rational first_factor_sum(int alpha, const Rational& z) {
    require_alpha(alpha);
    Rational total = 0;
    for (int j = alpha / 2; j <= alpha - 1; ++j) {
        const Rational base = z / 2 + (j + 1);
        if (base == 0) throw std::domain_error("pole of the first factor sum");
        total += sign(alpha - j) / base *
                 Rational(1, factorial(j) * factorial(alpha - 1 - j)) *
                 gamma_ratio(Rational(2 * j + 2), alpha);
    }
    return total;
}

Rational first_factor_closed(int alpha, const Rational& z) {
    require_alpha(alpha);
    const Rational two_alpha = pow_rational(Rational(2), alpha);
    if (alpha % 2 == 0)
        return two_alpha * pochhammer_quotient(z / 2 + Rational(1, 2), z / 2 + alpha / 2 + 1,
                                               alpha / 2) -
               two_alpha;
    return two_alpha * pochhammer_quotient(z / 2 + Rational(1, 2),
                                           z / 2 + Rational(alpha, 2) + Rational(1, 2),
                                           (alpha + 1) / 2) -
           two_alpha;
}

Rational second_factor_sum(int alpha, const Rational& z) {
    require_alpha(alpha);
    Rational total = 0;
    for (int j = 0; j <= alpha - 1; j += 2) {
        const Rational base = z + (j + 1);
        if (base == 0) throw std::domain_error("pole of the second factor sum");
        total += sign(alpha - j) / base *
                 Rational(1, factorial(j) * factorial(alpha - 1 - j)) *
                 gamma_ratio(Rational(j + 1, 2), alpha);
    }
    return total;
}

Rational second_factor_closed(int alpha, const Rational& z) {
    require_alpha(alpha);
    const Rational two_neg_alpha = pow_rational(Rational(2), -alpha);
    if (alpha % 2 == 0)
        return two_neg_alpha * pochhammer_quotient(z / 2 + alpha / 2 + 1,
                                                   z / 2 + Rational(1, 2), alpha / 2) -
               two_neg_alpha;
    return two_neg_alpha * pochhammer_quotient(z / 2 + Rational(alpha, 2) + Rational(1, 2),
                                               z / 2 + Rational(1, 2), (alpha + 1) / 2) -
           two_neg_alpha;
}

Rational factor_product(int alpha, const Rational& z) {
    return (first_factor_sum(alpha, z) + pow_rational(Rational(2), alpha)) *
           (second_factor_sum(alpha, z) + pow_rational(Rational(2), -alpha));
}

Rational f32_terminating(const HypergeometricSpec& spec) {
    // locate the terminating numerator parameter
    long n = -1;
    for (const Rational& p : spec.numerator) {
        if (exact::is_integer(p) && p <= 0) {
            const long candidate = -exact::to_long(p);
            if (n < 0 || candidate < n) n = candidate;
        }
    }
    if (n < 0)
        throw std::invalid_argument("3F2 series does not terminate: no nonpositive integer "
                                    "numerator parameter");
    for (const Rational& q : spec.denominator) {
        if (exact::is_integer(q) && q <= 0 && -exact::to_long(q) < n)
            throw std::invalid_argument("3F2 denominator parameter truncates the series "
                                        "before termination");
    }
    Rational total = 0;
    Rational term = 1;  // ratio of Pochhammers accumulated incrementally
    for (long k = 0; k <= n; ++k) {
        total += term;
        if (k == n || term == 0) break;
        Rational num = 1, den = Rational(k + 1);
        for (const Rational& p : spec.numerator) num *= (p + k);
        for (const Rational& q : spec.denominator) den *= (q + k);
        term *= num / den;
    }
    return total;
}

std::pair<Rational, Rational> transform_check(const Rational& a, const Rational& b, int n,
                                              const Rational& e, const Rational& f) {
    if (n < 0) throw std::invalid_argument("transform_check: need n >= 0");
    const Rational lhs = f32_terminating({{a, b, Rational(-n)}, {e, f}});

    const Rational en = pochhammer(e, n), fn = pochhammer(f, n);
    if (en == 0 || fn == 0)
        throw std::invalid_argument("transform_check: prefactor Pochhammer vanishes in the "
                                    "denominator");
    const Rational s = e + f - a - b + n;
    const Rational prefactor = pochhammer(e - a, n) * pochhammer(f - a, n) / (en * fn);
    const Rational rhs_series = f32_terminating(
        {{Rational(1) - s, a, Rational(-n)}, {Rational(1) + a - f - n, Rational(1) + a - e - n}});
    return {lhs, prefactor * rhs_series};
}

} // namespace riesz::hypergeom

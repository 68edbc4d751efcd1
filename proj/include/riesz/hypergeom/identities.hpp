#ifndef RIESZ_HYPERGEOM_IDENTITIES_HPP
#define RIESZ_HYPERGEOM_IDENTITIES_HPP

#include "riesz/exact/rational.hpp"

#include <array>
#include <utility>

namespace riesz::hypergeom {

using exact::Rational;

/// The two bracket factors whose product is identically 1: the first is a
/// finite sum over j = floor(alpha/2)..alpha-1 with integer gamma ratios,
/// the second a sum over even j with half-integer gamma ratios.  Each is
/// available both as the defining sum and as a closed Pochhammer-quotient
/// form, for exact cross-validation.  All four throw std::domain_error when
/// z sits on a pole of the requested expression.
Rational first_factor_sum(int alpha, const Rational& z);
Rational first_factor_closed(int alpha, const Rational& z);
Rational second_factor_sum(int alpha, const Rational& z);
Rational second_factor_closed(int alpha, const Rational& z);

/// (first_factor_sum + 2^alpha) * (second_factor_sum + 2^-alpha).
/// Contract: equals 1 exactly for every z that is not a pole of either
/// factor.
Rational factor_product(int alpha, const Rational& z);

/// Terminating 3F2 at unit argument.  One numerator parameter must be a
/// nonpositive integer; no denominator parameter may make a Pochhammer in
/// the denominator vanish before the series terminates.
struct HypergeometricSpec {
    std::array<Rational, 3> numerator;
    std::array<Rational, 2> denominator;
};
Rational f32_terminating(const HypergeometricSpec& spec);

/// Both sides of the terminating 3F2 transformation
///   F(a, b, -n; e, f) = (e-a)_n (f-a)_n / ((e)_n (f)_n)
///                       * F(1-s, a, -n; 1+a-f-n, 1+a-e-n),  s = e+f-a-b+n.
/// Contract: the two returned values are equal.  Throws
/// std::invalid_argument when either side is undefined.
std::pair<Rational, Rational> transform_check(const Rational& a, const Rational& b, int n,
                                              const Rational& e, const Rational& f);

} // namespace riesz::hypergeom

#endif

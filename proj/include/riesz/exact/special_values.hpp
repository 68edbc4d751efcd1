#ifndef RIESZ_EXACT_SPECIAL_VALUES_HPP
#define RIESZ_EXACT_SPECIAL_VALUES_HPP

#include "riesz/exact/exact_scalar.hpp"
#include "riesz/exact/rational.hpp"

#include <optional>

namespace riesz::exact {

/// Gamma(k/2) as an exact value.  Odd k gives a rational multiple of
/// sqrt(pi) through the functional equation anchored at Gamma(1/2); even
/// positive k gives a factorial.  Nonpositive even k is a pole, reported as
/// an empty optional rather than as a failure: the caller decides what a
/// pole means in its own formula.
std::optional<ExactScalar> gamma_half(long k);

/// Gamma(x) for a rational x on the half-integer grid; pole -> nullopt.
std::optional<ExactScalar> gamma_exact(const Rational& x);

/// Gamma(x)/Gamma(x-n), evaluated as the product (x-1)(x-2)...(x-n) for
/// n >= 0 and as the reciprocal product for n < 0.  The product form
/// resolves pole/pole cases by their limit and yields 0 whenever the
/// denominator gamma alone has a pole (the convention used throughout the
/// change-of-variable kernels).  A numerator pole against a finite
/// denominator (possible only for n < 0) throws std::domain_error.
Rational gamma_ratio(const Rational& x, long n);

/// Rising factorial x(x+1)...(x+n-1); empty product is 1.
Rational pochhammer(const Rational& x, unsigned long n);

/// Digamma at a positive integer or positive half-odd-integer:
///   psi(n)      = -gamma + sum_{k=1}^{n-1} 1/k
///   psi(n+1/2)  = -gamma - 2 ln 2 + 2 sum_{k=1}^{n} 1/(2k-1)
/// Throws for p <= 0 or 2p not an integer.
ExactScalar psi_eval(const Rational& p);

/// Bernoulli number B_s in the convention of the expansion
///   (z/2) coth(z/2) = 1 + sum_{s>=2} B_s z^s / s!
/// so B_2 = 1/6, B_4 = -1/30 and B_s = 0 for odd s >= 3.  (B_1 belongs to a
/// different convention and is never consumed here; this function returns
/// the recurrence value -1/2 for s = 1.)
Rational bernoulli(unsigned s);

/// lim_{eps->0} psi(eps-n)/Gamma(eps-n) = (-1)^(n-1) n!
Rational gamma_psi_residue(unsigned n);

} // namespace riesz::exact

#endif

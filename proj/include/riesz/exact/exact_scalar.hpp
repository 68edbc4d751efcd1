#ifndef RIESZ_EXACT_EXACT_SCALAR_HPP
#define RIESZ_EXACT_EXACT_SCALAR_HPP

#include "riesz/exact/rational.hpp"

#include <compare>
#include <map>
#include <string>

namespace riesz::exact {

/// Monomial pi^(k/2) * gamma^a * ln2^b.  gamma is Euler's constant.
/// Exponents a and b never exceed 1: no formula in this library multiplies
/// two digamma values, so degree one in each symbol is closed under all the
/// operations we need, and an overflow is reported rather than truncated.
struct MonomialKey {
    int half_pi_pow = 0;   ///< exponent k of pi^(1/2)
    int gamma_pow = 0;     ///< 0 or 1
    int ln2_pow = 0;       ///< 0 or 1
    auto operator<=>(const MonomialKey&) const = default;
};

/// Element of the ring Q[pi^(1/2), pi^(-1/2), gamma, ln 2] in canonical form:
/// a finite sum of distinct monomials with nonzero rational coefficients.
/// Values are immutable in spirit; all operators return new values.
class ExactScalar {
  public:
    ExactScalar() = default;
    ExactScalar(const Rational& q);           // NOLINT(google-explicit-constructor)
    ExactScalar(long n) : ExactScalar(Rational(n)) {}  // NOLINT

    /// pi^(k/2) with rational coefficient q.
    static ExactScalar half_pi_power(int k, const Rational& q = 1);
    static ExactScalar euler_gamma(const Rational& q = 1);
    static ExactScalar ln_two(const Rational& q = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// The coefficient of the unit monomial; throws if other monomials are present.
    Rational rational_value() const;

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }

    /// Throws std::domain_error if the product leaves the ring (degree in
    /// gamma or ln 2 would exceed one).
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    friend ExactScalar operator*(const Rational& q, const ExactScalar& a);
    friend ExactScalar operator*(const ExactScalar& a, const Rational& q) { return q * a; }

    bool operator==(const ExactScalar& o) const { return terms_ == o.terms_; }

    /// Canonical text form "q * pi^(k/2) * gamma * ln2 + ...", terms ordered
    /// by monomial key; "0" for the zero element.
    std::string to_text() const;
    static ExactScalar from_text(const std::string& s);

    /// Double-precision evaluation (test and report plumbing).
    double value() const;

    const std::map<MonomialKey, Rational>& terms() const { return terms_; }

  private:
    void add_term(const MonomialKey& k, const Rational& q);
    std::map<MonomialKey, Rational> terms_;
};

} // namespace riesz::exact

#endif

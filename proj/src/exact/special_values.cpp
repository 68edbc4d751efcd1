#include "riesz/exact/special_values.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace riesz::exact {

std::optional<ExactScalar> gamma_half(long k) {
    if (k % 2 == 0) {
        const long n = k / 2;
        if (n <= 0) return std::nullopt;  // pole at 0, -1, -2, ...
        return ExactScalar(Rational(factorial(n - 1)));
    }
    // Gamma(k/2) = r * sqrt(pi): walk the functional equation from Gamma(1/2).
    Rational r = 1;
    if (k > 1) {
        // Gamma(x+1) = x Gamma(x) upward from 1/2
        for (long j = k - 2; j >= 1; j -= 2) r *= Rational(j, 2);
    } else {
        // Gamma(x) = Gamma(x+1)/x downward from 1/2
        for (long j = k; j < 1; j += 2) r /= Rational(j, 2);
    }
    return ExactScalar::half_pi_power(1, r);
}

std::optional<ExactScalar> gamma_exact(const Rational& x) {
    if (!is_half_integer_grid(x))
        throw std::invalid_argument("gamma_exact: 2x must be an integer, got " + to_text(x));
    return gamma_half(static_cast<long>(numerator(2 * x)));
}

Rational gamma_ratio(const Rational& x, long n) {
    if (n >= 0) {
        Rational p = 1;
        for (long i = 1; i <= n; ++i) p *= (x - i);
        return p;
    }
    Rational p = 1;
    for (long i = 0; i < -n; ++i) p *= (x + i);
    if (p == 0)
        throw std::domain_error("gamma_ratio: pole of the numerator gamma against a finite "
                                "denominator; the expression needs its residue limit");
    return Rational(1) / p;
}

Rational pochhammer(const Rational& x, unsigned long n) {
    Rational p = 1;
    for (unsigned long i = 0; i < n; ++i) p *= (x + Rational(static_cast<long>(i)));
    return p;
}

ExactScalar psi_eval(const Rational& p) {
    if (p <= 0) throw std::invalid_argument("psi_eval: argument must be positive");
    if (is_integer(p)) {
        const long n = to_long(p);
        Rational h = 0;
        for (long k = 1; k < n; ++k) h += Rational(1, k);
        return ExactScalar(h) + ExactScalar::euler_gamma(-1);
    }
    if (denominator(p) == 2) {
        const long n = static_cast<long>((numerator(p) - 1) / 2);  // p = 1/2 + n
        Rational h = 0;
        for (long k = 1; k <= n; ++k) h += Rational(2, 2 * k - 1);
        return ExactScalar(h) + ExactScalar::euler_gamma(-1) + ExactScalar::ln_two(-2);
    }
    throw std::invalid_argument("psi_eval: 2p must be an integer, got " + to_text(p));
}

Rational bernoulli(unsigned s) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    // sum_{j=0}^{s} C(s+1, j) B_j = 0 with B_0 = 1
    while (cache.size() <= s) {
        const long m = static_cast<long>(cache.size());
        Rational acc = 0;
        for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[s];
}

Rational gamma_psi_residue(unsigned n) {
    const Rational f(factorial(static_cast<long>(n)));
    return n % 2 == 0 ? -f : f;
}

} // namespace riesz::exact

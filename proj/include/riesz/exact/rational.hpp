#ifndef RIESZ_EXACT_RATIONAL_HPP
#define RIESZ_EXACT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace riesz::exact {

// Arbitrary-precision integers and rationals.  cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the canonical
// form required of every coefficient in this library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// True when 2q is an integer (q is an integer or half-odd-integer).
inline bool is_half_integer_grid(const Rational& q) {
    const Int d = denominator(q);
    return d == 1 || d == 2;
}

/// q as a long; throws unless q is an integer that fits.
inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_long: not an integer: " + q.str());
    return static_cast<long>(numerator(q));
}

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int b = 1;
    for (long i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

/// q^e for integer e of either sign; 0^negative is an error.
inline Rational pow_rational(const Rational& q, long e) {
    if (e == 0) return 1;
    if (q == 0 && e < 0) throw std::domain_error("pow_rational: negative power of zero");
    Rational base = e > 0 ? q : Rational(1) / q;
    long n = e > 0 ? e : -e;
    Rational r = 1;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

/// "p" or "p/q" in lowest terms.
inline std::string to_text(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parse "p" or "p/q" (whitespace-free).
inline Rational rational_from_text(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

} // namespace riesz::exact

#endif

#include "riesz/green/kernels.hpp"

#include "riesz/engine/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace riesz::green {

namespace {

constexpr double euler_gamma_v = 0.5772156649015328606;

double harmonic(int n) {
    double h = 0;
    for (int k = 1; k < n; ++k) h += 1.0 / k;
    return h;
}

double en_series(int n, double t) {
    // E_1(t) = -gamma - ln t - sum_{j>=1} (-t)^j / (j j!)
    // E_n(t) = (-t)^(n-1)/(n-1)! [psi(n) - ln t]
    //          - sum_{j != n-1} (-1)^j t^j / ((j-n+1) j!)
    double total;
    if (n == 1) {
        total = -euler_gamma_v - std::log(t);
    } else {
        double lead = 1;
        for (int i = 1; i < n; ++i) lead *= -t / i;
        total = lead * (harmonic(n) - euler_gamma_v - std::log(t));
    }
    double power = 1;  // (-t)^j / j!
    for (int j = 0;; ++j) {
        if (j != n - 1) {
            const double term = power / (j - n + 1);
            total -= term;
            if (j > n && std::abs(term) < 1e-18 * std::max(1.0, std::abs(total))) break;
        }
        power *= -t / (j + 1);
        if (j > 500) throw std::runtime_error("E_n series failed to terminate");
    }
    return total;
}

} // namespace

double en_eval(int n, double t) {
    if (n < 1) throw std::invalid_argument("en_eval: need n >= 1");
    if (t <= 0) throw std::invalid_argument("en_eval: need t > 0");
    if (t <= 1.5) return en_series(n, t);
    // quadrature of the defining integral; the integrand dies like e^(-t w)
    const double cut = 1 + 45.0 / t;
    return engine::integrate([&](double w) { return std::exp(-t * w) * std::pow(w, -n); }, 1,
                             cut, 1e-14);
}

} // namespace riesz::green

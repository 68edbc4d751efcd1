#include "riesz/engine/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace riesz::engine {

Density Density::from_table(std::vector<std::pair<double, double>> samples,
                            DensityTailBound tail) {
    if (samples.size() < 2) throw std::invalid_argument("table density needs >= 2 samples");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].first <= samples[i - 1].first)
            throw std::invalid_argument("table density abscissas must increase");
    auto table = std::make_shared<std::vector<std::pair<double, double>>>(std::move(samples));
    auto eval = [table](double s) {
        const auto& t = *table;
        if (s <= t.front().first) return t.front().second;
        if (s >= t.back().first) return t.back().second;
        auto it = std::upper_bound(t.begin(), t.end(), s,
                                   [](double v, const auto& p) { return v < p.first; });
        const auto& [x1, y1] = *it;
        const auto& [x0, y0] = *(it - 1);
        return y0 + (y1 - y0) * (s - x0) / (x1 - x0);
    };
    return Density(eval, 0.0, tail);
}

void SpectralMeasure::validate() const {
    double prev = -1;
    for (const Atom& a : atoms) {
        if (!std::isfinite(a.position) || a.position < 0)
            throw std::invalid_argument("atom positions must be finite and nonnegative");
        if (a.position <= prev)
            throw std::invalid_argument("atom positions must be strictly increasing");
        prev = a.position;
    }
    if (atom_tail && !atoms.empty() && atom_tail->start < atoms.back().position)
        throw std::invalid_argument("atom tail certificate must start beyond the listed atoms");
}

double SpectralMeasure::atom_mass_below(double x) const {
    double total = 0;
    for (const Atom& a : atoms) {
        if (a.position >= x) break;  // strict: left continuity
        total += a.weight;
    }
    return total;
}

double exp_tail_integral_bound(double coefficient, double exponent, double c, double t) {
    if (coefficient == 0) return 0;
    if (c <= 0 || t <= 0) return std::numeric_limits<double>::infinity();
    // s^q e^(-s t) <= c2^q e^(-c2 t / 2) e^(-s t / 2) for s >= c2 >= 2q/t,
    // so the tail beyond c2 is bounded by (2/t) c2^q e^(-c2 t); the finite
    // stretch [c, c2] is bounded by its length times the max of the
    // integrand.
    const double c2 = std::max(c, exponent > 0 ? 2 * exponent / t : c);
    double bound = (2.0 / t) * std::abs(coefficient) * std::pow(c2, exponent) * std::exp(-c2 * t);
    if (c2 > c) {
        const double peak = std::max(std::pow(c, exponent) * std::exp(-c * t),
                                     std::pow(c2, exponent) * std::exp(-c2 * t));
        bound += (c2 - c) * std::abs(coefficient) * peak;
    }
    return bound;
}

double atom_tail_heat_bound(const AtomTailBound& tail, double t) {
    if (tail.weight_rate == 0 && tail.max_single_weight == 0) return 0;
    return tail.max_single_weight * std::exp(-tail.start * t) +
           exp_tail_integral_bound(tail.weight_rate, tail.rate_exponent, tail.start, t);
}

} // namespace riesz::engine

#ifndef RIESZ_ENGINE_MEASURE_HPP
#define RIESZ_ENGINE_MEASURE_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace riesz::engine {

enum class SpectralVariable { lambda, omega };

struct Atom {
    double position = 0;
    double weight = 0;
};

/// Decay certificate for a density: |rho(s)| <= coefficient * s^exponent
/// for s >= start.  Improper integrals are split where this bound applies.
struct DensityTailBound {
    double coefficient = 0;
    double exponent = 0;
    double start = 1;
};

/// Density part of a spectral measure, evaluable at any nonnegative
/// argument.  power_at_zero is the leading exponent q0 with rho ~ C s^q0 as
/// s -> 0 (q0 > -1); a negative value makes quadrature substitute s = u^2.
/// An oscillatory density declares the period of its oscillation so
/// integrals can be split per period, which keeps the quadrature error
/// proportional to the absolute mass instead of the cancelling total.
class Density {
  public:
    Density(std::function<double(double)> eval, double power_at_zero, DensityTailBound tail,
            double oscillation_period = 0)
        : eval_(std::move(eval)),
          power_at_zero_(power_at_zero),
          tail_(tail),
          oscillation_period_(oscillation_period) {}

    static Density from_table(std::vector<std::pair<double, double>> samples,
                              DensityTailBound tail);

    double operator()(double s) const { return eval_(s); }
    double power_at_zero() const { return power_at_zero_; }
    const DensityTailBound& tail() const { return tail_; }
    double oscillation_period() const { return oscillation_period_; }

  private:
    std::function<double(double)> eval_;
    double power_at_zero_;
    DensityTailBound tail_;
    double oscillation_period_;
};

/// Certificate for the atoms that were truncated away above `start`: the
/// total weight of unlisted atoms in [x, x+dx] is at most
/// weight_rate * x^rate_exponent * dx, and no single unlisted atom weighs
/// more than max_single_weight.
struct AtomTailBound {
    double start = 0;
    double weight_rate = 0;
    double rate_exponent = 0;
    double max_single_weight = 0;
};

/// Nonnegative-axis Stieltjes measure: listed atoms (strictly increasing
/// positions), an optional density, and optional truncation certificates.
/// mu(0) = 0 by convention and mu is continuous from the left, so an atom
/// sitting exactly at the evaluation point never contributes.
struct SpectralMeasure {
    SpectralVariable variable = SpectralVariable::lambda;
    std::vector<Atom> atoms;
    std::optional<Density> density;
    std::optional<AtomTailBound> atom_tail;

    void validate() const;
    /// Atomic part of mu(x^-): total listed weight strictly below x.
    double atom_mass_below(double x) const;
};

/// sum_{unlisted atoms} w e^{-pos * t} bounded through an AtomTailBound.
double atom_tail_heat_bound(const AtomTailBound& tail, double t);

/// integral_c^infty C s^q e^(-s t) ds bounded in closed form.
double exp_tail_integral_bound(double coefficient, double exponent, double c, double t);

} // namespace riesz::engine

#endif

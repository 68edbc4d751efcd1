#ifndef RIESZ_MODELS_MANIFOLD_HPP
#define RIESZ_MODELS_MANIFOLD_HPP

#include "riesz/exact/rational.hpp"

#include <stdexcept>
#include <variant>

namespace riesz::models {

using exact::Rational;

enum class BoundaryCondition { dirichlet, neumann };

/// The four one-dimensional model manifolds carrying H = -d^2/dx^2.
struct Line {};
struct HalfLine {
    BoundaryCondition bc = BoundaryCondition::dirichlet;
};
struct Circle {
    Rational L = 1;  ///< the manifold is (-L, L) with periodic ends
};
struct Interval {
    Rational L = 1;  ///< the manifold is (0, L), Dirichlet ends
};

using Manifold = std::variant<Line, HalfLine, Circle, Interval>;

/// What is being expanded: a pointwise kernel value at (x, y) or the trace
/// over the manifold.  Points are kept rational so expected coefficient
/// tables stay exact.
struct Observable {
    enum class Kind { point, trace };
    Kind kind = Kind::trace;
    Rational x = 0;
    Rational y = 0;

    static Observable trace() { return {Kind::trace, 0, 0}; }
    static Observable diagonal_at(const Rational& x) { return {Kind::point, x, x}; }
    static Observable point_at(const Rational& x, const Rational& y) {
        return {Kind::point, x, y};
    }
    bool is_diagonal() const { return kind == Kind::point && x == y; }
};

inline double manifold_length(const Manifold& man) {
    if (const auto* circle = std::get_if<Circle>(&man)) return exact::to_double(circle->L);
    if (const auto* interval = std::get_if<Interval>(&man)) return exact::to_double(interval->L);
    throw std::invalid_argument("manifold has no finite length");
}

} // namespace riesz::models

#endif

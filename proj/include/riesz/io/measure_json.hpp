#ifndef RIESZ_IO_MEASURE_JSON_HPP
#define RIESZ_IO_MEASURE_JSON_HPP

#include "riesz/engine/measure.hpp"
#include "riesz/io/coeff_json.hpp"

namespace riesz::io {

/// Measure documents:
///   {"variable": "lambda" | "omega",
///    "atoms": [[position, weight], ...],
///    "density": {"kind": "table", "points": [[s, rho], ...],
///                "tail": {"coefficient": C, "exponent": q, "start": s0}},
///    "atom_tail": {"start": s0, "weight_rate": r, "rate_exponent": p,
///                  "max_single_weight": w}}
/// density and atom_tail are optional.  Built-in model densities are
/// constructed through the models module, not through files.
json measure_to_json(const engine::SpectralMeasure& mu);
engine::SpectralMeasure measure_from_json(const json& j);

} // namespace riesz::io

#endif

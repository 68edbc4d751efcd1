#ifndef RIESZ_COEFFS_PIPELINES_HPP
#define RIESZ_COEFFS_PIPELINES_HPP

#include "riesz/coeffs/tables.hpp"

namespace riesz::coeffs {

/// Assembles the short-time heat expansion from the order-alpha omega-mean
/// expansion: the surviving boundary term of the means-of-a-Stieltjes-
/// integral formula is integrated against the Gaussian weight derivative,
/// term by term, with exact moment integrals.  Every ln t coefficient and
/// every bracket multiplying an entry on the undetermined branch must
/// cancel to exactly zero; a nonzero residual is an implementation bug and
/// throws std::logic_error.  Requires alpha >= the largest s of interest
/// (the table's s_max) so the expansion rows are the rigorous ones.
KernelExpansion heat_pipeline_from_omega(const CoeffTable& omega_table, int alpha);

/// The reverse direction: the cylinder expansion assembled from the
/// order-alpha lambda-mean expansion.  Moments with a nonintegrable lower
/// endpoint are split there, which produces the ln t slots and leaves the
/// coefficient of t^(s-m) undetermined exactly when s - m is odd and
/// positive; those slots are emitted as undetermined.  Log coefficients on
/// determined slots must cancel exactly (std::logic_error otherwise).
KernelExpansion cylinder_pipeline_from_lambda(const CoeffTable& lambda_table, int alpha);

} // namespace riesz::coeffs

#endif

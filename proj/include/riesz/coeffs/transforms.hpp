#ifndef RIESZ_COEFFS_TRANSFORMS_HPP
#define RIESZ_COEFFS_TRANSFORMS_HPP

#include "riesz/coeffs/tables.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace riesz::coeffs {

// ---------------------------------------------------------------------------
// Change-of-variable kernels
// ---------------------------------------------------------------------------

/// Coefficients A_j of the Hardy kernel
///   J_{k,alpha}(lambda, sigma) = sum_j A_j sigma^j lambda^(-j-1),
/// j = 0..alpha-1, for the power-law change of variable lambda = omega^k.
/// A gamma-ratio argument that lands on a nonpositive integer forces the
/// term to zero.  Requires k > 0, k != 1; any rational k is accepted.
std::vector<ExactScalar> hardy_kernel_coeffs(const Rational& k, int alpha);

/// Weights b_beta, beta = alpha..alpha*k, of the finite relation
///   R^alpha_lambda f = sum_beta b_beta R^beta_omega f   (integer k >= 2),
/// obtained by expanding [sum_{j=1}^k (-1)^(j-1) C(k,j) v^j]^alpha in
/// v = 1 - tau/omega.  The weights always sum to 1.
std::map<int, Rational> hormander_weights(int k, int alpha);

// ---------------------------------------------------------------------------
// Diagonal maps between expansions and mean coefficients
// ---------------------------------------------------------------------------

/// b_s = Gamma(m/2 + s/2 + 1)/Gamma(s + 1) * a_ss
KernelExpansion heat_from_lambda_diag(const DiagonalLambdaCoeffs& diag);

/// Exact inverse of heat_from_lambda_diag.
DiagonalLambdaCoeffs lambda_diag_from_heat(const KernelExpansion& heat);

/// e_s and f_s from (c_ss, d_ss); an undetermined c_ss propagates to an
/// undetermined e_s on the log branch.
KernelExpansion cylinder_from_omega_diag(const DiagonalOmegaCoeffs& diag);

/// Exact inverse of cylinder_from_omega_diag on determined entries.
DiagonalOmegaCoeffs omega_diag_from_cylinder(const KernelExpansion& cylinder);

/// (c_ss, d_ss) from a_ss.  On the branch s - m odd and positive, d_ss is a
/// closed-form multiple of a_ss and c_ss is undetermined; elsewhere c_ss is
/// a closed-form multiple of a_ss and d_ss = 0.
DiagonalOmegaCoeffs omega_diag_from_lambda_diag(const DiagonalLambdaCoeffs& diag);

/// a_ss from (c_ss, d_ss); the undetermined c_ss on the log branch is never
/// consumed (d_ss alone determines a_ss there).
DiagonalLambdaCoeffs lambda_diag_from_omega_diag(const DiagonalOmegaCoeffs& diag);

// ---------------------------------------------------------------------------
// Full tables
// ---------------------------------------------------------------------------

/// a_{alpha s} for all 0 <= s <= alpha <= alpha_max from the diagonal a_ss,
/// with the convention that a denominator gamma pole forces a zero entry.
CoeffTable lambda_table_from_diag(const DiagonalLambdaCoeffs& diag, int alpha_max);

/// c_{alpha s} and d_{alpha s} from the diagonals.  Below the threshold
/// alpha < s - m on the log branch the c entry is a pure multiple of d_ss
/// (and so is determined even when c_ss is not).
CoeffTable omega_table_from_diag(const DiagonalOmegaCoeffs& diag, int alpha_max);

/// One order of omega coefficients computed from a full lambda table.
struct OmegaOrderRow {
    std::vector<Coeff> c;           ///< c_{alpha s}, undetermined on the log branch
    std::vector<ExactScalar> d;     ///< d_{alpha s}
};
OmegaOrderRow omega_full_from_lambda(const CoeffTable& lambda_table, int alpha);

/// One order of lambda coefficients computed from a full omega table;
/// undetermined c entries are never consumed.
std::vector<ExactScalar> lambda_full_from_omega(const CoeffTable& omega_table, int alpha);

// ---------------------------------------------------------------------------
// Consistency identities
// ---------------------------------------------------------------------------

/// Exact left-hand sides of the two-directions consistency conditions at
/// (alpha, m, s).  On the branch s - m odd and positive the two-bracket
/// product (expected 1) and the vanishing bracket sum (expected 0) apply;
/// on the other branch the plain two-bracket product (expected 1) applies.
struct ConsistencyReport {
    std::optional<ExactScalar> product_log_branch;   ///< expected 1
    std::optional<ExactScalar> product_plain_branch; ///< expected 1
    std::optional<ExactScalar> vanishing_sum;        ///< expected 0
};
ConsistencyReport verify_consistency(int alpha, int m, int s);

// ---------------------------------------------------------------------------
// Moment integrals and weight-derivative tables
// ---------------------------------------------------------------------------

enum class MomentVariable {
    lambda,              ///< integral of exp(-lambda t) lambda^(p-1)
    omega,               ///< integral of exp(-omega^2 t) omega^(2p-1) [ln omega]
    omega_for_cylinder,  ///< integral of exp(-omega t) omega^(p-1) [ln omega]
};

/// Exact t-terms of the basic moment integrals; a logarithmic integrand
/// produces two terms, one of which carries ln t.  Requires p > 0 with 2p
/// an integer.
std::vector<KernelTerm> moment_map(MomentVariable variable, const Rational& p, bool with_log);

/// Coefficients z_i of d^j/domega^j exp(-omega^2 t)
///   = exp(-omega^2 t) sum_{i=0}^{floor(j/2)} z_i omega^(j-2i) t^(j-i).
std::vector<Rational> gaussian_weight_coeffs(int j);

/// Coefficients y_i of d^j/dlambda^j exp(-t sqrt(lambda))
///   = exp(-t sqrt(lambda)) sum_{i=1}^{j} y_i t^i lambda^(-j+i/2),
/// stored as y[i-1].
std::vector<Rational> sqrt_exp_weight_coeffs(int j);

/// Shift of the logarithm scale ln omega -> ln(kappa * omega): adds
/// ln(kappa) * d_ss to c_ss.  Exposed explicitly; nothing applies it
/// implicitly.
DiagonalOmegaCoeffs shift_log_scale(const DiagonalOmegaCoeffs& diag,
                                    const ExactScalar& ln_kappa);

} // namespace riesz::coeffs

#endif

#include "riesz/coeffs/pipelines.hpp"

#include "riesz/coeffs/transforms.hpp"
#include "riesz/exact/special_values.hpp"

#include <stdexcept>

namespace riesz::coeffs {

using exact::factorial;
using exact::psi_eval;

namespace {

Rational sign(long n) { return n % 2 == 0 ? 1 : -1; }

} // namespace

KernelExpansion heat_pipeline_from_omega(const CoeffTable& table, int alpha) {
    if (table.kind() != TableKind::omega)
        throw std::invalid_argument("heat_pipeline_from_omega: need an omega table");
    if (alpha < 1 || alpha > table.alpha_max() || alpha > table.s_max())
        throw std::invalid_argument("heat_pipeline_from_omega: table does not cover alpha");
    const int m = table.m();

    // K(t) = (-1)^(alpha+1)/alpha! * integral of
    //        omega^alpha * d^(alpha+1)[exp(-omega^2 t)] * R^alpha_omega(mu).
    // Substituting the weight-derivative table and the mean expansion turns
    // every term into a Gaussian moment; each (s, i) lands on the power
    // t^((s-m)/2).
    const std::vector<Rational> z = gaussian_weight_coeffs(alpha + 1);
    const Rational outer = sign(alpha + 1) * Rational(1, factorial(alpha));

    std::vector<ExactScalar> slot(alpha + 1);       // coefficient of t^((s-m)/2)
    std::vector<ExactScalar> log_slot(alpha + 1);   // coefficient of t^((s-m)/2) ln t
    std::vector<ExactScalar> undet_bracket(alpha + 1);  // multiplier of undetermined c entries

    for (int s = 0; s <= alpha; ++s) {
        const bool log_branch = s > m && (s - m) % 2 == 1;
        for (std::size_t i = 0; i < z.size(); ++i) {
            // moment exponent: 2p - 1 = alpha + (alpha+1-2i) + (m-s)
            const Rational p = Rational(alpha + 1 - static_cast<long>(i)) + Rational(m - s, 2);
            const Rational factor = outer * z[i];

            // plain part: c_{alpha s} omega^(m-s)
            for (const KernelTerm& term : moment_map(MomentVariable::omega, p, false)) {
                const ExactScalar contribution = ExactScalar(factor) * term.coefficient;
                if (log_branch)
                    undet_bracket[s] += contribution;
                else if (term.has_log)
                    log_slot[s] += contribution * table.c(alpha, s).value();
                else
                    slot[s] += contribution * table.c(alpha, s).value();
            }
            // logarithmic part: d_{alpha s} omega^(m-s) ln omega
            if (log_branch && !table.d(alpha, s).is_zero()) {
                for (const KernelTerm& term : moment_map(MomentVariable::omega, p, true)) {
                    const ExactScalar contribution =
                        (ExactScalar(factor) * term.coefficient) * table.d(alpha, s);
                    if (term.has_log)
                        log_slot[s] += contribution;
                    else
                        slot[s] += contribution;
                }
            }
        }
    }

    std::vector<Coeff> b;
    b.reserve(alpha + 1);
    for (int s = 0; s <= alpha; ++s) {
        if (!log_slot[s].is_zero())
            throw std::logic_error("heat pipeline: ln t terms failed to cancel at s = " +
                                   std::to_string(s));
        if (!undet_bracket[s].is_zero())
            throw std::logic_error("heat pipeline: undetermined-coefficient bracket failed "
                                   "to cancel at s = " + std::to_string(s));
        b.emplace_back(slot[s]);
    }
    return KernelExpansion(m, KernelKind::heat, std::move(b));
}

KernelExpansion cylinder_pipeline_from_lambda(const CoeffTable& table, int alpha) {
    if (table.kind() != TableKind::lambda)
        throw std::invalid_argument("cylinder_pipeline_from_lambda: need a lambda table");
    if (alpha < 1 || alpha > table.alpha_max() || alpha > table.s_max())
        throw std::invalid_argument("cylinder_pipeline_from_lambda: table does not cover alpha");
    const int m = table.m();

    // T(t) = (-1)^(alpha+1)/alpha! * integral of
    //        d^(alpha+1)[exp(-t sqrt(lambda))] * lambda^alpha * R^alpha_lambda(mu).
    // Each (s, i) term is a one-sided moment in omega = sqrt(lambda) with
    // exponent n = m - s + i - 1 and lands on the power t^(s-m).  Terms with
    // n <= -1 do not converge at the origin individually; splitting them
    // there yields an exponential-integral tail whose expansion carries the
    // ln t slot plus a digamma constant, while the unknown near-origin
    // remainder pollutes exactly the integer powers t^(s-m) with s - m odd
    // and positive.  Those slots are emitted as undetermined; everything
    // else is exact.
    const std::vector<Rational> y = sqrt_exp_weight_coeffs(alpha + 1);
    const Rational outer = sign(alpha + 1) * Rational(1, factorial(alpha));

    std::vector<Coeff> e;
    e.reserve(alpha + 1);
    std::vector<ExactScalar> f(alpha + 1);
    for (int s = 0; s <= alpha; ++s) {
        const bool undetermined_slot = s > m && (s - m) % 2 == 1;
        ExactScalar determined;
        ExactScalar logs;
        for (int i = 1; i <= alpha + 1; ++i) {
            const ExactScalar coef =
                (ExactScalar(outer * y[i - 1]) * table.a(alpha, s)) * ExactScalar(Rational(2));
            const long q = s - m - i + 1;  // order of the exponential-integral split
            if (q <= 0) {
                // convergent moment: 2 * Gamma(m-s+i) t^(s-m) from the full line
                determined += coef * exact::gamma_half(2 * (m - s + i)).value();
            } else {
                logs += coef * ExactScalar(sign(q) * Rational(1, factorial(q - 1)));
                determined +=
                    coef * (ExactScalar(sign(q - 1) * Rational(1, factorial(q - 1))) *
                            psi_eval(Rational(q)));
            }
        }
        if (undetermined_slot) {
            e.push_back(Coeff::undetermined());
            f[s] = logs;
        } else {
            if (!logs.is_zero())
                throw std::logic_error("cylinder pipeline: ln t terms failed to cancel at s = " +
                                       std::to_string(s));
            e.emplace_back(determined);
        }
    }
    return KernelExpansion(m, KernelKind::cylinder, std::move(e), std::move(f));
}

} // namespace riesz::coeffs

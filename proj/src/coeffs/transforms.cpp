#include "riesz/coeffs/transforms.hpp"

#include "riesz/exact/special_values.hpp"

#include <stdexcept>

namespace riesz::coeffs {

using exact::bernoulli;
using exact::binomial;
using exact::factorial;
using exact::gamma_half;
using exact::gamma_ratio;
using exact::pow_rational;
using exact::psi_eval;

namespace {

Rational inv_factorials(int j, int k) { return Rational(1, factorial(j) * factorial(k)); }

Rational sign(long n) { return n % 2 == 0 ? 1 : -1; }

/// 1/Gamma(k/2); zero at the poles of Gamma (entire reciprocal).
ExactScalar gamma_half_reciprocal(long k) {
    const auto g = gamma_half(k);
    if (!g) return ExactScalar{};
    // gamma values are single monomials r * pi^(a/2); invert directly
    const auto& [key, r] = *g->terms().begin();
    return ExactScalar::half_pi_power(-key.half_pi_pow, Rational(1) / r);
}

/// Bracket sum over j = floor(alpha/2)..alpha-1 with integer gamma ratios;
/// `power` selects the first or second power of the reciprocal factor.
Rational lambda_side_bracket(int alpha, int m, int s, int power) {
    Rational total = 0;
    for (int j = alpha / 2; j <= alpha - 1; ++j) {
        const Rational base = Rational(m - s, 2) + (j + 1);
        if (base == 0)
            throw std::domain_error("consistency bracket hits a pole factor");
        total += sign(alpha - j) * pow_rational(base, -power) * inv_factorials(j, alpha - 1 - j) *
                 gamma_ratio(Rational(2 * j + 2), alpha);
    }
    return total;
}

/// Bracket sum over even j = 0..alpha-1 with half-integer gamma ratios.
Rational omega_side_bracket(int alpha, int m, int s) {
    Rational total = 0;
    for (int j = 0; j <= alpha - 1; j += 2) {
        const Rational base(m - s + j + 1);
        if (base == 0)
            throw std::domain_error("consistency bracket hits a pole factor");
        total += sign(alpha - j) / base * inv_factorials(j, alpha - 1 - j) *
                 gamma_ratio(Rational(j + 1, 2), alpha);
    }
    return total;
}

bool log_branch(int m, int s) { return s > m && (s - m) % 2 == 1; }

/// d_{alpha s} / a_{alpha s} on the log branch.
Rational d_from_a_factor(int alpha, int m, int s) {
    if (m - s + alpha < 0)
        throw std::domain_error("factorial pole in the d-from-a prefactor");
    return sign(alpha + m - s + 1) * Rational(1, factorial(s - m - 1) * factorial(m - s + alpha)) *
           gamma_ratio(Rational(s - m, 2), alpha);
}

/// c_{alpha s} / a_{alpha s} off the log branch.
Rational c_from_a_factor(int alpha, int m, int s) {
    return omega_side_bracket(alpha, m, s) + pow_rational(Rational(2), -alpha);
}

/// a_{alpha s} / d_{alpha s} on the log branch.
Rational a_from_d_factor(int alpha, int m, int s) {
    return Rational(-1, 2) * lambda_side_bracket(alpha, m, s, 2);
}

/// a_{alpha s} / c_{alpha s} off the log branch.
Rational a_from_c_factor(int alpha, int m, int s) {
    return lambda_side_bracket(alpha, m, s, 1) + pow_rational(Rational(2), alpha);
}

} // namespace

std::vector<ExactScalar> hardy_kernel_coeffs(const Rational& k, int alpha) {
    if (k <= 0 || k == 1) throw std::invalid_argument("hardy_kernel_coeffs: need k > 0, k != 1");
    if (alpha < 1) throw std::invalid_argument("hardy_kernel_coeffs: need alpha >= 1");
    std::vector<ExactScalar> out;
    out.reserve(alpha);
    for (int j = 0; j < alpha; ++j) {
        const Rational ratio = gamma_ratio(k * (j + 1), alpha);
        out.emplace_back(ExactScalar(sign(alpha - j) * inv_factorials(j, alpha - 1 - j) * ratio));
    }
    return out;
}

std::map<int, Rational> hormander_weights(int k, int alpha) {
    if (k < 2) throw std::invalid_argument("hormander_weights: need integer k >= 2");
    if (alpha < 1) throw std::invalid_argument("hormander_weights: need alpha >= 1");
    // base polynomial in v: sum_{j=1}^k (-1)^(j-1) C(k,j) v^j
    std::vector<Rational> base(k + 1, Rational(0));
    for (int j = 1; j <= k; ++j) base[j] = sign(j - 1) * Rational(binomial(k, j));
    std::vector<Rational> poly{Rational(1)};
    for (int rep = 0; rep < alpha; ++rep) {
        std::vector<Rational> next(poly.size() + k, Rational(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (poly[i] == 0) continue;
            for (int j = 1; j <= k; ++j) next[i + j] += poly[i] * base[j];
        }
        poly = std::move(next);
    }
    std::map<int, Rational> weights;
    for (int beta = alpha; beta <= alpha * k; ++beta)
        weights[beta] = poly[beta];
    return weights;
}

KernelExpansion heat_from_lambda_diag(const DiagonalLambdaCoeffs& diag) {
    std::vector<Coeff> b;
    b.reserve(diag.a.size());
    for (int s = 0; s <= diag.order(); ++s) {
        const ExactScalar g = gamma_half(diag.m + s + 2).value();  // argument >= 3/2: no pole
        b.emplace_back((Rational(1, factorial(s)) * g) * diag.a[s]);
    }
    return KernelExpansion(diag.m, KernelKind::heat, std::move(b));
}

DiagonalLambdaCoeffs lambda_diag_from_heat(const KernelExpansion& heat) {
    if (heat.kind != KernelKind::heat)
        throw std::invalid_argument("lambda_diag_from_heat: expansion is not heat kind");
    std::vector<ExactScalar> a;
    a.reserve(heat.coeff.size());
    for (int s = 0; s <= heat.order(); ++s) {
        const ExactScalar inv_g = gamma_half_reciprocal(heat.m + s + 2);
        a.emplace_back(Rational(factorial(s)) * (inv_g * heat.coeff[s].value()));
    }
    return DiagonalLambdaCoeffs(heat.m, std::move(a));
}

KernelExpansion cylinder_from_omega_diag(const DiagonalOmegaCoeffs& diag) {
    const int m = diag.m;
    std::vector<Coeff> e;
    std::vector<ExactScalar> f(diag.c.size());
    e.reserve(diag.c.size());
    const ExactScalar psi_m1 = psi_eval(Rational(m + 1));
    for (int s = 0; s <= diag.order(); ++s) {
        const ExactScalar ratio(Rational(factorial(m), factorial(s)));
        if (log_branch(m, s)) {
            e.push_back(ratio * (diag.c[s] + Coeff(psi_m1 * diag.d[s])));
            f[s] = -(ratio * diag.d[s]);
        } else {
            e.push_back(ratio * diag.c[s]);
        }
    }
    return KernelExpansion(m, KernelKind::cylinder, std::move(e), std::move(f));
}

DiagonalOmegaCoeffs omega_diag_from_cylinder(const KernelExpansion& cyl) {
    if (cyl.kind != KernelKind::cylinder)
        throw std::invalid_argument("omega_diag_from_cylinder: expansion is not cylinder kind");
    const int m = cyl.m;
    std::vector<Coeff> c;
    std::vector<ExactScalar> d(cyl.coeff.size());
    c.reserve(cyl.coeff.size());
    const ExactScalar psi_m1 = psi_eval(Rational(m + 1));
    for (int s = 0; s <= cyl.order(); ++s) {
        const ExactScalar ratio(Rational(factorial(s), factorial(m)));
        if (log_branch(m, s)) {
            d[s] = -(ratio * cyl.log_coeff[s]);
            c.push_back(ratio * (cyl.coeff[s] + Coeff(psi_m1 * cyl.log_coeff[s])));
        } else {
            c.push_back(ratio * cyl.coeff[s]);
        }
    }
    return DiagonalOmegaCoeffs(m, std::move(c), std::move(d));
}

DiagonalOmegaCoeffs omega_diag_from_lambda_diag(const DiagonalLambdaCoeffs& diag) {
    const int m = diag.m;
    std::vector<Coeff> c;
    std::vector<ExactScalar> d(diag.a.size());
    c.reserve(diag.a.size());
    for (int s = 0; s <= diag.order(); ++s) {
        if (log_branch(m, s)) {
            if (s >= 1) d[s] = ExactScalar(d_from_a_factor(s, m, s)) * diag.a[s];
            c.push_back(Coeff::undetermined());
        } else {
            c.push_back(ExactScalar(c_from_a_factor(s, m, s)) * Coeff(diag.a[s]));
        }
    }
    return DiagonalOmegaCoeffs(m, std::move(c), std::move(d));
}

DiagonalLambdaCoeffs lambda_diag_from_omega_diag(const DiagonalOmegaCoeffs& diag) {
    const int m = diag.m;
    std::vector<ExactScalar> a;
    a.reserve(diag.c.size());
    for (int s = 0; s <= diag.order(); ++s) {
        if (log_branch(m, s)) {
            a.push_back(ExactScalar(a_from_d_factor(s, m, s)) * diag.d[s]);
        } else {
            a.push_back(ExactScalar(a_from_c_factor(s, m, s)) * diag.c[s].value());
        }
    }
    return DiagonalLambdaCoeffs(m, std::move(a));
}

CoeffTable lambda_table_from_diag(const DiagonalLambdaCoeffs& diag, int alpha_max) {
    if (alpha_max < diag.order())
        throw std::invalid_argument("lambda_table_from_diag: alpha_max must cover the diagonal");
    const int m = diag.m;
    std::vector<std::vector<ExactScalar>> a(alpha_max + 1);
    for (int alpha = 0; alpha <= alpha_max; ++alpha) {
        a[alpha].resize(diag.order() + 1);
        for (int s = 0; s <= diag.order(); ++s) {
            // Gamma(alpha+1) Gamma(m/2+s/2+1) / (Gamma(m/2-s/2+alpha+1) Gamma(s+1)),
            // zero when the first denominator gamma has a pole
            const ExactScalar factor = (Rational(factorial(alpha), factorial(s)) *
                                        gamma_half(m + s + 2).value()) *
                                       gamma_half_reciprocal(m - s + 2 * alpha + 2);
            a[alpha][s] = factor * diag.a[s];
        }
    }
    return CoeffTable::lambda_table(m, std::move(a));
}

CoeffTable omega_table_from_diag(const DiagonalOmegaCoeffs& diag, int alpha_max) {
    if (alpha_max < diag.order())
        throw std::invalid_argument("omega_table_from_diag: alpha_max must cover the diagonal");
    const int m = diag.m;
    std::vector<std::vector<Coeff>> c(alpha_max + 1);
    std::vector<std::vector<ExactScalar>> d(alpha_max + 1);
    for (int alpha = 0; alpha <= alpha_max; ++alpha) {
        c[alpha].assign(diag.order() + 1, Coeff(ExactScalar{}));
        d[alpha].resize(diag.order() + 1);
        for (int s = 0; s <= diag.order(); ++s) {
            // Gamma(alpha+1) Gamma(m+1) / (Gamma(m-s+alpha+1) Gamma(s+1)); the
            // denominator pole at m-s+alpha < 0 forces the prefactor to zero.
            const bool pole = m - s + alpha < 0;
            const Rational prefactor =
                pole ? Rational(0)
                     : Rational(factorial(alpha) * factorial(m),
                                factorial(m - s + alpha) * factorial(s));
            if (!log_branch(m, s)) {
                c[alpha][s] = ExactScalar(prefactor) * diag.c[s];
            } else if (!pole) {
                // psi(m+1) - psi(m-s+alpha+1) is a pure rational difference
                Rational psi_diff = 0;
                for (int k = m - s + alpha + 1; k <= m; ++k) psi_diff += Rational(1, k);
                for (int k = m + 1; k <= m - s + alpha; ++k) psi_diff -= Rational(1, k);
                c[alpha][s] = ExactScalar(prefactor) *
                              (diag.c[s] + Coeff(ExactScalar(psi_diff) * diag.d[s]));
                d[alpha][s] = prefactor * diag.d[s];
            } else {
                // below the threshold alpha < s - m the entry no longer sees
                // the undetermined c_ss at all
                const Rational low = sign(s - m - alpha - 1) *
                                     Rational(factorial(s - m - alpha - 1) * factorial(alpha) *
                                                  factorial(m),
                                              factorial(s));
                c[alpha][s] = ExactScalar(low) * Coeff(diag.d[s]);
            }
        }
    }
    return CoeffTable::omega_table(m, std::move(c), std::move(d));
}

OmegaOrderRow omega_full_from_lambda(const CoeffTable& table, int alpha) {
    if (table.kind() != TableKind::lambda)
        throw std::invalid_argument("omega_full_from_lambda: need a lambda table");
    if (alpha < 0 || alpha > table.alpha_max() || alpha > table.s_max())
        throw std::invalid_argument("omega_full_from_lambda: table does not cover alpha");
    const int m = table.m();
    OmegaOrderRow row;
    row.c.reserve(alpha + 1);
    row.d.resize(alpha + 1);
    for (int s = 0; s <= alpha; ++s) {
        if (log_branch(m, s)) {
            row.d[s] = ExactScalar(d_from_a_factor(alpha, m, s)) * table.a(alpha, s);
            row.c.push_back(Coeff::undetermined());
        } else {
            row.c.push_back(Coeff(ExactScalar(c_from_a_factor(alpha, m, s)) * table.a(alpha, s)));
        }
    }
    return row;
}

std::vector<ExactScalar> lambda_full_from_omega(const CoeffTable& table, int alpha) {
    if (table.kind() != TableKind::omega)
        throw std::invalid_argument("lambda_full_from_omega: need an omega table");
    if (alpha < 0 || alpha > table.alpha_max() || alpha > table.s_max())
        throw std::invalid_argument("lambda_full_from_omega: table does not cover alpha");
    const int m = table.m();
    std::vector<ExactScalar> a(alpha + 1);
    for (int s = 0; s <= alpha; ++s) {
        if (log_branch(m, s)) {
            a[s] = ExactScalar(a_from_d_factor(alpha, m, s)) * table.d(alpha, s);
        } else {
            a[s] = ExactScalar(a_from_c_factor(alpha, m, s)) * table.c(alpha, s).value();
        }
    }
    return a;
}

ConsistencyReport verify_consistency(int alpha, int m, int s) {
    if (alpha < 1 || m < 1 || s < 0)
        throw std::invalid_argument("verify_consistency: need alpha >= 1, m >= 1, s >= 0");
    ConsistencyReport report;
    if (log_branch(m, s)) {
        report.product_log_branch =
            ExactScalar(a_from_d_factor(alpha, m, s) * d_from_a_factor(alpha, m, s));
        report.vanishing_sum =
            ExactScalar(lambda_side_bracket(alpha, m, s, 1) + pow_rational(Rational(2), alpha));
    } else {
        report.product_plain_branch =
            ExactScalar(a_from_c_factor(alpha, m, s) * c_from_a_factor(alpha, m, s));
    }
    return report;
}

std::vector<KernelTerm> moment_map(MomentVariable variable, const Rational& p, bool with_log) {
    if (p <= 0) throw std::invalid_argument("moment_map: need p > 0");
    if (!exact::is_half_integer_grid(p))
        throw std::invalid_argument("moment_map: 2p must be an integer for exact evaluation");
    const ExactScalar gamma_p = exact::gamma_exact(p).value();  // p > 0: no pole
    std::vector<KernelTerm> terms;
    switch (variable) {
        case MomentVariable::lambda:
            if (with_log)
                throw std::invalid_argument("moment_map: no logarithmic lambda moment");
            terms.push_back({-p, false, gamma_p});
            break;
        case MomentVariable::omega:
            if (!with_log) {
                terms.push_back({-p, false, Rational(1, 2) * gamma_p});
            } else {
                terms.push_back({-p, false, Rational(1, 4) * (gamma_p * psi_eval(p))});
                terms.push_back({-p, true, Rational(-1, 4) * gamma_p});
            }
            break;
        case MomentVariable::omega_for_cylinder:
            if (!with_log) {
                terms.push_back({-p, false, gamma_p});
            } else {
                terms.push_back({-p, false, gamma_p * psi_eval(p)});
                terms.push_back({-p, true, -gamma_p});
            }
            break;
    }
    return terms;
}

std::vector<Rational> gaussian_weight_coeffs(int j) {
    if (j < 1) throw std::invalid_argument("gaussian_weight_coeffs: need j >= 1");
    std::vector<Rational> z{Rational(-2)};
    for (int order = 1; order < j; ++order) {
        std::vector<Rational> next((order + 1) / 2 + 1, Rational(0));
        for (std::size_t i = 0; i < z.size(); ++i) {
            next[i] += Rational(-2) * z[i];
            const long power = order - 2 * static_cast<long>(i);
            if (power > 0) next[i + 1] += Rational(power) * z[i];
        }
        z = std::move(next);
    }
    return z;
}

std::vector<Rational> sqrt_exp_weight_coeffs(int j) {
    if (j < 1) throw std::invalid_argument("sqrt_exp_weight_coeffs: need j >= 1");
    std::vector<Rational> y{Rational(-1, 2)};  // y[i-1] holds the t^i coefficient
    for (int order = 1; order < j; ++order) {
        std::vector<Rational> next(order + 1, Rational(0));
        for (std::size_t idx = 0; idx < y.size(); ++idx) {
            const Rational i(static_cast<long>(idx) + 1);
            next[idx] += (i / 2 - order) * y[idx];
            next[idx + 1] += Rational(-1, 2) * y[idx];
        }
        y = std::move(next);
    }
    return y;
}

DiagonalOmegaCoeffs shift_log_scale(const DiagonalOmegaCoeffs& diag,
                                    const ExactScalar& ln_kappa) {
    std::vector<Coeff> c = diag.c;
    for (int s = 0; s <= diag.order(); ++s)
        if (!diag.d[s].is_zero()) c[s] = c[s] + Coeff(ln_kappa * diag.d[s]);
    return DiagonalOmegaCoeffs(diag.m, std::move(c), diag.d);
}

} // namespace riesz::coeffs

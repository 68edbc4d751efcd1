#ifndef RIESZ_COEFFS_TABLES_HPP
#define RIESZ_COEFFS_TABLES_HPP

#include "riesz/exact/exact_scalar.hpp"
#include "riesz/exact/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace riesz::coeffs {

using exact::ExactScalar;
using exact::Rational;

/// A coefficient that is either an exact value or undetermined.  The
/// undetermined state is first class: some square-root-side expansion
/// coefficients cannot be recovered from the plain-variable asymptotics at
/// all, and silently treating them as zero would be wrong.  Arithmetic
/// propagates the state, with one sound exception: multiplication by an
/// exact zero yields a determined zero.
class Coeff {
  public:
    Coeff() : determined_(true) {}
    Coeff(ExactScalar v) : determined_(true), value_(std::move(v)) {}  // NOLINT
    Coeff(const Rational& q) : Coeff(ExactScalar(q)) {}                // NOLINT
    static Coeff undetermined() {
        Coeff c;
        c.determined_ = false;
        return c;
    }

    bool is_determined() const { return determined_; }
    /// Throws std::domain_error when the coefficient is undetermined.
    const ExactScalar& value() const;

    friend Coeff operator+(const Coeff& a, const Coeff& b);
    friend Coeff operator-(const Coeff& a, const Coeff& b);
    friend Coeff operator*(const ExactScalar& s, const Coeff& c);
    friend Coeff operator*(const Rational& q, const Coeff& c) { return ExactScalar(q) * c; }
    Coeff operator-() const;
    bool operator==(const Coeff& o) const;

    std::string to_text() const;

  private:
    bool determined_;
    ExactScalar value_;
};

/// Diagonal lambda-mean coefficients a_ss, s = 0..S, for a fixed dimension m.
/// The sequence is dense: zeros are stored explicitly.
struct DiagonalLambdaCoeffs {
    int m = 1;
    std::vector<ExactScalar> a;

    DiagonalLambdaCoeffs(int m_, std::vector<ExactScalar> a_);
    int order() const { return static_cast<int>(a.size()) - 1; }
};

/// Diagonal omega-mean coefficients (c_ss, d_ss).  d_ss may be nonzero only
/// when s - m is odd and positive; c_ss may be undetermined only there.
struct DiagonalOmegaCoeffs {
    int m = 1;
    std::vector<Coeff> c;
    std::vector<ExactScalar> d;

    DiagonalOmegaCoeffs(int m_, std::vector<Coeff> c_, std::vector<ExactScalar> d_);
    int order() const { return static_cast<int>(c.size()) - 1; }
};

enum class KernelKind { heat, cylinder };

/// Short-time expansion coefficients of a heat kernel (b_s against half
/// powers of t) or a cylinder kernel (e_s against integer powers plus f_s
/// log slots).  Log slots exist only for a cylinder kind and only at
/// s - m odd and positive; heat coefficients are always determined.
struct KernelExpansion {
    int m = 1;
    KernelKind kind = KernelKind::heat;
    std::vector<Coeff> coeff;             ///< b_s or e_s, s = 0..S
    std::vector<ExactScalar> log_coeff;   ///< f_s (cylinder), dense with zeros

    KernelExpansion(int m_, KernelKind kind_, std::vector<Coeff> coeff_,
                    std::vector<ExactScalar> log_coeff_ = {});
    int order() const { return static_cast<int>(coeff.size()) - 1; }
};

/// One additive term of a kernel expansion: coefficient * t^power, with an
/// optional ln t factor.
struct KernelTerm {
    Rational power;
    bool has_log = false;
    ExactScalar coefficient;
};

enum class TableKind { lambda, omega };

/// Dense rectangular table of mean coefficients for 0 <= alpha <= alpha_max
/// and 0 <= s <= s_max.  Lambda tables hold a[alpha][s]; omega tables hold
/// c[alpha][s] and d[alpha][s].  Entries with alpha < s are the formal
/// low-order values defined by the same closed forms (zero where a
/// denominator gamma has a pole).  The one-step recursions that connect
/// order alpha to order alpha - 1 are validated entry by entry on
/// construction, so a table that exists is consistent.
class CoeffTable {
  public:
    static CoeffTable lambda_table(int m, std::vector<std::vector<ExactScalar>> a);
    static CoeffTable omega_table(int m, std::vector<std::vector<Coeff>> c,
                                  std::vector<std::vector<ExactScalar>> d);

    TableKind kind() const { return kind_; }
    int m() const { return m_; }
    int alpha_max() const { return alpha_max_; }
    int s_max() const { return s_max_; }

    const ExactScalar& a(int alpha, int s) const;
    const Coeff& c(int alpha, int s) const;
    const ExactScalar& d(int alpha, int s) const;

  private:
    CoeffTable() = default;
    void validate() const;

    TableKind kind_ = TableKind::lambda;
    int m_ = 1;
    int alpha_max_ = 0;
    int s_max_ = 0;
    std::vector<std::vector<ExactScalar>> a_;
    std::vector<std::vector<Coeff>> c_;
    std::vector<std::vector<ExactScalar>> d_;
};

} // namespace riesz::coeffs

#endif

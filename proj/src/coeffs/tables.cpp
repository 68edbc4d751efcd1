#include "riesz/coeffs/tables.hpp"

#include <stdexcept>

namespace riesz::coeffs {

const ExactScalar& Coeff::value() const {
    if (!determined_)
        throw std::domain_error("consumed an undetermined coefficient where an exact value "
                                "is required");
    return value_;
}

Coeff operator+(const Coeff& a, const Coeff& b) {
    if (!a.determined_ || !b.determined_) return Coeff::undetermined();
    return Coeff(a.value_ + b.value_);
}

Coeff operator-(const Coeff& a, const Coeff& b) {
    if (!a.determined_ || !b.determined_) return Coeff::undetermined();
    return Coeff(a.value_ - b.value_);
}

Coeff operator*(const ExactScalar& s, const Coeff& c) {
    if (s.is_zero()) return Coeff(ExactScalar{});  // 0 * anything is exactly 0
    if (!c.determined_) return Coeff::undetermined();
    return Coeff(s * c.value_);
}

Coeff Coeff::operator-() const {
    if (!determined_) return undetermined();
    return Coeff(-value_);
}

bool Coeff::operator==(const Coeff& o) const {
    if (determined_ != o.determined_) return false;
    return !determined_ || value_ == o.value_;
}

std::string Coeff::to_text() const {
    return determined_ ? value_.to_text() : std::string("undetermined");
}

DiagonalLambdaCoeffs::DiagonalLambdaCoeffs(int m_, std::vector<ExactScalar> a_)
    : m(m_), a(std::move(a_)) {
    if (m < 1) throw std::invalid_argument("dimension m must be >= 1");
    if (a.empty()) throw std::invalid_argument("diagonal sequence must not be empty");
}

DiagonalOmegaCoeffs::DiagonalOmegaCoeffs(int m_, std::vector<Coeff> c_,
                                         std::vector<ExactScalar> d_)
    : m(m_), c(std::move(c_)), d(std::move(d_)) {
    if (m < 1) throw std::invalid_argument("dimension m must be >= 1");
    if (c.empty() || c.size() != d.size())
        throw std::invalid_argument("c and d sequences must be dense and equally sized");
    for (int s = 0; s <= order(); ++s) {
        const bool log_slot = s > m && (s - m) % 2 == 1;
        if (!log_slot && !d[s].is_zero())
            throw std::invalid_argument("d entry allowed only for s - m odd and positive");
        if (!log_slot && !c[s].is_determined())
            throw std::invalid_argument("c entry may be undetermined only for s - m odd "
                                        "and positive");
    }
}

KernelExpansion::KernelExpansion(int m_, KernelKind kind_, std::vector<Coeff> coeff_,
                                 std::vector<ExactScalar> log_coeff_)
    : m(m_), kind(kind_), coeff(std::move(coeff_)), log_coeff(std::move(log_coeff_)) {
    if (m < 1) throw std::invalid_argument("dimension m must be >= 1");
    if (coeff.empty()) throw std::invalid_argument("coefficient sequence must not be empty");
    if (log_coeff.empty()) log_coeff.assign(coeff.size(), ExactScalar{});
    if (log_coeff.size() != coeff.size())
        throw std::invalid_argument("log slots must be dense alongside the coefficients");
    for (int s = 0; s <= order(); ++s) {
        const bool log_slot =
            kind == KernelKind::cylinder && s > m && (s - m) % 2 == 1;
        if (!log_slot && !log_coeff[s].is_zero())
            throw std::invalid_argument("log coefficient allowed only in cylinder kind at "
                                        "s - m odd and positive");
        if (kind == KernelKind::heat && !coeff[s].is_determined())
            throw std::invalid_argument("heat coefficients are always determined");
    }
}

CoeffTable CoeffTable::lambda_table(int m, std::vector<std::vector<ExactScalar>> a) {
    CoeffTable t;
    t.kind_ = TableKind::lambda;
    t.m_ = m;
    t.alpha_max_ = static_cast<int>(a.size()) - 1;
    t.a_ = std::move(a);
    if (m < 1 || t.alpha_max_ < 0 || t.a_[0].empty())
        throw std::invalid_argument("bad lambda table shape");
    t.s_max_ = static_cast<int>(t.a_[0].size()) - 1;
    for (const auto& row : t.a_)
        if (static_cast<int>(row.size()) != t.s_max_ + 1)
            throw std::invalid_argument("table rows must be rectangular");
    t.validate();
    return t;
}

CoeffTable CoeffTable::omega_table(int m, std::vector<std::vector<Coeff>> c,
                                   std::vector<std::vector<ExactScalar>> d) {
    CoeffTable t;
    t.kind_ = TableKind::omega;
    t.m_ = m;
    t.alpha_max_ = static_cast<int>(c.size()) - 1;
    t.c_ = std::move(c);
    t.d_ = std::move(d);
    if (m < 1 || t.alpha_max_ < 0 || t.d_.size() != t.c_.size() || t.c_[0].empty())
        throw std::invalid_argument("bad omega table shape");
    t.s_max_ = static_cast<int>(t.c_[0].size()) - 1;
    for (int al = 0; al <= t.alpha_max_; ++al)
        if (static_cast<int>(t.c_[al].size()) != t.s_max_ + 1 ||
            static_cast<int>(t.d_[al].size()) != t.s_max_ + 1)
            throw std::invalid_argument("table rows must be rectangular");
    t.validate();
    return t;
}

const ExactScalar& CoeffTable::a(int alpha, int s) const {
    if (kind_ != TableKind::lambda) throw std::logic_error("a() on an omega table");
    return a_.at(alpha).at(s);
}

const Coeff& CoeffTable::c(int alpha, int s) const {
    if (kind_ != TableKind::omega) throw std::logic_error("c() on a lambda table");
    return c_.at(alpha).at(s);
}

const ExactScalar& CoeffTable::d(int alpha, int s) const {
    if (kind_ != TableKind::omega) throw std::logic_error("d() on a lambda table");
    return d_.at(alpha).at(s);
}

void CoeffTable::validate() const {
    // One-step recursions in alpha, checked on every interior entry.
    for (int al = 1; al <= alpha_max_; ++al) {
        for (int s = 0; s <= s_max_; ++s) {
            const Rational inv_alpha(1, al);
            if (kind_ == TableKind::lambda) {
                // a_{alpha-1,s} = (m/2 - s/2 + alpha) a_{alpha s} / alpha
                const Rational factor = Rational(m_ - s, 2) + al;
                if (!(a_[al - 1][s] == (inv_alpha * factor) * a_[al][s]))
                    throw std::invalid_argument("lambda table violates the order recursion");
            } else {
                const Rational factor = Rational(m_ - s + al);
                const bool log_slot = s > m_ && (s - m_) % 2 == 1;
                if (!log_slot) {
                    // c_{alpha-1,s} = (m - s + alpha) c_{alpha s} / alpha
                    if (!(c_[al - 1][s] == (ExactScalar(inv_alpha * factor)) * c_[al][s]))
                        throw std::invalid_argument("omega table violates the c recursion");
                    if (!d_[al - 1][s].is_zero() || !d_[al][s].is_zero())
                        throw std::invalid_argument("omega table has a d entry off the log "
                                                    "branch");
                } else {
                    // c_{alpha-1,s} = [(m - s + alpha) c_{alpha s} + d_{alpha s}] / alpha
                    const Coeff rhs = (ExactScalar(inv_alpha * factor)) * c_[al][s] +
                                      Coeff(ExactScalar(inv_alpha) * d_[al][s]);
                    if (!(c_[al - 1][s] == rhs))
                        throw std::invalid_argument("omega table violates the c recursion");
                    // d_{alpha-1,s} = (m - s + alpha) d_{alpha s} / alpha
                    if (!(d_[al - 1][s] == (inv_alpha * factor) * d_[al][s]))
                        throw std::invalid_argument("omega table violates the d recursion");
                }
            }
        }
    }
}

} // namespace riesz::coeffs

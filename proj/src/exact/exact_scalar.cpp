#include "riesz/exact/exact_scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace riesz::exact {

ExactScalar::ExactScalar(const Rational& q) {
    if (q != 0) terms_[MonomialKey{}] = q;
}

ExactScalar ExactScalar::half_pi_power(int k, const Rational& q) {
    ExactScalar s;
    if (q != 0) s.terms_[MonomialKey{k, 0, 0}] = q;
    return s;
}

ExactScalar ExactScalar::euler_gamma(const Rational& q) {
    ExactScalar s;
    if (q != 0) s.terms_[MonomialKey{0, 1, 0}] = q;
    return s;
}

ExactScalar ExactScalar::ln_two(const Rational& q) {
    ExactScalar s;
    if (q != 0) s.terms_[MonomialKey{0, 0, 1}] = q;
    return s;
}

bool ExactScalar::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == MonomialKey{};
}

Rational ExactScalar::rational_value() const {
    if (terms_.empty()) return 0;
    if (!is_rational())
        throw std::domain_error("rational_value: value has symbolic terms: " + to_text());
    return terms_.begin()->second;
}

void ExactScalar::add_term(const MonomialKey& k, const Rational& q) {
    if (q == 0) return;
    auto [it, inserted] = terms_.emplace(k, q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r;
    for (const auto& [k, q] : terms_) r.terms_[k] = -q;
    return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, q);
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, -q);
    return *this;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar r;
    for (const auto& [ka, qa] : a.terms_) {
        for (const auto& [kb, qb] : b.terms_) {
            MonomialKey k{ka.half_pi_pow + kb.half_pi_pow,
                          ka.gamma_pow + kb.gamma_pow,
                          ka.ln2_pow + kb.ln2_pow};
            if (k.gamma_pow > 1 || k.ln2_pow > 1)
                throw std::domain_error(
                    "ExactScalar multiplication leaves the coefficient ring "
                    "(degree in gamma or ln 2 would exceed one)");
            r.add_term(k, qa * qb);
        }
    }
    return r;
}

ExactScalar operator*(const Rational& q, const ExactScalar& a) {
    ExactScalar r;
    if (q == 0) return r;
    for (const auto& [k, c] : a.terms_) r.terms_[k] = q * c;
    return r;
}

std::string ExactScalar::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, q] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << riesz::exact::to_text(q);
        if (k.half_pi_pow != 0) out << " * pi^(" << k.half_pi_pow << "/2)";
        if (k.gamma_pow != 0) out << " * gamma";
        if (k.ln2_pow != 0) out << " * ln2";
    }
    return out.str();
}

namespace {

// strips one factor token of the form "pi^(k/2)", "gamma" or "ln2"
void apply_factor(MonomialKey& key, const std::string& tok) {
    if (tok == "gamma") {
        key.gamma_pow += 1;
    } else if (tok == "ln2") {
        key.ln2_pow += 1;
    } else if (tok.rfind("pi^(", 0) == 0 && tok.size() > 7 && tok.substr(tok.size() - 3) == "/2)") {
        key.half_pi_pow += std::stoi(tok.substr(4, tok.size() - 7));
    } else {
        throw std::invalid_argument("bad monomial factor: " + tok);
    }
    if (key.gamma_pow > 1 || key.ln2_pow > 1)
        throw std::invalid_argument("monomial degree in gamma or ln2 exceeds one");
}

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

ExactScalar ExactScalar::from_text(const std::string& s) {
    const std::string body = strip(s);
    if (body.empty()) throw std::invalid_argument("empty exact-scalar literal");
    if (body == "0") return ExactScalar{};
    ExactScalar r;
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto next = body.find(" + ", pos);
        const std::string term =
            body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? body.size() : next + 3;

        // split the term on " * ": first token is the rational coefficient
        std::vector<std::string> toks;
        std::size_t tp = 0;
        while (tp < term.size()) {
            auto star = term.find(" * ", tp);
            toks.push_back(strip(
                term.substr(tp, star == std::string::npos ? std::string::npos : star - tp)));
            tp = star == std::string::npos ? term.size() : star + 3;
        }
        if (toks.empty()) throw std::invalid_argument("empty term in exact-scalar literal");
        MonomialKey key;
        const Rational coeff = rational_from_text(toks[0]);
        for (std::size_t i = 1; i < toks.size(); ++i) apply_factor(key, toks[i]);
        r.add_term(key, coeff);
    }
    return r;
}

double ExactScalar::value() const {
    constexpr double euler_gamma_v = 0.5772156649015328606;
    const double ln2_v = std::log(2.0);
    const double sqrt_pi = std::sqrt(M_PI);
    double total = 0;
    for (const auto& [k, q] : terms_) {
        double m = to_double(q) * std::pow(sqrt_pi, k.half_pi_pow);
        if (k.gamma_pow) m *= euler_gamma_v;
        if (k.ln2_pow) m *= ln2_v;
        total += m;
    }
    return total;
}

} // namespace riesz::exact

#include "riesz/io/coeff_json.hpp"

namespace riesz::io {

using coeffs::Coeff;
using coeffs::DiagonalLambdaCoeffs;
using coeffs::DiagonalOmegaCoeffs;
using coeffs::KernelExpansion;
using coeffs::KernelKind;
using exact::ExactScalar;

std::string coeff_kind_name(CoeffKind kind) {
    switch (kind) {
        case CoeffKind::lambda_diag: return "lambda-diag";
        case CoeffKind::omega_diag: return "omega-diag";
        case CoeffKind::heat: return "heat";
        case CoeffKind::cylinder: return "cylinder";
    }
    throw std::logic_error("unreachable");
}

CoeffKind coeff_kind_from_name(const std::string& name) {
    if (name == "lambda-diag") return CoeffKind::lambda_diag;
    if (name == "omega-diag") return CoeffKind::omega_diag;
    if (name == "heat") return CoeffKind::heat;
    if (name == "cylinder") return CoeffKind::cylinder;
    throw SchemaError("unknown coefficient kind: " + name);
}

CoeffDocument CoeffDocument::from(const DiagonalLambdaCoeffs& diag) {
    CoeffDocument doc;
    doc.kind = CoeffKind::lambda_diag;
    doc.m = diag.m;
    for (const auto& a : diag.a) doc.value.emplace_back(a);
    doc.log.assign(diag.a.size(), ExactScalar{});
    return doc;
}

CoeffDocument CoeffDocument::from(const DiagonalOmegaCoeffs& diag) {
    CoeffDocument doc;
    doc.kind = CoeffKind::omega_diag;
    doc.m = diag.m;
    doc.value = diag.c;
    doc.log = diag.d;
    return doc;
}

CoeffDocument CoeffDocument::from(const KernelExpansion& expansion) {
    CoeffDocument doc;
    doc.kind = expansion.kind == KernelKind::heat ? CoeffKind::heat : CoeffKind::cylinder;
    doc.m = expansion.m;
    doc.value = expansion.coeff;
    doc.log = expansion.log_coeff;
    return doc;
}

DiagonalLambdaCoeffs CoeffDocument::lambda_diag() const {
    if (kind != CoeffKind::lambda_diag)
        throw SchemaError("document kind is " + coeff_kind_name(kind) + ", not lambda-diag");
    std::vector<ExactScalar> a;
    for (const auto& v : value) a.push_back(v.value());
    return DiagonalLambdaCoeffs(m, std::move(a));
}

DiagonalOmegaCoeffs CoeffDocument::omega_diag() const {
    if (kind != CoeffKind::omega_diag)
        throw SchemaError("document kind is " + coeff_kind_name(kind) + ", not omega-diag");
    return DiagonalOmegaCoeffs(m, value, log);
}

KernelExpansion CoeffDocument::expansion() const {
    if (kind != CoeffKind::heat && kind != CoeffKind::cylinder)
        throw SchemaError("document kind is " + coeff_kind_name(kind) + ", not an expansion");
    return KernelExpansion(m,
                           kind == CoeffKind::heat ? KernelKind::heat : KernelKind::cylinder,
                           value, log);
}

json coeff_to_json(const CoeffDocument& doc) {
    json coeffs = json::array();
    for (std::size_t s = 0; s < doc.value.size(); ++s) {
        json entry;
        entry["s"] = s;
        entry["value"] = doc.value[s].is_determined() ? doc.value[s].value().to_text()
                                                      : std::string("undetermined");
        if (!doc.log[s].is_zero()) entry["log"] = doc.log[s].to_text();
        coeffs.push_back(entry);
    }
    return json{{"m", doc.m}, {"kind", coeff_kind_name(doc.kind)}, {"coeffs", coeffs}};
}

CoeffDocument coeff_from_json(const json& j) {
    try {
        CoeffDocument doc;
        doc.kind = coeff_kind_from_name(j.at("kind").get<std::string>());
        doc.m = j.at("m").get<int>();
        if (doc.m < 1) throw SchemaError("m must be >= 1");
        const auto& entries = j.at("coeffs");
        if (!entries.is_array() || entries.empty())
            throw SchemaError("coeffs must be a nonempty array");
        doc.value.assign(entries.size(), Coeff(ExactScalar{}));
        doc.log.assign(entries.size(), ExactScalar{});
        std::vector<bool> seen(entries.size(), false);
        for (const auto& entry : entries) {
            const auto s = entry.at("s").get<std::size_t>();
            if (s >= entries.size() || seen[s])
                throw SchemaError("coefficient indices must be 0..S without repeats");
            seen[s] = true;
            const auto text = entry.at("value").get<std::string>();
            doc.value[s] = text == "undetermined" ? Coeff::undetermined()
                                                  : Coeff(ExactScalar::from_text(text));
            if (entry.contains("log"))
                doc.log[s] = ExactScalar::from_text(entry.at("log").get<std::string>());
        }
        // materialize once to run the type invariants
        switch (doc.kind) {
            case CoeffKind::lambda_diag: (void)doc.lambda_diag(); break;
            case CoeffKind::omega_diag: (void)doc.omega_diag(); break;
            default: (void)doc.expansion(); break;
        }
        return doc;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed coefficient document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("invalid coefficient document: ") + e.what());
    } catch (const std::domain_error& e) {
        throw SchemaError(std::string("invalid coefficient document: ") + e.what());
    }
}

} // namespace riesz::io

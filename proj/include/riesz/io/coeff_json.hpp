#ifndef RIESZ_IO_COEFF_JSON_HPP
#define RIESZ_IO_COEFF_JSON_HPP

#include "riesz/coeffs/tables.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace riesz::io {

using nlohmann::json;

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// Coefficient documents:
///   {"m": int,
///    "kind": "lambda-diag" | "omega-diag" | "heat" | "cylinder",
///    "coeffs": [{"s": int, "value": text | "undetermined", "log": text}]}
/// "value" holds a_ss, c_ss, b_s or e_s in canonical exact-scalar text;
/// "log" holds d_ss or f_s and is omitted when it vanishes.
enum class CoeffKind { lambda_diag, omega_diag, heat, cylinder };

std::string coeff_kind_name(CoeffKind kind);
CoeffKind coeff_kind_from_name(const std::string& name);

/// In-memory mirror of one coefficient document.
struct CoeffDocument {
    CoeffKind kind = CoeffKind::lambda_diag;
    int m = 1;
    std::vector<coeffs::Coeff> value;      ///< dense, s = 0..S
    std::vector<exact::ExactScalar> log;   ///< dense, zeros where absent

    static CoeffDocument from(const coeffs::DiagonalLambdaCoeffs& diag);
    static CoeffDocument from(const coeffs::DiagonalOmegaCoeffs& diag);
    static CoeffDocument from(const coeffs::KernelExpansion& expansion);

    coeffs::DiagonalLambdaCoeffs lambda_diag() const;
    coeffs::DiagonalOmegaCoeffs omega_diag() const;
    coeffs::KernelExpansion expansion() const;
};

json coeff_to_json(const CoeffDocument& doc);
/// Throws SchemaError on any malformed document.
CoeffDocument coeff_from_json(const json& j);

} // namespace riesz::io

#endif

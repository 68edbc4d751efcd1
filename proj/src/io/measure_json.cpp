#include "riesz/io/measure_json.hpp"

namespace riesz::io {

using engine::AtomTailBound;
using engine::Density;
using engine::DensityTailBound;
using engine::SpectralMeasure;
using engine::SpectralVariable;

json measure_to_json(const SpectralMeasure& mu) {
    json j;
    j["variable"] = mu.variable == SpectralVariable::lambda ? "lambda" : "omega";
    json atoms = json::array();
    for (const auto& a : mu.atoms) atoms.push_back(json::array({a.position, a.weight}));
    j["atoms"] = atoms;
    if (mu.atom_tail) {
        j["atom_tail"] = json{{"start", mu.atom_tail->start},
                              {"weight_rate", mu.atom_tail->weight_rate},
                              {"rate_exponent", mu.atom_tail->rate_exponent},
                              {"max_single_weight", mu.atom_tail->max_single_weight}};
    }
    // only table densities have a file representation
    if (mu.density)
        throw SchemaError("measures with densities are written as sampled tables by the "
                          "caller, not serialized directly");
    return j;
}

SpectralMeasure measure_from_json(const json& j) {
    try {
        SpectralMeasure mu;
        const auto variable = j.at("variable").get<std::string>();
        if (variable == "lambda")
            mu.variable = SpectralVariable::lambda;
        else if (variable == "omega")
            mu.variable = SpectralVariable::omega;
        else
            throw SchemaError("variable must be lambda or omega");
        for (const auto& pair : j.at("atoms")) {
            if (!pair.is_array() || pair.size() != 2)
                throw SchemaError("atoms must be [position, weight] pairs");
            mu.atoms.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
        if (j.contains("atom_tail")) {
            const auto& t = j.at("atom_tail");
            mu.atom_tail = AtomTailBound{t.at("start").get<double>(),
                                         t.at("weight_rate").get<double>(),
                                         t.value("rate_exponent", 0.0),
                                         t.at("max_single_weight").get<double>()};
        }
        if (j.contains("density")) {
            const auto& d = j.at("density");
            const auto kind = d.at("kind").get<std::string>();
            if (kind != "table")
                throw SchemaError("only table densities can be read from files");
            const auto& t = d.at("tail");
            DensityTailBound tail{t.at("coefficient").get<double>(),
                                  t.at("exponent").get<double>(),
                                  t.at("start").get<double>()};
            std::vector<std::pair<double, double>> points;
            for (const auto& pair : d.at("points"))
                points.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
            mu.density = Density::from_table(std::move(points), tail);
        }
        mu.validate();
        return mu;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed measure document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("invalid measure document: ") + e.what());
    }
}

} // namespace riesz::io

#include "spinid/model.hpp"

#include <stdexcept>

namespace spinid {

std::string family_name(ModelFamily f) {
    switch (f) {
        case ModelFamily::IsingNoField: return "ising_no_field";
        case ModelFamily::IsingTransverse: return "ising_transverse";
        case ModelFamily::ExchangeNoField: return "exchange_no_field";
        case ModelFamily::ExchangeTransverse: return "exchange_transverse";
        case ModelFamily::Custom: return "custom";
    }
    return "?";
}

ModelFamily family_from_string(const std::string& s) {
    if (s == "ising_no_field") return ModelFamily::IsingNoField;
    if (s == "ising_transverse") return ModelFamily::IsingTransverse;
    if (s == "exchange_no_field") return ModelFamily::ExchangeNoField;
    if (s == "exchange_transverse") return ModelFamily::ExchangeTransverse;
    if (s == "custom") return ModelFamily::Custom;
    throw std::invalid_argument("unknown model family: " + s);
}

std::vector<ParameterInfo> ModelSpec::parameters() const {
    if (family == ModelFamily::Custom) return custom_parameters;
    std::vector<ParameterInfo> out;
    bool field = family == ModelFamily::IsingTransverse ||
                 family == ModelFamily::ExchangeTransverse;
    if (field)
        for (size_t k = 1; k <= sites; ++k)
            out.push_back({"w" + std::to_string(k), true, k});
    for (size_t k = 1; k + 1 <= sites; ++k)
        out.push_back({"J" + std::to_string(k), false, k});
    return out;
}

std::vector<HamiltonianTerm> ModelSpec::terms() const {
    if (family == ModelFamily::Custom) {
        if (custom_terms.empty()) throw std::invalid_argument("custom model without terms");
        return custom_terms;
    }
    if (sites < 2) throw std::invalid_argument("chain needs at least 2 sites");
    std::vector<HamiltonianTerm> out;
    auto params = parameters();
    size_t pidx = 0;
    bool field = family == ModelFamily::IsingTransverse ||
                 family == ModelFamily::ExchangeTransverse;
    bool exchange = family == ModelFamily::ExchangeNoField ||
                    family == ModelFamily::ExchangeTransverse;
    Rational half(1, 2);
    if (field) {
        for (size_t k = 1; k <= sites; ++k, ++pidx)
            out.push_back({pidx, half, PauliString::single(sites, k, gamma)});
    }
    for (size_t k = 1; k + 1 <= sites; ++k, ++pidx) {
        PauliString aa(sites);
        aa.sites[k - 1] = aa.sites[k] = static_cast<uint8_t>(alpha);
        out.push_back({pidx, half, aa});
        if (exchange) {
            PauliString bb(sites);
            bb.sites[k - 1] = bb.sites[k] = static_cast<uint8_t>(beta);
            out.push_back({pidx, half, bb});
        }
    }
    (void)params;
    return out;
}

Axis ModelSpec::default_observable() const {
    // field-free Ising: the probe axes alpha commutes with H, gamma works and
    // matches the smallest accessible set
    if (family == ModelFamily::IsingNoField) return gamma;
    return alpha;
}

size_t ModelSpec::required_observables() const {
    return family == ModelFamily::ExchangeTransverse ? 2 : 1;
}

ModelSpec make_model(ModelFamily family, size_t sites) {
    ModelSpec m;
    m.family = family;
    m.sites = sites;
    return m;
}

}  // namespace spinid

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinid/pauli.hpp"

namespace spinid {

enum class ModelFamily {
    IsingNoField,
    IsingTransverse,
    ExchangeNoField,
    ExchangeTransverse,
    Custom,
};

std::string family_name(ModelFamily f);
ModelFamily family_from_string(const std::string& s);

/// Parameter symbol: the Zeeman frequency of a site or a bond coupling.
struct ParameterInfo {
    std::string name;   // "w1".."wN", "J1".."J(N-1)"
    bool is_field;      // true for omega
    size_t index;       // 1-based site or bond index
};

/// Nearest-neighbor chain specification. Coupling axes (alpha, beta, gamma)
/// default to (X, Y, Z): alpha for Ising bonds, alpha+beta for exchange
/// bonds, gamma for the transverse field.
struct ModelSpec {
    size_t sites = 2;
    ModelFamily family = ModelFamily::ExchangeNoField;
    Axis alpha = Axis::X;
    Axis beta = Axis::Y;
    Axis gamma = Axis::Z;
    std::vector<HamiltonianTerm> custom_terms;       // family == Custom
    std::vector<ParameterInfo> custom_parameters;    // family == Custom

    std::vector<ParameterInfo> parameters() const;
    size_t parameter_count() const { return parameters().size(); }
    /// Hamiltonian terms; parameters are indexed in parameters() order, and
    /// the 1/2 factors of the chain Hamiltonians appear as coefficients.
    std::vector<HamiltonianTerm> terms() const;
    /// Default probe observable for the family.
    Axis default_observable() const;
    /// Number of series the estimation requires (2 for exchange+field).
    size_t required_observables() const;
};

ModelSpec make_model(ModelFamily family, size_t sites);

}  // namespace spinid

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinid/rational.hpp"

namespace spinid {

enum class Axis : uint8_t { X = 1, Y = 2, Z = 3 };

std::string axis_name(Axis a);
Axis axis_from_char(char c);

/// Word over {I,X,Y,Z}; site k is sites[k], site numbering starts at 1 in all
/// printed forms ("Z1 Z2 Y3"). The all-I word is the identity.
struct PauliString {
    std::vector<uint8_t> sites;  // 0=I, 1=X, 2=Y, 3=Z

    explicit PauliString(size_t n = 0) : sites(n, 0) {}
    static PauliString single(size_t n, size_t site, Axis a);
    static PauliString parse(const std::string& text, size_t n);

    size_t num_sites() const { return sites.size(); }
    bool is_identity() const;
    size_t weight() const;

    bool operator==(const PauliString& o) const { return sites == o.sites; }
    bool operator<(const PauliString& o) const { return sites < o.sites; }

    std::string str() const;
};

/// i^phase * word, phase mod 4. Hermitian iff phase is even.
struct SignedPauli {
    uint8_t phase = 0;  // exponent of i, mod 4
    PauliString word;

    bool hermitian() const { return phase % 2 == 0; }
};

/// Exact product of two signed Pauli words.
SignedPauli multiply(const SignedPauli& a, const SignedPauli& b);

/// Do two words commute? (even number of sitewise anticommuting pairs)
bool commutes(const PauliString& a, const PauliString& b);

struct CommutatorTerm {
    int coefficient;  // +2 or -2
    PauliString word;
};

/// i[a, b] as coefficient * word, or nullopt when [a, b] = 0.
std::optional<CommutatorTerm> commutator_i(const PauliString& a, const PauliString& b);

/// One Hamiltonian summand: theta_m * coefficient * word, where theta_m is the
/// symbolic parameter identified by `parameter`.
struct HamiltonianTerm {
    size_t parameter;   // parameter symbol index
    Rational coefficient;
    PauliString word;
};

struct AccessibleSet {
    std::vector<PauliString> members;   // first-appearance order
    std::vector<uint32_t> generation;   // closure generation per member, 0 = input

    size_t dim() const { return members.size(); }
    int index_of(const PauliString& w) const;
};

struct ProbeRejectedError : std::runtime_error {
    explicit ProbeRejectedError(const std::string& what) : std::runtime_error(what) {}
};

/// Commutator closure of g0 under the Hamiltonian terms: breadth-first over
/// generations, first-appearance member order. Every g0 element must fail to
/// commute with H.
AccessibleSet accessible_set(const std::vector<HamiltonianTerm>& terms,
                             const std::vector<PauliString>& g0);

/// Sparse structure tensor V_mkl = NTr(i[S_m, O_k] O_l) with the parameter's
/// coefficients folded in; antisymmetric in (k, l).
struct StructureEntry {
    size_t m, k, l;
    Rational value;
};
std::vector<StructureEntry> structure_constants(const std::vector<HamiltonianTerm>& terms,
                                                const AccessibleSet& g);

/// Probe observables on site 1 ranked by accessible-set dimension (ascending,
/// ties broken X, Y, Z). Candidates commuting with H are omitted.
struct ProbeRanking {
    Axis axis;
    size_t dim;
};
std::vector<ProbeRanking> probe_observable_heuristic(
    const std::vector<HamiltonianTerm>& terms, size_t n_sites,
    const std::vector<Axis>& candidates = {Axis::X, Axis::Y, Axis::Z});

}  // namespace spinid

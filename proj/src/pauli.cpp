#include "spinid/pauli.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spinid {

std::string axis_name(Axis a) {
    switch (a) {
        case Axis::X: return "X";
        case Axis::Y: return "Y";
        case Axis::Z: return "Z";
    }
    return "?";
}

Axis axis_from_char(char c) {
    switch (c) {
        case 'X': case 'x': return Axis::X;
        case 'Y': case 'y': return Axis::Y;
        case 'Z': case 'z': return Axis::Z;
    }
    throw std::invalid_argument(std::string("not a Pauli axis: ") + c);
}

PauliString PauliString::single(size_t n, size_t site, Axis a) {
    if (site < 1 || site > n) throw std::invalid_argument("site out of range");
    PauliString p(n);
    p.sites[site - 1] = static_cast<uint8_t>(a);
    return p;
}

PauliString PauliString::parse(const std::string& text, size_t n) {
    PauliString p(n);
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2) throw std::invalid_argument("bad Pauli token: " + tok);
        Axis a = axis_from_char(tok[0]);
        size_t site = std::stoul(tok.substr(1));
        if (site < 1 || site > n) throw std::invalid_argument("site out of range: " + tok);
        p.sites[site - 1] = static_cast<uint8_t>(a);
    }
    return p;
}

bool PauliString::is_identity() const {
    for (auto s : sites)
        if (s) return false;
    return true;
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (auto s : sites)
        if (s) ++w;
    return w;
}

std::string PauliString::str() const {
    if (is_identity()) return "I";
    std::ostringstream os;
    bool first = true;
    static const char* names = "IXYZ";
    for (size_t i = 0; i < sites.size(); ++i) {
        if (!sites[i]) continue;
        if (!first) os << " ";
        first = false;
        os << names[sites[i]] << (i + 1);
    }
    return os.str();
}

namespace {

/// sigma_a * sigma_b = i^phase * sigma_c for single-site letters (0..3).
/// Returns {phase (mod 4), c}.
inline std::pair<uint8_t, uint8_t> letter_product(uint8_t a, uint8_t b) {
    if (a == 0) return {0, b};
    if (b == 0) return {0, a};
    if (a == b) return {0, 0};
    // XY=iZ, YZ=iX, ZX=iY; reversed order gives -i
    static const uint8_t third[4][4] = {{0, 0, 0, 0},
                                        {0, 0, 3, 2},
                                        {0, 3, 0, 1},
                                        {0, 2, 1, 0}};
    uint8_t c = third[a][b];
    bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    return {static_cast<uint8_t>(forward ? 1 : 3), c};
}

}  // namespace

SignedPauli multiply(const SignedPauli& a, const SignedPauli& b) {
    if (a.word.num_sites() != b.word.num_sites())
        throw std::invalid_argument("pauli product: length mismatch");
    SignedPauli r;
    r.word = PauliString(a.word.num_sites());
    unsigned phase = a.phase + b.phase;
    for (size_t i = 0; i < a.word.sites.size(); ++i) {
        auto [ph, c] = letter_product(a.word.sites[i], b.word.sites[i]);
        phase += ph;
        r.word.sites[i] = c;
    }
    r.phase = static_cast<uint8_t>(phase % 4);
    return r;
}

bool commutes(const PauliString& a, const PauliString& b) {
    if (a.num_sites() != b.num_sites())
        throw std::invalid_argument("commutator: length mismatch");
    size_t anti = 0;
    for (size_t i = 0; i < a.sites.size(); ++i) {
        uint8_t x = a.sites[i], y = b.sites[i];
        if (x && y && x != y) ++anti;
    }
    return anti % 2 == 0;
}

std::optional<CommutatorTerm> commutator_i(const PauliString& a, const PauliString& b) {
    if (commutes(a, b)) return std::nullopt;
    // [a,b] = ab - ba = 2ab when they anticommute; i[a,b] = 2i * (ab)
    SignedPauli prod = multiply({0, a}, {0, b});
    unsigned phase = (prod.phase + 1) % 4;  // the extra factor of i
    // phase is 0 or 2 here (the product of two Hermitian words that
    // anticommute has odd i-power)
    int coeff = phase == 0 ? 2 : -2;
    return CommutatorTerm{coeff, prod.word};
}

int AccessibleSet::index_of(const PauliString& w) const {
    for (size_t i = 0; i < members.size(); ++i)
        if (members[i] == w) return static_cast<int>(i);
    return -1;
}

namespace {

/// Net commutator i[S_m, O] as a word -> rational coefficient map, with the
/// term coefficients folded in (theta_m excluded).
std::map<PauliString, Rational> commutator_with_parameter(
    const std::vector<const HamiltonianTerm*>& words, const PauliString& o) {
    std::map<PauliString, Rational> acc;
    for (const auto* t : words) {
        auto c = commutator_i(t->word, o);
        if (!c) continue;
        Rational v = t->coefficient * Rational(c->coefficient);
        auto it = acc.find(c->word);
        if (it == acc.end())
            acc.emplace(c->word, v);
        else {
            it->second += v;
            if (it->second == 0) acc.erase(it);
        }
    }
    return acc;
}

std::map<size_t, std::vector<const HamiltonianTerm*>> group_by_parameter(
    const std::vector<HamiltonianTerm>& terms) {
    std::map<size_t, std::vector<const HamiltonianTerm*>> by_param;
    for (const auto& t : terms) by_param[t.parameter].push_back(&t);
    return by_param;
}

}  // namespace

AccessibleSet accessible_set(const std::vector<HamiltonianTerm>& terms,
                             const std::vector<PauliString>& g0) {
    if (terms.empty()) throw std::invalid_argument("accessible_set: empty Hamiltonian");
    if (g0.empty()) throw std::invalid_argument("accessible_set: empty observable set");
    size_t n = terms.front().word.num_sites();
    for (const auto& t : terms) {
        if (t.word.num_sites() != n) throw std::invalid_argument("site count mismatch");
        if (t.word.is_identity())
            throw std::invalid_argument("identity word in Hamiltonian");
        if (t.coefficient == 0) throw std::invalid_argument("zero coefficient term");
    }
    auto by_param = group_by_parameter(terms);

    for (const auto& o : g0) {
        bool moves = false;
        for (const auto& [m, words] : by_param)
            if (!commutator_with_parameter(words, o).empty()) { moves = true; break; }
        if (!moves)
            throw ProbeRejectedError("observable " + o.str() + " commutes with the Hamiltonian");
    }

    AccessibleSet g;
    std::map<PauliString, size_t> seen;
    for (const auto& o : g0) {
        if (seen.count(o)) continue;
        seen.emplace(o, g.members.size());
        g.members.push_back(o);
        g.generation.push_back(0);
    }
    size_t frontier_begin = 0;
    uint32_t gen = 0;
    while (frontier_begin < g.members.size()) {
        size_t frontier_end = g.members.size();
        ++gen;
        for (size_t k = frontier_begin; k < frontier_end; ++k) {
            PauliString ok = g.members[k];
            for (const auto& [m, words] : by_param) {
                for (const auto& [w, c] : commutator_with_parameter(words, ok)) {
                    if (seen.count(w)) continue;
                    seen.emplace(w, g.members.size());
                    g.members.push_back(w);
                    g.generation.push_back(gen);
                }
            }
        }
        frontier_begin = frontier_end;
    }
    return g;
}

std::vector<StructureEntry> structure_constants(const std::vector<HamiltonianTerm>& terms,
                                                const AccessibleSet& g) {
    auto by_param = group_by_parameter(terms);
    std::map<PauliString, size_t> index;
    for (size_t i = 0; i < g.members.size(); ++i) index.emplace(g.members[i], i);
    std::vector<StructureEntry> out;
    for (const auto& [m, words] : by_param) {
        for (size_t k = 0; k < g.members.size(); ++k) {
            for (const auto& [w, c] : commutator_with_parameter(words, g.members[k])) {
                auto it = index.find(w);
                if (it == index.end())
                    throw std::logic_error("accessible set is not closed at member " +
                                           g.members[k].str());
                out.push_back({m, k, it->second, c});
            }
        }
    }
    return out;
}

std::vector<ProbeRanking> probe_observable_heuristic(
    const std::vector<HamiltonianTerm>& terms, size_t n_sites,
    const std::vector<Axis>& candidates) {
    std::vector<ProbeRanking> ranked;
    for (Axis a : candidates) {
        PauliString o = PauliString::single(n_sites, 1, a);
        try {
            AccessibleSet g = accessible_set(terms, {o});
            ranked.push_back({a, g.dim()});
        } catch (const ProbeRejectedError&) {
            // commuting candidates are omitted
        }
    }
    if (ranked.empty())
        throw ProbeRejectedError("every candidate observable commutes with the Hamiltonian");
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const ProbeRanking& a, const ProbeRanking& b) { return a.dim < b.dim; });
    return ranked;
}

}  // namespace spinid

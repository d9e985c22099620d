#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinid/rational.hpp"

namespace spinid {

/// Exponent vector over the ring's variables. Index = variable slot in the
/// ring, value = exponent.
struct Monomial {
    std::vector<uint32_t> exp;

    explicit Monomial(size_t arity = 0) : exp(arity, 0) {}

    size_t arity() const { return exp.size(); }
    uint64_t degree() const {
        uint64_t d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    bool is_one() const {
        for (auto e : exp)
            if (e) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return exp == o.exp; }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Lexicographic order with an explicit precedence permutation:
/// precedence[0] is the most significant variable slot.
struct MonomialOrder {
    std::vector<uint32_t> precedence;

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

/// Variable names plus the monomial order. Polynomials hold a shared pointer
/// to their ring; operations require identical rings.
struct PolyRing {
    std::vector<std::string> vars;
    MonomialOrder order;

    size_t arity() const { return vars.size(); }
    int var_index(const std::string& name) const;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars);
RingPtr make_ring(std::vector<std::string> vars, std::vector<uint32_t> precedence);
/// Same variables, new precedence (given as variable slots, most significant
/// first).
RingPtr reorder_ring(const RingPtr& ring, std::vector<uint32_t> precedence);

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Multivariate polynomial with exact rational coefficients. Terms are kept
/// sorted descending in the ring's order; no zero coefficients are stored, so
/// the leading term is terms.front().
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
    MultiPoly(RingPtr ring, const Rational& c);

    static MultiPoly variable(const RingPtr& ring, size_t slot, uint32_t power = 1);
    static MultiPoly constant(const RingPtr& ring, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coeff() const { return leading_term().coeff; }

    uint64_t total_degree() const;
    uint32_t degree_in(size_t slot) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Rational& c) const;
    MultiPoly term_multiplied(const Term& t) const;
    MultiPoly monic() const;

    bool operator==(const MultiPoly& o) const;

    Rational evaluate(const std::vector<Rational>& values) const;
    /// Substitute each variable by a polynomial over a target ring.
    MultiPoly substitute(const RingPtr& target,
                         const std::vector<MultiPoly>& images) const;
    /// Re-sort terms for a ring with the same variables but new precedence.
    MultiPoly with_ring(const RingPtr& target) const;

    /// True when `slot` occurs only with even exponents (everywhere).
    bool even_only_in(size_t slot) const;
    bool contains_var(size_t slot) const;

    MultiPoly derivative(size_t slot) const;

    /// Canonical text form: "c * z1^a1*z2^a2 + ...", descending order.
    std::string str() const;

    /// Construct from raw term list (any order, duplicates merged).
    static MultiPoly from_terms(const RingPtr& ring, std::vector<Term> terms);

  private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void normalize();
    void check_same_ring(const MultiPoly& o) const;
};

}  // namespace spinid

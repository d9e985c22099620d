#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "spinid/polynomial.hpp"
#include "spinid/unipoly.hpp"

namespace spinid {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pair-reduction budget exhausted (the complexity guard).
struct ResourceCapError : AlgebraError {
    uint64_t iterations;
    explicit ResourceCapError(uint64_t it)
        : AlgebraError("buchberger iteration cap reached after " + std::to_string(it) +
                       " pair reductions"),
          iterations(it) {}
};

/// Some elimination ideal has no univariate generator.
struct PositiveDimensionalError : AlgebraError {
    std::string variable;
    explicit PositiveDimensionalError(std::string var)
        : AlgebraError("ideal is not zero-dimensional in variable " + var),
          variable(std::move(var)) {}
};

struct Ideal {
    std::vector<MultiPoly> generators;
};

struct GroebnerBasis {
    std::vector<MultiPoly> elements;
    RingPtr ring;  // carries the monomial order
    bool reduced = false;
};

struct BuchbergerOptions {
    uint64_t iteration_cap = 1000000;
};

/// Remainder and quotients of multivariate division by an ordered divisor
/// list: f = sum q_i d_i + r, no monomial of r divisible by any LM(d_i).
struct DivisionResult {
    std::vector<MultiPoly> quotients;
    MultiPoly remainder;
};
DivisionResult divide_multi(const MultiPoly& f, const std::vector<MultiPoly>& divisors);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

/// Buchberger with normal pair selection (lowest LCM degree first) and the
/// coprime-leading-monomial criterion.
GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts = {});

/// Minimal + inter-reduced + monic; canonical element order (descending LM).
GroebnerBasis reduce_basis(const GroebnerBasis& g);

/// Reduced basis straight from generators.
GroebnerBasis reduced_groebner(const Ideal& ideal, const BuchbergerOptions& opts = {});

/// Monic generator of I ∩ k[keep], via a lex basis with `keep` least
/// significant. nullopt when the intersection is trivial.
std::optional<UniPoly> elimination_generator(const Ideal& ideal, size_t keep,
                                             const BuchbergerOptions& opts = {});

/// I + <squarefree parts of all elimination generators>. Throws
/// PositiveDimensionalError when some generator is missing.
Ideal radical_zero_dim(const Ideal& ideal, const BuchbergerOptions& opts = {});

struct ShapeNoSolution {};
struct ShapeMaximal {
    std::vector<Rational> point;  // per ring slot
};
struct ShapeLemma {
    size_t shape_slot;       // ring slot of the separating variable
    UniPoly shape_poly;      // monic, degree alpha, univariate in shape var
    std::vector<std::optional<UniPoly>> coord;  // slot -> q_j with z_j = -q_j(shape)
};
struct ShapeTriangular {};
struct ShapeOther {};
using ShapeClass =
    std::variant<ShapeNoSolution, ShapeMaximal, ShapeLemma, ShapeTriangular, ShapeOther>;

ShapeClass classify_shape(const GroebnerBasis& g);

/// One real solution of a zero-dimensional system: exact where available,
/// otherwise a certified isolating interval per coordinate.
struct RealCoordinate {
    Rational lo, hi;  // lo == hi means exact
    bool exact() const { return lo == hi; }
    Rational mid() const { return (lo + hi) / 2; }
};
struct RealSolution {
    std::vector<RealCoordinate> coords;  // per ring slot
};

/// Real solutions of a ShapeLemma basis, isolated to the requested width and
/// back-substituted.
std::vector<RealSolution> enumerate_real_solutions(
    const ShapeLemma& shape, const RingPtr& ring,
    const Rational& width = Rational(1, 1000000000000L));

/// Sign of coordinate `slot` of a solution, certified: -1, 0, +1. Refines the
/// underlying interval using the defining polynomials when needed.
int certified_sign(const RealCoordinate& c);

}  // namespace spinid

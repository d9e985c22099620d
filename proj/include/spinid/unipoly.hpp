#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinid/rational.hpp"

namespace spinid {

/// Dense univariate polynomial over the rationals; coeffs[k] multiplies x^k.
/// Leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& leading_coeff() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rational& s) const;
    UniPoly monic() const;

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;

    std::string str(const std::string& var = "z") const;

  private:
    std::vector<Rational> c_;
    void trim();
};

/// Quotient and remainder of the euclidean division a = q*b + r.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd.
UniPoly uni_gcd(UniPoly a, UniPoly b);

/// Monic squarefree part p / gcd(p, p'); same root set, gcd(out, out') = 1.
UniPoly squarefree_part(const UniPoly& p);

/// Sturm chain: p, p', then negated remainders down to a constant.
struct SturmSequence {
    std::vector<UniPoly> polys;

    static SturmSequence build(const UniPoly& p);
    /// Sign variations at x (or at -inf/+inf when unbounded).
    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;
};

struct Bound {
    bool infinite = true;
    Rational value;  // meaningful when finite
    static Bound inf() { return {}; }
    static Bound at(const Rational& v) { return {false, v}; }
};

/// Distinct real roots of squarefree p in the half-open interval (lo, hi].
int sturm_count(const UniPoly& p, const Bound& lo = Bound::inf(),
                const Bound& hi = Bound::inf());

/// Cauchy root bound: all real roots lie in [-B, B].
Rational root_bound(const UniPoly& p);

struct RootInterval {
    Rational lo, hi;  // half-open (lo, hi], one root inside
    Rational mid() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
};

/// Isolating intervals for all distinct real roots of squarefree p, refined
/// to the requested width, ascending. Exact rational roots may be returned
/// as zero-width intervals (lo == hi == root).
std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& width);

/// Shrink an isolating interval of p below `width` by bisection.
RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& width);

/// Interval evaluation: exact bounds of p over [lo, hi] are not needed; this
/// returns a rational enclosure via Horner with interval endpoints.
std::pair<Rational, Rational> interval_eval(const UniPoly& p, const Rational& lo,
                                            const Rational& hi);

}  // namespace spinid

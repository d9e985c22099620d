#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinid/model.hpp"
#include "spinid/pauli.hpp"
#include "spinid/polynomial.hpp"

namespace spinid {

/// Symbolic realization [A(theta), C, x(0)] over the parameter ring.
struct SymbolicSystem {
    size_t n = 0;
    RingPtr theta_ring;                 // variables = model parameter names
    std::vector<std::vector<MultiPoly>> a_sym;  // n x n, degree <= 1 in theta
    std::vector<Rational> x0;
    std::vector<Rational> c_row;
    AccessibleSet basis;
    Axis observable;
};

/// Assemble the symbolic system for a probe observable on site 1. The probe
/// is prepared in the +1 eigenstate of `prepared` with the rest of the chain
/// maximally mixed, the accessible set is the closure of {prepared}, and C
/// selects the `measured` member (which must lie in that closure). With one
/// observable, measured == prepared and x(0) = e1 = C.
SymbolicSystem build_system(const ModelSpec& model, Axis measured, Axis prepared);
inline SymbolicSystem build_system(const ModelSpec& model, Axis observable) {
    return build_system(model, observable, observable);
}

/// T(s) with polynomial coefficients; index k of num/den multiplies s^k.
/// den is det(sI - A), monic of degree n; deg(num) < ... <= n-1.
struct TransferFunctionSym {
    RingPtr theta_ring;
    std::vector<MultiPoly> num;  // ascending in s
    std::vector<MultiPoly> den;  // ascending in s, den.back() == 1
};

/// Faddeev-LeVerrier over the commutative coefficient ring; exact.
TransferFunctionSym transfer_function(const SymbolicSystem& sys);

/// Sum of transfer functions sharing the same system matrix (two-observable
/// measurement): common denominator, numerators added.
TransferFunctionSym sum_transfer(const std::vector<TransferFunctionSym>& parts);

/// Where a measured constant comes from in T(s).
struct CoefficientPosition {
    bool in_num;   // numerator vs denominator
    size_t power;  // power of s
};

/// Record of the Step-1 substitution for one z variable.
struct Substitution {
    size_t theta_index;  // parameter slot in the theta ring
    bool squared;        // z = theta^2 (true) or z = theta (false)
};

/// Polynomial system "coefficient(z) = v_k" extracted from T(s) = T_est(s).
/// Canonical v order: numerator coefficients ascending in s, then denominator
/// ascending; identically-zero and parameter-free coefficients are dropped.
struct PolySystem {
    RingPtr z_ring;                       // z1..zM, lex z1 > z2 > ...
    std::vector<MultiPoly> lhs;           // left-hand sides in z
    std::vector<CoefficientPosition> positions;
    std::vector<Substitution> subs;       // per z variable
    std::vector<std::string> v_names;     // "v1".."vK"

    size_t equations() const { return lhs.size(); }
    size_t unknowns() const { return z_ring->arity(); }
};

PolySystem extract_poly_system(const TransferFunctionSym& t);

/// Exact v values of a system at a rational parameter point (by evaluating
/// the symbolic coefficients).
std::vector<Rational> evaluate_v(const PolySystem& sys, const TransferFunctionSym& t,
                                 const std::vector<Rational>& theta);

/// Map a rational theta point to the z coordinates under the substitution.
std::vector<Rational> theta_to_z(const PolySystem& sys, const std::vector<Rational>& theta);

}  // namespace spinid

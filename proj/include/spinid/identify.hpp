#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinid/groebner.hpp"
#include "spinid/model.hpp"
#include "spinid/statespace.hpp"

namespace spinid {

/// One full run of the algebraic decision core on a polynomial system with
/// concrete rational right-hand sides.
struct SystemSolution {
    enum class Outcome { NoSolution, PositiveDimensional, Finite };
    Outcome outcome = Outcome::Finite;
    std::string shape;                     // "maximal", "shape_lemma", ...
    size_t shape_degree = 0;               // alpha for shape-lemma bases
    int sturm_real_roots = -1;             // distinct real roots of the shape poly
    std::vector<std::string> basis;        // reduced GB of the radical, stringified
    std::vector<RealSolution> real_solutions;
    std::vector<size_t> admissible;        // indices into real_solutions
    std::string positive_dimensional_variable;
};

struct SolveOptions {
    BuchbergerOptions buchberger;
    Rational isolation_width = Rational(1, 1000000000000L);
};

/// Steps 2-5 on sys with lhs_i = v_i: reduced GB, radical, shape, certified
/// real solutions, admissibility (squared z > 0, unsquared z != 0).
SystemSolution solve_poly_system(const PolySystem& sys, const std::vector<Rational>& v,
                                 const SolveOptions& opts = {});

/// Restrict a system to a subset of its equations (for square subsystems).
PolySystem subsystem(const PolySystem& sys, const std::vector<size_t>& keep);

enum class VerdictStatus { Identifiable, NonIdentifiable };
enum class NonIdentifiableCause {
    AccessibleSetIncomplete,
    NoSolution,
    MultipleRealSolutions,
    PositiveDimensional,
};

std::string cause_name(NonIdentifiableCause c);

struct IdentifiabilityVerdict {
    VerdictStatus status = VerdictStatus::NonIdentifiable;
    std::optional<NonIdentifiableCause> cause;
    std::vector<std::string> missing_parameters;   // AccessibleSetIncomplete
    size_t real_solution_count = 0;                // MultipleRealSolutions
    std::vector<std::string> sign_recovered;       // parameters with sign determined
    std::vector<std::string> groebner_basis;       // evidence (radical's reduced GB)
    int sturm_count = -1;
    size_t basis_size = 0;                         // N[G(sqrt(I))]
    size_t model_order = 0;                        // n = dim of accessible set
    std::vector<std::string> observables;
    size_t trials = 0;
};

struct IdentifyOptions {
    size_t trials = 2;
    uint64_t seed = 0;
    long theta_bound = 20;  // |numerator| bound of random integer test points
    SolveOptions solve;
    size_t degenerate_retries = 5;
};

struct DegeneratePointError : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// The identifiability decision procedure at random generic rational points;
/// unanimous verdicts over `trials` draws are required.
IdentifiabilityVerdict test_identifiability(const ModelSpec& model,
                                            const std::vector<Axis>& observables,
                                            const IdentifyOptions& opts = {});

struct ResourceBounds {
    size_t model_order = 0;       // n
    size_t observable_count = 1;
    size_t lambda_min = 0;        // 2n per observable, total
    double omega_max = 0;
    double dt_max = 0;            // pi / omega_max
    double t_tot_max = 0;         // (lambda_min/obs - 1) * dt per observable
    double t_dead = 0;
    double t_id = 0;              // ((lambda-1)/2 dt + t_dead) * lambda
    bool identifiable_configuration = true;
};

struct BoundsOptions {
    std::optional<double> omega_max;   // supplied directly...
    std::optional<double> theta_max;   // ...or derived from an all-theta_max prior
    double t_dead = 0;
};

ResourceBounds resource_bounds(const ModelSpec& model, const std::vector<Axis>& observables,
                               const BoundsOptions& opts);

/// Spectral radius of A(theta) with every parameter at theta_max.
double omega_max_from_prior(const ModelSpec& model, Axis observable, double theta_max);

struct ChainTiming {
    size_t sites = 0;
    double coupling = 0;       // J
    double lattice_constant = 0;
    double length = 0;         // (N-1) a
    double omega_max = 0;      // 2 J cos(pi/(N+1))
    double group_velocity = 0; // 2 J a
    double tau = 0;            // (N-1)/J
    double t_tot = 0;          // (2N-1) pi / omega_max
    double t_tot_ratio = 0;    // t_tot / (pi N / J)
};

ChainTiming chain_timing(size_t sites, double coupling, double lattice_constant = 1.0);

enum class ControlTransform { IsingToExchange, SpinEchoRemoveField };

struct TransformResult {
    ModelSpec model;
    std::string validity;  // e.g. "J_k * dt << 1"
};

/// Effective-Hamiltonian mapping under periodic collective control.
TransformResult apply_control_transform(const ModelSpec& model, ControlTransform t);

}  // namespace spinid

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "spinid/model.hpp"
#include "spinid/qsim.hpp"
#include "spinid/statespace.hpp"

namespace spinid {

struct EraError : std::runtime_error {
    std::string kind;
    EraError(std::string k, const std::string& what)
        : std::runtime_error(what), kind(std::move(k)) {}
};

inline EraError rank_deficient(const std::string& what) { return {"RankDeficient", what}; }
inline EraError branch_violation(const std::string& what) {
    return {"PrincipalBranchViolation", what};
}
inline EraError no_consistent_solution(const std::string& what) {
    return {"NoConsistentSolution", what};
}

/// H0[i][j] = y(i+j); H1[i][j] = y(i+j+1). Consumes exactly r+s points.
struct HankelPair {
    Eigen::MatrixXd h0, h1;
    size_t r = 0, s = 0;
    double dt = 0;
};

HankelPair build_hankel(const TimeSeries& ts, size_t r, size_t s);

/// Best rank-n factors of h (Eckart-Young): h ~= u1 * diag(s1) * v1^T.
struct LowRankFactors {
    Eigen::MatrixXd u1, v1;
    Eigen::VectorXd s1;
    Eigen::VectorXd all_singular_values;
};
LowRankFactors low_rank_truncate(const Eigen::MatrixXd& h, size_t n);

/// The ERA output: continuous-time generator estimate plus the new C, x(0).
struct RealizationEst {
    Eigen::MatrixXd a_cont;
    Eigen::RowVectorXd c_est;
    Eigen::VectorXd x_est;
    Eigen::VectorXd singular_values;
    double dt = 0;
    double branch_margin = 0;  // pi - max |arg lambda(A_d)|
};

RealizationEst era_realize(const HankelPair& pair, size_t n);

/// Numeric rational function in s, denominator monic; spurious coefficients
/// below threshold * (largest magnitude) are zeroed.
struct TransferEst {
    std::vector<double> num;  // ascending, size n
    std::vector<double> den;  // ascending, size n+1, den.back() == 1
};
TransferEst transfer_est(const RealizationEst& real, double spurious_threshold = 1e-6);

struct ParameterEstimate {
    std::string name;
    double estimate = 0;          // magnitude, or signed value when sign known
    bool sign_recovered = false;
    std::optional<double> truth;  // |truth| compared when present
    std::optional<double> epsilon_percent;
};

struct EstimationReport {
    std::vector<ParameterEstimate> parameters;
    std::vector<double> singular_values;
    double residual = 0;          // coefficient-matching residual on dropped equations
    double branch_margin = 0;
    std::vector<double> v_hat;    // measured constants, canonical order
    size_t hankel_size = 0;
};

struct EstimateOptions {
    std::optional<size_t> hankel_size;  // r = s; default: as large as the series allows
    double spurious_threshold = 1e-6;
    unsigned long rational_den_cap = 1000000UL;
    std::optional<std::vector<double>> truth;  // per model parameter
};

/// Full pipeline: Hankel -> SVD realization -> T_est -> v -> exact solve of
/// the model's polynomial system (square subsystem, leftover equations break
/// ties among admissible candidates).
EstimationReport estimate_parameters(const ModelSpec& model,
                                     const std::vector<TimeSeries>& series,
                                     const EstimateOptions& opts = {});

/// epsilon(theta) = | (|est| - |truth|) / |truth| | * 100.
double epsilon_percent(double truth, double estimate_magnitude);

}  // namespace spinid

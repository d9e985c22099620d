#include "spinid/era.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include "spinid/identify.hpp"

namespace spinid {

double epsilon_percent(double truth, double estimate_magnitude) {
    return std::abs((std::abs(estimate_magnitude) - std::abs(truth)) / std::abs(truth)) *
           100.0;
}

HankelPair build_hankel(const TimeSeries& ts, size_t r, size_t s) {
    if (r < 1 || s < 1) throw std::invalid_argument("hankel: dimensions must be positive");
    if (ts.points() < r + s)
        throw std::invalid_argument("hankel: series too short (" +
                                    std::to_string(ts.points()) + " points, need " +
                                    std::to_string(r + s) + ")");
    HankelPair p;
    p.r = r;
    p.s = s;
    p.dt = ts.dt;
    p.h0.resize(static_cast<long>(r), static_cast<long>(s));
    p.h1.resize(static_cast<long>(r), static_cast<long>(s));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < s; ++j) {
            p.h0(static_cast<long>(i), static_cast<long>(j)) = ts.values[i + j];
            p.h1(static_cast<long>(i), static_cast<long>(j)) = ts.values[i + j + 1];
        }
    return p;
}

LowRankFactors low_rank_truncate(const Eigen::MatrixXd& h, size_t n) {
    if (static_cast<size_t>(std::min(h.rows(), h.cols())) < n)
        throw rank_deficient("matrix smaller than the requested rank");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(static_cast<long>(n) - 1) < 1e-13 * sv(0))
        throw rank_deficient("singular value " + std::to_string(n) +
                             " below the rank floor");
    LowRankFactors f;
    f.u1 = svd.matrixU().leftCols(static_cast<long>(n));
    f.v1 = svd.matrixV().leftCols(static_cast<long>(n));
    f.s1 = sv.head(static_cast<long>(n));
    f.all_singular_values = sv;
    return f;
}

RealizationEst era_realize(const HankelPair& pair, size_t n) {
    if (pair.r < n || pair.s < n)
        throw rank_deficient("hankel dimensions below the model order");
    LowRankFactors f = low_rank_truncate(pair.h0, n);
    Eigen::VectorXd si = f.s1.cwiseSqrt();
    Eigen::VectorXd si_inv = si.cwiseInverse();
    // A_d = S^-1/2 U1^T H1 V1 S^-1/2
    Eigen::MatrixXd a_d = si_inv.asDiagonal() * f.u1.transpose() * pair.h1 * f.v1 *
                          si_inv.asDiagonal();

    Eigen::EigenSolver<Eigen::MatrixXd> es(a_d);
    if (es.info() != Eigen::Success) throw EraError("EigFailure", "eigensolver failed");
    double margin = M_PI;
    for (long k = 0; k < a_d.rows(); ++k)
        margin = std::min(margin, M_PI - std::abs(std::arg(es.eigenvalues()(k))));
    if (margin <= 1e-6)
        throw branch_violation("discrete eigenvalue at the log branch cut (margin " +
                               std::to_string(margin) + "); dt violates the sampling bound");
    Eigen::MatrixXcd d = es.eigenvalues().asDiagonal();
    Eigen::VectorXcd logs(a_d.rows());
    for (long k = 0; k < a_d.rows(); ++k) logs(k) = std::log(es.eigenvalues()(k));
    Eigen::MatrixXcd vec = es.eigenvectors();
    Eigen::MatrixXcd a_cont =
        vec * logs.asDiagonal() * vec.inverse() / std::complex<double>(pair.dt, 0);

    RealizationEst r;
    r.a_cont = a_cont.real();
    r.c_est = (f.u1 * si.asDiagonal()).row(0);
    r.x_est = (si.asDiagonal() * f.v1.transpose()).col(0);
    r.singular_values = f.all_singular_values;
    r.dt = pair.dt;
    r.branch_margin = margin;
    return r;
}

namespace {

/// charpoly of A via Faddeev-LeVerrier over doubles with 2-norm prescaling.
std::vector<double> charpoly(const Eigen::MatrixXd& a) {
    long n = a.rows();
    double scale = std::max(a.norm(), 1e-300);
    Eigen::MatrixXd as = a / scale;
    std::vector<double> c(static_cast<size_t>(n) + 1, 0.0);
    c[static_cast<size_t>(n)] = 1.0;
    Eigen::MatrixXd b = Eigen::MatrixXd::Identity(n, n);
    for (long k = 1; k <= n; ++k) {
        Eigen::MatrixXd m = as * b;
        double tr = m.trace();
        c[static_cast<size_t>(n - k)] = -tr / static_cast<double>(k);
        if (k < n) b = m + c[static_cast<size_t>(n - k)] * Eigen::MatrixXd::Identity(n, n);
    }
    // undo the scaling: coeff of s^k picked up scale^(n-k)
    for (long k = 0; k <= n; ++k)
        c[static_cast<size_t>(k)] *= std::pow(scale, static_cast<double>(n - k));
    return c;
}

/// numerator = den(s) * C (sI - A)^-1 x(0), via adjugate accumulation in the
/// same Faddeev-LeVerrier sweep.
std::vector<double> numerator_poly(const Eigen::MatrixXd& a, const Eigen::RowVectorXd& c_row,
                                   const Eigen::VectorXd& x0) {
    long n = a.rows();
    double scale = std::max(a.norm(), 1e-300);
    Eigen::MatrixXd as = a / scale;
    Eigen::VectorXd x0s = x0;
    std::vector<double> num(static_cast<size_t>(n), 0.0);
    Eigen::MatrixXd b = Eigen::MatrixXd::Identity(n, n);
    num[static_cast<size_t>(n - 1)] = c_row * x0s;
    for (long k = 1; k < n; ++k) {
        Eigen::MatrixXd m = as * b;
        double ck = -m.trace() / static_cast<double>(k);
        b = m + ck * Eigen::MatrixXd::Identity(n, n);
        num[static_cast<size_t>(n - 1 - k)] = c_row * b * x0s;
    }
    for (long k = 0; k < n; ++k)
        num[static_cast<size_t>(k)] *= std::pow(scale, static_cast<double>(n - 1 - k));
    return num;
}

}  // namespace

TransferEst transfer_est(const RealizationEst& real, double spurious_threshold) {
    TransferEst t;
    t.den = charpoly(real.a_cont);
    t.num = numerator_poly(real.a_cont, real.c_est, real.x_est);
    auto zero_small = [&](std::vector<double>& v) {
        double mx = 0;
        for (double x : v) mx = std::max(mx, std::abs(x));
        if (mx == 0) return;
        for (double& x : v)
            if (std::abs(x) < spurious_threshold * mx) x = 0;
    };
    zero_small(t.num);
    zero_small(t.den);
    return t;
}

namespace {

struct ModelSolver {
    SymbolicSystem sys_x;                       // primary observable branch
    std::optional<SymbolicSystem> sys_y;        // second branch when required
    TransferFunctionSym t_sym;                  // summed when two observables
    PolySystem full;
    std::vector<size_t> square_subset;          // equation indices, square system
    std::vector<size_t> dropped;                // the rest
};

/// Exact Jacobian rank of the selected equations at a rational point.
size_t jacobian_rank(const PolySystem& sys, const std::vector<size_t>& eqs,
                     const std::vector<Rational>& z) {
    size_t m = sys.z_ring->arity();
    std::vector<std::vector<Rational>> rows;
    for (size_t e : eqs) {
        std::vector<Rational> row(m);
        for (size_t j = 0; j < m; ++j) row[j] = sys.lhs[e].derivative(j).evaluate(z);
        rows.push_back(std::move(row));
    }
    // Gaussian elimination over Q
    size_t rank = 0;
    for (size_t col = 0; col < m && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t r2 = rank + 1; r2 < rows.size(); ++r2) {
            if (rows[r2][col] == 0) continue;
            Rational f = rows[r2][col] / rows[rank][col];
            for (size_t j = col; j < m; ++j) rows[r2][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

ModelSolver make_solver(const ModelSpec& model, size_t observable_count) {
    ModelSolver ms;
    Axis primary = model.default_observable();
    ms.sys_x = build_system(model, primary);
    if (observable_count == 2) {
        Axis second = primary == Axis::X ? Axis::Y : (primary == Axis::Y ? Axis::Z : Axis::X);
        // the standard two-observable pair is X1 and Y1
        if (primary == Axis::X) second = Axis::Y;
        ms.sys_y = build_system(model, second);
        if (ms.sys_y->n != ms.sys_x.n)
            throw std::invalid_argument("two-observable branches disagree in order");
        ms.t_sym = sum_transfer({transfer_function(ms.sys_x), transfer_function(*ms.sys_y)});
    } else {
        ms.t_sym = transfer_function(ms.sys_x);
    }
    ms.full = extract_poly_system(ms.t_sym);

    size_t m = ms.full.unknowns();
    // reference point: distinct small positive rationals keep the rank test generic
    std::vector<Rational> theta_ref;
    for (size_t i = 0; i < ms.sys_x.theta_ring->arity(); ++i)
        theta_ref.push_back(Rational(static_cast<long>(2 * i + 3),
                                     static_cast<long>(i + 1 + ((i * 7) % 5))));
    std::vector<Rational> z_ref = theta_to_z(ms.full, theta_ref);

    // greedy by ascending total degree (ties by canonical index): add an
    // equation when it raises the Jacobian rank at the reference point
    std::vector<size_t> order(ms.full.equations());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return ms.full.lhs[a].total_degree() < ms.full.lhs[b].total_degree();
    });
    std::vector<size_t> chosen;
    for (size_t e : order) {
        if (chosen.size() == m) break;
        std::vector<size_t> trial = chosen;
        trial.push_back(e);
        if (jacobian_rank(ms.full, trial, z_ref) == trial.size()) chosen.push_back(e);
    }
    if (chosen.size() != m)
        throw no_consistent_solution("model system has deficient Jacobian rank");
    std::sort(chosen.begin(), chosen.end());
    ms.square_subset = chosen;
    for (size_t i = 0; i < ms.full.equations(); ++i)
        if (!std::binary_search(chosen.begin(), chosen.end(), i)) ms.dropped.push_back(i);
    return ms;
}

double coordinate_value(const RealCoordinate& c) { return to_double(c.mid()); }

}  // namespace

EstimationReport estimate_parameters(const ModelSpec& model,
                                     const std::vector<TimeSeries>& series,
                                     const EstimateOptions& opts) {
    size_t need = model.required_observables();
    if (series.size() != need)
        throw std::invalid_argument("model requires " + std::to_string(need) +
                                    " series, got " + std::to_string(series.size()));
    ModelSolver ms = make_solver(model, need);
    size_t n = ms.sys_x.n;

    // realize each branch
    std::vector<TransferEst> branches;
    EstimationReport rep;
    for (const auto& ts : series) {
        size_t half = opts.hankel_size ? *opts.hankel_size : ts.points() / 2;
        if (half < n) half = n;
        HankelPair pair = build_hankel(ts, half, half);
        RealizationEst real = era_realize(pair, n);
        branches.push_back(transfer_est(real, opts.spurious_threshold));
        rep.branch_margin = real.branch_margin;
        rep.singular_values.assign(real.singular_values.data(),
                                   real.singular_values.data() + real.singular_values.size());
        rep.hankel_size = half;
    }

    // measured constants at the symbolic system's coefficient positions;
    // numerators add across branches, denominators estimate the same
    // polynomial and are averaged
    std::vector<double> v_hat;
    for (size_t i = 0; i < ms.full.equations(); ++i) {
        const auto& pos = ms.full.positions[i];
        double v = 0;
        if (pos.in_num) {
            for (const auto& b : branches) v += b.num[pos.power];
        } else {
            for (const auto& b : branches) v += b.den[pos.power];
            v /= static_cast<double>(branches.size());
        }
        v_hat.push_back(v);
    }
    rep.v_hat = v_hat;

    // exact solve of the square subsystem
    std::vector<Rational> v_sub;
    for (size_t e : ms.square_subset)
        v_sub.push_back(rationalize(v_hat[e], opts.rational_den_cap));
    PolySystem sq = subsystem(ms.full, ms.square_subset);
    SolveOptions sopts;
    SystemSolution sol = solve_poly_system(sq, v_sub, sopts);
    if (sol.outcome != SystemSolution::Outcome::Finite || sol.admissible.empty())
        throw no_consistent_solution(
            "no admissible solution of the coefficient system (outcome: " + sol.shape + ")");

    // disambiguate multiple admissible candidates by the dropped equations
    size_t best = sol.admissible.front();
    double best_res = 0;
    auto residual_of = [&](const RealSolution& rs) {
        std::vector<Rational> z;
        for (const auto& c : rs.coords) z.push_back(c.mid());
        double acc = 0;
        for (size_t e : ms.dropped) {
            double lhs = to_double(ms.full.lhs[e].evaluate(z));
            double d = lhs - v_hat[e];
            acc += d * d;
        }
        return acc;
    };
    if (sol.admissible.size() > 1 || !ms.dropped.empty()) {
        best_res = residual_of(sol.real_solutions[sol.admissible.front()]);
        for (size_t i = 1; i < sol.admissible.size(); ++i) {
            double r2 = residual_of(sol.real_solutions[sol.admissible[i]]);
            if (r2 < best_res) {
                best_res = r2;
                best = sol.admissible[i];
            }
        }
    }
    if (sol.admissible.size() > 1 && ms.dropped.empty())
        throw no_consistent_solution("ambiguous: " + std::to_string(sol.admissible.size()) +
                                     " admissible solutions and no residual information");
    rep.residual = std::sqrt(best_res);

    // z -> parameter magnitudes (signed where z = theta unsquared)
    const RealSolution& zsol = sol.real_solutions[best];
    auto params = model.parameters();
    std::vector<std::optional<double>> values(params.size());
    std::vector<bool> signed_val(params.size(), false);
    for (size_t zi = 0; zi < ms.full.subs.size(); ++zi) {
        const auto& sub = ms.full.subs[zi];
        double zv = coordinate_value(zsol.coords[zi]);
        if (sub.squared) {
            values[sub.theta_index] = std::sqrt(std::max(zv, 0.0));
        } else {
            values[sub.theta_index] = zv;
            signed_val[sub.theta_index] = true;
        }
    }
    for (size_t p = 0; p < params.size(); ++p) {
        ParameterEstimate pe;
        pe.name = params[p].name;
        if (!values[p])
            throw no_consistent_solution("parameter " + pe.name +
                                         " does not appear in the transfer function");
        pe.estimate = *values[p];
        pe.sign_recovered = signed_val[p];
        if (opts.truth) {
            pe.truth = (*opts.truth)[p];
            pe.epsilon_percent = epsilon_percent(*pe.truth, pe.estimate);
        }
        rep.parameters.push_back(std::move(pe));
    }
    return rep;
}

}  // namespace spinid

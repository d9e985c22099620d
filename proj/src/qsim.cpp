#include "spinid/qsim.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "spinid/rng.hpp"

namespace spinid {

NumericSystem instantiate(const SymbolicSystem& sys, const std::vector<double>& theta,
                          double dt) {
    if (theta.size() != sys.theta_ring->arity())
        throw std::invalid_argument("instantiate: wrong parameter count");
    std::vector<Rational> th;
    th.reserve(theta.size());
    for (double t : theta) th.push_back(rationalize(t, 1ULL << 40));
    NumericSystem ns;
    ns.dt = dt;
    size_t n = sys.n;
    ns.a.resize(static_cast<long>(n), static_cast<long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            ns.a(static_cast<long>(i), static_cast<long>(j)) =
                sys.a_sym[i][j].is_zero() ? 0.0 : to_double(sys.a_sym[i][j].evaluate(th));
    ns.x0.resize(static_cast<long>(n));
    ns.c.resize(static_cast<long>(n));
    for (size_t i = 0; i < n; ++i) {
        ns.x0(static_cast<long>(i)) = to_double(sys.x0[i]);
        ns.c(static_cast<long>(i)) = to_double(sys.c_row[i]);
    }
    return ns;
}

namespace {

void check_skew(const Eigen::MatrixXd& a) {
    double scale = a.cwiseAbs().maxCoeff();
    double dev = (a + a.transpose()).cwiseAbs().maxCoeff();
    if (scale > 0 && dev > 1e-14 * scale)
        throw std::invalid_argument("system matrix is not skew-symmetric");
}

/// Orthogonal propagator exp(A dt) of a skew-symmetric A through the
/// Hermitian eigendecomposition of iA.
Eigen::MatrixXd skew_exp(const Eigen::MatrixXd& a, double dt) {
    check_skew(a);
    long n = a.rows();
    Eigen::MatrixXcd h = std::complex<double>(0, 1) * a.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases(n);
    for (long k = 0; k < n; ++k) {
        double lam = es.eigenvalues()(k);
        phases(k) = std::exp(std::complex<double>(0, -lam * dt));
    }
    Eigen::MatrixXcd e =
        es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return e.real();
}

}  // namespace

TimeSeries coherent_evolve(const NumericSystem& sys, size_t count, const std::string& label) {
    if (count < 1) throw std::invalid_argument("coherent_evolve: need at least one point");
    if (sys.dt <= 0) throw std::invalid_argument("coherent_evolve: dt must be positive");
    Eigen::MatrixXd prop = skew_exp(sys.a, sys.dt);
    TimeSeries ts;
    ts.dt = sys.dt;
    ts.observable = label;
    ts.values.reserve(count);
    Eigen::VectorXd x = sys.x0;
    for (size_t j = 0; j < count; ++j) {
        if (j) x = prop * x;
        double y = sys.c * x;
        if (std::abs(y) > 1.0 + 1e-9)
            throw std::runtime_error("coherent vector left the physical range");
        ts.values.push_back(y);
    }
    return ts;
}

namespace {

Eigen::Matrix2cd pauli_matrix(uint8_t code) {
    using namespace std::complex_literals;
    Eigen::Matrix2cd m;
    switch (code) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -1i, 1i, 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: throw std::logic_error("bad Pauli code");
    }
    return m;
}

Eigen::MatrixXcd word_matrix(const PauliString& w) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
    for (uint8_t code : w.sites) {
        Eigen::Matrix2cd p = pauli_matrix(code);
        Eigen::MatrixXcd r(m.rows() * 2, m.cols() * 2);
        r.topLeftCorner(m.rows(), m.cols()) = p(0, 0) * m;
        r.topRightCorner(m.rows(), m.cols()) = p(0, 1) * m;
        r.bottomLeftCorner(m.rows(), m.cols()) = p(1, 0) * m;
        r.bottomRightCorner(m.rows(), m.cols()) = p(1, 1) * m;
        m = std::move(r);
    }
    return m;
}

Eigen::Vector2cd probe_plus_state(Axis a) {
    using namespace std::complex_literals;
    Eigen::Vector2cd v;
    double s = 1.0 / std::sqrt(2.0);
    switch (a) {
        case Axis::X: v << s, s; break;
        case Axis::Y: v << s, 1i * s; break;
        case Axis::Z: v << 1, 0; break;
    }
    return v;
}

}  // namespace

TimeSeries hilbert_oracle(const ModelSpec& model, const std::vector<double>& theta,
                          Axis measured, Axis prepared, double dt, size_t count) {
    size_t n_sites = model.sites;
    if (n_sites > 12) throw std::invalid_argument("hilbert_oracle: N too large");
    auto terms = model.terms();
    auto params = model.parameters();
    if (theta.size() != params.size())
        throw std::invalid_argument("hilbert_oracle: wrong parameter count");
    long dim = 1L << n_sites;

    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : terms)
        h += theta[t.parameter] * to_double(t.coefficient) * word_matrix(t.word);

    // rho0 = |psi><psi| (x) I / 2^(N-1), probe in the +1 eigenstate
    Eigen::Vector2cd psi = probe_plus_state(prepared);
    Eigen::Matrix2cd probe_rho = psi * psi.adjoint();
    double mix = 1.0 / static_cast<double>(1L << (n_sites - 1));
    Eigen::MatrixXcd rest = Eigen::MatrixXcd::Identity(dim / 2, dim / 2) * mix;
    Eigen::MatrixXcd rho(dim, dim);
    rho.setZero();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            rho.block(a * dim / 2, b * dim / 2, dim / 2, dim / 2) = probe_rho(a, b) * rest;

    Eigen::MatrixXcd obs = word_matrix(PauliString::single(n_sites, 1, measured));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::MatrixXcd& v = es.eigenvectors();
    Eigen::MatrixXcd rho_e = v.adjoint() * rho * v;
    Eigen::MatrixXcd obs_e = v.adjoint() * obs * v;

    TimeSeries ts;
    ts.dt = dt;
    ts.observable = axis_name(measured) + "1";
    ts.values.reserve(count);
    for (size_t j = 0; j < count; ++j) {
        double t = dt * static_cast<double>(j);
        // y(t) = sum_ab e^{-i(Ea-Eb)t} rho_ab O_ba
        std::complex<double> acc = 0;
        for (long a = 0; a < dim; ++a)
            for (long b = 0; b < dim; ++b) {
                double w = es.eigenvalues()(a) - es.eigenvalues()(b);
                acc += std::exp(std::complex<double>(0, -w * t)) * rho_e(a, b) * obs_e(b, a);
            }
        ts.values.push_back(acc.real());
    }
    return ts;
}

TimeSeries add_noise(const TimeSeries& ts, double sigma, uint64_t shots, uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("add_noise: shots must be >= 1");
    if (sigma < 0) throw std::invalid_argument("add_noise: sigma must be >= 0");
    TimeSeries out = ts;
    out.noise = NoiseMeta{sigma, shots, seed, rng::kGeneratorName};
    if (sigma == 0) return out;
    double std_err = sigma / std::sqrt(static_cast<double>(shots));
    uint64_t stream = rng::derive(seed, 0x7153u);
    for (size_t k = 0; k < out.values.size(); ++k)
        out.values[k] += std_err * rng::gaussian(stream, k);
    return out;
}

void write_csv(std::ostream& os, const TimeSeries& ts) {
    char buf[64];
    auto fmt = [&](double x) {
        snprintf(buf, sizeof buf, "%.17g", x);
        return std::string(buf);
    };
    os << "# dt = " << fmt(ts.dt) << "\n";
    os << "# observable = " << ts.observable << "\n";
    if (ts.noise) {
        os << "# sigma = " << fmt(ts.noise->sigma) << "\n";
        os << "# shots = " << ts.noise->shots << "\n";
        os << "# seed = " << ts.noise->seed << "\n";
        os << "# rng = " << ts.noise->generator << "\n";
    }
    os << "j,t,y\n";
    for (size_t j = 0; j < ts.values.size(); ++j)
        os << j << "," << fmt(ts.dt * static_cast<double>(j)) << "," << fmt(ts.values[j])
           << "\n";
}

TimeSeries read_csv(std::istream& is) {
    TimeSeries ts;
    NoiseMeta meta;
    bool has_noise = false;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string key, eq, value;
            ls >> key >> eq >> value;
            if (key == "dt") ts.dt = std::stod(value);
            else if (key == "observable") ts.observable = value;
            else if (key == "sigma") { meta.sigma = std::stod(value); has_noise = true; }
            else if (key == "shots") { meta.shots = std::stoull(value); has_noise = true; }
            else if (key == "seed") { meta.seed = std::stoull(value); has_noise = true; }
            else if (key == "rng") { meta.generator = value; has_noise = true; }
            continue;
        }
        if (line.rfind("j,", 0) == 0) continue;  // header
        std::istringstream ls(line);
        std::string js, tstr, ys;
        if (!std::getline(ls, js, ',') || !std::getline(ls, tstr, ',') ||
            !std::getline(ls, ys, ','))
            throw std::runtime_error("malformed series row: " + line);
        ts.values.push_back(std::stod(ys));
    }
    if (has_noise) ts.noise = meta;
    if (ts.dt <= 0) throw std::runtime_error("series file missing dt");
    return ts;
}

void write_csv_file(const std::string& path, const TimeSeries& ts) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    write_csv(f, ts);
}

TimeSeries read_csv_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    return read_csv(f);
}

}  // namespace spinid

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spinid/model.hpp"
#include "spinid/statespace.hpp"

namespace spinid {

/// The symbolic system at a concrete parameter point.
struct NumericSystem {
    Eigen::MatrixXd a;      // skew-symmetric
    Eigen::VectorXd x0;
    Eigen::RowVectorXd c;
    double dt = 0;
};

NumericSystem instantiate(const SymbolicSystem& sys, const std::vector<double>& theta,
                          double dt);

struct NoiseMeta {
    double sigma = 0;
    uint64_t shots = 1;
    uint64_t seed = 0;
    std::string generator;  // rng::kGeneratorName
};

struct TimeSeries {
    double dt = 0;
    std::vector<double> values;
    std::string observable;   // e.g. "X1"
    std::optional<NoiseMeta> noise;

    size_t points() const { return values.size(); }
};

/// y(j) = C exp(A j dt) x0 via one spectral factorization of the
/// skew-symmetric generator. |y| stays within 1 + 1e-9 for physical systems.
TimeSeries coherent_evolve(const NumericSystem& sys, size_t count,
                           const std::string& label = "");

/// Full Hilbert-space cross-check: dense 2^N evolution of
/// rho0 = |prepared eigenstate><.| (x) (I/2)^(N-1) under H(theta), measuring
/// the `measured` probe axis. N <= 12.
TimeSeries hilbert_oracle(const ModelSpec& model, const std::vector<double>& theta,
                          Axis measured, Axis prepared, double dt, size_t count);
inline TimeSeries hilbert_oracle(const ModelSpec& model, const std::vector<double>& theta,
                                 Axis observable, double dt, size_t count) {
    return hilbert_oracle(model, theta, observable, observable, dt, count);
}

/// Independent Gaussian noise N(y(k), sigma/sqrt(shots)) per point; seeded
/// and reproducible, input left untouched.
TimeSeries add_noise(const TimeSeries& ts, double sigma, uint64_t shots, uint64_t seed);

/// CSV round-trip: '#' metadata lines (dt, observable, noise), then
/// "j,t,y" rows with full double precision.
void write_csv(std::ostream& os, const TimeSeries& ts);
TimeSeries read_csv(std::istream& is);
void write_csv_file(const std::string& path, const TimeSeries& ts);
TimeSeries read_csv_file(const std::string& path);

}  // namespace spinid

// params.hpp — Physical parameters and uniform time grids for the dissipative-cavity model

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cavityqfi {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix3c = Eigen::Matrix3cd;

/// Model parameters. All rates are expressed in units of gamma0 and all times
/// as the dimensionless product gamma0*t; gamma0 itself is kept as an explicit
/// field (1 in practice) so the closed forms transcribe literally.
///
/// lambda is the spectral width of the cavity-reservoir coupling (reservoir
/// correlation time tau_R = 1/lambda), omega_big the atom-cavity coupling,
/// omega0 the atomic Bohr frequency. The spectrum is peaked at
/// omega1 = omega0 - omega_big.
struct PhysParams {
    double gamma0{1.0};
    double lambda{5.0};
    double omega_big{0.05};
    double omega0{50.0};

    double omega1() const { return omega0 - omega_big; }
    double tau_reservoir() const { return 1.0 / lambda; }
    double tau_system() const { return 1.0 / gamma0; }

    // lambda > 2*gamma0: relaxation slower than the reservoir correlation decay.
    bool is_markovian() const { return lambda > 2.0 * gamma0; }
    bool is_strong_coupling() const { return omega_big > 2.0 * gamma0; }

    void validate() const {
        if (!(gamma0 > 0.0) || !std::isfinite(gamma0))
            throw std::invalid_argument("PhysParams: gamma0 must be positive");
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw std::invalid_argument("PhysParams: lambda must be positive");
        if (!(omega_big >= 0.0) || !std::isfinite(omega_big))
            throw std::invalid_argument("PhysParams: omega_big must be non-negative");
        if (!(omega0 > 0.0) || !std::isfinite(omega0))
            throw std::invalid_argument("PhysParams: omega0 must be positive");
    }
};

inline PhysParams make_params(double lambda, double omega_big, double omega0 = 50.0) {
    PhysParams p;
    p.lambda = lambda;
    p.omega_big = omega_big;
    p.omega0 = omega0;
    p.validate();
    return p;
}

/// Uniform grid over [0, t_max] with `samples` points. Non-uniform grids are
/// not supported; construction from (t_max, samples) makes them unrepresentable.
struct TimeGrid {
    double t_max{10.0};
    std::size_t samples{2001};

    double step() const { return t_max / static_cast<double>(samples - 1); }

    // i * t_max / (n-1) rather than accumulated steps, so time(samples-1) == t_max exactly.
    double time(std::size_t i) const {
        return t_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    }

    void validate() const {
        if (samples < 2)
            throw std::invalid_argument("TimeGrid: at least 2 samples required");
        if (!(t_max > 0.0) || !std::isfinite(t_max))
            throw std::invalid_argument("TimeGrid: t_max must be positive (grid must be increasing)");
    }
};

namespace detail {

inline void require_time(double t, const char* where) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument(std::string(where) + ": time must be finite and non-negative");
}

} // namespace detail

} // namespace cavityqfi

// dynamics.hpp — Initial states in the one-excitation dressed manifold, analytic
// propagation of the 3x3 atom-cavity matrix, and reduction to the 2x2 qubit state

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cavityqfi/kernels.hpp"
#include "cavityqfi/params.hpp"

namespace cavityqfi::dynamics {

enum class Family { dressed, standard, raw };

/// Initial-state specification. Basis order is fixed once and for all as
/// (|E1+>, |E1->, |E0>) with |E1±> = (|1g> ± |0e>)/sqrt(2) and |E0> = |0g>.
///
/// dressed: amplitudes (e^{i phi} sin(theta/2)/sqrt2, -e^{i phi} sin(theta/2)/sqrt2, cos(theta/2)),
///          i.e. the atom state cos(theta/2)|g> + e^{i phi} sin(theta/2)|e> times cavity vacuum.
/// standard: the atom state cos(theta/2)|e> + e^{i phi} sin(theta/2)|g> times cavity vacuum,
///          expanded into dressed amplitudes (cos(theta/2)/sqrt2, -cos(theta/2)/sqrt2, e^{i phi} sin(theta/2)).
/// raw: amplitudes given directly (squared magnitudes must sum to 1 within 1e-12).
///
/// theta is meant in [0, pi), phi in [0, 2 pi); both enter only through
/// trigonometric functions and are accepted as any finite value.
struct InitialStateSpec {
    Family kind{Family::dressed};
    double theta{std::numbers::pi / 2};
    double phi{0.0};
    std::array<Complex, 3> amplitudes{};

    static InitialStateSpec dressed_family(double theta, double phi) {
        check_angles(theta, phi);
        return InitialStateSpec{Family::dressed, theta, phi, {}};
    }

    static InitialStateSpec standard_family(double theta, double phi) {
        check_angles(theta, phi);
        return InitialStateSpec{Family::standard, theta, phi, {}};
    }

    static InitialStateSpec raw_amplitudes(const std::array<Complex, 3>& amps) {
        double norm2 = 0.0;
        for (const auto& a : amps)
            norm2 += std::norm(a);
        if (std::abs(norm2 - 1.0) > 1e-12)
            throw std::invalid_argument("InitialStateSpec: raw amplitudes are not normalized");
        InitialStateSpec s;
        s.kind = Family::raw;
        s.amplitudes = amps;
        return s;
    }

    /// Raw-amplitude state cos(theta/2)|1g> + e^{i phi} sin(theta/2)|0g>, i.e. the
    /// excitation carried by the cavity mode instead of the atom. Evolving it through
    /// the pipeline reproduces the paper_faithful standard-family closed forms exactly.
    static InitialStateSpec cavity_excitation(double theta, double phi) {
        check_angles(theta, phi);
        const double s = std::sin(theta / 2.0), c = std::cos(theta / 2.0);
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        return raw_amplitudes({Complex{c * inv_sqrt2, 0.0}, Complex{c * inv_sqrt2, 0.0},
                               std::polar(s, phi)});
    }

    std::array<Complex, 3> dressed_amplitudes() const {
        const double s = std::sin(theta / 2.0), c = std::cos(theta / 2.0);
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        switch (kind) {
        case Family::dressed:
            return {std::polar(s * inv_sqrt2, phi), -std::polar(s * inv_sqrt2, phi),
                    Complex{c, 0.0}};
        case Family::standard:
            return {Complex{c * inv_sqrt2, 0.0}, Complex{-c * inv_sqrt2, 0.0}, std::polar(s, phi)};
        case Family::raw:
            return amplitudes;
        }
        throw std::logic_error("InitialStateSpec: unknown family");
    }

  private:
    static void check_angles(double theta, double phi) {
        if (!std::isfinite(theta) || !std::isfinite(phi))
            throw std::invalid_argument("InitialStateSpec: angles must be finite");
    }
};

/// Atom-cavity density matrix R(t) in the dressed basis (|E1+>, |E1->, |E0>).
struct DressedState {
    double t{0.0};
    Matrix3c r{Matrix3c::Identity()};

    double trace_error() const { return std::abs(r.trace() - Complex{1.0, 0.0}); }
    double hermiticity_error() const { return (r - r.adjoint()).cwiseAbs().maxCoeff(); }

    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Matrix3c> es(r, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }
};

/// Reduced atomic density matrix. Row/column 0 holds the combination containing
/// 2 R33 (partial-trace slot fed by the ground manifold), row/column 1 the
/// combination (R11 - R12 - R21 + R22)/2.
struct QubitState {
    double t{0.0};
    Matrix2c rho{Matrix2c::Identity()};

    double trace_error() const { return std::abs(rho.trace() - Complex{1.0, 0.0}); }
    double hermiticity_error() const { return (rho - rho.adjoint()).cwiseAbs().maxCoeff(); }
    double purity() const { return (rho * rho).trace().real(); }

    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Matrix2c> es(rho, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }
};

/// R(0) = |psi><psi| for the specified amplitudes; a rank-1 projector.
inline DressedState initial_dressed_state(const InitialStateSpec& spec) {
    const auto a = spec.dressed_amplitudes();
    DressedState st;
    st.t = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            st.r(i, j) = a[static_cast<std::size_t>(i)] * std::conj(a[static_cast<std::size_t>(j)]);
    return st;
}

namespace detail {

inline void require_initial_state(const DressedState& r0) {
    if (r0.t != 0.0)
        throw std::invalid_argument("evolve_dressed: initial state must be at t = 0");
    if (r0.hermiticity_error() > 1e-12 || r0.trace_error() > 1e-12)
        throw std::invalid_argument("evolve_dressed: initial state is not a valid density matrix");
}

} // namespace detail

/// Applies the analytic propagator elementwise:
///   R11(t) = A11 R11(0), R12(t) = A12 R12(0), R13(t) = A13 R13(0),
///   R22(t) = A22 R22(0), R23(t) = A23 R23(0),
///   R33(t) = A33_11 R11(0) + A33_22 R22(0) + R33(0),
/// lower triangle by conjugation. Trace is preserved exactly.
inline DressedState evolve_dressed(const DressedState& r0, double t, const PhysParams& p) {
    cavityqfi::detail::require_time(t, "evolve_dressed");
    detail::require_initial_state(r0);
    const kernels::PropagatorCoeffs a = kernels::propagator_coeffs(t, p);

    DressedState st;
    st.t = t;
    st.r(0, 0) = a.a11 * r0.r(0, 0);
    st.r(1, 1) = a.a22 * r0.r(1, 1);
    st.r(0, 1) = a.a12 * r0.r(0, 1);
    st.r(0, 2) = a.a13 * r0.r(0, 2);
    st.r(1, 2) = a.a23 * r0.r(1, 2);
    st.r(2, 2) = a.a33_11 * r0.r(0, 0) + a.a33_22 * r0.r(1, 1) + r0.r(2, 2);
    st.r(1, 0) = std::conj(st.r(0, 1));
    st.r(2, 0) = std::conj(st.r(0, 2));
    st.r(2, 1) = std::conj(st.r(1, 2));
    return st;
}

/// Partial trace over the cavity:
///   rho00 = (R11 + R12 + R21 + R22 + 2 R33)/2
///   rho01 = (R13 - R23)/sqrt2,  rho10 = (R31 - R32)/sqrt2
///   rho11 = (R11 - R12 - R21 + R22)/2.
/// trace(rho) = trace(R) identically.
inline QubitState reduce_to_qubit(const DressedState& st) {
    const Matrix3c& r = st.r;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

    QubitState q;
    q.t = st.t;
    q.rho(0, 0) = 0.5 * (r(0, 0) + r(0, 1) + r(1, 0) + r(1, 1) + 2.0 * r(2, 2));
    q.rho(0, 1) = inv_sqrt2 * (r(0, 2) - r(1, 2));
    q.rho(1, 0) = inv_sqrt2 * (r(2, 0) - r(2, 1));
    q.rho(1, 1) = 0.5 * (r(0, 0) - r(0, 1) - r(1, 0) + r(1, 1));
    return q;
}

/// Closed-form qubit trajectory on a uniform grid. Each point is evolved
/// directly from t = 0, so chunked evaluation gives identical values.
inline std::vector<QubitState> qubit_trajectory(const InitialStateSpec& spec, const PhysParams& p,
                                                const TimeGrid& grid) {
    grid.validate();
    p.validate();
    const DressedState r0 = initial_dressed_state(spec);
    std::vector<QubitState> out;
    out.reserve(grid.samples);
    for (std::size_t i = 0; i < grid.samples; ++i)
        out.push_back(reduce_to_qubit(evolve_dressed(r0, grid.time(i), p)));
    return out;
}

} // namespace cavityqfi::dynamics

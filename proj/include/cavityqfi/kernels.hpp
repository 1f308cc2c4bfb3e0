// kernels.hpp — Lorentzian spectral density, dressed-state decay rates, their
// time integrals I±(t), and the analytic propagator coefficients A(t)

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "cavityqfi/params.hpp"

namespace cavityqfi::kernels {

/// J(omega) = (1/2pi) * gamma0 lambda^2 / ((omega1 - omega)^2 + lambda^2),
/// peaked at omega1 = omega0 - omega_big with half-width lambda.
inline double spectral_density(double omega, const PhysParams& p) {
    const double d = p.omega1() - omega;
    return p.gamma0 * p.lambda * p.lambda /
           (2.0 * std::numbers::pi * (d * d + p.lambda * p.lambda));
}

/// Decay rate of |E1->: gamma(omega0 - Omega, t) = gamma0 (1 - e^{-lambda t}).
/// Non-negative and monotone, with limit gamma0 as t -> inf.
inline double gamma_minus(double t, const PhysParams& p) {
    detail::require_time(t, "gamma_minus");
    return p.gamma0 * (1.0 - std::exp(-p.lambda * t));
}

/// Decay rate of |E1+>:
///   gamma(omega0 + Omega, t) = gamma0 lambda^2 / (4 Omega^2 + lambda^2)
///       * { 1 + [ (2 Omega / lambda) sin(2 Omega t) - cos(2 Omega t) ] e^{-lambda t} }.
/// May be transiently negative outside the Markovian regime; never clamped,
/// since I+ is its exact antiderivative.
inline double gamma_plus(double t, const PhysParams& p) {
    detail::require_time(t, "gamma_plus");
    const double om = p.omega_big, lam = p.lambda;
    const double denom = 4.0 * om * om + lam * lam;
    const double osc = (2.0 * om / lam) * std::sin(2.0 * om * t) - std::cos(2.0 * om * t);
    return p.gamma0 * lam * lam / denom * (1.0 + osc * std::exp(-lam * t));
}

struct KernelIntegrals {
    double t{0.0};
    double i_minus{0.0}; ///< int_0^t gamma_minus
    double i_plus{0.0};  ///< int_0^t gamma_plus
};

/// Closed forms of the two integrals:
///   I- = gamma0 t + (gamma0/lambda)(e^{-lambda t} - 1)
///   I+ = gamma0 lambda^2/(4 Omega^2 + lambda^2) [ t
///          - 4 Omega e^{-lambda t} sin(2 Omega t) / (4 Omega^2 + lambda^2)
///          + (lambda^2 - 4 Omega^2)(e^{-lambda t} cos(2 Omega t) - 1)
///            / (lambda (4 Omega^2 + lambda^2)) ].
inline KernelIntegrals kernel_integrals(double t, const PhysParams& p) {
    detail::require_time(t, "kernel_integrals");
    const double om = p.omega_big, lam = p.lambda, g0 = p.gamma0;
    const double denom = 4.0 * om * om + lam * lam;
    const double decay = std::exp(-lam * t);

    KernelIntegrals k;
    k.t = t;
    k.i_minus = g0 * t + (g0 / lam) * (decay - 1.0);
    k.i_plus = g0 * lam * lam / denom *
               (t - 4.0 * om * decay * std::sin(2.0 * om * t) / denom +
                (lam * lam - 4.0 * om * om) * (decay * std::cos(2.0 * om * t) - 1.0) /
                    (lam * denom));
    return k;
}

enum class Rate { minus, plus };

/// Composite-Simpson integral of the selected decay rate over [0, t].
/// Independent numeric route to I±; converges at O(panels^-4).
inline double quadrature_oracle(double t, Rate which, const PhysParams& p, std::size_t panels) {
    detail::require_time(t, "quadrature_oracle");
    if (panels < 2 || panels % 2 != 0)
        throw std::invalid_argument("quadrature_oracle: panel count must be even and >= 2");
    if (t == 0.0)
        return 0.0;

    auto f = [&](double x) {
        return which == Rate::minus ? gamma_minus(x, p) : gamma_plus(x, p);
    };
    const double h = t / static_cast<double>(panels);
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i < panels; i += 2)
        odd += f(static_cast<double>(i) * h);
    for (std::size_t i = 2; i < panels; i += 2)
        even += f(static_cast<double>(i) * h);
    return h / 3.0 * (f(0.0) + f(t) + 4.0 * odd + 2.0 * even);
}

/// The seven independent coefficients of the analytic propagator at time t:
///   A11 = e^{-I+/2}                       A22 = e^{-I-/2}
///   A12 = e^{-2i Omega t} e^{-(I+ + I-)/4}
///   A13 = e^{-i(omega0 + Omega) t} e^{-I+/4}
///   A23 = e^{-i(omega0 - Omega) t} e^{-I-/4}
///   A33_11 = 1 - A11, A33_22 = 1 - A22 (trace preservation, bit-exact).
/// Conjugate coefficients are supplied by accessors.
struct PropagatorCoeffs {
    double t{0.0};
    double a11{1.0};
    double a22{1.0};
    Complex a12{1.0, 0.0};
    Complex a13{1.0, 0.0};
    Complex a23{1.0, 0.0};
    double a33_11{0.0};
    double a33_22{0.0};

    Complex a21() const { return std::conj(a12); }
    Complex a31() const { return std::conj(a13); }
    Complex a32() const { return std::conj(a23); }
};

inline PropagatorCoeffs propagator_coeffs(double t, const PhysParams& p) {
    const KernelIntegrals k = kernel_integrals(t, p);
    const double om = p.omega_big;

    PropagatorCoeffs a;
    a.t = t;
    a.a11 = std::exp(-0.5 * k.i_plus);
    a.a22 = std::exp(-0.5 * k.i_minus);
    a.a12 = std::polar(std::exp(-0.25 * (k.i_plus + k.i_minus)), -2.0 * om * t);
    a.a13 = std::polar(std::exp(-0.25 * k.i_plus), -(p.omega0 + om) * t);
    a.a23 = std::polar(std::exp(-0.25 * k.i_minus), -(p.omega0 - om) * t);
    a.a33_11 = 1.0 - a.a11;
    a.a33_22 = 1.0 - a.a22;
    return a;
}

} // namespace cavityqfi::kernels

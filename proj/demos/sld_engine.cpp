// sld_engine.cpp — Feed an evolving qubit state through the generic SLD engine
// and compare against the closed form

#include <cstdio>
#include <numbers>

#include "cavityqfi/dynamics.hpp"
#include "cavityqfi/qfi.hpp"

int main() {
    using namespace cavityqfi;
    const PhysParams p = make_params(0.05, 3.0); // non-Markovian, strong coupling
    const auto spec = dynamics::InitialStateSpec::dressed_family(std::numbers::pi / 2, 0.3);

    std::printf("# gamma0_t  F_sld       F_closed    |diff|\n");
    for (int i = 0; i <= 40; ++i) {
        const double t = 20.0 * i / 40.0;
        const Matrix2c rho = qfi::family_rho(spec, t, p, qfi::Mode::rederived);
        const Matrix2c drho = qfi::dphi_rho(spec, t, p, qfi::Mode::rederived);
        const double f_sld = qfi::sld_qfi(rho, drho);
        const double f_closed = qfi::qfi_closed_dressed(t, spec.theta, p);
        std::printf("%8.3f  %.8f  %.8f  %.2e\n", t, f_sld, f_closed,
                    std::abs(f_sld - f_closed));
    }
    return 0;
}

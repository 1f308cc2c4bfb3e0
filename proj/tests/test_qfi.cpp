// test_qfi.cpp — SLD engine, closed forms, phi-derivative, QFI flow, Cramer-Rao bound

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "cavityqfi/qfi.hpp"
#include "test_support.hpp"

using namespace cavityqfi;
using dynamics::Family;
using dynamics::InitialStateSpec;
using qfi::Mode;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double half_pi = std::numbers::pi / 2;
} // namespace

TEST_CASE("sld engine: zero derivative, pure states, brute-force oracle") {
    Matrix2c rho;
    rho << 0.7, Complex{0.1, 0.2}, Complex{0.1, -0.2}, 0.3;
    CHECK(qfi::sld_qfi(rho, Matrix2c::Zero()) == 0.0);

    // pure state (cos(t/2), e^{i phi} sin(t/2)): engine vs 4(<dpsi|dpsi> - |<psi|dpsi>|^2)
    auto rng = testsup::make_rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const double theta = testsup::uniform(rng, 0.0, std::numbers::pi);
        const double phi = testsup::uniform(rng, 0.0, 2.0 * std::numbers::pi);
        Eigen::Vector2cd psi, dpsi;
        psi << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
        dpsi << 0.0, Complex{0.0, 1.0} * std::polar(std::sin(theta / 2), phi);

        const Matrix2c rho_p = psi * psi.adjoint();
        const Matrix2c drho = dpsi * psi.adjoint() + psi * dpsi.adjoint();
        const double f_engine = qfi::sld_qfi(rho_p, drho);
        const double f_brute = testsup::pure_state_qfi(psi, dpsi);
        CHECK_THAT(f_engine, WithinAbs(f_brute, 1e-12));
        CHECK_THAT(f_engine, WithinAbs(std::sin(theta) * std::sin(theta), 1e-12));
    }
}

TEST_CASE("sld engine: frozen value and closed-form agreement") {
    const PhysParams p = make_params(5.0, 3.0);
    const auto spec = InitialStateSpec::dressed_family(half_pi, 0.0);
    const Matrix2c rho = qfi::family_rho(spec, 1.0, p, Mode::rederived);
    const Matrix2c drho = qfi::dphi_rho(spec, 1.0, p, Mode::rederived);

    const double f = qfi::sld_qfi(rho, drho);
    CHECK_THAT(f, WithinAbs(testsup::frozen::f_dressed_t1_5_3, 1e-12));
    CHECK_THAT(f, WithinAbs(qfi::qfi_closed_dressed(1.0, half_pi, p), 1e-9));
}

TEST_CASE("sld engine: basis independence and input validation") {
    const PhysParams p = make_params(0.05, 3.0);
    const auto spec = InitialStateSpec::dressed_family(1.2, 0.5);
    const Matrix2c rho = qfi::family_rho(spec, 2.0, p, Mode::rederived);
    const Matrix2c drho = qfi::dphi_rho(spec, 2.0, p, Mode::rederived);
    const double f = qfi::sld_qfi(rho, drho);

    auto rng = testsup::make_rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix2c u = testsup::random_unitary(rng);
        const double f_rotated = qfi::sld_qfi(u * rho * u.adjoint(), u * drho * u.adjoint());
        CHECK_THAT(f_rotated, WithinAbs(f, 1e-12));
    }

    Matrix2c bad = rho;
    bad(0, 1) += 1e-6; // breaks hermiticity
    CHECK_THROWS_AS(qfi::sld_qfi(bad, drho), std::invalid_argument);
    CHECK_THROWS_AS(qfi::sld_qfi(rho, bad - bad.adjoint().eval() + drho + Matrix2c::Identity() * Complex{0, 1e-6}),
                    std::invalid_argument);
    CHECK_THROWS_AS(qfi::sld_qfi(2.0 * rho, drho), std::invalid_argument);
}

TEST_CASE("dphi_rho: structure and finite-difference oracle") {
    const PhysParams p = make_params(5.0, 3.0);

    const auto d0 = qfi::dphi_rho(InitialStateSpec::dressed_family(half_pi, 0.0), 0.0, p,
                                  Mode::rederived);
    CHECK_THAT(std::abs(d0(0, 1)), WithinAbs(0.5, 1e-14));
    CHECK(std::abs(d0(0, 0)) == 0.0);
    CHECK(std::abs(d0(1, 1)) == 0.0);

    CHECK(qfi::dphi_rho(InitialStateSpec::dressed_family(0.0, 0.0), 1.0, p, Mode::rederived)
              .cwiseAbs()
              .maxCoeff() == 0.0);

    CHECK_THROWS_AS(qfi::dphi_rho(InitialStateSpec::cavity_excitation(1.0, 0.0), 1.0, p,
                                  Mode::rederived),
                    std::invalid_argument);

    const double h = 1e-6;
    auto rng = testsup::make_rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        const double theta = testsup::uniform(rng, 0.1, 3.0);
        const double phi = testsup::uniform(rng, 0.0, 6.0);
        const double t = testsup::uniform(rng, 0.0, 10.0);
        const auto family = trial % 2 ? Family::dressed : Family::standard;
        const auto mode = (trial / 2) % 2 ? Mode::rederived : Mode::paper_faithful;
        auto make = [&](double ph) {
            return family == Family::dressed ? InitialStateSpec::dressed_family(theta, ph)
                                             : InitialStateSpec::standard_family(theta, ph);
        };
        const Matrix2c analytic = qfi::dphi_rho(make(phi), t, p, mode);
        const Matrix2c fd =
            (qfi::family_rho(make(phi + h), t, p, mode) - qfi::family_rho(make(phi - h), t, p, mode)) /
            (2.0 * h);
        CHECK((analytic - fd).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((analytic - analytic.adjoint().eval()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("closed forms: t = 0 exactness") {
    const PhysParams p = make_params(5.0, 3.0);
    for (double theta : {0.0, std::numbers::pi / 4, half_pi, 2.5}) {
        const double st2 = std::sin(theta) * std::sin(theta);
        CHECK_THAT(qfi::qfi_closed_dressed(0.0, theta, p), WithinAbs(st2, 1e-12));
        CHECK_THAT(qfi::qfi_closed_standard(0.0, theta, p), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("closed forms: frozen strong-coupling values") {
    const PhysParams p = make_params(5.0, 3.0);
    CHECK_THAT(qfi::qfi_closed_dressed(1.0, half_pi, p),
               WithinAbs(testsup::frozen::f_dressed_t1_5_3, 1e-14));
    CHECK_THAT(qfi::qfi_closed_standard(1.0, half_pi, p),
               WithinAbs(testsup::frozen::f_standard_t1_5_3, 1e-14));
}

TEST_CASE("closed forms: omega0, phi invariance and theta factorization") {
    // the closed forms never read omega0, so curves coincide bitwise
    for (double w0 : {10.0, 50.0, 100.0}) {
        const PhysParams p = make_params(5.0, 3.0, w0);
        CHECK(qfi::qfi_closed_dressed(2.0, 1.0, p) ==
              qfi::qfi_closed_dressed(2.0, 1.0, make_params(5.0, 3.0, 50.0)));
    }

    for (const PhysParams& p : testsup::preset_params()) {
        for (int i = 0; i <= 100; ++i) {
            const double t = 20.0 * i / 100.0;
            const double base_d = qfi::qfi_closed_dressed(t, half_pi, p);
            const double base_s = qfi::qfi_closed_standard(t, half_pi, p);
            for (double theta : {0.0, 0.4, std::numbers::pi / 4, 2.0}) {
                const double st2 = std::sin(theta) * std::sin(theta);
                CHECK_THAT(qfi::qfi_closed_dressed(t, theta, p), WithinAbs(st2 * base_d, 1e-12));
                CHECK_THAT(qfi::qfi_closed_standard(t, theta, p), WithinAbs(st2 * base_s, 1e-12));
            }
        }
    }
}

TEST_CASE("closed forms: range and regime behaviour") {
    // 0 <= F <= sin^2(theta) on the presets
    for (const PhysParams& p : testsup::preset_params()) {
        for (int i = 0; i <= 400; ++i) {
            const double t = 20.0 * i / 400.0;
            for (double f : {qfi::qfi_closed_dressed(t, 1.1, p),
                             qfi::qfi_closed_standard(t, 1.1, p)}) {
                CHECK(f >= 0.0);
                CHECK(f <= std::sin(1.1) * std::sin(1.1) + 1e-15);
            }
        }
    }

    // Markovian weak coupling: monotone decay, small terminal value
    const PhysParams weak = make_params(5.0, 0.05);
    double prev = qfi::qfi_closed_dressed(0.0, half_pi, weak);
    for (int i = 1; i <= 2000; ++i) {
        const double f = qfi::qfi_closed_dressed(10.0 * i / 2000.0, half_pi, weak);
        CHECK(f <= prev + 1e-3);
        prev = f;
    }
    CHECK(qfi::qfi_closed_dressed(10.0, half_pi, weak) < 0.02);

    // slower decay in the non-Markovian regime, pointwise
    const PhysParams nm = make_params(0.05, 0.05);
    for (int i = 1; i <= 2000; ++i) {
        const double t = 10.0 * i / 2000.0;
        CHECK(qfi::qfi_closed_dressed(t, half_pi, nm) >=
              qfi::qfi_closed_dressed(t, half_pi, weak));
    }
}

TEST_CASE("closed forms: large-coupling plateau and envelope midline") {
    const PhysParams p = make_params(5.0, 20.0);

    // windowed mean over gamma0 t in [15, 20]
    double sum = 0.0;
    const int n = 5000;
    for (int i = 0; i <= n; ++i)
        sum += qfi::qfi_closed_standard(15.0 + 5.0 * i / n, half_pi, p);
    const double mean = sum / (n + 1);
    CHECK(mean > 0.20);
    CHECK(mean < 0.30);

    // the 1/4 e^{-I+/2} envelope tracks the oscillation midline within 2% on [10, 20]
    const double period = std::numbers::pi / p.omega_big;
    for (double tc : {10.5, 12.0, 14.0, 16.0, 18.0, 19.5}) {
        const int m = 400;
        double acc = 0.0;
        for (int i = 0; i < m; ++i)
            acc += qfi::qfi_closed_standard(tc - period / 2 + period * i / m, half_pi, p);
        const double midline = acc / m;
        const double envelope =
            0.25 * std::exp(-0.5 * kernels::kernel_integrals(tc, p).i_plus);
        CHECK_THAT(midline / envelope, WithinAbs(1.0, 0.02));
    }
}

TEST_CASE("closed-form dispatch and mode semantics") {
    const PhysParams p = make_params(5.0, 3.0);
    // rederived standard family reduces to the plus-form
    CHECK(qfi::closed_form_qfi(Family::standard, Mode::rederived, 1.0, half_pi, p) ==
          qfi::qfi_closed_dressed(1.0, half_pi, p));
    CHECK(qfi::closed_form_qfi(Family::standard, Mode::paper_faithful, 1.0, half_pi, p) ==
          qfi::qfi_closed_standard(1.0, half_pi, p));
    CHECK(qfi::closed_form_qfi(Family::dressed, Mode::paper_faithful, 1.0, half_pi, p) ==
          qfi::qfi_closed_dressed(1.0, half_pi, p));
    CHECK_THROWS_AS(qfi::closed_form_qfi(Family::raw, Mode::rederived, 1.0, half_pi, p),
                    std::invalid_argument);
}

TEST_CASE("transcribed closed-form matrices") {
    // standard-family transcription == cavity-carried excitation through the pipeline
    const auto standard = InitialStateSpec::standard_family(1.1, 0.7);
    for (const PhysParams& p : testsup::preset_params()) {
        const auto cavity = InitialStateSpec::cavity_excitation(1.1, 0.7);
        const auto r0 = dynamics::initial_dressed_state(cavity);
        for (int i = 0; i <= 40; ++i) {
            const double t = 20.0 * i / 40.0;
            const Matrix2c transcribed = qfi::family_rho(standard, t, p, Mode::paper_faithful);
            const Matrix2c pipeline =
                dynamics::reduce_to_qubit(dynamics::evolve_dressed(r0, t, p)).rho;
            CHECK((transcribed - pipeline).cwiseAbs().maxCoeff() < 1e-14);
        }
    }

    // SLD on the transcribed matrices reproduces the closed forms for both families
    const PhysParams p = make_params(5.0, 3.0);
    for (int i = 0; i <= 40; ++i) {
        const double t = 20.0 * i / 40.0;
        const auto dressed = InitialStateSpec::dressed_family(half_pi, 0.7);
        const double f_d = qfi::sld_qfi(qfi::family_rho(dressed, t, p, Mode::paper_faithful),
                                        qfi::dphi_rho(dressed, t, p, Mode::paper_faithful));
        CHECK_THAT(f_d, WithinAbs(qfi::qfi_closed_dressed(t, half_pi, p), 1e-12));

        const double f_s = qfi::sld_qfi(qfi::family_rho(standard, t, p, Mode::paper_faithful),
                                        qfi::dphi_rho(standard, t, p, Mode::paper_faithful));
        CHECK_THAT(f_s, WithinAbs(qfi::qfi_closed_standard(t, 1.1, p), 1e-12));
    }

    CHECK_THROWS_AS(
        qfi::family_rho(InitialStateSpec::cavity_excitation(1.0, 0.0), 1.0, p,
                        Mode::paper_faithful),
        std::invalid_argument);
}

TEST_CASE("qfi flow: analytic derivative vs finite differences") {
    const double h = 1e-6;
    for (const PhysParams& p : testsup::preset_params()) {
        for (int i = 1; i <= 50; ++i) {
            const double t = 10.0 * i / 50.0;
            for (auto family : {Family::dressed, Family::standard}) {
                const auto mode = Mode::paper_faithful;
                const double fd = (qfi::closed_form_qfi(family, mode, t + h, half_pi, p) -
                                   qfi::closed_form_qfi(family, mode, t - h, half_pi, p)) /
                                  (2.0 * h);
                CHECK_THAT(qfi::qfi_flow_closed(family, mode, t, half_pi, p),
                           WithinAbs(fd, 1e-7));
            }
        }
    }
}

TEST_CASE("qfi flow: non-positive in the Markovian weak-coupling regime") {
    const PhysParams p = make_params(5.0, 0.05);
    for (int i = 0; i <= 10000; ++i) {
        const double t = 10.0 * i / 10000.0;
        CHECK(qfi::qfi_flow_closed(Family::dressed, Mode::rederived, t, half_pi, p) <= 1e-9);
    }
}

TEST_CASE("qfi flow: sign matches local growth of the curve") {
    for (const PhysParams& p : testsup::preset_params()) {
        for (auto [family, mode] :
             {std::pair{Family::dressed, Mode::rederived},
              std::pair{Family::standard, Mode::paper_faithful}}) {
            const int n = 2000;
            std::vector<double> f(n + 1);
            for (int i = 0; i <= n; ++i)
                f[static_cast<std::size_t>(i)] =
                    qfi::closed_form_qfi(family, mode, 20.0 * i / n, half_pi, p);
            for (int i = 1; i < n; ++i) {
                const auto iu = static_cast<std::size_t>(i);
                if (f[iu - 1] < f[iu] && f[iu] < f[iu + 1]) {
                    const double flow =
                        qfi::qfi_flow_closed(family, mode, 20.0 * i / n, half_pi, p);
                    CHECK(flow > 0.0);
                }
            }
        }
    }
}

TEST_CASE("qfi flow: numeric series path") {
    // constant series differentiates to exactly zero
    const std::vector<double> times{0.0, 0.1, 0.2, 0.3};
    const std::vector<double> constant{0.7, 0.7, 0.7, 0.7};
    for (double v : qfi::qfi_flow_series(times, constant))
        CHECK(v == 0.0);

    CHECK_THROWS_AS(qfi::qfi_flow_series({0.0, 0.1}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(qfi::qfi_flow_series({0.0, 0.1, 0.35}, {1.0, 2.0, 3.0}),
                    std::invalid_argument);

    // second-order agreement with the analytic flow; error ~ F'''/6 h^2
    auto series_error = [](const PhysParams& p, double h) {
        const auto n = static_cast<std::size_t>(std::llround(10.0 / h));
        std::vector<double> ts(n + 1), fs(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            ts[i] = h * static_cast<double>(i);
            fs[i] = qfi::qfi_closed_dressed(ts[i], half_pi, p);
        }
        const auto flow = qfi::qfi_flow_series(ts, fs);
        double worst = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            worst = std::max(worst, std::abs(flow[i] - qfi::qfi_flow_closed(
                                                           Family::dressed, Mode::rederived,
                                                           ts[i], half_pi, p)));
        return worst;
    };

    // weak-coupling presets: within 10 h^2
    for (const PhysParams& p : {make_params(5.0, 0.05), make_params(0.05, 0.05)})
        CHECK(series_error(p, 1e-3) < 10.0 * 1e-6);

    // strong coupling: second-order convergence, measured constant stays modest
    const PhysParams strong = make_params(5.0, 3.0);
    const double e1 = series_error(strong, 2e-3);
    const double e2 = series_error(strong, 1e-3);
    CHECK(e1 / e2 > 3.0);
    CHECK(e1 / e2 < 5.0);
    CHECK(e2 < 50.0 * 1e-6);
}

TEST_CASE("qfi flow: integrates back to the curve (fundamental theorem)") {
    for (const PhysParams& p : testsup::preset_params()) {
        const std::size_t n = 10000;
        const double h = 10.0 / static_cast<double>(n);
        double integral = 0.0;
        double prev = qfi::qfi_flow_closed(Family::dressed, Mode::rederived, 0.0, half_pi, p);
        for (std::size_t i = 1; i <= n; ++i) {
            const double cur = qfi::qfi_flow_closed(Family::dressed, Mode::rederived,
                                                    h * static_cast<double>(i), half_pi, p);
            integral += 0.5 * h * (prev + cur);
            prev = cur;
        }
        const double delta = qfi::qfi_closed_dressed(10.0, half_pi, p) -
                             qfi::qfi_closed_dressed(0.0, half_pi, p);
        CHECK_THAT(integral, WithinAbs(delta, 1e-3));
    }
}

TEST_CASE("qfi samples: record assembly, bounds, series differentiation") {
    for (const PhysParams& p : testsup::preset_params()) {
        for (auto [family, mode] : {std::pair{Family::dressed, Mode::rederived},
                                    std::pair{Family::standard, Mode::paper_faithful}}) {
            const auto spec = family == Family::dressed
                                  ? InitialStateSpec::dressed_family(1.1, 0.4)
                                  : InitialStateSpec::standard_family(1.1, 0.4);
            for (int i = 0; i <= 100; ++i) {
                const auto s = qfi::qfi_sample(spec, mode, 20.0 * i / 100.0, p);
                CHECK(s.f_closed >= 0.0);
                CHECK(s.f_sld >= 0.0);
                CHECK(s.f_closed <= 1.0 + 1e-12);
                CHECK(s.f_sld <= 1.0 + 1e-12);
                CHECK_THAT(s.f_sld, WithinAbs(s.f_closed, 1e-9));
            }
        }
    }

    // numeric flow from recorded samples tracks the analytic flow
    const PhysParams weak = make_params(5.0, 0.05);
    const auto spec = InitialStateSpec::dressed_family(half_pi, 0.0);
    std::vector<qfi::QfiSample> series;
    for (int i = 0; i <= 10000; ++i)
        series.push_back(qfi::qfi_sample(spec, Mode::rederived, 10.0 * i / 10000.0, weak));
    const auto numeric = qfi::qfi_flow_series(series);
    for (std::size_t i = 1; i + 1 < series.size(); ++i)
        CHECK_THAT(numeric[i], WithinAbs(series[i].flow, 1e-4));
}

TEST_CASE("cramer-rao bound") {
    CHECK(qfi::cramer_rao_bound(1.0, 1).variance_floor.value() == 1.0);
    CHECK_THAT(qfi::cramer_rao_bound(0.25, 100).variance_floor.value(), WithinAbs(0.04, 1e-15));

    const auto unbounded = qfi::cramer_rao_bound(0.0, 10);
    CHECK(unbounded.unbounded());
    CHECK(!unbounded.variance_floor.has_value());

    CHECK_THROWS_AS(qfi::cramer_rao_bound(-0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(qfi::cramer_rao_bound(1.0, 0), std::invalid_argument);
}

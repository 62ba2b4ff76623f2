#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "udw/correlators.hpp"

using namespace udw;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("thermal wightman against reference evaluation") {
    // 25-digit reference: G(0.3, beta=1, eps=0.01)
    const auto g = thermal_wightman(0.3, {1.0, 0.01});
    CHECK(g.real() == doctest::Approx(-0.21012157836858604).epsilon(1e-12));
    CHECK(g.imag() == doctest::Approx(-0.017967837771843417).epsilon(1e-12));
}

TEST_CASE("vacuum wightman is the beta -> inf limit") {
    const BathParams big{1e8, 0.01};
    const auto vac = thermal_wightman(0.5, BathParams::vacuum(0.01));
    const auto therm = thermal_wightman(0.5, big);
    CHECK(vac.real() == doctest::Approx(therm.real()).epsilon(1e-10));
    CHECK(vac.imag() == doctest::Approx(therm.imag()).epsilon(1e-10));
}

TEST_CASE("wightman requires a regulator at s = 0") {
    CHECK_THROWS_AS(thermal_wightman(0.0, {1.0, 0.0}), DomainError);
    CHECK_NOTHROW(thermal_wightman(0.0, {1.0, 0.01}));
}

TEST_CASE("symmetrized correlator") {
    CHECK(tilde_g_thermal(0.3, {1.0, 0.0}) ==
          doctest::Approx(-0.42212814613931081).epsilon(1e-12));
    // even in s
    CHECK(tilde_g_thermal(0.7, {2.0, 0.05}) ==
          doctest::Approx(tilde_g_thermal(-0.7, {2.0, 0.05})).epsilon(1e-13));
    // vacuum closed form at eps = 0: -1/(2 pi^2 s^2)
    CHECK(tilde_g_vacuum(0.5, 0.0) ==
          doctest::Approx(-1.0 / (2.0 * kPi * kPi * 0.25)).epsilon(1e-13));
}

TEST_CASE("thermal - vacuum difference kernel") {
    CHECK(tilde_g_difference(0.5, 2.0) ==
          doctest::Approx(0.036989329201136894).epsilon(1e-12));
    // regular at s = 0 with limit 1/(6 beta^2)
    for (double beta : {0.5, 1.0, 3.0}) {
        CHECK(tilde_g_difference(1e-12, beta) ==
              doctest::Approx(1.0 / (6.0 * beta * beta)).epsilon(1e-9));
    }
    // series/direct seam
    const double beta = 1.3;
    const double s_seam = 1e-4 * beta / kPi;
    CHECK(tilde_g_difference(s_seam * 0.999, beta) ==
          doctest::Approx(tilde_g_difference(s_seam * 1.001, beta))
              .epsilon(1e-7));
    // matches the explicit subtraction at moderate s
    const double s = 0.8;
    const double explicit_diff =
        tilde_g_thermal(s, {beta, 0.0}) - tilde_g_vacuum(s, 0.0);
    CHECK(tilde_g_difference(s, beta) ==
          doctest::Approx(explicit_diff).epsilon(1e-10));
    // vanishes in the vacuum limit
    CHECK(tilde_g_difference(1.0, std::numeric_limits<double>::infinity()) ==
          0.0);
}

TEST_CASE("spectral function values") {
    CHECK(spectral_f(1.0, {1.0, 0.0}) ==
          doctest::Approx(0.092624469662596300).epsilon(1e-12));
    CHECK(spectral_f(-1.0, {1.0, 0.0}) ==
          doctest::Approx(0.25177941275449164).epsilon(1e-12));
    CHECK(spectral_f(2.0, {0.5, 0.1}) ==
          doctest::Approx(0.22626356543803620).epsilon(1e-12));
    // analytic limit at omega = 0
    CHECK(spectral_f(0.0, {2.0, 0.0}) ==
          doctest::Approx(1.0 / (2.0 * kPi * 2.0)).epsilon(1e-12));
}

TEST_CASE("spectral function vacuum branch") {
    const auto vac = BathParams::vacuum();
    CHECK(spectral_f(1.0, vac) == 0.0);
    CHECK(spectral_f(-1.0, vac) == doctest::Approx(1.0 / (2.0 * kPi)));
    CHECK_THROWS_AS(spectral_f(0.0, vac), DomainError);
}

TEST_CASE("spectral identity F(-Omega) - F(Omega) = Omega/2pi at eps = 0") {
    for (double beta : {0.5, 1.0, 4.0}) {
        for (double omega : {0.3, 1.0, 2.5}) {
            const BathParams bath{beta, 0.0};
            const double lhs =
                spectral_f(-omega, bath) - spectral_f(omega, bath);
            CHECK(lhs == doctest::Approx(omega / (2.0 * kPi)).epsilon(1e-12));
        }
    }
}

TEST_CASE("KMS detailed balance of the spectral function") {
    for (double beta : {0.5, 1.0, 2.0}) {
        const BathParams bath{beta, 0.0};
        const double ratio = spectral_f(1.0, bath) / spectral_f(-1.0, bath);
        CHECK(ratio == doctest::Approx(std::exp(-beta)).epsilon(1e-12));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(spectral_f(1.0, {-1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(spectral_f(1.0, {1.0, -0.5}), DomainError);
    DetectorParams det;
    det.omega = 0.0;
    CHECK_THROWS_AS(det.validate(), DomainError);
    CHECK(DetectorParams{1.0, 0.1, 0.1}.recovery_scale_ok());
    CHECK(!DetectorParams{20.0, 0.1, 0.1}.recovery_scale_ok());
}

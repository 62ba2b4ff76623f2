#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "udw/numerics.hpp"

using namespace udw;
using namespace udw::numerics;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("finite quadrature on smooth integrands") {
    CHECK(integrate_finite([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(integrate_finite([](double x) { return std::sin(x); }, 0.0, kPi) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // sharply peaked integrand
    CHECK(integrate_finite([](double x) { return std::exp(-100.0 * x * x); },
                           -3.0, 3.0) ==
          doctest::Approx(std::sqrt(kPi) / 10.0).epsilon(1e-10));
}

TEST_CASE("finite quadrature error handling") {
    CHECK_THROWS_AS(integrate_finite([](double x) { return 1.0 / x; }, 0.0, 1.0),
                    Error);
    QuadratureSpec bad;
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 0.0, 1.0, bad),
                    DomainError);
}

TEST_CASE("semi-infinite quadrature, monotone decay") {
    CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate_semi_infinite([](double x) { return std::exp(-x * x); },
                                  0.0) ==
          doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-10));
}

TEST_CASE("semi-infinite quadrature, oscillatory tails") {
    // int_0^inf cos(x)/(1+x^2) dx = pi/(2e)
    CHECK(integrate_semi_infinite(
              [](double x) { return std::cos(x) / (1.0 + x * x); }, 1.0) ==
          doctest::Approx(0.5778636748954609).epsilon(1e-8));
    // conditionally convergent 1/x tail: int_0^inf sin(x)/x = pi/2
    CHECK(integrate_semi_infinite(
              [](double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }, 1.0) ==
          doctest::Approx(kPi / 2.0).epsilon(1e-7));
}

TEST_CASE("cosine integral against reference values") {
    // reference values computed with 25-digit arbitrary precision arithmetic
    CHECK(cosine_integral(0.5) == doctest::Approx(-0.17778407880661290).epsilon(1e-12));
    CHECK(cosine_integral(1.0) == doctest::Approx(0.33740392290096813).epsilon(1e-12));
    CHECK(cosine_integral(3.0) == doctest::Approx(0.11962978600800033).epsilon(1e-12));
    CHECK(cosine_integral(10.0) == doctest::Approx(-0.045456433004455373).epsilon(1e-12));
    CHECK(cosine_integral(20.0) == doctest::Approx(0.044419820845353317).epsilon(1e-12));
    CHECK(cosine_integral(100.0) == doctest::Approx(-0.0051488251426104921).epsilon(1e-11));
    CHECK(cosine_integral(1e-6) == doctest::Approx(-13.238294893062991).epsilon(1e-12));
    CHECK_THROWS_AS(cosine_integral(0.0), DomainError);
    CHECK_THROWS_AS(cosine_integral(-1.0), DomainError);
}

TEST_CASE("cosine integral seam continuity at the branch switch") {
    // series below 8, continued fraction above; both near-exact at 7.9/8.1
    CHECK(cosine_integral(7.9) == doctest::Approx(0.12363800705971784).epsilon(1e-12));
    CHECK(cosine_integral(8.1) == doctest::Approx(0.12001667326059658).epsilon(1e-12));
}

TEST_CASE("root finding") {
    RootSpec spec;
    spec.bracket_lo = 1.0;
    spec.bracket_hi = 2.0;
    CHECK(find_root([](double x) { return std::cos(x); }, spec) ==
          doctest::Approx(kPi / 2.0).epsilon(1e-10));

    spec.bracket_lo = 0.0;
    spec.bracket_hi = 2.0;
    CHECK(find_root([](double x) { return x * x - 2.0; }, spec) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

    spec.bracket_lo = 3.0;
    spec.bracket_hi = 4.0;
    CHECK_THROWS_AS(find_root([](double x) { return x * x - 2.0; }, spec),
                    NoSignChange);
}

TEST_CASE("rk4 step order") {
    // dy/dt = y, one step of h=0.1 from y=1: error O(h^5)
    const double y = ode_step_rk4(
        1.0, [](double, double v) { return v; }, 0.0, 0.1);
    CHECK(std::abs(y - std::exp(0.1)) < 1e-7);
}

TEST_CASE("cubic spline interpolation and derivatives") {
    std::vector<double> xs, ys;
    for (int i = 0; i <= 200; ++i) {
        const double x = -3.0 + 6.0 * i / 200.0;
        xs.push_back(x);
        ys.push_back(std::sin(x));
    }
    CubicSpline s(xs, ys);
    for (double x : {-2.5, -1.0, 0.3, 1.7, 2.9}) {
        CHECK(s(x) == doctest::Approx(std::sin(x)).epsilon(1e-6));
        CHECK(s.derivative(x) == doctest::Approx(std::cos(x)).epsilon(1e-4));
    }
    CHECK_THROWS_AS(s(3.5), InterpolationRange);
    CHECK_THROWS_AS(s(-3.5), InterpolationRange);
}

TEST_CASE("symmetric fourier transform against a lorentzian pair") {
    // 1/(1+w^2) <-> pi e^{-|tau|}
    const double w_max = 2000.0;
    const double dw = 0.01;
    const std::size_t n = static_cast<std::size_t>(2.0 * w_max / dw) + 1;
    std::vector<double> wg(n), f(n);
    for (std::size_t i = 0; i < n; ++i) {
        wg[i] = -w_max + dw * static_cast<double>(i);
        f[i] = 1.0 / (1.0 + wg[i] * wg[i]);
    }
    std::vector<double> taus = {0.0, 1.0, 2.0};
    auto out = fourier_transform_symmetric(wg, f, taus);
    for (std::size_t j = 0; j < taus.size(); ++j) {
        CHECK(out[j] == doctest::Approx(kPi * std::exp(-taus[j])).epsilon(3e-3));
    }
}

TEST_CASE("fourier transform rejects asymmetric input") {
    std::vector<double> wg = {-1.0, 0.0, 1.0};
    std::vector<double> odd = {-1.0, 0.0, 1.0};
    CHECK_THROWS_AS(fourier_transform_symmetric(wg, odd, {0.0}),
                    AsymmetricInput);
    std::vector<double> shifted = {-1.0, 0.5, 2.0};
    std::vector<double> f = {1.0, 1.0, 1.0};
    CHECK_THROWS_AS(fourier_transform_symmetric(shifted, f, {0.0}),
                    AsymmetricInput);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "udw/gzk.hpp"

using namespace udw::gzk;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("image-sum closed form matches direct summation") {
    for (double a : {0.1, 1.0, 5.0}) {
        double direct = 0.0;
        for (int l = 1; l <= 2000; ++l) direct += std::exp(-a * l) / l;
        CHECK(log_sum(a) == doctest::Approx(direct).epsilon(1e-12));
    }
    // the a=1 reference value
    CHECK(log_sum(1.0) ==
          doctest::Approx(-std::log(1.0 - std::exp(-1.0))).epsilon(1e-14));
    CHECK(log_sum(1.0) == doctest::Approx(0.45868).epsilon(1e-4));
}

TEST_CASE("single-level inner sum reference") {
    // arrange beta Omega / (2 gamma) = 1 and check the 0.45868/(gamma^2 beta)
    // rate structure (per unit proper time of the formula, converted to 1/s)
    Scenario s;
    s.levels = {{1.0, 0.0}};
    const double gamma = s.gamma();
    s.levels[0].omega_ev = 2.0 * gamma / s.beta_ev();
    const double expect_ev =
        log_sum(1.0) / (4.0 * kPi * gamma * gamma * s.beta_ev());
    CHECK(excitation_rate(s) ==
          doctest::Approx(expect_ev / kHbarEvSeconds).epsilon(1e-12));
}

TEST_CASE("exponential suppression below threshold") {
    // gamma k T much below the gap: log p is linear in the suppression
    // exponent a = beta Omega / (2 gamma)
    Scenario s = Scenario::with_default_level();
    s.t_m_seconds = 1.0;
    const double a1 = s.beta_ev() * s.levels[0].omega_ev / (2.0 * s.gamma());
    const double p1 = excitation_probability(s);
    Scenario s2 = s;
    s2.temperature_k /= 2.0;  // doubles beta, doubles the exponent
    const double p2 = excitation_probability(s2);
    // subtract the 1/beta prefactor change, leaving the pure exponent
    const double slope = std::log(p1 / (2.0 * p2));
    CHECK(slope == doctest::Approx(a1).epsilon(0.05));
}

TEST_CASE("critical energy scale") {
    const double e_crit = critical_energy(938.3e6, 145.0e6, 3.0);
    CHECK(e_crit > 1.0e20);
    CHECK(e_crit < 1.6e20);
    // gamma_crit = E_thr / (4 kB T)
    const double gamma_crit = 145.0e6 / (4.0 * kBoltzmannEvPerK * 3.0);
    CHECK(e_crit == doctest::Approx(gamma_crit * 938.3e6).epsilon(1e-14));
    CHECK(gamma_crit == doctest::Approx(1.402e11).epsilon(1e-3));
    // suppression exponent at the critical boost is exactly 2
    Scenario s = Scenario::with_default_level();
    s.energy_ev = e_crit;
    const double a = s.beta_ev() * s.levels[0].omega_ev / (2.0 * s.gamma());
    CHECK(a == doctest::Approx(2.0).epsilon(1e-12));
    // inverse proportionality in temperature
    CHECK(critical_energy(938.3e6, 145.0e6, 6.0) ==
          doctest::Approx(0.5 * e_crit).epsilon(1e-14));
}

TEST_CASE("linearity of the probability") {
    Scenario s = Scenario::with_default_level();
    s.set_path_length_mpc(1.0);
    const double p = excitation_probability(s);
    CHECK(p > 0.0);

    Scenario s2 = s;
    s2.t_m_seconds *= 2.0;
    CHECK(excitation_probability(s2) == doctest::Approx(2.0 * p).epsilon(1e-14));

    Scenario s3 = s;
    s3.levels[0].gbar *= 3.0;
    CHECK(excitation_probability(s3) == doctest::Approx(3.0 * p).epsilon(1e-14));

    // halving the coupling doubles the horizon
    Scenario s4 = s;
    s4.levels[0].gbar *= 0.5;
    CHECK(horizon_length_mpc(s4, 0.5) ==
          doctest::Approx(2.0 * horizon_length_mpc(s, 0.5)).epsilon(1e-12));
}

TEST_CASE("horizon ballpark for the default scenario") {
    Scenario s = Scenario::with_default_level();
    const double l = horizon_length_mpc(s, 0.5);
    CHECK(l > 0.1);
    CHECK(l < 100.0);
    // inverting then re-evaluating closes the loop
    Scenario s2 = s;
    s2.set_path_length_mpc(l);
    CHECK(excitation_probability(s2) == doctest::Approx(0.5).epsilon(1e-12));
    // linear in the target
    CHECK(horizon_length_mpc(s, 0.25) == doctest::Approx(0.5 * l).epsilon(1e-12));
}

TEST_CASE("unit round-trips") {
    Scenario s = Scenario::with_default_level();
    for (double l : {0.1, 1.0, 17.3}) {
        s.set_path_length_mpc(l);
        CHECK(s.path_length_mpc() == doctest::Approx(l).epsilon(1e-12));
    }
    // Kelvin <-> eV
    const double t = 3.0;
    CHECK(1.0 / (s.beta_ev() * kBoltzmannEvPerK) == doctest::Approx(t).epsilon(1e-12));
}

TEST_CASE("multi-level additivity") {
    Scenario a = Scenario::with_default_level();
    a.t_m_seconds = 1.0;
    Scenario b = a;
    b.levels[0].omega_ev = 300.0e6;
    Scenario both = a;
    both.levels.push_back(b.levels[0]);
    CHECK(excitation_probability(both) ==
          doctest::Approx(excitation_probability(a) + excitation_probability(b))
              .epsilon(1e-14));
}

TEST_CASE("validation and the boost warning") {
    Scenario s = Scenario::with_default_level();
    CHECK(!s.boost_warning());
    s.energy_ev = 5.0 * s.mass_ev;
    CHECK(s.boost_warning());
    s.levels[0].omega_ev = -1.0;
    CHECK_THROWS_AS(s.validate(), udw::DomainError);
}

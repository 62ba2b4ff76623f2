#include "udw/gzk.hpp"

#include <cmath>

namespace udw {
namespace gzk {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void Scenario::validate() const {
    if (!(mass_ev > 0.0)) throw DomainError("Scenario: mass > 0");
    if (!(energy_ev > 0.0)) throw DomainError("Scenario: energy > 0");
    if (!(temperature_k > 0.0)) throw DomainError("Scenario: temperature > 0");
    if (levels.empty()) throw DomainError("Scenario: needs at least one level");
    for (const auto& lvl : levels) lvl.validate();
    if (t_m_seconds < 0.0) throw DomainError("Scenario: t_m >= 0");
}

Scenario Scenario::with_default_level() {
    Scenario s;
    s.levels.push_back({1.0, 145.0e6});
    s.set_path_length_mpc(1.0);
    return s;
}

double log_sum(double a) {
    if (!(a > 0.0)) throw DomainError("log_sum: a must be > 0");
    if (a > 700.0) return std::exp(-a);
    return -std::log1p(-std::exp(-a));
}

double excitation_rate(const Scenario& scenario) {
    scenario.validate();
    const double gamma = scenario.gamma();
    const double beta = scenario.beta_ev();  // 1/eV
    double rate_ev = 0.0;                    // in eV (energy = 1/time)
    for (const auto& lvl : scenario.levels) {
        const double a = beta * lvl.omega_ev / (2.0 * gamma);
        rate_ev += lvl.gbar / (4.0 * kPi) * log_sum(a) / (gamma * gamma * beta);
    }
    return rate_ev / kHbarEvSeconds;  // 1/s
}

double excitation_probability(const Scenario& scenario) {
    return excitation_rate(scenario) * scenario.t_m_seconds;
}

double critical_energy(double mass_ev, double e_thr_ev, double temperature_k) {
    if (!(mass_ev > 0.0) || !(e_thr_ev > 0.0) || !(temperature_k > 0.0)) {
        throw DomainError("critical_energy: all arguments must be > 0");
    }
    const double gamma_crit =
        e_thr_ev / (4.0 * kBoltzmannEvPerK * temperature_k);
    return gamma_crit * mass_ev;
}

double horizon_length_mpc(const Scenario& scenario, double p_target) {
    if (!(p_target > 0.0) || !(p_target < 1.0)) {
        throw DomainError("horizon_length_mpc: p_target in (0,1)");
    }
    const double rate = excitation_rate(scenario);
    if (!(rate > 0.0)) throw DomainError("horizon_length_mpc: zero rate");
    const double t_m = p_target / rate;
    return t_m * scenario.velocity() / kMpcMeters;
}

}  // namespace gzk
}  // namespace udw

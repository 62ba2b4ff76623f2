#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "udw/errors.hpp"

namespace udw {
namespace gzk {

// boundary constants (core formulas stay in natural units)
inline constexpr double kBoltzmannEvPerK = 8.617333262e-5;
inline constexpr double kHbarEvSeconds = 6.582119569e-16;
inline constexpr double kSpeedOfLight = 2.99792458e8;   // m/s
inline constexpr double kMpcMeters = 3.0857e22;

struct ResonanceLevel {
    double gbar = 1.0;      // dimensionless model coupling weight
    double omega_ev = 0.0;  // gap M(resonance) - m, in eV

    void validate() const {
        if (gbar < 0.0) throw DomainError("ResonanceLevel: gbar >= 0");
        if (!(omega_ev > 0.0)) throw DomainError("ResonanceLevel: omega > 0");
    }
};

struct Scenario {
    double mass_ev = 938.3e6;
    double energy_ev = 3.0e19;
    double temperature_k = 3.0;
    std::vector<ResonanceLevel> levels;
    double t_m_seconds = 0.0;

    double gamma() const { return energy_ev / mass_ev; }
    double beta_ev() const { return 1.0 / (kBoltzmannEvPerK * temperature_k); }
    double velocity() const {  // m/s
        const double g = gamma();
        return kSpeedOfLight * std::sqrt(std::max(0.0, 1.0 - 1.0 / (g * g)));
    }
    bool boost_warning() const { return gamma() < 10.0; }
    void validate() const;

    static Scenario with_default_level();
    void set_path_length_mpc(double l_mpc) {
        t_m_seconds = l_mpc * kMpcMeters / velocity();
    }
    double path_length_mpc() const {
        return t_m_seconds * velocity() / kMpcMeters;
    }
};

/// Closed form of the image sum over l >= 1: sum 1/l e^{-a l} = -ln(1-e^{-a}).
double log_sum(double a);

/// Excitation probability per unit lab time, in 1/s.
double excitation_rate(const Scenario& scenario);

/// p = t_m sum_n (gbar_n / 4 pi) (-ln(1 - e^{-beta Omega_n / 2 gamma})) /
/// (gamma^2 beta), with beta and t_m converted to common units.
double excitation_probability(const Scenario& scenario);

/// E_crit = gamma_crit m with gamma_crit = E_thr / (4 k_B T). All eV and K.
double critical_energy(double mass_ev, double e_thr_ev, double temperature_k);

/// Path length (Mpc) at which the linear-in-time probability reaches p_target.
double horizon_length_mpc(const Scenario& scenario, double p_target);

}  // namespace gzk
}  // namespace udw

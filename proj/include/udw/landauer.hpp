#pragma once

#include "udw/correlators.hpp"
#include "udw/numerics.hpp"

namespace udw {

/// Two-level Shannon entropy -p log p - (1-p) log(1-p); 0 at the endpoints.
double binary_entropy(double p);

/// Free-energy function in the occupancy parameterization,
/// F(p) = beta Omega p - S_d(p). Total on [0,1]; F(0) = 0, F(1) = beta Omega.
double landauer_f_p(double p, double beta, double omega);

/// Same function against the effective inverse temperature z via
/// p = 1/(1 + e^{z Omega}); z = +inf is p = 0, z = -inf is p = 1.
double landauer_f(double z, double beta, double omega);

/// Thermal occupancy 1/(1 + e^{z Omega}).
double occupancy(double z, double omega);

/// Effective inverse temperature log(1/p - 1)/Omega; +-inf at p = 0, 1.
double inverse_temperature_of(double p, double omega);

/// Lower bound on beta dE for taking the detector from p_initial to p_final:
/// F(p_final) - F(p_initial).
double work_bound(double beta, double omega, double p_initial, double p_final);

/// The unique root beta_bar* < beta of F(z) = 0 on the hot side of the
/// minimum, located in p-space on (p_thermal, 1).
double critical_beta_star(double beta, double omega,
                          const numerics::RootSpec& root = {});

/// Large-gap closed form 1/(1 + e^{beta Omega - 1}).
double p_critical_closed(double beta, double omega);

/// Exact critical probability p(beta_bar*).
double p_critical_exact(double beta, double omega);

/// Minimal free-erasure time beta sqrt(kappa(beta Omega) / (2(e-1))).
double tau_eff_critical(double beta, double omega);

struct LandauerReport {
    double beta = 0.0;
    double omega = 0.0;
    double beta0 = 0.0;
    double beta_star = 0.0;
    double bound = 0.0;
    double beta_bar_star = 0.0;
    double p_crit_exact = 0.0;
    double p_crit_closed = 0.0;
    double tau_eff_crit = 0.0;
};

LandauerReport landauer_report(double beta, double omega, double p_initial,
                               double p_final);

}  // namespace udw

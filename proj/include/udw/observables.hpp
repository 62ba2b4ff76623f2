#pragma once

#include <vector>

#include "udw/coefficients.hpp"
#include "udw/switching.hpp"

namespace udw {

/// Leading-order excitation probability gbar tau_m D_chi F_beta(Omega).
/// Emits no warning itself; callers may compare against 0.1 for
/// perturbativity. Throws InfiniteMeasurement for ConstantOn.
double leading_order_p01(const SwitchingProfile& profile,
                         const BathParams& bath, const DetectorParams& det,
                         const numerics::QuadratureSpec& spec = {});

/// kappa(x) = coth(x/2) - 2/x, with the small-x series below 1e-3.
double kappa(double x);

/// Large-time ratio expansion xi = e^{-beta Omega}(1 + beta^2 kappa(beta
/// Omega) / (2 tau_eff^2)).
double xi_large_time(double tau_eff, const BathParams& bath,
                     const DetectorParams& det);
double xi_large_time(const SwitchingProfile& profile, const BathParams& bath,
                     const DetectorParams& det,
                     const numerics::QuadratureSpec& spec = {});

/// T* = T (1 + 1/(12 tau_eff^2 T^2)).
double effective_temperature(const BathParams& bath, double tau_eff);

/// S* - S = (1/(12 tau_eff^2 T^4)) Omega^2 e^{beta Omega}/(1+e^{beta Omega})^2.
double entropy_shift(const BathParams& bath, const DetectorParams& det,
                     double tau_eff);

struct ThermometryReport {
    double xi_exact = 0.0;
    double xi_expansion = 0.0;
    double t_star = 0.0;
    double kappa = 0.0;
    double entropy_shift = 0.0;
};

struct SwitchOffReport {
    double i_beta = 0.0;
    double i_p = 0.0;
    double zeta_r = 0.0;
    double delta_p = 0.0;        // p_f - p_i
    double p_f = 0.0;
    double asymptotic_rhs = 0.0; // adiabatic-limit closed evaluation
    bool abrupt_limit_guard = false;  // lambda tau_s > 1
};

/// Perturbative shift from switching off chi = (1 - tanh(lambda tau))/2 at
/// rate lambda, the switch-off having started at -infinity:
///   p_f = p_i + gbar (1/2 - p_i) [I_beta + I_p - zeta^(r)].
SwitchOffReport switch_off_shift(double lambda, const BathParams& bath,
                                 const DetectorParams& det, double p_initial,
                                 const numerics::QuadratureSpec& spec = {});

struct ZenoDiagnostic {
    double alpha = 0.0;    // fitted exponent of p ~ tau0^alpha
    double epsilon = 0.0;
    std::vector<double> tau0;
    std::vector<double> p;
};

/// Short-window scaling probe: raw (epsilon-regulated, unrenormalized)
/// leading-order probability for a square window of width tau0, whose
/// autocorrelation is the triangle max(0, 1 - |s|/tau0).
ZenoDiagnostic zeno_guard(const DetectorParams& det, double epsilon_eff,
                          const std::vector<double>& tau0_values,
                          const numerics::QuadratureSpec& spec = {});

}  // namespace udw

#pragma once

#include <vector>

#include "udw/correlators.hpp"
#include "udw/numerics.hpp"
#include "udw/switching.hpp"

namespace udw {

/// Renormalized switching constant zeta^(r) = -Ci(|Omega| tau_s) / (2 pi^2).
double zeta_renormalized(double omega, double tau_s);

/// Renormalized master-equation coefficient C(t, Omega_signed):
///   gbar chi^2(t) F_beta(-Omega)
/// + gbar chi(t) chi'(t) zeta^(r)
/// + gbar chi(t) int_0^inf ds (chi(t-s) - chi(t)) (G~_beta - G~)(s) cos Omega s
/// + gbar chi(t) int_0^inf ds (chi(t-s) - chi(t) + s chi'(t)) G~(s) cos Omega s
/// with both integrals at eps = 0. C_+ is Omega_signed = +Omega, C_- is -Omega.
double coefficient(double t, double omega_signed,
                   const SwitchingProfile& profile, const BathParams& bath,
                   const DetectorParams& det,
                   const numerics::QuadratureSpec& spec = {});

struct CoefficientGrid {
    std::vector<double> t_grid;
    std::vector<double> c_plus;
    std::vector<double> c_minus;
    std::vector<double> cumulative;  // trapezoid of C_+ + C_- from t_grid[0]
    bool negative_rate_flag = false; // C_+ + C_- dipped below zero somewhere
    bool sharp_switch_warning = false;  // |chi'/chi| exceeded 1/tau_s

    double dt() const { return t_grid.size() > 1 ? t_grid[1] - t_grid[0] : 0.0; }
};

CoefficientGrid coefficient_grid(const SwitchingProfile& profile,
                                 const BathParams& bath,
                                 const DetectorParams& det, double t0,
                                 double t1, std::size_t n_points,
                                 const numerics::QuadratureSpec& spec = {});

/// True when |chi'/chi| > 1/tau_s somewhere the profile is non-negligible.
bool sharp_switch_guard(const SwitchingProfile& profile,
                        const DetectorParams& det);

}  // namespace udw

#include "udw/observables.hpp"

#include <cmath>

namespace udw {

namespace {
constexpr double kPi = 3.14159265358979323846;

// 1 - 2u/(e^{2u} - 1): the switch-off "on" kernel lambda s (1 - coth) + 1
double kernel_on(double u) {
    if (u == 0.0) return 0.0;
    return 1.0 - 2.0 * u / std::expm1(2.0 * u);
}

// 1 - u coth u = 1 - u - 2u/(e^{2u} - 1); series branch kills the
// cancellation that would otherwise be amplified by the 1/s^2 kernel
double kernel_off(double u) {
    if (u < 1e-3) {
        const double u2 = u * u;
        return -u2 / 3.0 + u2 * u2 / 45.0;
    }
    return 1.0 - u - 2.0 * u / std::expm1(2.0 * u);
}

}  // namespace

double leading_order_p01(const SwitchingProfile& profile,
                         const BathParams& bath, const DetectorParams& det,
                         const numerics::QuadratureSpec& spec) {
    det.validate();
    if (profile.kind() == ProfileKind::ConstantOn) {
        throw InfiniteMeasurement(
            "leading_order_p01 diverges for an always-on coupling; use a rate");
    }
    const double tau_m = measurement_time(profile, spec);
    return det.gbar * tau_m *
           apply_window_to_spectrum(profile, det.omega, bath, spec);
}

double kappa(double x) {
    if (!(x > 0.0)) throw DomainError("kappa: x must be > 0");
    if (x < 1e-3) {
        return x / 6.0 - x * x * x / 360.0;
    }
    return 1.0 / std::tanh(0.5 * x) - 2.0 / x;
}

double xi_large_time(double tau_eff, const BathParams& bath,
                     const DetectorParams& det) {
    bath.validate();
    det.validate();
    if (!(tau_eff > 0.0)) throw DomainError("xi_large_time: tau_eff > 0");
    if (bath.is_vacuum()) return 0.0;
    const double bo = bath.beta * det.omega;
    return std::exp(-bo) *
           (1.0 + bath.beta * bath.beta * kappa(bo) / (2.0 * tau_eff * tau_eff));
}

double xi_large_time(const SwitchingProfile& profile, const BathParams& bath,
                     const DetectorParams& det,
                     const numerics::QuadratureSpec& spec) {
    return xi_large_time(effective_time(profile, spec), bath, det);
}

double effective_temperature(const BathParams& bath, double tau_eff) {
    bath.validate();
    if (!(tau_eff > 0.0)) throw DomainError("effective_temperature: tau_eff > 0");
    if (bath.is_vacuum()) {
        throw DomainError("effective_temperature: expansion needs T > 0");
    }
    const double temp = 1.0 / bath.beta;
    return temp + bath.beta / (12.0 * tau_eff * tau_eff);
}

double entropy_shift(const BathParams& bath, const DetectorParams& det,
                     double tau_eff) {
    bath.validate();
    det.validate();
    if (!(tau_eff > 0.0)) throw DomainError("entropy_shift: tau_eff > 0");
    if (bath.is_vacuum()) return 0.0;
    const double b = bath.beta;
    const double bo = b * det.omega;
    if (bo > 700.0) return 0.0;
    const double occ = 1.0 + std::exp(bo);
    const double var_e = det.omega * det.omega * std::exp(bo) / (occ * occ);
    return b * b * b * b / (12.0 * tau_eff * tau_eff) * var_e;
}

SwitchOffReport switch_off_shift(double lambda, const BathParams& bath,
                                 const DetectorParams& det, double p_initial,
                                 const numerics::QuadratureSpec& spec) {
    bath.validate();
    det.validate();
    if (!(lambda > 0.0)) throw DomainError("switch_off_shift: lambda > 0");
    if (p_initial < 0.0 || p_initial > 1.0) {
        throw DomainError("switch_off_shift: p_initial in [0,1]");
    }
    const double omega = det.omega;

    SwitchOffReport rep;
    rep.abrupt_limit_guard = lambda * det.tau_s > 1.0;
    rep.zeta_r = zeta_renormalized(omega, det.tau_s);

    if (!bath.is_vacuum()) {
        rep.i_beta = numerics::integrate_semi_infinite(
                         [&](double s) {
                             return kernel_on(lambda * s) *
                                    std::cos(omega * s) *
                                    tilde_g_difference(s, bath.beta);
                         },
                         omega, spec) /
                     lambda;
    }

    const double s_small = 1e-3 / lambda;
    rep.i_p = numerics::integrate_semi_infinite(
                  [&](double s) {
                      const double cosw = std::cos(omega * s);
                      if (s < s_small) {
                          return lambda * lambda / (6.0 * kPi * kPi) * cosw;
                      }
                      return kernel_off(lambda * s) * cosw *
                             (-1.0 / (2.0 * kPi * kPi * s * s));
                  },
                  omega, spec) /
              lambda;

    const double bracket = rep.i_beta + rep.i_p - rep.zeta_r;
    rep.delta_p = det.gbar * (0.5 - p_initial) * bracket;
    rep.p_f = p_initial + rep.delta_p;

    // adiabatic-limit closed evaluation of the same bracket
    double thermal = 0.0;
    if (!bath.is_vacuum()) {
        const double bo = bath.beta * omega;
        thermal = numerics::integrate_semi_infinite(
            [&](double s) {
                return s * std::cos(s) * tilde_g_difference(s, bo);
            },
            1.0, spec);
    }
    rep.asymptotic_rhs =
        numerics::cosine_integral(omega * det.tau_s) / (2.0 * kPi * kPi) +
        thermal;
    return rep;
}

ZenoDiagnostic zeno_guard(const DetectorParams& det, double epsilon_eff,
                          const std::vector<double>& tau0_values,
                          const numerics::QuadratureSpec& spec) {
    det.validate();
    if (!(epsilon_eff > 0.0)) throw DomainError("zeno_guard: epsilon > 0");
    if (tau0_values.size() < 2) {
        throw DomainError("zeno_guard: need >= 2 window widths for a fit");
    }
    ZenoDiagnostic diag;
    diag.epsilon = epsilon_eff;
    diag.tau0 = tau0_values;
    const double eps = epsilon_eff;
    const double omega = det.omega;

    for (double tau0 : tau0_values) {
        // square window of width tau0: D(s) = 1 - |s|/tau0, tau_m = tau0
        const double p =
            det.gbar * tau0 *
            numerics::integrate_finite(
                [&](double s) {
                    const double d = 1.0 - s / tau0;
                    const double s2 = s * s, e2 = eps * eps;
                    const double den = 4.0 * kPi * kPi * (s2 + e2) * (s2 + e2);
                    const double re = -(s2 - e2) / den;
                    const double im = -2.0 * s * eps / den;
                    return 2.0 * d *
                           (std::cos(omega * s) * re + std::sin(omega * s) * im);
                },
                0.0, tau0, spec);
        diag.p.push_back(p);
    }

    // log-log least squares for the scaling exponent
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(tau0_values.size());
    for (std::size_t i = 0; i < tau0_values.size(); ++i) {
        const double x = std::log(tau0_values[i]);
        const double y = std::log(std::max(diag.p[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    diag.alpha = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return diag;
}

}  // namespace udw

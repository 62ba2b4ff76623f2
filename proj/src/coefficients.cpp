#include "udw/coefficients.hpp"

#include <cmath>

namespace udw {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double zeta_renormalized(double omega, double tau_s) {
    if (!(omega > 0.0)) throw DomainError("zeta_renormalized: omega must be > 0");
    if (!(tau_s > 0.0)) throw DomainError("zeta_renormalized: tau_s must be > 0");
    return -numerics::cosine_integral(omega * tau_s) / (2.0 * kPi * kPi);
}

double coefficient(double t, double omega_signed,
                   const SwitchingProfile& profile, const BathParams& bath,
                   const DetectorParams& det,
                   const numerics::QuadratureSpec& spec) {
    bath.validate();
    det.validate();
    const double gbar = det.gbar;
    const BathParams bath0{bath.beta, 0.0};

    if (profile.kind() == ProfileKind::ConstantOn) {
        // all switching terms vanish identically
        return gbar * spectral_f(-omega_signed, bath0);
    }

    const double c = profile.chi(t);
    const double cp = profile.chi_prime(t);
    const double cs = profile.chi_second(t);
    const double osc = std::abs(omega_signed);

    double value = gbar * c * c * spectral_f(-omega_signed, bath0);
    if (c == 0.0) return value;

    value += gbar * c * cp * zeta_renormalized(std::abs(omega_signed), det.tau_s);

    // scale below which the bracket differences are replaced by their Taylor
    // limits (the vacuum kernel is 1/s^2 so naive evaluation cancels badly)
    const double s_small = 1e-4 * std::max(profile.tau0(), 1e-12);

    if (!bath.is_vacuum()) {
        const double thermal = numerics::integrate_semi_infinite(
            [&](double s) {
                const double diff = profile.chi(t - s) - c;
                return diff * tilde_g_difference(s, bath.beta) *
                       std::cos(omega_signed * s);
            },
            osc, spec);
        value += gbar * c * thermal;
    }

    const double vacuum = numerics::integrate_semi_infinite(
        [&](double s) {
            const double cosw = std::cos(omega_signed * s);
            if (s < s_small) {
                // chi(t-s) - chi(t) + s chi'(t) = s^2 chi''/2 + O(s^3)
                return -cs / (4.0 * kPi * kPi) * cosw;
            }
            const double bracket = profile.chi(t - s) - c + s * cp;
            return bracket * (-1.0 / (2.0 * kPi * kPi * s * s)) * cosw;
        },
        osc, spec);
    value += gbar * c * vacuum;

    return value;
}

bool sharp_switch_guard(const SwitchingProfile& profile,
                        const DetectorParams& det) {
    if (profile.kind() == ProfileKind::ConstantOn) return false;
    double lo, hi;
    if (profile.kind() == ProfileKind::TanhSwitchOff) {
        lo = profile.tau_bar() - 12.0 / profile.lambda();
        hi = profile.tau_bar() + 12.0 / profile.lambda();
    } else {
        auto support = profile.effective_support();
        lo = support.first;
        hi = support.second;
    }
    const std::size_t n = 512;
    for (std::size_t i = 0; i <= n; ++i) {
        const double tau = lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(n);
        const double c = profile.chi(tau);
        if (c < 1e-3) continue;  // deep tail, rate is negligible there
        if (std::abs(profile.chi_prime(tau)) * det.tau_s > c) return true;
    }
    return false;
}

CoefficientGrid coefficient_grid(const SwitchingProfile& profile,
                                 const BathParams& bath,
                                 const DetectorParams& det, double t0,
                                 double t1, std::size_t n_points,
                                 const numerics::QuadratureSpec& spec) {
    if (n_points < 2) throw DomainError("coefficient_grid: n_points >= 2");
    if (!(t0 < t1)) throw DomainError("coefficient_grid: t0 < t1 required");

    CoefficientGrid grid;
    grid.t_grid.resize(n_points);
    grid.c_plus.resize(n_points);
    grid.c_minus.resize(n_points);
    grid.cumulative.resize(n_points);
    const double dt = (t1 - t0) / static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double t = t0 + dt * static_cast<double>(i);
        grid.t_grid[i] = t;
        grid.c_plus[i] = coefficient(t, det.omega, profile, bath, det, spec);
        grid.c_minus[i] = coefficient(t, -det.omega, profile, bath, det, spec);
    }
    grid.cumulative[0] = 0.0;
    for (std::size_t i = 1; i < n_points; ++i) {
        const double a = grid.c_plus[i - 1] + grid.c_minus[i - 1];
        const double b = grid.c_plus[i] + grid.c_minus[i];
        grid.cumulative[i] = grid.cumulative[i - 1] + 0.5 * dt * (a + b);
        if (a < 0.0 || b < 0.0) grid.negative_rate_flag = true;
    }
    grid.sharp_switch_warning = sharp_switch_guard(profile, det);
    return grid;
}

}  // namespace udw

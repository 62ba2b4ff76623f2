#pragma once

#include <string>
#include <vector>

#include "udw/correlators.hpp"
#include "udw/numerics.hpp"

namespace udw {

enum class ProfileKind {
    Gaussian,
    Lorentz,
    TanhWindow,
    TanhSwitchOff,
    Exponential,
    Tabulated,
    ConstantOn,
};

std::string to_string(ProfileKind kind);
ProfileKind profile_kind_from_string(const std::string& name);

/// Switching/window profile chi(tau), normalized to peak 1.
class SwitchingProfile {
  public:
    static SwitchingProfile gaussian(double tau0, double tau_bar = 0.0);
    static SwitchingProfile lorentz(double tau0, double tau_bar = 0.0);
    static SwitchingProfile tanh_window(double tau1, double tau2, double lambda);
    static SwitchingProfile tanh_switch_off(double lambda, double tau_bar = 0.0);
    static SwitchingProfile exponential(double tau0, double tau_bar = 0.0);
    static SwitchingProfile tabulated(std::vector<double> tau,
                                      std::vector<double> chi);
    static SwitchingProfile constant_on();

    /// Two-column CSV with header "tau,chi", monotone tau, >= 8 rows.
    static SwitchingProfile from_csv(const std::string& path);

    ProfileKind kind() const { return kind_; }
    double tau_bar() const { return tau_bar_; }
    double tau0() const { return tau0_; }
    double lambda() const { return lambda_; }
    double tau1() const { return tau1_; }
    double tau2() const { return tau2_; }
    /// z = lambda tau0 for TanhWindow; soft-window warning below z = 5.
    double z() const { return lambda_ * tau0_; }
    bool soft_window_warning() const;

    double chi(double tau) const;
    double chi_prime(double tau) const;
    double chi_second(double tau) const;

    /// chi(-inf), the saturation value (1 for TanhSwitchOff, else 0;
    /// ConstantOn is 1).
    double chi_minus_infinity() const;

    /// [lo, hi] outside which chi < 1e-8 (table range for Tabulated).
    /// Throws InfiniteMeasurement for ConstantOn and TanhSwitchOff.
    std::pair<double, double> effective_support() const;

  private:
    SwitchingProfile() = default;

    ProfileKind kind_ = ProfileKind::ConstantOn;
    double tau_bar_ = 0.0;
    double tau0_ = 1.0;
    double lambda_ = 0.0;
    double tau1_ = 0.0;
    double tau2_ = 0.0;
    numerics::CubicSpline table_;
};

struct WindowDiagnostics {
    double tau_m = 0.0;
    double tau_eff = 0.0;
    double ratio = 0.0;
};

/// tau_m = int chi^2 dtau (closed forms for Gaussian/Lorentz/Exponential).
double measurement_time(const SwitchingProfile& profile,
                        const numerics::QuadratureSpec& spec = {});

/// tau_eff = (int chi^2 / int chi'^2)^{1/2}.
double effective_time(const SwitchingProfile& profile,
                      const numerics::QuadratureSpec& spec = {});

WindowDiagnostics window_diagnostics(const SwitchingProfile& profile,
                                     const numerics::QuadratureSpec& spec = {});

/// D_chi(s) = (1/tau_m) int dtau chi(tau + s/2) chi(tau - s/2) by quadrature.
double d_chi_numeric(const SwitchingProfile& profile, double s,
                     const numerics::QuadratureSpec& spec = {});

/// Closed forms for Gaussian, Lorentz, TanhWindow; UnsupportedProfile else.
double d_chi_closed(const SwitchingProfile& profile, double s);

/// D_chi F_beta(Omega) = int ds D_chi(s) e^{-i Omega s} G^+_beta(s), evaluated
/// through the renormalized split (thermal-difference kernel plus subtracted
/// vacuum kernel), so beta = inf is regular without an epsilon regulator.
/// omega_arg may carry either sign. ConstantOn returns spectral_f.
double apply_window_to_spectrum(const SwitchingProfile& profile,
                                double omega_arg, const BathParams& bath,
                                const numerics::QuadratureSpec& spec = {});

/// The softest profile at fixed measurement time: chi = e^{-|tau|/tau0}.
SwitchingProfile optimal_profile(double tau0);

struct HeatingProfileResult {
    SwitchingProfile profile = SwitchingProfile::constant_on();
    double tau_m = 0.0;
    /// Integrated magnitude of clamped negative spectral curvature relative to
    /// the total; > 0.01 flags NegativeSpectralCurvature.
    double curvature_defect = 0.0;
    bool defect_flag = false;
};

/// Window profile whose autocorrelation maps the vacuum spectrum onto the
/// thermal spectrum at inverse temperature bar_beta:
/// chi(tau) = int domega (tau_m d^2F_{bar beta}/domega^2)^{1/2} e^{-i omega tau},
/// normalized to peak 1 with tau_m recomputed by one fixed-point pass.
HeatingProfileResult heating_profile(double bar_beta,
                                     const std::vector<double>& omega_grid,
                                     const numerics::QuadratureSpec& spec = {});

/// d^2 F_beta / d omega^2 from the closed form of the spectral function.
double spectral_f_second_derivative(double omega_arg, double beta);

}  // namespace udw

#include "udw/switching.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace udw {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kChiFloor = 1e-8;  // "effective support" threshold

double g_over_sinh(double w) {
    // w / sinh(w), total on the real line.
    if (w == 0.0) return 1.0;
    if (std::abs(w) > 700.0) return 0.0;
    return w / std::sinh(w);
}

// Adaptive Simpson can terminate early on integrands whose support is a
// narrow spike inside a wide interval (all probe points land on ~0); force a
// minimum subdivision first.
double integrate_panels(const std::function<double(double)>& f, double lo,
                        double hi, const numerics::QuadratureSpec& spec,
                        int n_panels = 64) {
    double total = 0.0;
    const double w = (hi - lo) / n_panels;
    for (int i = 0; i < n_panels; ++i) {
        total += numerics::integrate_finite(f, lo + i * w, lo + (i + 1) * w,
                                            spec);
    }
    return total;
}

}  // namespace

std::string to_string(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::Gaussian: return "gaussian";
        case ProfileKind::Lorentz: return "lorentz";
        case ProfileKind::TanhWindow: return "tanh_window";
        case ProfileKind::TanhSwitchOff: return "tanh_switch_off";
        case ProfileKind::Exponential: return "exponential";
        case ProfileKind::Tabulated: return "tabulated";
        case ProfileKind::ConstantOn: return "constant_on";
    }
    return "unknown";
}

ProfileKind profile_kind_from_string(const std::string& name) {
    if (name == "gaussian") return ProfileKind::Gaussian;
    if (name == "lorentz") return ProfileKind::Lorentz;
    if (name == "tanh_window") return ProfileKind::TanhWindow;
    if (name == "tanh_switch_off") return ProfileKind::TanhSwitchOff;
    if (name == "exponential") return ProfileKind::Exponential;
    if (name == "tabulated") return ProfileKind::Tabulated;
    if (name == "constant_on") return ProfileKind::ConstantOn;
    throw DomainError("unknown profile kind: " + name);
}

SwitchingProfile SwitchingProfile::gaussian(double tau0, double tau_bar) {
    if (!(tau0 > 0.0)) throw DomainError("gaussian: tau0 must be > 0");
    SwitchingProfile p;
    p.kind_ = ProfileKind::Gaussian;
    p.tau0_ = tau0;
    p.tau_bar_ = tau_bar;
    return p;
}

SwitchingProfile SwitchingProfile::lorentz(double tau0, double tau_bar) {
    if (!(tau0 > 0.0)) throw DomainError("lorentz: tau0 must be > 0");
    SwitchingProfile p;
    p.kind_ = ProfileKind::Lorentz;
    p.tau0_ = tau0;
    p.tau_bar_ = tau_bar;
    return p;
}

SwitchingProfile SwitchingProfile::tanh_window(double tau1, double tau2,
                                               double lambda) {
    if (!(tau2 > tau1)) throw DomainError("tanh_window: tau2 must exceed tau1");
    if (!(lambda > 0.0)) throw DomainError("tanh_window: lambda must be > 0");
    SwitchingProfile p;
    p.kind_ = ProfileKind::TanhWindow;
    p.tau1_ = tau1;
    p.tau2_ = tau2;
    p.tau0_ = tau2 - tau1;
    p.tau_bar_ = 0.5 * (tau1 + tau2);
    p.lambda_ = lambda;
    return p;
}

SwitchingProfile SwitchingProfile::tanh_switch_off(double lambda,
                                                   double tau_bar) {
    if (!(lambda > 0.0)) throw DomainError("tanh_switch_off: lambda must be > 0");
    SwitchingProfile p;
    p.kind_ = ProfileKind::TanhSwitchOff;
    p.lambda_ = lambda;
    p.tau_bar_ = tau_bar;
    return p;
}

SwitchingProfile SwitchingProfile::exponential(double tau0, double tau_bar) {
    if (!(tau0 > 0.0)) throw DomainError("exponential: tau0 must be > 0");
    SwitchingProfile p;
    p.kind_ = ProfileKind::Exponential;
    p.tau0_ = tau0;
    p.tau_bar_ = tau_bar;
    return p;
}

SwitchingProfile SwitchingProfile::tabulated(std::vector<double> tau,
                                             std::vector<double> chi) {
    if (tau.size() < 8) throw DomainError("tabulated profile needs >= 8 rows");
    SwitchingProfile p;
    p.kind_ = ProfileKind::Tabulated;
    p.table_ = numerics::CubicSpline(tau, chi);
    p.tau_bar_ = 0.5 * (p.table_.x_min() + p.table_.x_max());
    p.tau0_ = 0.5 * (p.table_.x_max() - p.table_.x_min());
    return p;
}

SwitchingProfile SwitchingProfile::constant_on() {
    SwitchingProfile p;
    p.kind_ = ProfileKind::ConstantOn;
    return p;
}

SwitchingProfile SwitchingProfile::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open profile CSV: " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("tau,chi", 0) != 0) {
        throw DomainError("profile CSV must start with header 'tau,chi'");
    }
    std::vector<double> tau, chi;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string a, b;
        if (!std::getline(row, a, ',') || !std::getline(row, b)) {
            throw DomainError("malformed profile CSV row: " + line);
        }
        tau.push_back(std::stod(a));
        chi.push_back(std::stod(b));
    }
    return tabulated(std::move(tau), std::move(chi));
}

bool SwitchingProfile::soft_window_warning() const {
    return kind_ == ProfileKind::TanhWindow && z() < 5.0;
}

double SwitchingProfile::chi(double tau) const {
    const double u = tau - tau_bar_;
    switch (kind_) {
        case ProfileKind::Gaussian:
            return std::exp(-u * u / (tau0_ * tau0_));
        case ProfileKind::Lorentz:
            return tau0_ * tau0_ / (u * u + tau0_ * tau0_);
        case ProfileKind::TanhWindow:
            return (std::tanh(lambda_ * (tau - tau1_)) +
                    std::tanh(lambda_ * (tau2_ - tau))) /
                   (2.0 * std::tanh(0.5 * lambda_ * tau0_));
        case ProfileKind::TanhSwitchOff:
            return 0.5 * (1.0 - std::tanh(lambda_ * u));
        case ProfileKind::Exponential:
            return std::exp(-std::abs(u) / tau0_);
        case ProfileKind::Tabulated: {
            if (tau < table_.x_min() || tau > table_.x_max()) {
                const double edge =
                    (tau < table_.x_min()) ? table_(table_.x_min())
                                           : table_(table_.x_max());
                if (std::abs(edge) <= 1e-6) return 0.0;
                throw InterpolationRange("tabulated profile out of range");
            }
            return table_(tau);
        }
        case ProfileKind::ConstantOn:
            return 1.0;
    }
    return 0.0;
}

double SwitchingProfile::chi_prime(double tau) const {
    const double u = tau - tau_bar_;
    switch (kind_) {
        case ProfileKind::Gaussian:
            return -2.0 * u / (tau0_ * tau0_) * chi(tau);
        case ProfileKind::Lorentz: {
            const double d = u * u + tau0_ * tau0_;
            return -2.0 * u * tau0_ * tau0_ / (d * d);
        }
        case ProfileKind::TanhWindow: {
            const double a = lambda_ * (tau - tau1_);
            const double b = lambda_ * (tau2_ - tau);
            const double sa = 1.0 / std::cosh(a);
            const double sb = 1.0 / std::cosh(b);
            return lambda_ * (sa * sa - sb * sb) /
                   (2.0 * std::tanh(0.5 * lambda_ * tau0_));
        }
        case ProfileKind::TanhSwitchOff: {
            const double s = 1.0 / std::cosh(lambda_ * u);
            return -0.5 * lambda_ * s * s;
        }
        case ProfileKind::Exponential:
            return -(u >= 0.0 ? 1.0 : -1.0) / tau0_ * chi(tau);
        case ProfileKind::Tabulated: {
            if (tau < table_.x_min() || tau > table_.x_max()) return 0.0;
            return table_.derivative(tau);
        }
        case ProfileKind::ConstantOn:
            return 0.0;
    }
    return 0.0;
}

double SwitchingProfile::chi_second(double tau) const {
    const double u = tau - tau_bar_;
    switch (kind_) {
        case ProfileKind::Gaussian: {
            const double t2 = tau0_ * tau0_;
            return (4.0 * u * u / (t2 * t2) - 2.0 / t2) * chi(tau);
        }
        case ProfileKind::Lorentz: {
            const double t2 = tau0_ * tau0_;
            const double d = u * u + t2;
            return t2 * (6.0 * u * u - 2.0 * t2) / (d * d * d);
        }
        case ProfileKind::TanhWindow: {
            const double a = lambda_ * (tau - tau1_);
            const double b = lambda_ * (tau2_ - tau);
            const double sa = 1.0 / std::cosh(a);
            const double sb = 1.0 / std::cosh(b);
            return -lambda_ * lambda_ *
                   (sa * sa * std::tanh(a) + sb * sb * std::tanh(b)) /
                   std::tanh(0.5 * lambda_ * tau0_);
        }
        case ProfileKind::TanhSwitchOff: {
            const double s = 1.0 / std::cosh(lambda_ * u);
            return lambda_ * lambda_ * s * s * std::tanh(lambda_ * u);
        }
        case ProfileKind::Exponential:
            return chi(tau) / (tau0_ * tau0_);
        case ProfileKind::Tabulated: {
            if (tau < table_.x_min() || tau > table_.x_max()) return 0.0;
            return table_.second_derivative(tau);
        }
        case ProfileKind::ConstantOn:
            return 0.0;
    }
    return 0.0;
}

double SwitchingProfile::chi_minus_infinity() const {
    switch (kind_) {
        case ProfileKind::TanhSwitchOff:
        case ProfileKind::ConstantOn:
            return 1.0;
        default:
            return 0.0;
    }
}

std::pair<double, double> SwitchingProfile::effective_support() const {
    switch (kind_) {
        case ProfileKind::Gaussian: {
            const double w = tau0_ * std::sqrt(-std::log(kChiFloor));
            return {tau_bar_ - w, tau_bar_ + w};
        }
        case ProfileKind::Lorentz: {
            const double w = tau0_ * std::sqrt(1.0 / kChiFloor - 1.0);
            return {tau_bar_ - w, tau_bar_ + w};
        }
        case ProfileKind::TanhWindow: {
            const double w = (0.5 * -std::log(kChiFloor) + 5.0) / lambda_;
            return {tau1_ - w, tau2_ + w};
        }
        case ProfileKind::Exponential: {
            const double w = -tau0_ * std::log(kChiFloor);
            return {tau_bar_ - w, tau_bar_ + w};
        }
        case ProfileKind::Tabulated:
            return {table_.x_min(), table_.x_max()};
        default:
            throw InfiniteMeasurement("profile has no finite support");
    }
}

double measurement_time(const SwitchingProfile& profile,
                        const numerics::QuadratureSpec& spec) {
    switch (profile.kind()) {
        case ProfileKind::Gaussian:
            return profile.tau0() * std::sqrt(kPi / 2.0);
        case ProfileKind::Lorentz:
            return kPi * profile.tau0() / 2.0;
        case ProfileKind::Exponential:
            return profile.tau0();
        case ProfileKind::ConstantOn:
        case ProfileKind::TanhSwitchOff:
            throw InfiniteMeasurement("measurement_time diverges for profile " +
                                      to_string(profile.kind()));
        default: {
            const auto [lo, hi] = profile.effective_support();
            return integrate_panels(
                [&](double t) {
                    const double c = profile.chi(t);
                    return c * c;
                },
                lo, hi, spec);
        }
    }
}

double effective_time(const SwitchingProfile& profile,
                      const numerics::QuadratureSpec& spec) {
    switch (profile.kind()) {
        case ProfileKind::Gaussian:
            return profile.tau0();
        case ProfileKind::Lorentz:
            return profile.tau0() * std::sqrt(2.0);
        case ProfileKind::Exponential:
            return profile.tau0();
        case ProfileKind::ConstantOn:
            throw ZeroDerivative("effective_time undefined for constant_on");
        case ProfileKind::TanhSwitchOff:
            throw InfiniteMeasurement(
                "effective_time requires a finite measurement time");
        default: {
            const auto [lo, hi] = profile.effective_support();
            const double num = measurement_time(profile, spec);
            const double den = integrate_panels(
                [&](double t) {
                    const double d = profile.chi_prime(t);
                    return d * d;
                },
                lo, hi, spec);
            if (!(den > 0.0)) throw ZeroDerivative("profile has zero chi'");
            return std::sqrt(num / den);
        }
    }
}

WindowDiagnostics window_diagnostics(const SwitchingProfile& profile,
                                     const numerics::QuadratureSpec& spec) {
    WindowDiagnostics d;
    d.tau_m = measurement_time(profile, spec);
    d.tau_eff = effective_time(profile, spec);
    d.ratio = d.tau_m / d.tau_eff;
    return d;
}

double d_chi_numeric(const SwitchingProfile& profile, double s,
                     const numerics::QuadratureSpec& spec) {
    const double tau_m = measurement_time(profile, spec);
    const auto [lo, hi] = profile.effective_support();
    const double half = 0.5 * std::abs(s);
    const double a = lo + half;
    const double b = hi - half;
    if (!(a < b)) return 0.0;
    const double integral = integrate_panels(
        [&](double t) {
            return profile.chi(t + 0.5 * s) * profile.chi(t - 0.5 * s);
        },
        a, b, spec);
    return integral / tau_m;
}

double d_chi_closed(const SwitchingProfile& profile, double s) {
    const double t0 = profile.tau0();
    switch (profile.kind()) {
        case ProfileKind::Gaussian:
            return std::exp(-s * s / (2.0 * t0 * t0));
        case ProfileKind::Lorentz: {
            const double r = s / (2.0 * t0);
            return 1.0 / (1.0 + r * r);
        }
        case ProfileKind::TanhWindow: {
            const double z = profile.z();
            const double u = profile.lambda() * std::abs(s);
            if (u < 1e-6) return 1.0;  // removable singularity at s = 0
            if (u > 1400.0) return 0.0;
            const double sh_u = std::sinh(u);
            const double bracket = g_over_sinh(z - u) - g_over_sinh(z + u);
            const double norm = z / std::tanh(z) - 1.0;
            // sinh z / sinh u evaluated as exp of the log-difference when both
            // are large, to avoid inf/inf.
            double ratio;
            if (z > 30.0 && u > 30.0) {
                ratio = std::exp(z - u);
            } else {
                ratio = std::sinh(z) / sh_u;
            }
            return 0.5 * ratio * bracket / norm;
        }
        default:
            throw UnsupportedProfile("d_chi_closed supports Gaussian, Lorentz, "
                                     "TanhWindow only");
    }
}

namespace {

// D_chi(s) through the cheapest accurate route for each profile family.
struct WindowAutocorrelation {
    explicit WindowAutocorrelation(const SwitchingProfile& profile,
                                   const numerics::QuadratureSpec& spec)
        : profile_(profile) {
        switch (profile.kind()) {
            case ProfileKind::Gaussian:
            case ProfileKind::Lorentz:
            case ProfileKind::TanhWindow:
            case ProfileKind::Exponential:
                break;
            case ProfileKind::Tabulated: {
                // dense uniform resampling + direct lag correlation; the
                // autocorrelation must be resolved well below the profile
                // width, which per-lag quadrature cannot guarantee cheaply
                const auto [lo, hi] = profile.effective_support();
                s_max_ = hi - lo;
                const std::size_t n = 4096;
                const double dt = (hi - lo) / static_cast<double>(n - 1);
                std::vector<double> samples(n);
                for (std::size_t i = 0; i < n; ++i) {
                    samples[i] = profile.chi(lo + dt * static_cast<double>(i));
                }
                double tau_m = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
                    tau_m += w * samples[i] * samples[i];
                }
                std::vector<double> lag(n);
                for (std::size_t j = 0; j < n; ++j) {
                    double acc = 0.0;
                    for (std::size_t i = 0; i + j < n; ++i) {
                        const double w =
                            (i == 0 || i + j == n - 1) ? 0.5 : 1.0;
                        acc += w * samples[i] * samples[i + j];
                    }
                    lag[j] = acc / tau_m;
                }
                // spline the even extension so the natural (zero-curvature)
                // boundary lands on the decayed tail, not at s = 0 where
                // D'' = -1/tau_eff^2 feeds the vacuum kernel
                std::vector<double> xs(2 * n - 1), ys(2 * n - 1);
                for (std::size_t j = 0; j < n; ++j) {
                    xs[n - 1 + j] = dt * static_cast<double>(j);
                    xs[n - 1 - j] = -dt * static_cast<double>(j);
                    ys[n - 1 + j] = lag[j];
                    ys[n - 1 - j] = lag[j];
                }
                (void)spec;
                cache_ = numerics::CubicSpline(std::move(xs), std::move(ys));
                break;
            }
            default:
                throw UnsupportedProfile(
                    "window autocorrelation needs a finite measurement time");
        }
    }

    double operator()(double s) const {
        s = std::abs(s);
        switch (profile_.kind()) {
            case ProfileKind::Exponential: {
                const double u = s / profile_.tau0();
                return std::exp(-u) * (1.0 + u);
            }
            case ProfileKind::Tabulated:
                return (s >= s_max_) ? 0.0 : cache_(s);
            default:
                return d_chi_closed(profile_, s);
        }
    }

  private:
    const SwitchingProfile& profile_;
    double s_max_ = 0.0;
    numerics::CubicSpline cache_;
};

}  // namespace

double apply_window_to_spectrum(const SwitchingProfile& profile,
                                double omega_arg, const BathParams& bath,
                                const numerics::QuadratureSpec& spec) {
    bath.validate();
    if (profile.kind() == ProfileKind::ConstantOn) {
        return spectral_f(omega_arg, bath);
    }
    const WindowAutocorrelation d_chi(profile, spec);
    const double tau_eff = effective_time(profile, spec);
    const double osc = std::abs(omega_arg);
    const double s_small = 1e-4 * tau_eff;

    double thermal = 0.0;
    if (!bath.is_vacuum()) {
        thermal = numerics::integrate_semi_infinite(
            [&](double s) {
                return d_chi(s) * tilde_g_difference(s, bath.beta) *
                       std::cos(omega_arg * s);
            },
            osc, spec);
    }
    // (D(s) - 1) ~ -s^2/(2 tau_eff^2) cancels the 1/s^2 vacuum kernel.
    const double vacuum = numerics::integrate_semi_infinite(
        [&](double s) {
            if (s < s_small) {
                return std::cos(omega_arg * s) /
                       (4.0 * kPi * kPi * tau_eff * tau_eff);
            }
            return (d_chi(s) - 1.0) * (-1.0 / (2.0 * kPi * kPi * s * s)) *
                   std::cos(omega_arg * s);
        },
        osc, spec);
    const double f_vacuum_limit =
        (omega_arg < 0.0) ? -omega_arg / (2.0 * kPi) : 0.0;
    return thermal + vacuum + f_vacuum_limit;
}

SwitchingProfile optimal_profile(double tau0) {
    return SwitchingProfile::exponential(tau0);
}

double spectral_f_second_derivative(double omega_arg, double beta) {
    if (!(beta > 0.0) || std::isinf(beta)) {
        throw DomainError("spectral_f_second_derivative needs finite beta > 0");
    }
    const double u = beta * omega_arg;
    double phi2;
    if (std::abs(u) < 1e-3) {
        const double u2 = u * u;
        phi2 = 1.0 / 6.0 - u2 / 60.0 + u2 * u2 / 1008.0;
    } else if (u > 300.0) {
        phi2 = (u - 2.0) * std::exp(-u);
    } else if (u < -300.0) {
        phi2 = -(u + 2.0) * std::exp(u);
    } else {
        const double q = 1.0 / std::expm1(u);
        const double eu = std::exp(u);
        const double q1 = -eu * q * q;
        const double q2 = -eu * q * q + 2.0 * eu * eu * q * q * q;
        phi2 = 2.0 * q1 + u * q2;
    }
    return beta / (2.0 * kPi) * phi2;
}

HeatingProfileResult heating_profile(double bar_beta,
                                     const std::vector<double>& omega_grid,
                                     const numerics::QuadratureSpec& spec) {
    if (!(bar_beta > 0.0) || std::isinf(bar_beta)) {
        throw DomainError("heating_profile needs finite bar_beta > 0");
    }
    const std::size_t n = omega_grid.size();
    if (n < 16) throw DomainError("heating_profile: omega grid too small");

    std::vector<double> curv(n), amp(n);
    double neg_mass = 0.0, abs_mass = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        curv[i] = spectral_f_second_derivative(omega_grid[i], bar_beta);
        abs_mass += std::abs(curv[i]);
        if (curv[i] < 0.0) neg_mass += -curv[i];
        amp[i] = std::sqrt(std::max(curv[i], 0.0));
        peak = std::max(peak, curv[i]);
    }
    HeatingProfileResult out;
    out.curvature_defect = (abs_mass > 0.0) ? neg_mass / abs_mass : 1.0;

    // Resolution check: the curvature bump (width ~ 1/bar_beta) must cover
    // several grid points, else the transform degenerates.
    std::size_t resolved = 0;
    for (double c : curv) {
        if (c > 1e-3 * peak) ++resolved;
    }
    out.defect_flag = out.curvature_defect > 0.01 || resolved < 5 ||
                      !(abs_mass > 0.0);

    // The transform is a spike of width well below bar_beta with fast tails;
    // resolution matters far more than range here.
    const double tau_max = 20.0 * bar_beta;
    const std::size_t n_tau = 4801;
    std::vector<double> tau_grid(n_tau);
    for (std::size_t j = 0; j < n_tau; ++j) {
        tau_grid[j] = -tau_max + 2.0 * tau_max * static_cast<double>(j) /
                                     static_cast<double>(n_tau - 1);
    }
    std::vector<double> chi =
        numerics::fourier_transform_symmetric(omega_grid, amp, tau_grid, spec);

    // Normalize to peak 1; the tau_m^{1/2} factor inside the square root is a
    // constant rescale and drops out here. One fixed-point pass: recompute
    // tau_m from the normalized profile.
    const double chi_peak = *std::max_element(chi.begin(), chi.end());
    if (!(chi_peak > 0.0)) {
        throw DomainError("heating_profile: degenerate spectral curvature");
    }
    for (double& c : chi) c = std::max(c / chi_peak, 0.0);
    out.profile = SwitchingProfile::tabulated(tau_grid, chi);
    out.tau_m = measurement_time(out.profile, spec);
    return out;
}

}  // namespace udw

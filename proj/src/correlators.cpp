#include "udw/correlators.hpp"

#include <cmath>

namespace udw {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

std::complex<double> thermal_wightman(double s, const BathParams& bath) {
    bath.validate();
    if (s == 0.0 && bath.epsilon == 0.0) {
        throw DomainError("thermal_wightman: s = 0 requires epsilon > 0");
    }
    const std::complex<double> z(s, -bath.epsilon);
    if (bath.is_vacuum()) {
        return -1.0 / (4.0 * kPi * kPi * z * z);
    }
    const std::complex<double> sh = std::sinh(kPi * z / bath.beta);
    return -1.0 / (4.0 * bath.beta * bath.beta * sh * sh);
}

double tilde_g_thermal(double s, const BathParams& bath) {
    // Sum of complex conjugates; twice the real part of G^+(s).
    return 2.0 * thermal_wightman(s, bath).real();
}

double tilde_g_vacuum(double s, double epsilon) {
    if (s == 0.0 && epsilon == 0.0) {
        throw DomainError("tilde_g_vacuum: s = 0 requires epsilon > 0");
    }
    const double s2 = s * s;
    const double e2 = epsilon * epsilon;
    const double denom = (s2 + e2) * (s2 + e2);
    return -(1.0 / (2.0 * kPi * kPi)) * (s2 - e2) / denom;
}

double tilde_g_difference(double s, double beta) {
    if (!(beta > 0.0)) throw DomainError("tilde_g_difference: beta must be > 0");
    if (std::isinf(beta)) return 0.0;
    s = std::abs(s);
    const double x = kPi * s / beta;
    const double pref = 1.0 / (2.0 * beta * beta);
    if (x < 1e-4) {
        // 1/x^2 - csch^2 x = 1/3 - x^2/15 + 2 x^4/189 - ...
        const double x2 = x * x;
        return pref * (1.0 / 3.0 - x2 / 15.0 + 2.0 * x2 * x2 / 189.0);
    }
    if (x > 350.0) {
        return pref / (x * x);  // csch^2 underflows
    }
    const double sh = std::sinh(x);
    return pref * (1.0 / (x * x) - 1.0 / (sh * sh));
}

double spectral_f(double omega_arg, const BathParams& bath) {
    bath.validate();
    const double eps = bath.epsilon;
    if (bath.is_vacuum()) {
        if (omega_arg == 0.0) {
            throw DomainError("spectral_f: omega = 0 undefined at beta = inf");
        }
        return (omega_arg < 0.0) ? -omega_arg / kTwoPi * std::exp(eps * omega_arg)
                                 : 0.0;
    }
    const double u = bath.beta * omega_arg;
    if (u > 700.0) return 0.0;
    // omega/(e^{beta omega}-1) via expm1 is stable through omega = 0,
    // where the analytic limit is 1/beta.
    const double base = (omega_arg == 0.0) ? 1.0 / bath.beta
                                           : omega_arg / std::expm1(u);
    return base * std::exp(eps * omega_arg) / kTwoPi;
}

}  // namespace udw

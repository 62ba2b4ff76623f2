#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "udw/errors.hpp"

namespace udw {

/// Thermal bath of the free massless scalar. beta = +inf means vacuum.
struct BathParams {
    double beta = 1.0;
    double epsilon = 0.0;  // UV regulator, time units

    bool is_vacuum() const { return std::isinf(beta); }
    void validate() const {
        if (!(beta > 0.0)) throw DomainError("BathParams: beta must be > 0");
        if (epsilon < 0.0) throw DomainError("BathParams: epsilon must be >= 0");
    }
    static BathParams vacuum(double epsilon = 0.0) {
        return {std::numeric_limits<double>::infinity(), epsilon};
    }
};

/// Two-level detector: gap, coupling gbar = g^2 mu_0^2, recovery time tau_s.
struct DetectorParams {
    double omega = 1.0;
    double gbar = 1.0;
    double tau_s = 0.1;

    void validate() const {
        if (!(omega > 0.0)) throw DomainError("DetectorParams: omega must be > 0");
        if (gbar < 0.0) throw DomainError("DetectorParams: gbar must be >= 0");
        if (!(tau_s > 0.0)) throw DomainError("DetectorParams: tau_s must be > 0");
    }
    // omega * tau_s < 1 is the recommended regime; callers may warn otherwise.
    bool recovery_scale_ok() const { return omega * tau_s < 1.0; }
};

/// Thermal Wightman function G^+(s) along the at-rest world-line,
/// -(1/4 beta^2) sinh^{-2}(pi (s - i eps)/beta); vacuum -1/(4 pi^2 (s-i eps)^2).
std::complex<double> thermal_wightman(double s, const BathParams& bath);

/// Symmetrized sum G~_beta^+(s) = G^+(s) + G^+(-s), real by construction.
double tilde_g_thermal(double s, const BathParams& bath);

/// Vacuum analogue -(1/4 pi^2)(1/(s-i eps)^2 + 1/(s+i eps)^2).
double tilde_g_vacuum(double s, double epsilon);

/// The thermal - vacuum difference at eps = 0. Regular at s = 0 with limit
/// 1/(6 beta^2); evaluated from its analytic eps = 0 form.
double tilde_g_difference(double s, double beta);

/// Spectral function F_beta(Omega, eps) = (Omega/2pi) e^{eps Omega} /
/// (e^{beta Omega} - 1); vacuum limit -Theta(-Omega) Omega/2pi.
/// At Omega = 0 with finite beta returns the analytic limit 1/(2 pi beta).
double spectral_f(double omega_arg, const BathParams& bath);

}  // namespace udw

#include "udw/landauer.hpp"

#include <cmath>
#include <limits>

#include "udw/observables.hpp"

namespace udw {

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw DomainError("binary_entropy: p in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

double landauer_f_p(double p, double beta, double omega) {
    if (!(beta > 0.0)) throw DomainError("landauer_f_p: beta > 0");
    if (!(omega > 0.0)) throw DomainError("landauer_f_p: omega > 0");
    return beta * omega * p - binary_entropy(p);
}

double occupancy(double z, double omega) {
    if (std::isinf(z)) return z > 0.0 ? 0.0 : 1.0;
    const double u = z * omega;
    if (u > 700.0) return std::exp(-u);
    return 1.0 / (1.0 + std::exp(u));
}

double inverse_temperature_of(double p, double omega) {
    if (p < 0.0 || p > 1.0) throw DomainError("p in [0,1]");
    if (p == 0.0) return std::numeric_limits<double>::infinity();
    if (p == 1.0) return -std::numeric_limits<double>::infinity();
    return std::log(1.0 / p - 1.0) / omega;
}

double landauer_f(double z, double beta, double omega) {
    return landauer_f_p(occupancy(z, omega), beta, omega);
}

double work_bound(double beta, double omega, double p_initial,
                  double p_final) {
    return landauer_f_p(p_final, beta, omega) -
           landauer_f_p(p_initial, beta, omega);
}

double critical_beta_star(double beta, double omega,
                          const numerics::RootSpec& root_in) {
    const double p_th = occupancy(beta, omega);
    // solve in log-occupancy so the tiny-p roots of the large-gap regime
    // come out with full relative precision
    numerics::RootSpec root = root_in;
    root.bracket_lo = std::log(p_th);
    root.bracket_hi = 0.0;
    // F is exponentially flat near the large-gap root, so converge on the
    // abscissa rather than the residual
    root.tol = std::min(root.tol, 1e-15);
    const double y_root = numerics::find_root(
        [&](double y) { return landauer_f_p(std::exp(y), beta, omega); },
        root);
    return inverse_temperature_of(std::exp(y_root), omega);
}

double p_critical_closed(double beta, double omega) {
    return occupancy(beta - 1.0 / omega, omega);
}

double p_critical_exact(double beta, double omega) {
    return occupancy(critical_beta_star(beta, omega), omega);
}

double tau_eff_critical(double beta, double omega) {
    if (!(beta > 0.0) || !(omega > 0.0)) {
        throw DomainError("tau_eff_critical: beta, omega > 0");
    }
    const double e_minus_1 = std::exp(1.0) - 1.0;
    return beta * std::sqrt(kappa(beta * omega) / (2.0 * e_minus_1));
}

LandauerReport landauer_report(double beta, double omega, double p_initial,
                               double p_final) {
    LandauerReport rep;
    rep.beta = beta;
    rep.omega = omega;
    rep.beta0 = inverse_temperature_of(p_initial, omega);
    rep.beta_star = inverse_temperature_of(p_final, omega);
    rep.bound = work_bound(beta, omega, p_initial, p_final);
    rep.beta_bar_star = critical_beta_star(beta, omega);
    rep.p_crit_exact = occupancy(rep.beta_bar_star, omega);
    rep.p_crit_closed = p_critical_closed(beta, omega);
    rep.tau_eff_crit = tau_eff_critical(beta, omega);
    return rep;
}

}  // namespace udw

#include "udw/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace udw {

namespace {

double beta_star_of(double p, double omega) {
    if (p <= 0.0) return std::numeric_limits<double>::infinity();
    if (p >= 1.0) return -std::numeric_limits<double>::infinity();
    return std::log(1.0 / p - 1.0) / omega;
}

void check_grid(const CoefficientGrid& grid) {
    if (grid.t_grid.size() < 2) throw GridTooCoarse("grid needs >= 2 points");
    const double dt = grid.dt();
    double max_rate = 0.0;
    for (std::size_t i = 0; i < grid.t_grid.size(); ++i) {
        max_rate = std::max(max_rate,
                            std::abs(grid.c_plus[i] + grid.c_minus[i]));
    }
    if (dt * max_rate > 0.1) {
        const auto span = grid.t_grid.back() - grid.t_grid.front();
        const std::size_t suggestion =
            static_cast<std::size_t>(span * max_rate / 0.05) + 2;
        throw GridTooCoarse("evolution step too large (dt*max rate = " +
                            std::to_string(dt * max_rate) + "); use about " +
                            std::to_string(suggestion) + " points");
    }
}

}  // namespace

Trajectory evolve(const CoefficientGrid& grid, double p_initial,
                  const DetectorParams& det) {
    if (p_initial < 0.0 || p_initial > 1.0) {
        throw DomainError("evolve: p_initial must lie in [0,1]");
    }
    check_grid(grid);
    const std::size_t n = grid.t_grid.size();
    const double dt = grid.dt();

    Trajectory traj;
    traj.t_grid = grid.t_grid;
    traj.p.resize(n);
    traj.memory.resize(n);
    traj.beta_star.resize(n);

    double p = p_initial;
    traj.p[0] = p;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a0 = grid.c_plus[i] + grid.c_minus[i];
        const double a1 = grid.c_plus[i + 1] + grid.c_minus[i + 1];
        const double b0 = grid.c_minus[i];
        const double b1 = grid.c_minus[i + 1];
        // dp/dt = -a(t) p + b(t), a and b linear on the step
        auto rhs = [&](double theta, double y) {
            const double a = a0 + (a1 - a0) * theta;
            const double b = b0 + (b1 - b0) * theta;
            return -a * y + b;
        };
        const double k1 = rhs(0.0, p);
        const double k2 = rhs(0.5, p + 0.5 * dt * k1);
        const double k3 = rhs(0.5, p + 0.5 * dt * k2);
        const double k4 = rhs(1.0, p + dt * k3);
        p += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (p < 0.0 || p > 1.0) {
            p = std::clamp(p, 0.0, 1.0);
            ++traj.clamp_events;
        }
        traj.p[i + 1] = p;
    }
    for (std::size_t i = 0; i < n; ++i) {
        traj.memory[i] = std::exp(-grid.cumulative[i]);
        traj.beta_star[i] = beta_star_of(traj.p[i], det.omega);
    }
    return traj;
}

Trajectory closed_form_ground_start(const CoefficientGrid& grid,
                                    const DetectorParams& det) {
    check_grid(grid);
    const std::size_t n = grid.t_grid.size();
    const double dt = grid.dt();

    Trajectory traj;
    traj.t_grid = grid.t_grid;
    traj.p.assign(n, 0.0);
    traj.memory.resize(n);
    traj.beta_star.resize(n);

    // p(t_k) = e^{-cum(t_k)} int_{t_0}^{t_k} C_-(tau) e^{cum(tau)} dtau,
    // accumulated by trapezoid in the rescaled variable to keep it O(n).
    // The exp(cum) weights can overflow for long runs; accumulate the
    // integral in the "backward" form instead: I_k = I_{k-1} e^{-dcum} + step.
    double integral = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        const double dcum = grid.cumulative[k] - grid.cumulative[k - 1];
        const double w = std::exp(-dcum);
        // trapezoid of C_-(tau) e^{-(cum_k - cum_tau)} over [t_{k-1}, t_k]
        const double step =
            0.5 * dt * (grid.c_minus[k - 1] * w + grid.c_minus[k]);
        integral = integral * w + step;
        traj.p[k] = std::clamp(integral, 0.0, 1.0);
        if (integral < 0.0 || integral > 1.0) ++traj.clamp_events;
    }
    for (std::size_t i = 0; i < n; ++i) {
        traj.memory[i] = std::exp(-grid.cumulative[i]);
        traj.beta_star[i] = beta_star_of(traj.p[i], det.omega);
    }
    return traj;
}

double memory_factor(const CoefficientGrid& grid, double t) {
    const auto& tg = grid.t_grid;
    if (tg.empty()) throw GridTooCoarse("memory_factor: empty grid");
    if (t <= tg.front()) return 1.0;
    if (t >= tg.back()) return std::exp(-grid.cumulative.back());
    const auto it = std::upper_bound(tg.begin(), tg.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - tg.begin());
    const std::size_t lo = hi - 1;
    const double frac = (t - tg[lo]) / (tg[hi] - tg[lo]);
    const double cum =
        grid.cumulative[lo] + frac * (grid.cumulative[hi] - grid.cumulative[lo]);
    return std::exp(-cum);
}

TransitionReport transitions(const CoefficientGrid& grid,
                             const DetectorParams& det) {
    const Trajectory from_ground = evolve(grid, 0.0, det);
    const Trajectory from_excited = evolve(grid, 1.0, det);

    TransitionReport rep;
    rep.p01 = from_ground.p.back();
    rep.p10 = 1.0 - from_excited.p.back();
    rep.p00 = 1.0 - rep.p01;
    rep.p11 = 1.0 - rep.p10;
    if (rep.p10 > 0.0) {
        rep.xi = rep.p01 / rep.p10;
    } else {
        rep.xi = 0.0;
        rep.xi_undefined = true;
    }
    return rep;
}

}  // namespace udw

#pragma once

#include <cstddef>
#include <vector>

#include "udw/coefficients.hpp"

namespace udw {

struct Trajectory {
    std::vector<double> t_grid;
    std::vector<double> p;         // excited-state probability
    std::vector<double> memory;    // e^{-int (C_+ + C_-)}
    std::vector<double> beta_star; // Omega^{-1} log(1/p - 1), +-inf at p = 0, 1
    std::size_t clamp_events = 0;
};

struct TransitionReport {
    double p01 = 0.0;  // ground -> excited over the run
    double p10 = 0.0;
    double p00 = 1.0;
    double p11 = 1.0;
    double xi = 0.0;   // p01 / p10
    bool xi_undefined = false;  // p10 = 0 (vacuum), 0/0 flagged instead of inf
};

/// RK4 on dp/dt = -(C_+ + C_-) p + C_-, coefficients linearly interpolated
/// inside each grid step. Throws GridTooCoarse when dt max|C_+ + C_-| > 0.1.
Trajectory evolve(const CoefficientGrid& grid, double p_initial,
                  const DetectorParams& det);

/// Ground-start closed form p(t) = int_{t0}^t C_-(tau) e^{-int_tau^t (C_+ + C_-)}
/// by nested quadrature on the grid.
Trajectory closed_form_ground_start(const CoefficientGrid& grid,
                                    const DetectorParams& det);

/// e^{-cumulative(t)} with linear interpolation of the cumulative column.
double memory_factor(const CoefficientGrid& grid, double t);

/// Two runs (p = 0 and p = 1) -> finite-time transition probabilities and
/// their ratio xi = P(0->1)/P(1->0).
TransitionReport transitions(const CoefficientGrid& grid,
                             const DetectorParams& det);

}  // namespace udw

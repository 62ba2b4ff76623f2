#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "udw/errors.hpp"

namespace udw::numerics {

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    std::size_t max_subdivisions = 1u << 20;
    // Integrate until the integrand envelope falls below abs_tol or s exceeds
    // this many decay/thermal lengths.
    double tail_cutoff_factor = 40.0;

    void validate() const;
};

struct RootSpec {
    double bracket_lo = 0.0;
    double bracket_hi = 1.0;
    double tol = 1e-12;
    int max_iter = 200;
};

using RealFn = std::function<double(double)>;

/// Adaptive Simpson on a finite interval.
double integrate_finite(const RealFn& f, double a, double b,
                        const QuadratureSpec& spec = {});

/// Integral of f over [0, inf). For osc_freq > 0 the integrand carries a
/// cos/sin factor of that frequency; integration proceeds in half-period
/// panels with Aitken acceleration of the panel partial sums.
double integrate_semi_infinite(const RealFn& f, double osc_freq = 0.0,
                               const QuadratureSpec& spec = {});

/// Cosine integral Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt, x > 0.
double cosine_integral(double x);

/// Bracketed root finding: bisection refined by secant steps.
double find_root(const RealFn& g, const RootSpec& spec);

/// One classical 4th-order Runge-Kutta step.
double ode_step_rk4(double state,
                    const std::function<double(double, double)>& rhs, double t,
                    double dt);

/// int domega f(omega) e^{-i omega tau} by trapezoidal summation for an even,
/// real, absolutely integrable f sampled on a uniform grid symmetric about 0.
/// The result is real for every tau because the input is even.
std::vector<double> fourier_transform_symmetric(
    const std::vector<double>& omega_grid, const std::vector<double>& samples,
    const std::vector<double>& tau_grid, const QuadratureSpec& spec = {});

/// Natural cubic spline through (x, y) samples, monotone x.
class CubicSpline {
  public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double derivative(double x) const;
    double second_derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    bool empty() const { return x_.empty(); }

  private:
    std::size_t segment(double x) const;

    std::vector<double> x_, y_, m_;  // m_ = second derivatives at knots
};

}  // namespace udw::numerics

#include "udw/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace udw::numerics {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209;

struct SimpsonState {
    const RealFn* f;
    double rel_tol;
    double abs_tol;
    std::size_t budget;
};

double eval(const SimpsonState& st, double x) {
    const double v = (*st.f)(x);
    if (!std::isfinite(v)) {
        throw NonFinite("integrand returned non-finite value at x = " +
                        std::to_string(x));
    }
    return v;
}

double simpson_recurse(SimpsonState& st, double a, double b, double fa,
                       double fm, double fb, double whole, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(st, lm);
    const double frm = eval(st, rm);
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    const double tol =
        std::max(st.abs_tol, st.rel_tol * std::abs(left + right));
    if (depth > 60) {
        throw NonConvergence("adaptive Simpson recursion depth exhausted");
    }
    if (st.budget == 0) {
        throw NonConvergence("adaptive Simpson subdivision budget exhausted");
    }
    --st.budget;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_recurse(st, a, m, fa, flm, fm, left, depth + 1) +
           simpson_recurse(st, m, b, fm, frm, fb, right, depth + 1);
}

double simpson(SimpsonState& st, double a, double b) {
    if (a == b) return 0.0;
    const double fa = eval(st, a);
    const double fb = eval(st, b);
    const double fm = eval(st, 0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_recurse(st, a, b, fa, fm, fb, whole, 0);
}

// Iterated Aitken delta-squared extrapolation of a partial-sum sequence.
double aitken_limit(std::vector<double> s) {
    while (s.size() >= 3) {
        std::vector<double> next;
        next.reserve(s.size() - 2);
        for (std::size_t i = 0; i + 2 < s.size(); ++i) {
            const double d1 = s[i + 1] - s[i];
            const double d2 = s[i + 2] - 2.0 * s[i + 1] + s[i];
            if (d2 == 0.0) {
                next.push_back(s[i + 2]);
            } else {
                next.push_back(s[i + 2] - (s[i + 2] - s[i + 1]) *
                                              (s[i + 2] - s[i + 1]) / d2);
            }
        }
        s = std::move(next);
    }
    return s.back();
}

// Ci via the continued fraction of E1(ix): Ci(x) = -Re E1(ix).
double ci_continued_fraction(double x) {
    using C = std::complex<double>;
    const C z(0.0, x);
    const double tiny = 1e-300;
    C b = z + 1.0;
    C c = 1.0 / tiny;
    C d = 1.0 / b;
    C h = d;
    for (int i = 1; i <= 400; ++i) {
        const double a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const C delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    const C e1 = std::exp(-z) * h;
    return -e1.real();
}

double ci_series(double x) {
    // gamma + ln x + sum_{k>=1} (-1)^k x^{2k} / (2k (2k)!)
    double sum = 0.0;
    double term = 1.0;  // builds x^{2k}/(2k)! iteratively
    const double x2 = x * x;
    for (int k = 1; k <= 60; ++k) {
        term *= x2 / ((2.0 * k - 1.0) * (2.0 * k));
        const double contrib = ((k % 2) ? -1.0 : 1.0) * term / (2.0 * k);
        sum += contrib;
        if (std::abs(contrib) < 1e-18 * std::max(1.0, std::abs(sum))) break;
    }
    return kEulerGamma + std::log(x) + sum;
}

}  // namespace

void QuadratureSpec::validate() const {
    if (rel_tol <= 0.0 || abs_tol <= 0.0 || max_subdivisions < 1) {
        throw DomainError("invalid QuadratureSpec");
    }
}

double integrate_finite(const RealFn& f, double a, double b,
                        const QuadratureSpec& spec) {
    spec.validate();
    SimpsonState st{&f, spec.rel_tol, spec.abs_tol, spec.max_subdivisions};
    return simpson(st, a, b);
}

double integrate_semi_infinite(const RealFn& f, double osc_freq,
                               const QuadratureSpec& spec) {
    spec.validate();
    if (osc_freq < 0.0) throw DomainError("osc_freq must be >= 0");

    SimpsonState st{&f, spec.rel_tol, spec.abs_tol, spec.max_subdivisions};

    if (osc_freq == 0.0) {
        // Progressive panels with geometric growth; stop once panels stop
        // contributing.
        double total = 0.0;
        double a = 0.0;
        double width = 1.0;
        int idle = 0;
        for (int k = 0; k < 200; ++k) {
            const double b = a + width;
            const double piece = simpson(st, a, b);
            total += piece;
            const double tol =
                std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
            idle = (std::abs(piece) < tol) ? idle + 1 : 0;
            if (idle >= 2) return total;
            a = b;
            width *= 1.5;
        }
        throw NonConvergence("semi-infinite integral did not converge");
    }

    // Half-period panels + Aitken acceleration of the partial sums.
    const double panel = M_PI / osc_freq;
    std::vector<double> partial;
    partial.reserve(128);
    double total = 0.0;
    double prev_estimate = std::numeric_limits<double>::quiet_NaN();
    const std::size_t max_panels = 4096;
    for (std::size_t k = 0; k < max_panels; ++k) {
        const double a = static_cast<double>(k) * panel;
        total += simpson(st, a, a + panel);
        partial.push_back(total);
        if (partial.size() >= 6 && partial.size() % 2 == 0) {
            const double estimate = aitken_limit(partial);
            const double tol =
                std::max(spec.abs_tol, spec.rel_tol * std::abs(estimate));
            if (std::isfinite(prev_estimate) &&
                std::abs(estimate - prev_estimate) < tol) {
                return estimate;
            }
            prev_estimate = estimate;
        }
        // Plain convergence: panels themselves became negligible.
        if (k >= 4 && std::abs(total - partial[k - 1]) <
                          std::max(spec.abs_tol,
                                   0.01 * spec.rel_tol * std::abs(total)) &&
            std::abs(partial[k - 1] - partial[k - 2]) <
                std::max(spec.abs_tol,
                         0.01 * spec.rel_tol * std::abs(total))) {
            return total;
        }
    }
    throw NonConvergence("oscillatory semi-infinite integral did not converge");
}

double cosine_integral(double x) {
    if (!(x > 0.0)) throw DomainError("cosine_integral requires x > 0");
    if (x <= 8.0) return ci_series(x);
    return ci_continued_fraction(x);
}

double find_root(const RealFn& g, const RootSpec& spec) {
    double a = spec.bracket_lo;
    double b = spec.bracket_hi;
    if (!(a < b)) throw DomainError("RootSpec requires bracket_lo < bracket_hi");
    double fa = g(a);
    double fb = g(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) {
        throw NoSignChange("find_root: no sign change over bracket");
    }
    const double scale = std::max(std::abs(fa), std::abs(fb));
    double x = a;
    int side = 0;  // which endpoint was retained last, to break stagnation
    for (int it = 0; it < spec.max_iter; ++it) {
        // Secant proposal, safeguarded into the bracket interior; fall back
        // to bisection when the same endpoint keeps winning (Illinois-style).
        double xs = b - fb * (b - a) / (fb - fa);
        const double mid = 0.5 * (a + b);
        if (!(xs > a && xs < b) || std::abs(side) >= 2) xs = mid;
        x = xs;
        const double fx = g(x);
        if (std::abs(fx) <= spec.tol * scale || (b - a) <= spec.tol) return x;
        if (fa * fx < 0.0) {
            b = x;
            fb = fx;
            side = side < 0 ? side - 1 : -1;
        } else {
            a = x;
            fa = fx;
            side = side > 0 ? side + 1 : 1;
        }
        if (x == mid) side = 0;
        if ((b - a) <= spec.tol * std::max(1.0, std::abs(mid))) {
            return 0.5 * (a + b);
        }
    }
    throw NonConvergence("find_root: iteration budget exhausted");
}

double ode_step_rk4(double state,
                    const std::function<double(double, double)>& rhs, double t,
                    double dt) {
    if (!(dt > 0.0)) throw DomainError("ode_step_rk4 requires dt > 0");
    const double k1 = rhs(t, state);
    const double k2 = rhs(t + 0.5 * dt, state + 0.5 * dt * k1);
    const double k3 = rhs(t + 0.5 * dt, state + 0.5 * dt * k2);
    const double k4 = rhs(t + dt, state + dt * k3);
    const double out = state + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(out)) throw NonFinite("ode_step_rk4: non-finite state");
    return out;
}

std::vector<double> fourier_transform_symmetric(
    const std::vector<double>& omega_grid, const std::vector<double>& samples,
    const std::vector<double>& tau_grid, const QuadratureSpec& spec) {
    const std::size_t n = omega_grid.size();
    if (n < 2 || samples.size() != n) {
        throw DomainError("fourier_transform_symmetric: bad grid");
    }
    const double d_omega = omega_grid[1] - omega_grid[0];
    // Grid must be symmetric about 0 and samples even.
    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = n - 1 - i;
        if (std::abs(omega_grid[i] + omega_grid[j]) > 1e-9 * d_omega * n) {
            throw AsymmetricInput("omega grid not symmetric about 0");
        }
        asym = std::max(asym, std::abs(samples[i] - samples[j]));
    }
    if (asym > spec.abs_tol * 1e6 &&
        asym > 1e-8 * (*std::max_element(samples.begin(), samples.end()))) {
        throw AsymmetricInput("input samples are not even in omega");
    }

    std::vector<double> out(tau_grid.size(), 0.0);
    for (std::size_t j = 0; j < tau_grid.size(); ++j) {
        const double tau = tau_grid[j];
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
            acc += w * samples[i] * std::cos(omega_grid[i] * tau);
        }
        out[j] = acc * d_omega;
    }
    return out;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 3 || y_.size() != n) {
        throw DomainError("CubicSpline requires >= 3 samples");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(x_[i] > x_[i - 1])) {
            throw DomainError("CubicSpline requires strictly increasing x");
        }
    }
    // Natural boundary: tridiagonal solve for second derivatives.
    m_.assign(n, 0.0);
    std::vector<double> diag(n, 1.0), rhs(n, 0.0), sub(n, 0.0), sup(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1];
        const double h1 = x_[i + 1] - x_[i];
        sub[i] = h0 / 6.0;
        diag[i] = (h0 + h1) / 3.0;
        sup[i] = h1 / 6.0;
        rhs[i] = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
    }
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m_[i] = (rhs[i] - sup[i] * m_[i + 1]) / diag[i];
        if (i == 1) break;
    }
}

std::size_t CubicSpline::segment(double x) const {
    if (x < x_.front() || x > x_.back()) {
        throw InterpolationRange("spline evaluation outside table range");
    }
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - x_.begin());
    if (i == 0) i = 1;
    if (i >= x_.size()) i = x_.size() - 1;
    return i - 1;
}

double CubicSpline::operator()(double x) const {
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    return a * y_[i] + b * y_[i + 1] +
           ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h /
               6.0;
}

double CubicSpline::derivative(double x) const {
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    return (y_[i + 1] - y_[i]) / h +
           ((3.0 * b * b - 1.0) * m_[i + 1] - (3.0 * a * a - 1.0) * m_[i]) *
               h / 6.0;
}

double CubicSpline::second_derivative(double x) const {
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    return a * m_[i] + b * m_[i + 1];
}

}  // namespace udw::numerics

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "sfk/error.hpp"
#include "sfk/linalg.hpp"

namespace sfk {

/// Shared numerical tolerances. CLI overrides may only tighten them.
struct Tolerances {
    double quad_abs = 1e-11;    // absolute tolerance of path quadrature
    double fd_rel = 1e-7;       // target relative accuracy of FD derivatives
    double newton_abs = 1e-10;  // residual norm for 2d map inversion
};

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod quadrature (G7K15), vector-valued integrands.
// ---------------------------------------------------------------------------

namespace detail {

// QUADPACK dqk15 nodes and weights (positive half, symmetric).
inline constexpr std::array<double, 8> kGK15Nodes = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr std::array<double, 8> kGK15WeightsK = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
// Gauss-7 weights, nonzero at nodes 1,3,5,7 of the table above.
inline constexpr std::array<double, 8> kGK15WeightsG = {
    0.0, 0.1294849661688697, 0.0, 0.2797053914892767,
    0.0, 0.3818300505051189, 0.0, 0.4179591836734694};

}  // namespace detail

template <int N>
struct QuadResult {
    std::array<double, N> value{};
    double error = 0.0;  // accumulated error estimate (bounds |K15-G7| sums)
    long evaluations = 0;
};

/// One G7K15 panel on [a,b]; fills value (K15) and an error estimate.
template <int N, class F>
QuadResult<N> gk15_panel(const F& f, double a, double b) {
    QuadResult<N> res;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::array<double, N> k15{}, g7{};
    for (int i = 0; i < 8; ++i) {
        const double xn = detail::kGK15Nodes[i];
        std::array<double, N> y{};
        if (i == 7) {
            y = f(mid);
            res.evaluations += 1;
        } else {
            const std::array<double, N> yp = f(mid + half * xn);
            const std::array<double, N> ym = f(mid - half * xn);
            for (int c = 0; c < N; ++c) y[c] = yp[c] + ym[c];
            res.evaluations += 2;
        }
        for (int c = 0; c < N; ++c) {
            k15[c] += detail::kGK15WeightsK[i] * y[c];
            g7[c] += detail::kGK15WeightsG[i] * y[c];
        }
    }
    double err = 0.0;
    for (int c = 0; c < N; ++c) {
        res.value[c] = k15[c] * half;
        err = std::max(err, std::abs(k15[c] - g7[c]) * std::abs(half));
    }
    res.error = err;
    return res;
}

/// Adaptive bisection to absolute tolerance abs_tol (per component).
/// Throws Error(QuadratureFailure) if the interval budget is exhausted.
template <int N, class F>
QuadResult<N> integrate_adaptive(const F& f, double a, double b, double abs_tol,
                                 int max_intervals = 4000) {
    struct Seg { double a, b, tol; };
    std::vector<Seg> stack;
    stack.push_back({a, b, abs_tol});
    QuadResult<N> total;
    int used = 0;
    while (!stack.empty()) {
        const Seg s = stack.back();
        stack.pop_back();
        const QuadResult<N> panel = gk15_panel<N>(f, s.a, s.b);
        total.evaluations += panel.evaluations;
        if (panel.error <= s.tol || std::abs(s.b - s.a) < 1e-15 * (std::abs(a) + std::abs(b) + 1.0)) {
            for (int c = 0; c < N; ++c) total.value[c] += panel.value[c];
            total.error += panel.error;
            continue;
        }
        if (++used > max_intervals)
            throw Error(ErrorKind::QuadratureFailure,
                        "adaptive quadrature exceeded interval budget");
        const double mid = 0.5 * (s.a + s.b);
        stack.push_back({s.a, mid, 0.5 * s.tol});
        stack.push_back({mid, s.b, 0.5 * s.tol});
    }
    return total;
}

/// A 1-form on the half-plane: point -> covector (coefficients of dH, dr).
template <int N>
using FormEvaluator = std::function<std::array<Vec2, N>(const Vec2&)>;

/// Path integral of N 1-forms along a polyline, each segment integrated
/// adaptively to abs_tol / (segment count).
template <int N>
QuadResult<N> integrate_1forms(const FormEvaluator<N>& form,
                               const std::vector<Vec2>& polyline, double abs_tol) {
    if (polyline.size() < 2) return {};
    QuadResult<N> total;
    const double seg_tol = abs_tol / double(polyline.size() - 1);
    for (std::size_t s = 0; s + 1 < polyline.size(); ++s) {
        const Vec2 p0 = polyline[s];
        const Vec2 p1 = polyline[s + 1];
        const Vec2 dir = p1 - p0;
        auto integrand = [&](double t) {
            const Vec2 p = p0 + t * dir;
            const std::array<Vec2, N> w = form(p);
            std::array<double, N> out;
            for (int c = 0; c < N; ++c) out[c] = w[c].dot(dir);
            return out;
        };
        const QuadResult<N> seg = integrate_adaptive<N>(integrand, 0.0, 1.0, seg_tol);
        for (int c = 0; c < N; ++c) total.value[c] += seg.value[c];
        total.error += seg.error;
        total.evaluations += seg.evaluations;
    }
    return total;
}

/// Scalar convenience wrapper matching the one-form contract.
double integrate_1form(const std::function<Vec2(const Vec2&)>& form,
                       const std::vector<Vec2>& polyline, double abs_tol,
                       double* error_estimate = nullptr);

// ---------------------------------------------------------------------------
// Finite differences with Richardson extrapolation.
// ---------------------------------------------------------------------------

struct FdResult {
    double value = 0.0;
    double error = 0.0;  // difference of the two extrapolation levels
};

/// Central finite difference of given order (1..3) with one Richardson step
/// (h and h/2), accuracy O(h^4) on smooth functions.
FdResult fd_derivative(const std::function<double(double)>& f, double x, int order,
                       double h);

// ---------------------------------------------------------------------------
// Damped Newton for planar map inversion.
// ---------------------------------------------------------------------------

struct Newton2Result {
    Vec2 solution;
    double residual = 0.0;  // |map(solution) - target|
    int iterations = 0;
    bool converged = false;
};

struct Newton2Options {
    double abs_tol = 1e-10;
    int max_iterations = 60;
    int max_backtracks = 25;
    /// Optional iterate clamp, applied after each step (e.g. keep r > 0).
    std::function<Vec2(const Vec2&)> project;
};

/// Solve map(p) = target by damped Newton with backtracking line search on
/// the residual norm. Never throws on non-convergence; the caller inspects
/// `converged` and may retry (moment_map_inverse turns failures into
/// NewtonDivergence, reporting the best iterate).
Newton2Result newton2(const std::function<Vec2(const Vec2&)>& map,
                      const std::function<Mat2(const Vec2&)>& jacobian,
                      const Vec2& target, const Vec2& guess,
                      const Newton2Options& opts = {});

// ---------------------------------------------------------------------------
// Least-squares helpers.
// ---------------------------------------------------------------------------

struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
};

/// Least squares y = intercept + slope * t.
LineFit fit_line(const std::vector<double>& t, const std::vector<double>& y);

/// Least squares y = c0 + c1 * log(t); returns {c0, c1}. Used to extract
/// log-singularity coefficients near the polytope boundary.
LineFit fit_log_coefficient(const std::vector<double>& t, const std::vector<double>& y);

// ---------------------------------------------------------------------------
// Deterministic RNG (splitmix64), portable across standard libraries.
// ---------------------------------------------------------------------------

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1).
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

private:
    std::uint64_t state_;
};

}  // namespace sfk

#include "sfk/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace sfk {

double integrate_1form(const std::function<Vec2(const Vec2&)>& form,
                       const std::vector<Vec2>& polyline, double abs_tol,
                       double* error_estimate) {
    FormEvaluator<1> wrapped = [&form](const Vec2& p) {
        return std::array<Vec2, 1>{form(p)};
    };
    const QuadResult<1> r = integrate_1forms<1>(wrapped, polyline, abs_tol);
    if (error_estimate) *error_estimate = r.error;
    return r.value[0];
}

namespace {

double central_diff(const std::function<double(double)>& f, double x, int order,
                    double h) {
    switch (order) {
        case 1:
            return (f(x + h) - f(x - h)) / (2.0 * h);
        case 2:
            return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        case 3:
            return (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) /
                   (2.0 * h * h * h);
        default:
            throw Error(ErrorKind::BadInput, "fd_derivative supports orders 1..3");
    }
}

}  // namespace

FdResult fd_derivative(const std::function<double(double)>& f, double x, int order,
                       double h) {
    // One Richardson level: both stencils are O(h^2), so the 4/3-1/3
    // combination is O(h^4).
    const double coarse = central_diff(f, x, order, h);
    const double fine = central_diff(f, x, order, 0.5 * h);
    FdResult r;
    r.value = (4.0 * fine - coarse) / 3.0;
    r.error = std::abs(fine - coarse) / 3.0;
    return r;
}

Newton2Result newton2(const std::function<Vec2(const Vec2&)>& map,
                      const std::function<Mat2(const Vec2&)>& jacobian,
                      const Vec2& target, const Vec2& guess,
                      const Newton2Options& opts) {
    Newton2Result res;
    Vec2 p = opts.project ? opts.project(guess) : guess;
    Vec2 f = map(p) - target;
    double fn = f.norm();
    res.solution = p;
    res.residual = fn;

    for (int it = 0; it < opts.max_iterations; ++it) {
        res.iterations = it;
        if (fn <= opts.abs_tol) {
            res.converged = true;
            return res;
        }
        const Mat2 J = jacobian(p);
        const double dj = J.det();
        Vec2 step;
        if (std::abs(dj) < 1e-300) {
            // Singular Jacobian: nudge along the residual to escape.
            step = f * (-1.0 / (fn + 1.0));
        } else {
            step = solve2x2(J, -1.0 * f);
        }
        double lambda = 1.0;
        bool improved = false;
        for (int bt = 0; bt < opts.max_backtracks; ++bt) {
            Vec2 cand = p + lambda * step;
            if (opts.project) cand = opts.project(cand);
            const Vec2 fc = map(cand) - target;
            const double fcn = fc.norm();
            if (fcn < fn) {
                p = cand;
                f = fc;
                fn = fcn;
                improved = true;
                break;
            }
            lambda *= 0.5;
        }
        if (fn < res.residual) {
            res.solution = p;
            res.residual = fn;
        }
        if (!improved) break;  // stagnated
    }
    res.converged = fn <= opts.abs_tol;
    res.solution = p;
    res.residual = fn;
    return res;
}

LineFit fit_line(const std::vector<double>& t, const std::vector<double>& y) {
    const std::size_t n = std::min(t.size(), y.size());
    double st = 0, sy = 0, stt = 0, sty = 0;
    for (std::size_t i = 0; i < n; ++i) {
        st += t[i];
        sy += y[i];
        stt += t[i] * t[i];
        sty += t[i] * y[i];
    }
    const double dn = double(n);
    const double denom = dn * stt - st * st;
    LineFit fit;
    fit.slope = (dn * sty - st * sy) / denom;
    fit.intercept = (sy - fit.slope * st) / dn;
    return fit;
}

LineFit fit_log_coefficient(const std::vector<double>& t, const std::vector<double>& y) {
    std::vector<double> lt(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) lt[i] = std::log(t[i]);
    return fit_line(lt, y);
}

}  // namespace sfk

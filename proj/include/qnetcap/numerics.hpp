#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "qnetcap/errors.hpp"

namespace qnetcap {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;   // accumulated |K15 - G7| over accepted panels
    long evaluations = 0;
    bool converged = true;
    double checked() const {
        if (!converged)
            throw DomainError("quadrature did not converge (error estimate " +
                              std::to_string(abs_error) + ")");
        return value;
    }
};

namespace detail {

// Gauss(7)-Kronrod(15) nodes/weights on [-1, 1]; Gauss points sit at the odd
// Kronrod indices (and the midpoint).
inline constexpr double gk_x[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double gk_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double gk_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
inline void kronrod15(F& f, double a, double b, double& k15, double& g7) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k = gk_wk[7] * fc;
    double g = gk_wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double f1 = f(c - h * gk_x[i]);
        const double f2 = f(c + h * gk_x[i]);
        k += gk_wk[i] * (f1 + f2);
        if (i % 2 == 1) g += gk_wg[i / 2] * (f1 + f2);
    }
    k15 = k * h;
    g7 = g * h;
}

struct QuadPanel {
    double a, b, value, err;
};

// Priority in the refinement queue: panels whose error estimate is not even
// finite go first, then by descending error.
inline double panel_priority(const QuadPanel& p) {
    return std::isfinite(p.err) ? p.err : std::numeric_limits<double>::infinity();
}

inline bool panel_less(const QuadPanel& x, const QuadPanel& y) {
    return panel_priority(x) < panel_priority(y);
}

} // namespace detail

// Globally adaptive Gauss-Kronrod quadrature of f over [a, b].  The panel
// with the worst error estimate is bisected until the summed error falls
// below max(abs_tol, rel_tol * |current estimate|).  Comparing against the
// *running* estimate (rather than a single coarse first pass) keeps the
// stopping rule meaningful even when the integrand is concentrated on a tiny
// part of the interval and the first pass barely sees it.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double rel_tol = 1e-9,
                           double abs_tol = 0.0, long max_evals = 600000) {
    QuadratureResult out;
    if (a == b) return out;
    if (!(a < b)) throw DomainError("integrate: requires a < b");

    std::vector<detail::QuadPanel> heap;   // max-heap on panel_priority
    auto eval_panel = [&](double lo, double hi) {
        double k15 = 0.0, g7 = 0.0;
        detail::kronrod15(f, lo, hi, k15, g7);
        out.evaluations += 15;
        return detail::QuadPanel{lo, hi, k15, std::abs(k15 - g7)};
    };
    auto push = [&](const detail::QuadPanel& p) {
        heap.push_back(p);
        std::push_heap(heap.begin(), heap.end(), detail::panel_less);
    };
    push(eval_panel(a, b));

    std::vector<detail::QuadPanel> stuck;   // too narrow to bisect further
    double sum_value = heap.front().value;
    double sum_err = heap.front().err;
    bool poisoned = !std::isfinite(sum_err);
    bool met_target = false;

    while (!heap.empty()) {
        if (!poisoned && std::isfinite(sum_err)) {
            const double target = std::max(
                {abs_tol, rel_tol * std::abs(sum_value),
                 1e-15 * std::abs(sum_value)});
            if (sum_err <= target) {
                met_target = true;
                break;
            }
        }
        if (out.evaluations + 30 > max_evals) {
            out.converged = false;
            break;
        }
        std::pop_heap(heap.begin(), heap.end(), detail::panel_less);
        const detail::QuadPanel worst = heap.back();
        heap.pop_back();
        const double m = 0.5 * (worst.a + worst.b);
        if (!(worst.a < m && m < worst.b)) {
            // cannot be narrowed further; accept it as-is
            stuck.push_back(worst);
            if (!std::isfinite(worst.err)) out.converged = false;
            continue;
        }
        const auto left = eval_panel(worst.a, m);
        const auto right = eval_panel(m, worst.b);
        sum_value += left.value + right.value - worst.value;
        sum_err += left.err + right.err - worst.err;
        push(left);
        push(right);
        if (poisoned || !std::isfinite(sum_err)) {
            // re-derive the running sums so one non-finite panel cannot
            // permanently poison them once it has been split away
            long double v = 0.0L, e = 0.0L;
            poisoned = false;
            for (const auto& p : heap) {
                if (!std::isfinite(p.err)) { poisoned = true; continue; }
                v += p.value;
                e += p.err;
            }
            for (const auto& p : stuck) {
                if (!std::isfinite(p.err)) continue;
                v += p.value;
                e += p.err;
            }
            sum_value = static_cast<double>(v);
            sum_err = static_cast<double>(e);
        }
    }

    long double value = 0.0L, err = 0.0L;
    for (const auto& p : heap) {
        value += p.value;
        err += p.err;
    }
    for (const auto& p : stuck) {
        value += p.value;
        err += p.err;
    }
    out.value = static_cast<double>(value);
    out.abs_error = static_cast<double>(err);
    if (!met_target) {
        const double final_target = std::max(
            {abs_tol, rel_tol * std::abs(out.value),
             1e-15 * std::abs(out.value)});
        if (!(out.abs_error <= final_target)) out.converged = false;
    }
    if (!std::isfinite(out.value) || !std::isfinite(out.abs_error))
        out.converged = false;
    return out;
}

// Scaled modified Bessel functions exp(-t) I0(t), exp(-t) I1(t) for t >= 0.
double i0e(double t);
double i1e(double t);

struct RootResult {
    double root = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Bisection on a bracketing interval [lo, hi] with f(lo), f(hi) of opposite
// sign.  Stops when the bracket width falls below max(abs_tol, rel_tol*|mid|).
template <class F>
RootResult bisect(F&& f, double lo, double hi, double rel_tol = 1e-9,
                  double abs_tol = 1e-6, int max_iter = 200) {
    if (!(lo < hi)) throw DomainError("bisect: requires lo < hi");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, 0, true};
    if (fhi == 0.0) return {hi, 0, true};
    if ((flo > 0) == (fhi > 0))
        throw DomainError("bisect: endpoints do not bracket a sign change");
    RootResult r;
    double mid = 0.5 * (lo + hi);
    for (r.iterations = 0; r.iterations < max_iter; ++r.iterations) {
        mid = 0.5 * (lo + hi);
        if (hi - lo < std::max(abs_tol, rel_tol * std::abs(mid))) {
            r.converged = true;
            break;
        }
        const double fm = f(mid);
        if (fm == 0.0) {
            r.converged = true;
            break;
        }
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    r.root = mid;
    return r;
}

} // namespace qnetcap

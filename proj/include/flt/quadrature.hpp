#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "flt/errors.hpp"

namespace flt {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;  // estimated absolute error
    long evals = 0;
    bool converged = true;

    /// Throws ToleranceError unless the estimate meets rel_tol (with an
    /// absolute floor for values near zero).
    const QuadResult& require(double rel_tol, double abs_floor = 1e-14) const {
        if (!converged || abs_error > std::max(rel_tol * std::abs(value), abs_floor))
            throw ToleranceError(
                "quadrature tolerance not met (achieved relative error " +
                    std::to_string(achieved_rel()) + ", requested " + std::to_string(rel_tol) + ")",
                achieved_rel());
        return *this;
    }

    double achieved_rel() const {
        double denom = std::max(std::abs(value), 1e-300);
        return abs_error / denom;
    }
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
inline constexpr double kGk15Nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
inline constexpr double kGk15WeightsK[8] = {
    0.2293532201052922e-1, 0.6309209262997855e-1, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,    0.1903505780647854,    0.2044329400752989, 0.2094821410847278};
inline constexpr double kGk15WeightsG[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

}  // namespace detail

/// One Gauss-Kronrod 7-15 panel over [a, b].
template <typename F>
QuadResult gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double result_g = fc * detail::kGk15WeightsG[3];
    double result_k = fc * detail::kGk15WeightsK[7];
    double result_abs = std::abs(fc) * detail::kGk15WeightsK[7];
    for (int j = 0; j < 7; ++j) {
        const double x = h * detail::kGk15Nodes[j];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        result_k += detail::kGk15WeightsK[j] * (f1 + f2);
        result_abs += detail::kGk15WeightsK[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) result_g += detail::kGk15WeightsG[j / 2] * (f1 + f2);
    }
    QuadResult r;
    r.value = result_k * h;
    r.evals = 15;
    // quadpack-style error estimate, scaled to remain usable near zero values
    const double diff = std::abs(result_k - result_g) * std::abs(h);
    const double resabs = result_abs * std::abs(h);
    if (resabs > 0.0 && diff > 0.0) {
        double scaled = 200.0 * diff / resabs;
        r.abs_error = resabs * std::min(1.0, scaled * std::sqrt(scaled));
    } else {
        r.abs_error = diff;
    }
    r.abs_error = std::max(r.abs_error, std::abs(r.value) * 1e-15);
    return r;
}

/// Globally adaptive Gauss-Kronrod integration over a finite interval.
/// Splits the worst panel first; deterministic for a given integrand.
template <typename F>
QuadResult integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10,
                              double abs_tol = 1e-14, int max_panels = 4000) {
    struct Panel {
        double a, b, value, error;
    };
    QuadResult first = gk15(f, a, b);
    std::vector<Panel> panels{{a, b, first.value, first.abs_error}};
    double total = first.value;
    double total_err = first.abs_error;
    long evals = 15;
    while (total_err > std::max(rel_tol * std::abs(total), abs_tol) &&
           static_cast<int>(panels.size()) < max_panels) {
        // worst panel first; ties broken by left endpoint for determinism
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i) {
            if (panels[i].error > panels[worst].error ||
                (panels[i].error == panels[worst].error && panels[i].a < panels[worst].a))
                worst = i;
        }
        Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) break;  // interval exhausted at double resolution
        QuadResult left = gk15(f, p.a, mid);
        QuadResult right = gk15(f, mid, p.b);
        evals += 30;
        panels[worst] = {p.a, mid, left.value, left.abs_error};
        panels.push_back({mid, p.b, right.value, right.abs_error});
        total = 0.0;
        total_err = 0.0;
        for (const Panel& q : panels) {
            total += q.value;
            total_err += q.error;
        }
    }
    QuadResult r;
    r.value = total;
    r.abs_error = total_err;
    r.evals = evals;
    r.converged = total_err <= std::max(rel_tol * std::abs(total), abs_tol);
    return r;
}

/// Tanh-sinh (double exponential) rule over a finite interval. Handles
/// integrable endpoint singularities. The integrand is evaluated at points
/// strictly inside (a, b), with the distance to the nearer endpoint computed
/// without cancellation.
template <typename F>
QuadResult integrate_tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-10,
                               int max_level = 12) {
    const double half = 0.5 * (b - a);
    const double kPiHalf = 1.5707963267948966;
    long evals = 0;

    // Evaluates the transformed integrand at abscissa parameter t.
    auto term = [&](double t) -> double {
        const double u = kPiHalf * std::sinh(t);
        const double ch = std::cosh(u);
        const double w = kPiHalf * std::cosh(t) / (ch * ch);
        if (w < 1e-290) return 0.0;
        double x;
        if (t < 0) {
            const double dist = (b - a) / (1.0 + std::exp(-2.0 * u));  // x - a
            if (dist <= 0.0 || dist < 1e-290 * std::abs(b - a)) return 0.0;
            x = a + dist;
            if (x <= a) return 0.0;
        } else {
            const double dist = (b - a) / (1.0 + std::exp(2.0 * u));  // b - x
            if (dist <= 0.0 || dist < 1e-290 * std::abs(b - a)) return 0.0;
            x = b - dist;
            if (x >= b) return 0.0;
        }
        ++evals;
        const double v = f(x);
        return std::isfinite(v) ? w * v : 0.0;
    };

    double h = 1.0;
    const double t_max = 6.115;  // weights underflow beyond this
    double sum = term(0.0);
    for (double t = h; t <= t_max; t += h) sum += term(t) + term(-t);
    double prev = sum * h * half;
    QuadResult r;
    r.value = prev;
    r.abs_error = std::abs(prev);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= t_max; t += 2.0 * h) add += term(t) + term(-t);
        sum += add;
        const double cur = sum * h * half;
        const double diff = std::abs(cur - prev);
        r.value = cur;
        r.abs_error = diff;
        prev = cur;
        if (level >= 3 && diff <= rel_tol * std::abs(cur) + 1e-300) {
            r.converged = true;
            r.evals = evals;
            return r;
        }
    }
    r.converged = r.abs_error <= std::max(rel_tol * std::abs(r.value) * 10.0, 1e-14);
    r.evals = evals;
    return r;
}

/// Integral over (0, cutoff) of x^{-sing} * phi(x) where phi is smooth and
/// bounded and 0 <= sing < 1. The substitution x = u^{1/(1-sing)} removes the
/// singularity exactly, leaving a bounded integrand.
template <typename F>
QuadResult integrate_left_singular(F&& phi, double sing, double cutoff, double rel_tol = 1e-10) {
    if (cutoff <= 0.0) return {};
    if (sing <= 0.0) {
        return integrate_adaptive([&](double x) { return std::pow(x, -sing) * phi(x); }, 0.0,
                                  cutoff, rel_tol);
    }
    if (sing >= 1.0) throw DivergenceError("integral of x^{-a} near 0 diverges for a >= 1");
    const double c = 1.0 / (1.0 - sing);
    const double upper = std::pow(cutoff, 1.0 - sing);
    return integrate_adaptive([&](double u) { return c * phi(std::pow(u, c)); }, 0.0, upper,
                              rel_tol);
}

/// Integral over (lower, infinity) of g where g(x) ~ C * x^{-1-beta} with a
/// known beta > 0. The substitution x = lower * v^{-1/beta} maps the tail to
/// (0, 1] with a bounded integrand.
template <typename F>
QuadResult integrate_power_tail(F&& g, double lower, double beta, double rel_tol = 1e-10) {
    if (!(beta > 0.0)) throw DivergenceError("power tail with decay exponent <= 1 diverges");
    const double inv_beta = 1.0 / beta;
    const double scale = lower * inv_beta;
    auto mapped = [&](double v) -> double {
        if (v <= 0.0) return 0.0;
        const double x = lower * std::pow(v, -inv_beta);
        if (!std::isfinite(x)) return 0.0;
        const double gv = g(x);
        if (!std::isfinite(gv)) return 0.0;
        return scale * gv * std::pow(v, -inv_beta - 1.0);
    };
    // The mapped integrand is bounded but may have a boundary layer near v=1
    // when beta is small; the adaptive rule resolves it.
    return integrate_adaptive(mapped, 0.0, 1.0, rel_tol);
}

/// Integral over (0, infinity) via the x = u/(1-u) map with tanh-sinh.
/// Suitable when the integrand decays at least like x^{-1-beta}, beta >~ 0.1;
/// for slowly decaying tails use integrate_power_tail with the known exponent.
template <typename F>
QuadResult integrate_half_line(F&& f, double rel_tol = 1e-10) {
    auto mapped = [&](double u) -> double {
        const double om = 1.0 - u;
        if (u <= 0.0 || om < 1e-120) return 0.0;
        const double x = u / om;
        const double fv = f(x);
        if (!std::isfinite(fv)) return 0.0;
        return fv / (om * om);
    };
    return integrate_tanh_sinh(mapped, 0.0, 1.0, rel_tol);
}

}  // namespace flt

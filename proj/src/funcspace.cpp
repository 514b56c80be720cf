#include "flt/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "flt/quadrature.hpp"

namespace flt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double uniform01(std::mt19937_64& rng) {
    // portable: top 53 bits -> [0, 1)
    return double(rng() >> 11) * 0x1.0p-53;
}

double bump_eval(const Bump& b, double x) {
    const double u = (x - b.center) / b.width;
    if (std::abs(u) >= 1.0) return 0.0;
    return b.amp * std::exp(1.0 - 1.0 / (1.0 - u * u));
}

}  // namespace

FunctionSpec::FunctionSpec(PowerCutoff pc) : variant_(pc) {
    if (!(pc.a < 1.0)) throw DomainError("power-cutoff exponent a must be < 1");
    if (!(pc.b >= 0.0)) throw DomainError("power-cutoff b must be >= 0");
}

FunctionSpec::FunctionSpec(Indicator ind) : variant_(ind) {
    if (!(ind.b >= 0.0)) throw DomainError("indicator b must be >= 0");
}

FunctionSpec::FunctionSpec(GridFunction grid) : variant_(std::move(grid)) {
    const auto& g = std::get<GridFunction>(variant_);
    if (g.knots.size() != g.values.size() || g.knots.size() < 2)
        throw DomainError("grid function needs matching knots/values, at least two");
    for (std::size_t i = 0; i < g.knots.size(); ++i) {
        if (!(g.knots[i] > 0.0)) throw DomainError("grid knots must be positive");
        if (i > 0 && !(g.knots[i] > g.knots[i - 1]))
            throw DomainError("grid knots must be strictly increasing");
    }
}

FunctionSpec::FunctionSpec(BumpMix mix) : variant_(std::move(mix)) {}

FunctionSpec::FunctionSpec(Scaled scaled) : variant_(std::move(scaled)) {
    const auto& s = std::get<Scaled>(variant_);
    if (!s.inner) throw DomainError("scaled spec needs an inner function");
    if (!(s.lambda > 0.0)) throw DomainError("dilation factor lambda must be > 0");
}

FunctionSpec::Resolved FunctionSpec::resolve() const {
    const FunctionSpec* cur = this;
    double lambda = 1.0;
    while (const Scaled* s = std::get_if<Scaled>(&cur->variant_)) {
        lambda *= s->lambda;
        cur = s->inner.get();
    }
    return {cur, lambda};
}

double FunctionSpec::eval(double x) const {
    Resolved res = resolve();
    const double t = res.lambda * x;
    if (!(t > 0.0)) return 0.0;
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PowerCutoff>) {
                return t < v.b ? std::pow(t, -v.a) : 0.0;
            } else if constexpr (std::is_same_v<T, Indicator>) {
                return t < v.b ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, GridFunction>) {
                if (t <= v.knots.front() || t >= v.knots.back()) {
                    if (t == v.knots.front()) return v.values.front();
                    if (t == v.knots.back()) return v.values.back();
                    return 0.0;
                }
                auto it = std::upper_bound(v.knots.begin(), v.knots.end(), t);
                const std::size_t i = std::size_t(it - v.knots.begin());
                const double x0 = v.knots[i - 1], x1 = v.knots[i];
                const double w = (t - x0) / (x1 - x0);
                return v.values[i - 1] * (1.0 - w) + v.values[i] * w;
            } else if constexpr (std::is_same_v<T, BumpMix>) {
                double sum = 0.0;
                for (const Bump& b : v.bumps) sum += bump_eval(b, t);
                return sum;
            } else {
                return 0.0;  // unreachable: Scaled resolved above
            }
        },
        res.base->variant_);
}

double FunctionSpec::support_sup() const {
    Resolved res = resolve();
    double sup = std::visit(
        [](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PowerCutoff>) return v.b;
            else if constexpr (std::is_same_v<T, Indicator>) return v.b;
            else if constexpr (std::is_same_v<T, GridFunction>) return v.knots.back();
            else if constexpr (std::is_same_v<T, BumpMix>) {
                double s = 0.0;
                for (const Bump& b : v.bumps) s = std::max(s, b.center + b.width);
                return s;
            } else return 0.0;
        },
        res.base->variant_);
    return sup / res.lambda;
}

double FunctionSpec::support_inf() const {
    Resolved res = resolve();
    double inf = std::visit(
        [](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GridFunction>) return v.knots.front();
            else if constexpr (std::is_same_v<T, BumpMix>) {
                double s = kInf;
                for (const Bump& b : v.bumps) s = std::min(s, b.center - b.width);
                return s == kInf ? 0.0 : s;
            } else {
                (void)v;
                return 0.0;
            }
        },
        res.base->variant_);
    return inf / res.lambda;
}

double FunctionSpec::singular_exponent() const {
    Resolved res = resolve();
    if (const PowerCutoff* pc = std::get_if<PowerCutoff>(&res.base->variant_))
        return pc->b > 0.0 ? std::max(pc->a, 0.0) : 0.0;
    return 0.0;
}

std::vector<double> FunctionSpec::breakpoints() const {
    Resolved res = resolve();
    std::vector<double> pts = std::visit(
        [](const auto& v) -> std::vector<double> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PowerCutoff>) {
                return v.b > 0.0 ? std::vector<double>{v.b} : std::vector<double>{};
            } else if constexpr (std::is_same_v<T, Indicator>) {
                return v.b > 0.0 ? std::vector<double>{v.b} : std::vector<double>{};
            } else if constexpr (std::is_same_v<T, GridFunction>) {
                return v.knots;
            } else if constexpr (std::is_same_v<T, BumpMix>) {
                std::set<double> edges;
                for (const Bump& b : v.bumps) {
                    edges.insert(b.center - b.width);
                    edges.insert(b.center + b.width);
                    edges.insert(b.center);
                }
                return std::vector<double>(edges.begin(), edges.end());
            } else {
                return {};
            }
        },
        res.base->variant_);
    for (double& p : pts) p /= res.lambda;
    return pts;
}

bool FunctionSpec::is_zero() const {
    Resolved res = resolve();
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PowerCutoff>) return v.b <= 0.0;
            else if constexpr (std::is_same_v<T, Indicator>) return v.b <= 0.0;
            else if constexpr (std::is_same_v<T, GridFunction>) {
                for (double x : v.values)
                    if (x != 0.0) return false;
                return true;
            } else if constexpr (std::is_same_v<T, BumpMix>) {
                for (const Bump& b : v.bumps)
                    if (b.amp != 0.0) return false;
                return true;
            } else return true;
        },
        res.base->variant_);
}

FunctionSpec dilate(const FunctionSpec& f, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("dilation factor lambda must be > 0");
    if (lambda == 1.0) return f;
    if (const Scaled* s = std::get_if<Scaled>(&f.variant()))
        return FunctionSpec(Scaled{s->inner, s->lambda * lambda});
    return FunctionSpec(Scaled{std::make_shared<const FunctionSpec>(f), lambda});
}

FunctionSpec random_bump_mix(std::uint64_t seed, int count) {
    if (count < 1) throw DomainError("bump mixture needs count >= 1");
    std::mt19937_64 rng(seed);
    BumpMix mix;
    mix.seed = seed;
    mix.count = count;
    mix.bumps.reserve(std::size_t(count));
    for (int i = 0; i < count; ++i) {
        const double center = 1.0 + 89.0 * uniform01(rng);
        const double wmax = std::min(0.95 * center, 8.0);
        const double width = 0.4 + (wmax - 0.4) * uniform01(rng);
        const double amp = (2.0 * uniform01(rng) - 1.0) / double(count);
        mix.bumps.push_back({center, width, amp});
    }
    return FunctionSpec(std::move(mix));
}

namespace {

// Closed-form L_p norm of x^{-a} on (0, b): (b^{1-ap}/(1-ap))^{1/p} when
// ap < 1; +infinity otherwise.
double power_cutoff_norm(double a, double b, double p) {
    if (b <= 0.0) return 0.0;
    if (std::isinf(p)) {
        if (a > 0.0) return kInf;
        if (a == 0.0) return 1.0;
        return std::pow(b, -a);
    }
    const double ap = a * p;
    if (ap >= 1.0) return kInf;
    return std::pow(std::pow(b, 1.0 - ap) / (1.0 - ap), 1.0 / p);
}

// |f|^p over (lo, hi) by adaptive quadrature (integrand smooth there).
double piece_norm_pow(const FunctionSpec& base, double p, double lo, double hi,
                      double rel_tol) {
    auto integrand = [&](double x) { return std::pow(std::abs(base.eval(x)), p); };
    return integrate_adaptive(integrand, lo, hi, rel_tol).value;
}

}  // namespace

double lp_norm_by_quadrature(const FunctionSpec& f, double p, double rel_tol) {
    FunctionSpec::Resolved res = f.resolve();
    const FunctionSpec& base = *res.base;
    const double sing = base.singular_exponent();
    if (sing * p >= 1.0) return kInf;  // analytic divergence check
    std::vector<double> breaks = base.breakpoints();
    if (breaks.empty() || base.is_zero()) return 0.0;
    double lo = base.support_inf();
    double total = 0.0;
    if (lo == 0.0 && sing > 0.0) {
        // remove the x^{-a p} singularity on the first piece
        const double first = breaks.front();
        auto smooth = [&](double x) {
            const double v = std::abs(base.eval(x)) * std::pow(x, sing);
            return std::pow(v, p);
        };
        total += integrate_left_singular(smooth, sing * p, first, rel_tol).value;
        lo = first;
    }
    for (double b : breaks) {
        if (b <= lo) continue;
        total += piece_norm_pow(base, p, lo, b, rel_tol);
        lo = b;
    }
    const double norm_base = std::pow(total, 1.0 / p);
    return std::pow(res.lambda, -1.0 / p) * norm_base;
}

double lp_norm(const FunctionSpec& f, const NormRequest& req) { return lp_norm(f, req.p); }

double lp_norm(const FunctionSpec& f, double p) {
    if (!(p >= 1.0)) throw DomainError("norm exponent p must be >= 1");
    FunctionSpec::Resolved res = f.resolve();
    const double scale = std::isinf(p) ? 1.0 : std::pow(res.lambda, -1.0 / p);
    const FunctionSpec& base = *res.base;
    if (const PowerCutoff* pc = std::get_if<PowerCutoff>(&base.variant()))
        return scale * power_cutoff_norm(pc->a, pc->b, p);
    if (const Indicator* ind = std::get_if<Indicator>(&base.variant()))
        return scale * power_cutoff_norm(0.0, ind->b, p);
    if (std::isinf(p)) return sup_norm(base);
    return lp_norm_by_quadrature(f, p);
}

double weighted_lp_norm(const FunctionSpec& f, double mu, double p) {
    if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("weight exponent mu must lie in (0, 1]");
    if (!(p >= 1.0)) throw DomainError("norm exponent p must be >= 1");
    FunctionSpec::Resolved res = f.resolve();
    const FunctionSpec& base = *res.base;
    const double scale = std::pow(res.lambda, -(1.0 - mu) - 1.0 / p);
    if (const PowerCutoff* pc = std::get_if<PowerCutoff>(&base.variant()))
        return scale * power_cutoff_norm(pc->a + 1.0 - mu, pc->b, p);
    if (const Indicator* ind = std::get_if<Indicator>(&base.variant()))
        return scale * power_cutoff_norm(1.0 - mu, ind->b, p);
    // grid / bump supports stay away from 0, so the weight is bounded there
    std::vector<double> breaks = base.breakpoints();
    if (breaks.empty() || base.is_zero()) return 0.0;
    double lo = base.support_inf();
    double total = 0.0;
    for (double b : breaks) {
        if (b <= lo) continue;
        auto integrand = [&](double x) {
            return std::pow(std::pow(x, mu - 1.0) * std::abs(base.eval(x)), p);
        };
        total += integrate_adaptive(integrand, lo, b, 1e-10).value;
        lo = b;
    }
    return scale * std::pow(total, 1.0 / p);
}

double sup_norm(const FunctionSpec& f) {
    FunctionSpec::Resolved res = f.resolve();
    const FunctionSpec& base = *res.base;  // sup unaffected by dilation
    if (const PowerCutoff* pc = std::get_if<PowerCutoff>(&base.variant()))
        return power_cutoff_norm(pc->a, pc->b, kInf);
    if (const Indicator* ind = std::get_if<Indicator>(&base.variant()))
        return ind->b > 0.0 ? 1.0 : 0.0;
    if (const GridFunction* g = std::get_if<GridFunction>(&base.variant())) {
        double m = 0.0;
        for (double v : g->values) m = std::max(m, std::abs(v));
        return m;
    }
    // bump mixture: dense sampling per segment (smooth integrand)
    std::vector<double> breaks = base.breakpoints();
    if (breaks.empty()) return 0.0;
    double lo = base.support_inf();
    double m = 0.0;
    for (double b : breaks) {
        if (b <= lo) continue;
        for (int i = 0; i <= 256; ++i) {
            const double x = lo + (b - lo) * double(i) / 256.0;
            m = std::max(m, std::abs(base.eval(x)));
        }
        lo = b;
    }
    return m;
}

GridFunction grid_combine(const GridFunction& f, const GridFunction& g, double alpha,
                          double beta) {
    std::set<double> knots(f.knots.begin(), f.knots.end());
    knots.insert(g.knots.begin(), g.knots.end());
    FunctionSpec fs{GridFunction(f)};
    FunctionSpec gs{GridFunction(g)};
    GridFunction out;
    for (double k : knots) {
        out.knots.push_back(k);
        out.values.push_back(alpha * fs.eval(k) + beta * gs.eval(k));
    }
    return out;
}

GridFunction sample_to_grid(const FunctionSpec& f, int points_per_segment) {
    std::vector<double> breaks = f.breakpoints();
    GridFunction out;
    double lo = std::max(f.support_inf(), 1e-12);
    for (double b : breaks) {
        if (b <= lo) continue;
        for (int i = 0; i < points_per_segment; ++i) {
            const double x = lo + (b - lo) * double(i) / double(points_per_segment);
            out.knots.push_back(x);
            out.values.push_back(f.eval(x));
        }
        lo = b;
    }
    out.knots.push_back(lo);
    out.values.push_back(f.eval(lo));
    return out;
}

}  // namespace flt

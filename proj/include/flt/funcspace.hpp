#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "flt/errors.hpp"

namespace flt {

class FunctionSpec;

/// x^{-a} on (0, b), zero elsewhere. a < 1 keeps the function locally
/// integrable at the origin; b = 0 gives the zero function.
struct PowerCutoff {
    double a;
    double b;
};

/// Indicator of (0, b).
struct Indicator {
    double b;
};

/// Piecewise-linear interpolant through (knots, values); zero outside the
/// knot range. Knots are strictly increasing and positive.
struct GridFunction {
    std::vector<double> knots;
    std::vector<double> values;
};

/// One smooth compactly supported bump: amp * exp(1 - 1/(1-u^2)) with
/// u = (x - center)/width on |u| < 1.
struct Bump {
    double center;
    double width;
    double amp;
};

/// Seeded mixture of smooth bumps; supports lie inside (0, 100) and the
/// mixture is bounded by 1 in absolute value.
struct BumpMix {
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<Bump> bumps;
};

/// inner(lambda * x).
struct Scaled {
    std::shared_ptr<const FunctionSpec> inner;
    double lambda;
};

/// Immutable description of a test function on (0, infinity).
class FunctionSpec {
public:
    using Variant = std::variant<PowerCutoff, Indicator, GridFunction, BumpMix, Scaled>;

    FunctionSpec(PowerCutoff pc);
    FunctionSpec(Indicator ind);
    FunctionSpec(GridFunction grid);
    FunctionSpec(BumpMix mix);
    FunctionSpec(Scaled scaled);

    const Variant& variant() const { return variant_; }

    double eval(double x) const;

    /// Least upper bound of the support (0 for the zero function).
    double support_sup() const;

    /// Greatest lower bound of the support.
    double support_inf() const;

    /// Exponent a such that f(x) ~ C x^{-a} as x -> 0+ on the support
    /// (0 unless the function has a power singularity at the origin).
    double singular_exponent() const;

    /// Points inside (0, support_sup) where smoothness may break, in
    /// increasing order; integration proceeds piecewise between them.
    std::vector<double> breakpoints() const;

    bool is_zero() const;

    /// Innermost non-Scaled spec and the accumulated dilation factor.
    struct Resolved {
        const FunctionSpec* base;
        double lambda;
    };
    Resolved resolve() const;

private:
    Variant variant_;
};

/// f(lambda * x). Composes accumulated dilations; lambda = 1 returns f.
FunctionSpec dilate(const FunctionSpec& f, double lambda);

/// Deterministic-in-seed mixture of `count` smooth bumps. All L_p norms are
/// finite for every p >= 1.
FunctionSpec random_bump_mix(std::uint64_t seed, int count);

/// Norm request: exponent p >= 1 (or +infinity), with an optional known
/// decay exponent for integrands on unbounded domains. The hint is unused
/// for the compactly supported function specs of this module; transform
/// output norms consume it.
struct NormRequest {
    double p = 1.0;
    std::optional<double> tail_hint;

    explicit NormRequest(double p_, std::optional<double> hint = std::nullopt)
        : p(p_), tail_hint(hint) {
        if (!(p >= 1.0)) throw DomainError("norm exponent p must be >= 1");
    }
};

/// L_p norm on (0, infinity). Closed forms are used for PowerCutoff and
/// Indicator; piecewise quadrature otherwise. Divergence is reported as the
/// +infinity value, never as an error.
double lp_norm(const FunctionSpec& f, const NormRequest& req);
double lp_norm(const FunctionSpec& f, double p);

/// L_p norm of t -> t^{mu-1} f(t), 0 < mu <= 1. Power singularity exponents
/// are combined analytically for the closed-form variants.
double weighted_lp_norm(const FunctionSpec& f, double mu, double p);

/// Pure quadrature route for the L_p norm (no closed forms); used to
/// cross-check the analytic paths.
double lp_norm_by_quadrature(const FunctionSpec& f, double p, double rel_tol = 1e-10);

/// Essential supremum of |f|.
double sup_norm(const FunctionSpec& f);

/// Pointwise linear combination alpha*f + beta*g of two grid functions,
/// exact for piecewise-linear inputs (knot union).
GridFunction grid_combine(const GridFunction& f, const GridFunction& g, double alpha,
                          double beta);

/// Samples a bump mixture (or any spec) onto a piecewise-linear grid.
GridFunction sample_to_grid(const FunctionSpec& f, int points_per_segment = 64);

}  // namespace flt

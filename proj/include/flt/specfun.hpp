#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "flt/errors.hpp"

namespace flt {

/// Kernel parameters (kappa, r) of the fractional Laplace kernel
/// (1 + s t / kappa)^{-kappa - r}. kappa must be strictly positive.
struct TransformParams {
    double kappa = 1.0;
    double r = 0.0;

    TransformParams() = default;
    TransformParams(double kappa_, double r_) : kappa(kappa_), r(r_) {
        if (!(kappa > 0.0) || !std::isfinite(kappa))
            throw DomainError("kappa > 0 required");
        if (!std::isfinite(r)) throw DomainError("r must be finite");
    }

    /// Decay exponent of the kernel at infinity.
    double tail_power() const { return kappa + r; }

    /// Hypothesis of the operator-norm upper bound: kappa + r > 1/2.
    bool upper_bound_valid() const { return kappa + r > 0.5; }

    /// Hypothesis of the trial-function lower bound: kappa + r > 1.
    bool lower_bound_valid() const { return kappa + r > 1.0; }

    void require_upper() const {
        if (!upper_bound_valid())
            throw HypothesisError("kappa + r <= 1/2 violates the upper-bound hypothesis "
                                  "(requires kappa + r > 1/2)");
    }
    void require_lower() const {
        if (!lower_bound_valid())
            throw HypothesisError("kappa + r <= 1 violates the lower-bound hypothesis "
                                  "(requires kappa + r > 1)");
    }
};

/// Conjugate exponent pair (p, q) with 1/p + 1/q = 1 held exactly.
/// Constructed from p alone; q is derived (infinity when p = 1).
/// Since p lies in [1, 2], the stored 1/q = 1 - 1/p is exact in IEEE
/// arithmetic, so the conjugacy identity holds with zero error.
class ExponentPair {
public:
    explicit ExponentPair(double p) : p_(p) {
        if (!(p >= 1.0 && p <= 2.0))
            throw DomainError("p must lie in [1, 2]");
        inv_q_ = 1.0 - 1.0 / p_;  // exact: 1/p in [1/2, 1]
    }

    double p() const { return p_; }
    double inv_p() const { return 1.0 / p_; }
    double inv_q() const { return inv_q_; }
    /// q = p / (p - 1); +infinity at p = 1.
    double q() const {
        return inv_q_ == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv_q_;
    }
    bool q_infinite() const { return inv_q_ == 0.0; }
    double two_over_q() const { return 2.0 * inv_q_; }

private:
    double p_;
    double inv_q_;
};

/// Natural log of the Gamma function for x > 0 (Lanczos approximation,
/// assembled in the log domain so Gamma-ratio formulas stay finite at
/// large arguments).
double log_gamma(double x);

/// Euler Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b), a, b > 0.
double beta(double a, double b);

/// The half-power kernel moment: integral over (0, inf) of
/// x^{-1/2} (1+x)^{-(kappa+r)} dx = sqrt(pi) Gamma(kappa+r-1/2) / Gamma(kappa+r).
/// Requires kappa + r > 1/2.
double half_moment(const TransformParams& params);

/// sqrt(kappa) times half_moment; the amplitude of the transform output's
/// s^{-1/2} decay and the p = 2 operator-norm bound.
double scaled_half_moment(const TransformParams& params);

/// Operator-norm upper bound scaled_half_moment^{2/q}; equals 1 at p = 1
/// and scaled_half_moment at p = 2.
double upper_bound(const TransformParams& params, const ExponentPair& exps);

/// Mass of the normalized kernel over the unit interval:
/// integral over (0,1) of (1+z/kappa)^{-(kappa+r)} dz
///   = kappa/(kappa+r-1) * [1 - (kappa/(kappa+1))^{kappa+r-1}].
/// Requires kappa + r > 1.
double origin_mass(const TransformParams& params);

/// Trial-function lower bound on the operator norm for conjugate exponents:
/// (p-1)^{1-1/p} (1-p/2)^{2/p-1} * origin_mass, with 0^0 := 1 at the
/// endpoint exponents p = 1 and p = 2 (limit values).
double trial_lower_bound(const TransformParams& params, double p);

/// Exponents of the weighted regime. Derived from (p, mu):
///   1/Q = mu - 1/p,   1/sigma = 1 + mu - 2/p,
/// with validity constraints 0 < mu < 1 (mu = 1 degenerates to the
/// unweighted case), 1/mu < p <= 2/mu.
struct WeightedExponents {
    double p;
    double mu;
    double big_q;   // output exponent Q
    double sigma;
    double p_prime;

    WeightedExponents(double p_, double mu_);

    /// Checks the kernel-dependent constraint (kappa+r)*sigma + sigma/p' > 1.
    void require_kernel_constraint(const TransformParams& params) const;
};

/// Closed-form weighted upper bound as a Beta-function expression:
/// [kappa^{1 - sigma/p} B(1 - sigma/p', (kappa+r) sigma + sigma/p' - 1)]^{1/sigma}.
/// See weighted_upper_bound_oracle for the quadrature companion; the two are
/// reported side by side because they need not coincide for kappa != 1.
double weighted_upper_bound(const TransformParams& params, double p, double mu);

/// Integration domain convention for the weighted-bound quadrature oracle.
enum class TailDomain { HalfLine, FullLine };

/// Quadrature evaluation of the weighted bound constant
/// [ integral of |t|^{-sigma (p-1)/p} (1+|t|/kappa)^{-(kappa+r) sigma} dt ]^{1/sigma},
/// over (0, inf) or over the whole line (twice the half-line value inside
/// the bracket).
double weighted_upper_bound_oracle(const TransformParams& params, double p, double mu,
                                   TailDomain domain, double rel_tol = 1e-11);

/// Weighted trial-function lower bound:
/// origin_mass * (1 - mu p/2)^{2/p - mu} (mu p - 1)^{mu - 1/p},
/// for 1/mu <= p <= 2/mu, 0 < mu <= 1, with 0^0 := 1 at the endpoints.
/// At mu = 1 this reduces to trial_lower_bound.
double weighted_trial_lower_bound(const TransformParams& params, double p, double mu);

/// Bundle of the closed-form constants for one parameter set. Lower bounds
/// require kappa + r > 1 and are left empty otherwise; the weighted entries
/// are filled only when mu is supplied and the weighted constraints hold.
struct BoundConstants {
    double half_moment = 0.0;         // half-power kernel moment
    double scaled_half_moment = 0.0;  // sqrt(kappa) * half_moment
    std::optional<double> upper;      // operator-norm upper bound at (p, q), p in [1,2]
    std::optional<double> origin_mass;
    std::optional<double> trial_lower;
    std::optional<double> weighted_upper;         // closed form
    std::optional<double> weighted_upper_oracle;  // full-line quadrature
    std::optional<double> weighted_upper_oracle_half;
    std::optional<double> weighted_trial_lower;
};

/// Computes every constant whose hypothesis holds for (params, p [, mu]).
BoundConstants compute_constants(const TransformParams& params, double p,
                                 std::optional<double> mu = std::nullopt);

}  // namespace flt

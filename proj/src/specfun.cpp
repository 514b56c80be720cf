#include "flt/specfun.hpp"

#include <array>
#include <cmath>

#include "flt/quadrature.hpp"

namespace flt {

namespace {

// Lanczos coefficients (g = 4.7421875, n = 15), accurate to ~1e-14 relative
// in Gamma over the positive axis.
constexpr double kLanczosG = 4.7421875;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

double pow_with_zero_convention(double base, double expo) {
    // 0^0 := 1, the limit value at the endpoint exponents.
    if (base == 0.0 && expo == 0.0) return 1.0;
    return std::pow(base, expo);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
    // reflection-free: arguments here are always positive
    double ser = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) ser += kLanczos[i] / (x + double(i - 1));
    const double tmp = x + kLanczosG + 0.5;
    return (x + 0.5) * std::log(tmp) - tmp + kLogSqrtTwoPi + std::log(ser / x);
}

double beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta requires a > 0 and b > 0");
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double half_moment(const TransformParams& params) {
    params.require_upper();
    const double s = params.tail_power();
    return std::exp(0.5 * std::log(M_PI) + log_gamma(s - 0.5) - log_gamma(s));
}

double scaled_half_moment(const TransformParams& params) {
    params.require_upper();
    const double s = params.tail_power();
    return std::exp(0.5 * std::log(M_PI * params.kappa) + log_gamma(s - 0.5) - log_gamma(s));
}

double upper_bound(const TransformParams& params, const ExponentPair& exps) {
    params.require_upper();
    const double expo = exps.two_over_q();
    if (expo == 0.0) return 1.0;
    const double s = params.tail_power();
    const double log_w = 0.5 * std::log(M_PI * params.kappa) + log_gamma(s - 0.5) - log_gamma(s);
    return std::exp(expo * log_w);
}

double origin_mass(const TransformParams& params) {
    params.require_lower();
    const double k = params.kappa;
    const double e = params.tail_power() - 1.0;  // > 0
    // (k/(k+1))^e in the log domain; log1p keeps large kappa accurate
    const double pow_term = std::exp(e * std::log1p(-1.0 / (k + 1.0)));
    return (k / e) * (1.0 - pow_term);
}

double trial_lower_bound(const TransformParams& params, double p) {
    params.require_lower();
    if (!(p >= 1.0 && p <= 2.0)) throw DomainError("p must lie in [1, 2]");
    const double f1 = pow_with_zero_convention(p - 1.0, 1.0 - 1.0 / p);
    const double f2 = pow_with_zero_convention(1.0 - p / 2.0, 2.0 / p - 1.0);
    return f1 * f2 * origin_mass(params);
}

WeightedExponents::WeightedExponents(double p_, double mu_) : p(p_), mu(mu_) {
    if (!(mu > 0.0 && mu <= 1.0))
        throw ConstraintError("mu must lie in (0, 1]");
    if (!(p * mu > 1.0))
        throw ConstraintError("p <= 1/mu violates the weighted-regime constraint "
                              "(requires p > 1/mu, equivalently sigma < p')");
    if (!(p <= 2.0 / mu))
        throw ConstraintError("p > 2/mu violates the weighted-regime constraint "
                              "(requires p <= 2/mu)");
    const double inv_q = mu - 1.0 / p;  // 1/Q > 0 by p > 1/mu
    big_q = 1.0 / inv_q;
    const double inv_sigma = 1.0 + mu - 2.0 / p;  // > 0 given p > 1/mu, mu <= 1
    sigma = 1.0 / inv_sigma;
    p_prime = p / (p - 1.0);
}

void WeightedExponents::require_kernel_constraint(const TransformParams& params) const {
    const double lhs = params.tail_power() * sigma + sigma / p_prime;
    if (!(lhs > 1.0))
        throw ConstraintError("(kappa + r) * sigma + sigma / p' <= 1 violates the "
                              "weighted-bound convergence constraint");
}

double weighted_upper_bound(const TransformParams& params, double p, double mu) {
    const WeightedExponents w(p, mu);
    w.require_kernel_constraint(params);
    const double sigma = w.sigma;
    const double b1 = 1.0 - sigma / w.p_prime;
    const double b2 = params.tail_power() * sigma + sigma / w.p_prime - 1.0;
    if (!(b1 > 0.0))
        throw ConstraintError("sigma >= p' violates the weighted-regime constraint");
    const double log_val = (1.0 - sigma / p) * std::log(params.kappa) +
                           log_gamma(b1) + log_gamma(b2) - log_gamma(b1 + b2);
    return std::exp(log_val / sigma);
}

double weighted_upper_bound_oracle(const TransformParams& params, double p, double mu,
                                   TailDomain domain, double rel_tol) {
    const WeightedExponents w(p, mu);
    w.require_kernel_constraint(params);
    const double sigma = w.sigma;
    const double sing = sigma / w.p_prime;  // exponent of |t|^{-sing} at 0, in [0, 1)
    const double decay = params.tail_power() * sigma;  // kernel^sigma decay
    const double kappa = params.kappa;
    auto kernel_pow = [&](double t) { return std::exp(-decay * std::log1p(t / kappa)); };

    // split at kappa; inner part removes the |t|^{-sing} singularity, outer
    // part uses the known algebraic decay exponent
    QuadResult head = integrate_left_singular(kernel_pow, sing, kappa, rel_tol);
    const double tail_beta = decay + sing - 1.0;  // > 0 by the kernel constraint
    QuadResult tail = integrate_power_tail(
        [&](double t) { return std::pow(t, -sing) * kernel_pow(t); }, kappa, tail_beta, rel_tol);
    double integral = head.value + tail.value;
    if (domain == TailDomain::FullLine) integral *= 2.0;
    return std::pow(integral, 1.0 / sigma);
}

double weighted_trial_lower_bound(const TransformParams& params, double p, double mu) {
    params.require_lower();
    if (!(mu > 0.0 && mu <= 1.0)) throw ConstraintError("mu must lie in (0, 1]");
    if (!(mu * p >= 1.0))
        throw ConstraintError("p < 1/mu violates the weighted lower-bound constraint "
                              "(requires 1/mu <= p <= 2/mu)");
    if (!(p <= 2.0 / mu))
        throw ConstraintError("p > 2/mu violates the weighted lower-bound constraint "
                              "(requires 1/mu <= p <= 2/mu)");
    const double f1 = pow_with_zero_convention(1.0 - mu * p / 2.0, 2.0 / p - mu);
    const double f2 = pow_with_zero_convention(mu * p - 1.0, mu - 1.0 / p);
    return origin_mass(params) * f1 * f2;
}

BoundConstants compute_constants(const TransformParams& params, double p,
                                 std::optional<double> mu) {
    BoundConstants c;
    c.half_moment = half_moment(params);
    c.scaled_half_moment = scaled_half_moment(params);
    if (p >= 1.0 && p <= 2.0) c.upper = upper_bound(params, ExponentPair(p));
    if (params.lower_bound_valid()) {
        c.origin_mass = origin_mass(params);
        if (p >= 1.0 && p <= 2.0) c.trial_lower = trial_lower_bound(params, p);
    }
    if (mu) {
        c.weighted_upper = weighted_upper_bound(params, p, *mu);
        c.weighted_upper_oracle =
            weighted_upper_bound_oracle(params, p, *mu, TailDomain::FullLine);
        c.weighted_upper_oracle_half =
            weighted_upper_bound_oracle(params, p, *mu, TailDomain::HalfLine);
        if (params.lower_bound_valid() && *mu * p >= 1.0 && p <= 2.0 / *mu)
            c.weighted_trial_lower = weighted_trial_lower_bound(params, p, *mu);
    }
    return c;
}

}  // namespace flt

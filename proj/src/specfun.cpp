#include "hgf/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "hgf/errors.hpp"

namespace hgf::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;

bool in_open_unit(double r) { return r > 0.0 && r < 1.0; }

std::string str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Solves mu(r) = y on the lower half r <= 1/sqrt2, which is where y >= pi/2.
// The unknown is u = log r so both bisection and Newton work in relative terms.
ComplementaryPair solve_lower_half(double y, const SpecFunConfig& cfg) {
    const double y_asym = std::log(4.0 / cfg.r_small);
    if (y >= y_asym) {
        const double r = 4.0 * std::exp(-y);
        if (!(r >= std::numeric_limits<double>::min())) {
            throw OverflowError("mu_inv: result underflows for y = " + str(y));
        }
        return ComplementaryPair::from_r(r);
    }

    auto residual = [&](double u) { return mu(ComplementaryPair::from_r(std::exp(u)), cfg) - y; };

    double lo = std::log(cfg.r_small) - 1.0;  // residual > 0
    double hi = std::log(0.75);               // residual < 0
    for (int it = 0; hi - lo > 1e-6; ++it) {
        if (it >= cfg.max_iter) throw ConvergenceError("mu_inv: bisection did not converge");
        const double mid = 0.5 * (lo + hi);
        (residual(mid) > 0.0 ? lo : hi) = mid;
    }

    double u = 0.5 * (lo + hi);
    double g = residual(u);
    for (int it = 0;; ++it) {
        if (it >= cfg.max_iter) throw ConvergenceError("mu_inv: Newton polish did not converge");
        const double r = std::exp(u);
        const double h = 1e-7 * (1.0 - r);
        const double slope = (residual(u + h) - residual(u - h)) / (2.0 * h);
        double next = u - g / slope;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - u);
        u = next;
        g = residual(u);
        (g > 0.0 ? lo : hi) = u;
        if (g == 0.0 || step <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(u)) break;
    }
    if (std::abs(g) > cfg.inv_tol * std::max(1.0, y)) {
        throw ConvergenceError("mu_inv: residual " + str(g) + " above tolerance for y = " + str(y));
    }
    return ComplementaryPair::from_r(std::exp(u));
}

}  // namespace

void SpecFunConfig::validate() const {
    auto tol_ok = [](double t) { return t > 0.0 && t < 1e-3; };
    if (!tol_ok(agm_tol) || !tol_ok(inv_tol)) throw DomainError("SpecFunConfig: tolerances must lie in (0, 1e-3)");
    if (max_iter < 16) throw DomainError("SpecFunConfig: max_iter must be >= 16");
    if (!(r_small > 0.0 && r_small < r_near_one && r_near_one < 1.0)) {
        throw DomainError("SpecFunConfig: need 0 < r_small < r_near_one < 1");
    }
}

void DistortionParams::validate() const {
    if (!(K >= 1.0) || !std::isfinite(K)) throw DomainError("DistortionParams: K must be >= 1");
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("DistortionParams: c must be > 0");
}

ComplementaryPair ComplementaryPair::from_r(double r) {
    if (!in_open_unit(r)) throw DomainError("r must lie in (0,1), got " + str(r));
    return {r, std::sqrt((1.0 - r) * (1.0 + r))};
}

ComplementaryPair ComplementaryPair::from_complement(double rc) { return from_r(rc).swapped(); }

ComplementaryPair ComplementaryPair::from_hyperbolic(double u) {
    if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("hyperbolic distance must be positive, got " + str(u));
    const double e = std::exp(-u);
    const double rc = 2.0 * std::exp(-0.5 * u) / (1.0 + e);
    if (!(rc > 0.0)) throw OverflowError("complement of th(u/2) underflows for u = " + str(u));
    return {std::tanh(0.5 * u), rc};
}

ComplementaryPair ComplementaryPair::from_ratio_squared(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t must be positive and finite, got " + str(t));
    const double rc = 1.0 / std::sqrt(1.0 + t);
    const double r = std::sqrt(t / (1.0 + t));
    if (!(rc > 0.0) || !(r > 0.0)) throw OverflowError("pair for t = " + str(t) + " is not representable");
    return {r, rc};
}

double agm(double a, double b, const SpecFunConfig& cfg) {
    if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("agm: arguments must be positive and finite");
    }
    for (int it = 0; it < cfg.max_iter; ++it) {
        if (std::abs(a - b) <= cfg.agm_tol * a) return 0.5 * (a + b);
        const double next_b = std::sqrt(a * b);
        a = 0.5 * (a + b);
        b = next_b;
    }
    throw ConvergenceError("agm: no convergence within max_iter");
}

double ellint_K(double r, const SpecFunConfig& cfg) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("ellint_K: r must lie in [0,1), got " + str(r));
    return kPi / (2.0 * agm(1.0, std::sqrt((1.0 - r) * (1.0 + r)), cfg));
}

double mu(ComplementaryPair p, const SpecFunConfig& cfg) {
    if (!(p.r > 0.0 && p.rc > 0.0)) throw DomainError("mu: r must lie in (0,1)");
    if (p.r < cfg.r_small) return std::log(4.0 / p.r);
    if (p.rc < cfg.r_small || p.r > cfg.r_near_one) return kPiSquaredOver4 / mu(p.swapped(), cfg);
    // K(r') / K(r) = AGM(1, r') / AGM(1, r)
    return 0.5 * kPi * agm(1.0, p.rc, cfg) / agm(1.0, p.r, cfg);
}

double mu(double r, const SpecFunConfig& cfg) {
    if (!in_open_unit(r)) throw DomainError("mu: r must lie in (0,1), got " + str(r));
    return mu(ComplementaryPair::from_r(r), cfg);
}

ComplementaryPair mu_inv_pair(double y, const SpecFunConfig& cfg) {
    if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("mu_inv: y must be positive and finite, got " + str(y));
    if (y >= 0.5 * kPi) return solve_lower_half(y, cfg);
    // mu(r) mu(r') = pi^2/4 maps the upper half onto the lower one.
    return solve_lower_half(kPiSquaredOver4 / y, cfg).swapped();
}

double mu_inv(double y, const SpecFunConfig& cfg) {
    const ComplementaryPair p = mu_inv_pair(y, cfg);
    if (!(p.r < 1.0)) throw OverflowError("mu_inv: result rounds to 1 for y = " + str(y));
    return p.r;
}

double gamma2(double s, const SpecFunConfig& cfg) {
    if (!(s > 1.0) || !std::isfinite(s)) throw DomainError("gamma2: s must exceed 1, got " + str(s));
    return 2.0 * kPi / mu(1.0 / s, cfg);
}

ComplementaryPair phi_K_pair(double K, ComplementaryPair p, const SpecFunConfig& cfg) {
    if (!(K > 0.0) || !std::isfinite(K)) throw DomainError("phi_K: K must be positive, got " + str(K));
    return mu_inv_pair(mu(p, cfg) / K, cfg);
}

double phi_K(double K, double r, const SpecFunConfig& cfg) {
    if (!in_open_unit(r)) throw DomainError("phi_K: r must lie in (0,1), got " + str(r));
    return phi_K_pair(K, ComplementaryPair::from_r(r), cfg).r;
}

double lambda_K(double K, const SpecFunConfig& cfg) {
    if (!(K >= 1.0) || !std::isfinite(K)) throw DomainError("lambda_K: K must be >= 1, got " + str(K));
    if (K == 1.0) return 1.0;
    const ComplementaryPair sym{kInvSqrt2, kInvSqrt2};
    const double ratio = phi_K_pair(K, sym, cfg).r / phi_K_pair(1.0 / K, sym, cfg).r;
    const double value = ratio * ratio;
    if (!std::isfinite(value)) throw OverflowError("lambda_K: overflow for K = " + str(K));
    return value;
}

double eta_K(double K, double t, const SpecFunConfig& cfg) {
    if (!(K >= 1.0) || !std::isfinite(K)) throw DomainError("eta_K: K must be >= 1, got " + str(K));
    const ComplementaryPair q = phi_K_pair(K, ComplementaryPair::from_ratio_squared(t), cfg);
    // phi^2 / (1 - phi^2) = (phi / phi')^2
    const double ratio = q.r / q.rc;
    const double value = ratio * ratio;
    if (!std::isfinite(value)) throw OverflowError("eta_K: quotient not representable at t = " + str(t));
    return value;
}

double phi_quotient_hyperbolic(double K, double u, const SpecFunConfig& cfg) {
    if (!(K >= 1.0) || !std::isfinite(K)) throw DomainError("K must be >= 1, got " + str(K));
    const ComplementaryPair q = phi_K_pair(K, ComplementaryPair::from_hyperbolic(u), cfg);
    const double value = q.r / q.rc;
    if (!std::isfinite(value)) throw OverflowError("phi quotient not representable at u = " + str(u));
    return value;
}

}  // namespace hgf::specfun

#pragma once

// Complete elliptic integral, Grötzsch ring modulus and the plane distortion
// function of quasiconformal theory.
//
// Everything near r = 1 is carried as a complementary pair (r, r') with
// r' = sqrt(1 - r^2) so that neither end of (0,1) loses precision; the plain
// double overloads are thin wrappers.

#include <numbers>

namespace hgf::specfun {

struct SpecFunConfig {
    double agm_tol = 1e-15;        // relative |a - g| / a at AGM termination
    double inv_tol = 1e-14;        // mu_inv residual, scaled by max(1, y)
    int max_iter = 100;
    double r_small = 1e-8;         // below: mu(r) = log(4/r)
    double r_near_one = 1 - 1e-8;  // above: mu via the reflection identity

    /// Throws DomainError when the invariants of the config are violated.
    void validate() const;
};

/// Dilatation K and metric constant c.
struct DistortionParams {
    double K = 1.0;
    double c = 1.0;

    /// Inequality checks need K >= 1 and c > 0.
    void validate() const;
};

/// A point r of (0,1) together with its complement sqrt(1 - r^2).
struct ComplementaryPair {
    double r;
    double rc;

    static ComplementaryPair from_r(double r);
    static ComplementaryPair from_complement(double rc);
    /// (th(u/2), 1/ch(u/2)): the pair whose quotient r/rc is sh(u/2).
    static ComplementaryPair from_hyperbolic(double u);
    /// (sqrt(t/(1+t)), sqrt(1/(1+t))): the pair whose squared quotient is t.
    static ComplementaryPair from_ratio_squared(double t);

    ComplementaryPair swapped() const { return {rc, r}; }
};

inline constexpr double kPiSquaredOver4 = std::numbers::pi * std::numbers::pi / 4.0;

/// Arithmetic-geometric mean of a, b > 0.
double agm(double a, double b, const SpecFunConfig& cfg = {});

/// K(r) = integral_0^1 dx / sqrt((1 - x^2)(1 - r^2 x^2)), 0 <= r < 1.
double ellint_K(double r, const SpecFunConfig& cfg = {});

/// mu(r) = (pi/2) K(r') / K(r): the modulus of the Grötzsch ring.
double mu(double r, const SpecFunConfig& cfg = {});
double mu(ComplementaryPair p, const SpecFunConfig& cfg = {});

/// Inverse of mu: (0, inf) -> (0, 1).
double mu_inv(double y, const SpecFunConfig& cfg = {});
ComplementaryPair mu_inv_pair(double y, const SpecFunConfig& cfg = {});

/// gamma_2(s) = 2 pi / mu(1/s), s > 1.
double gamma2(double s, const SpecFunConfig& cfg = {});

/// phi_{K,2}(r) = mu^{-1}(mu(r) / K), K > 0.
double phi_K(double K, double r, const SpecFunConfig& cfg = {});
ComplementaryPair phi_K_pair(double K, ComplementaryPair p, const SpecFunConfig& cfg = {});

/// lambda(K) = (phi_{K,2}(1/sqrt2) / phi_{1/K,2}(1/sqrt2))^2, K >= 1.
double lambda_K(double K, const SpecFunConfig& cfg = {});

/// eta_K(t) = phi^2 / (1 - phi^2) with phi = phi_{K,2}(sqrt(t/(1+t))).
double eta_K(double K, double t, const SpecFunConfig& cfg = {});

/// phi / sqrt(1 - phi^2) for phi = phi_{K,2}(th(u/2)); equals sqrt(eta_K(sh^2(u/2))).
double phi_quotient_hyperbolic(double K, double u, const SpecFunConfig& cfg = {});

}  // namespace hgf::specfun

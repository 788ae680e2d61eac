#pragma once

// Inequalities around the hyperbolic-type metric h_{H,c}, each evaluated as
// an IneqCase: a claim "lhs <= rhs" with its margin.
//
// Margin convention: margin = (rhs - lhs) / scale, with scale = 1 for
// MarginScale::Absolute, max(1, |lhs|, |rhs|) for MarginScale::Relative and
// |rhs| for MarginScale::RhsRelative. The relative form is an absolute
// tolerance for O(1) quantities and a relative one for large quantities.
// A case passes iff margin >= -tol.

#include <string>
#include <vector>

#include "hgf/metrics.hpp"

namespace hgf::ineq {

inline constexpr double kDefaultTol = 1e-9;

enum class MarginScale { Absolute, Relative, RhsRelative };

struct Param {
    std::string name;
    double value;
};

struct IneqCase {
    std::string name;
    std::vector<Param> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;

    double param(const std::string& key) const;
};

IneqCase make_case(std::string name, std::vector<Param> params, double lhs, double rhs, double tol,
                   MarginScale scale = MarginScale::Relative);
double scaled_margin(double lhs, double rhs, MarginScale scale);

/// log(1 + c1 t) <= (c1/c2) log(1 + c2 t) for c1 >= c2 >= 1, t > 0.
IneqCase bernoulli_pair(double c1, double c2, double t, double tol = kDefaultTol);

/// Triangle inequality for h_{D,c} at p, q, z, checked with each point as
/// the middle vertex; the reported sides belong to the worst ordering.
/// Absolute margin.
IneqCase triangle_case(metrics::Domain dom, double c, metrics::Point2 p, metrics::Point2 q, metrics::Point2 z,
                       double tol = kDefaultTol);

/// x <= c (x - 1/x) + 1 for c >= 1, x >= 1.
IneqCase prop21_case(double c, double x, double tol = kDefaultTol);

/// f(x) = log(1 + c (x - 1/x)) / log x, x >= 1 + 1e-9.
double lemma22_f(double c, double x);
/// f(x2) <= f(x1) for x1 < x2 (f decreasing).
IneqCase lemma22_monotone_case(double c, double x1, double x2, double tol = kDefaultTol);

/// F(t) = log(1 + c sqrt(2 (ch t - 1))) = log(1 + 2c sh(t/2)).
double F_mfprop(double c, double t);
/// F(t1) <= F(t2) for t1 < t2.
IneqCase mfprop_increasing_case(double c, double t1, double t2, double tol = kDefaultTol);
/// F(t2)/t2 <= F(t1)/t1 for 0 < t1 < t2.
IneqCase mfprop_ratio_case(double c, double t1, double t2, double tol = kDefaultTol);
/// F(s + t) <= F(s) + F(t). Absolute margin.
IneqCase subadditivity_case(double c, double s, double t, double tol = kDefaultTol);

/// h/c <= rho <= 2h on H, absolute margin. lhs/rhs are the sides of whichever inequality has
/// the smaller margin; params carry rho and h.
IneqCase comp_rho_case(double c, const metrics::HalfPlanePoint& x, const metrics::HalfPlanePoint& y,
                       double tol = kDefaultTol);

/// 2 log(1 + sqrt((x-1)/2)) <= arch x <= 2 log(1 + sqrt(2(x-1))), x >= 1.
IneqCase arch_bounds_case(double x, double tol = kDefaultTol);

/// max{t^K, t^{1/K}} by direct comparison of t with 1.
double power_max(double K, double t);
/// max{L, L^{1/K}} with L = log(1 + 2ct), by direct comparison of L with 1.
double log_max(double c, double K, double t);
/// Same maximum via the closed-form branch point t = (e-1)/(2c).
double log_max_closed_form(double c, double K, double t);

/// log(1 + 2c max{t^K, t^{1/K}}) <= factor * max{L, L^{1/K}}.
IneqCase bernoulli_type_case(double c, double K, double t, double factor, double tol = kDefaultTol);
/// The two-branch Bernoulli-type inequality with factor K^{1+c}.
IneqCase fuji_case(double c, double K, double t, double tol = kDefaultTol);
/// The same claim with K^2 in place of K^{1+c}, at K = 1.2, c = 5, t = 0.001.
/// This is a known counterexample: pass is false.
IneqCase remark310_case(double tol = kDefaultTol);
IneqCase k2_exponent_case(double c, double K, double t, double tol = kDefaultTol);

/// (K^{1+c})^{K/(K-1)} - 2c, with the K -> 1 limit e^{1+c} - 2c.
double lemmaA_value(double c, double K);
IneqCase lemmaA_case(double c, double K, double tol = kDefaultTol);

/// t^{1/K} log t; minimum -K/e at t = e^{-K}.
double lemmaB1_value(double K, double t);
IneqCase lemmaB1_case(double K, double t, double tol = kDefaultTol);
/// log(1 + 2c t^{1/K}) <= K^{1+c} log(1 + 2ct) on (e-1)/(2c) <= t < 1.
IneqCase lemmaB2_case(double c, double K, double t, double tol = kDefaultTol);

/// C(K) = (1 + 2ct)^K - (1 + 2c t^K), t >= 1.
double lemmaC_value(double c, double K, double t);
/// C(K1) <= C(K2) for K1 < K2.
IneqCase lemmaC_monotone_case(double c, double K1, double K2, double t, double tol = kDefaultTol);
/// log(1 + 2c t^K) <= K log(1 + 2ct), the consequence used for t >= 1.
IneqCase lemmaC_case(double c, double K, double t, double tol = kDefaultTol);

/// lambda(K)^{1/2} K^{1+c} max{h^{1/K}, h}.
double distortion_rhs(double c, double K, double h);
double distortion_rhs(double c, double K, double h, double lambda);

/// The four quantities of the distortion proof at hyperbolic distance rho:
///   q0 = log(1 + 2c phi/sqrt(1-phi^2)),  phi = phi_{K,2}(th(rho/2))
///   q1 = log(1 + 2c lambda^{1/2} M),     M = max{sh^{1/K}, sh^K}(rho/2)
///   q2 = lambda^{1/2} log(1 + 2c M)
///   q3 = K^{1+c} lambda^{1/2} max{h^{1/K}, h},  h = log(1 + 2c sh(rho/2))
/// Each q_i <= q_{i+1}.
struct SchwarzChain {
    double q0, q1, q2, q3;
    double h;
    double lambda;
};

SchwarzChain schwarz_chain(double c, double K, double rho);
SchwarzChain schwarz_chain(double c, double K, double rho, double lambda);
/// Margin is the smallest of the three link margins; lhs = q0, rhs = q3.
IneqCase schwarz_chain_case(double c, double K, double rho, double tol = kDefaultTol);
IneqCase schwarz_chain_case(const SchwarzChain& chain, double c, double K, double rho, double tol);

/// h(f x, f y) <= distortion_rhs(c, K, h(x, y)) for given images f x, f y.
IneqCase empirical_distortion_case(double c, double K, const metrics::HalfPlanePoint& x,
                                   const metrics::HalfPlanePoint& y, const metrics::HalfPlanePoint& fx,
                                   const metrics::HalfPlanePoint& fy, double lambda, double tol = kDefaultTol);
IneqCase empirical_stretch_case(double c, double K, const metrics::HalfPlanePoint& x,
                                const metrics::HalfPlanePoint& y, double tol = kDefaultTol);
IneqCase empirical_mobius_case(double c, const metrics::MobiusH& m, const metrics::HalfPlanePoint& x,
                               const metrics::HalfPlanePoint& y, double tol = kDefaultTol);

}  // namespace hgf::ineq

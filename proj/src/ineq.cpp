#include "hgf/ineq.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hgf/errors.hpp"
#include "hgf/specfun.hpp"

namespace hgf::ineq {

using metrics::HalfPlanePoint;

namespace {

constexpr double kE = std::numbers::e;

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

void require_c(double c) { require(c >= 1.0 && std::isfinite(c), "c must be >= 1"); }
void require_K(double K) { require(K >= 1.0 && std::isfinite(K), "K must be >= 1"); }

// acosh(1 + d) for d >= 0 without the cancellation in 1 + d.
double acosh1p(double d) { return std::log1p(d + std::sqrt(d * (2.0 + d))); }

}  // namespace

double IneqCase::param(const std::string& key) const {
    for (const auto& p : params) {
        if (p.name == key) return p.value;
    }
    throw std::out_of_range("IneqCase has no parameter '" + key + "'");
}

double scaled_margin(double lhs, double rhs, MarginScale scale) {
    const double diff = rhs - lhs;
    if (scale == MarginScale::Absolute) return diff;
    if (scale == MarginScale::RhsRelative) return diff / std::abs(rhs);
    return diff / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

IneqCase make_case(std::string name, std::vector<Param> params, double lhs, double rhs, double tol,
                   MarginScale scale) {
    IneqCase out{std::move(name), std::move(params), lhs, rhs, scaled_margin(lhs, rhs, scale), false};
    out.pass = std::isfinite(out.margin) && out.margin >= -tol;
    return out;
}

IneqCase bernoulli_pair(double c1, double c2, double t, double tol) {
    require(c2 >= 1.0 && c1 >= c2 && std::isfinite(c1), "bernoulli_pair: need c1 >= c2 >= 1");
    require(t > 0.0 && std::isfinite(t), "bernoulli_pair: need t > 0");
    const double lhs = std::log1p(c1 * t);
    const double rhs = c1 / c2 * std::log1p(c2 * t);
    return make_case("bernoulli", {{"c1", c1}, {"c2", c2}, {"t", t}}, lhs, rhs, tol);
}

IneqCase triangle_case(metrics::Domain dom, double c, metrics::Point2 p, metrics::Point2 q, metrics::Point2 z,
                       double tol) {
    const double pq = metrics::h_metric(dom, c, p, q);
    const double qz = metrics::h_metric(dom, c, q, z);
    const double pz = metrics::h_metric(dom, c, p, z);
    // (long side, short sides) for middle vertex q, z, p respectively
    const double sides[3][2] = {{pz, pq + qz}, {pq, pz + qz}, {qz, pq + pz}};
    int worst = 0;
    for (int i = 1; i < 3; ++i) {
        if (sides[i][1] - sides[i][0] < sides[worst][1] - sides[worst][0]) worst = i;
    }
    return make_case(std::string("triangle-") + std::string(metrics::to_string(dom)),
                     {{"c", c}, {"p_re", p.re}, {"p_im", p.im}, {"q_re", q.re}, {"q_im", q.im}, {"z_re", z.re},
                      {"z_im", z.im}},
                     sides[worst][0], sides[worst][1], tol, MarginScale::Absolute);
}

IneqCase prop21_case(double c, double x, double tol) {
    require_c(c);
    require(x >= 1.0 && std::isfinite(x), "prop21_case: need x >= 1");
    return make_case("prop21", {{"c", c}, {"x", x}}, x, c * (x - 1.0 / x) + 1.0, tol);
}

double lemma22_f(double c, double x) {
    require_c(c);
    require(x >= 1.0 + 1e-9 && std::isfinite(x), "lemma22_f: need x >= 1 + 1e-9");
    return std::log1p(c * (x - 1.0 / x)) / std::log(x);
}

IneqCase lemma22_monotone_case(double c, double x1, double x2, double tol) {
    require(x1 < x2, "lemma22_monotone_case: need x1 < x2");
    return make_case("lemma22", {{"c", c}, {"x1", x1}, {"x2", x2}}, lemma22_f(c, x2), lemma22_f(c, x1), tol);
}

double F_mfprop(double c, double t) {
    require_c(c);
    require(t >= 0.0, "F_mfprop: need t >= 0");
    // sqrt(2 (ch t - 1)) = e^{t/2} - e^{-t/2} = 2 sh(t/2)
    return std::log1p(2.0 * c * std::sinh(0.5 * t));
}

IneqCase mfprop_increasing_case(double c, double t1, double t2, double tol) {
    require(t1 < t2, "mfprop_increasing_case: need t1 < t2");
    return make_case("mfprop-increasing", {{"c", c}, {"t1", t1}, {"t2", t2}}, F_mfprop(c, t1), F_mfprop(c, t2),
                     tol);
}

IneqCase mfprop_ratio_case(double c, double t1, double t2, double tol) {
    require(t1 > 0.0 && t1 < t2, "mfprop_ratio_case: need 0 < t1 < t2");
    return make_case("mfprop-ratio", {{"c", c}, {"t1", t1}, {"t2", t2}}, F_mfprop(c, t2) / t2,
                     F_mfprop(c, t1) / t1, tol);
}

IneqCase subadditivity_case(double c, double s, double t, double tol) {
    return make_case("subadditivity", {{"c", c}, {"s", s}, {"t", t}}, F_mfprop(c, s + t),
                     F_mfprop(c, s) + F_mfprop(c, t), tol, MarginScale::Absolute);
}

IneqCase comp_rho_case(double c, const HalfPlanePoint& x, const HalfPlanePoint& y, double tol) {
    require_c(c);
    const double rho = metrics::rho_half_plane(x, y);
    const double h = metrics::h_metric(c, x, y);
    std::vector<Param> params{{"c", c}, {"x_re", x.re()}, {"x_im", x.im()}, {"y_re", y.re()},
                              {"y_im", y.im()}, {"rho", rho}, {"h", h}};
    const double lower = rho - h / c;
    const double upper = 2.0 * h - rho;
    if (lower <= upper) return make_case("comp-rho", std::move(params), h / c, rho, tol, MarginScale::Absolute);
    return make_case("comp-rho", std::move(params), rho, 2.0 * h, tol, MarginScale::Absolute);
}

IneqCase arch_bounds_case(double x, double tol) {
    require(x >= 1.0 && std::isfinite(x), "arch_bounds_case: need x >= 1");
    const double d = x - 1.0;
    const double low = 2.0 * std::log1p(std::sqrt(0.5 * d));
    const double mid = acosh1p(d);
    const double up = 2.0 * std::log1p(std::sqrt(2.0 * d));
    std::vector<Param> params{{"x", x}, {"arch", mid}};
    if (scaled_margin(low, mid, MarginScale::Relative) <= scaled_margin(mid, up, MarginScale::Relative)) {
        return make_case("arch-bounds", std::move(params), low, mid, tol);
    }
    return make_case("arch-bounds", std::move(params), mid, up, tol);
}

double power_max(double K, double t) { return t > 1.0 ? std::pow(t, K) : std::pow(t, 1.0 / K); }

double log_max(double c, double K, double t) {
    const double L = std::log1p(2.0 * c * t);
    return L > 1.0 ? L : std::pow(L, 1.0 / K);
}

double log_max_closed_form(double c, double K, double t) {
    const double L = std::log1p(2.0 * c * t);
    return t > (kE - 1.0) / (2.0 * c) ? L : std::pow(L, 1.0 / K);
}

IneqCase bernoulli_type_case(double c, double K, double t, double factor, double tol) {
    require_c(c);
    require_K(K);
    require(t > 0.0 && std::isfinite(t), "need t > 0");
    const double lhs = std::log1p(2.0 * c * power_max(K, t));
    const double rhs = factor * log_max(c, K, t);
    return make_case("bernoulli-type", {{"c", c}, {"K", K}, {"t", t}}, lhs, rhs, tol);
}

IneqCase fuji_case(double c, double K, double t, double tol) {
    IneqCase out = bernoulli_type_case(c, K, t, std::pow(K, 1.0 + c), tol);
    out.name = "fuji";
    return out;
}

IneqCase k2_exponent_case(double c, double K, double t, double tol) {
    IneqCase out = bernoulli_type_case(c, K, t, K * K, tol);
    out.name = "k2-exponent";
    return out;
}

IneqCase remark310_case(double tol) {
    IneqCase out = k2_exponent_case(5.0, 1.2, 0.001, tol);
    out.name = "remark310";
    return out;
}

double lemmaA_value(double c, double K) {
    require_c(c);
    require_K(K);
    // K log K / (K - 1) -> 1 as K -> 1
    const double km1 = K - 1.0;
    const double weight = km1 == 0.0 ? 1.0 : K * std::log1p(km1) / km1;
    return std::exp((1.0 + c) * weight) - 2.0 * c;
}

IneqCase lemmaA_case(double c, double K, double tol) {
    const double value = lemmaA_value(c, K);
    return make_case("lemmaA", {{"c", c}, {"K", K}}, 2.0 * c, value + 2.0 * c, tol);
}

double lemmaB1_value(double K, double t) {
    require_K(K);
    require(t > 0.0, "lemmaB1_value: need t > 0");
    return std::pow(t, 1.0 / K) * std::log(t);
}

IneqCase lemmaB1_case(double K, double t, double tol) {
    return make_case("lemmaB1", {{"K", K}, {"t", t}}, -K / kE, lemmaB1_value(K, t), tol);
}

IneqCase lemmaB2_case(double c, double K, double t, double tol) {
    require_c(c);
    require_K(K);
    require(t >= (kE - 1.0) / (2.0 * c) && t < 1.0, "lemmaB2_case: need (e-1)/(2c) <= t < 1");
    const double lhs = std::log1p(2.0 * c * std::pow(t, 1.0 / K));
    const double rhs = std::pow(K, 1.0 + c) * std::log1p(2.0 * c * t);
    return make_case("lemmaB2", {{"c", c}, {"K", K}, {"t", t}}, lhs, rhs, tol);
}

double lemmaC_value(double c, double K, double t) {
    require_c(c);
    require_K(K);
    require(t >= 1.0 && std::isfinite(t), "lemmaC_value: need t >= 1");
    return std::pow(1.0 + 2.0 * c * t, K) - (1.0 + 2.0 * c * std::pow(t, K));
}

IneqCase lemmaC_monotone_case(double c, double K1, double K2, double t, double tol) {
    require(K1 < K2, "lemmaC_monotone_case: need K1 < K2");
    return make_case("lemmaC-monotone", {{"c", c}, {"K1", K1}, {"K2", K2}, {"t", t}}, lemmaC_value(c, K1, t),
                     lemmaC_value(c, K2, t), tol);
}

IneqCase lemmaC_case(double c, double K, double t, double tol) {
    require_c(c);
    require_K(K);
    require(t >= 1.0 && std::isfinite(t), "lemmaC_case: need t >= 1");
    const double lhs = std::log1p(2.0 * c * std::pow(t, K));
    const double rhs = K * std::log1p(2.0 * c * t);
    return make_case("lemmaC", {{"c", c}, {"K", K}, {"t", t}}, lhs, rhs, tol);
}

double distortion_rhs(double c, double K, double h, double lambda) {
    require_c(c);
    require_K(K);
    require(h >= 0.0, "distortion_rhs: need h >= 0");
    return std::sqrt(lambda) * std::pow(K, 1.0 + c) * std::max(std::pow(h, 1.0 / K), h);
}

double distortion_rhs(double c, double K, double h) { return distortion_rhs(c, K, h, specfun::lambda_K(K)); }

SchwarzChain schwarz_chain(double c, double K, double rho, double lambda) {
    require_c(c);
    require_K(K);
    require(rho > 0.0 && std::isfinite(rho), "schwarz_chain: need rho > 0");
    const double sh = std::sinh(0.5 * rho);
    const double M = power_max(K, sh);
    const double root_lambda = std::sqrt(lambda);
    const double h = std::log1p(2.0 * c * sh);

    SchwarzChain chain{};
    chain.lambda = lambda;
    chain.h = h;
    chain.q0 = std::log1p(2.0 * c * specfun::phi_quotient_hyperbolic(K, rho));
    chain.q1 = std::log1p(2.0 * c * root_lambda * M);
    chain.q2 = root_lambda * std::log1p(2.0 * c * M);
    chain.q3 = std::pow(K, 1.0 + c) * root_lambda * std::max(std::pow(h, 1.0 / K), h);
    if (!std::isfinite(chain.q0) || !std::isfinite(chain.q3)) {
        throw OverflowError("schwarz_chain: values overflow at the given (K, rho)");
    }
    return chain;
}

SchwarzChain schwarz_chain(double c, double K, double rho) {
    return schwarz_chain(c, K, rho, specfun::lambda_K(K));
}

IneqCase schwarz_chain_case(const SchwarzChain& ch, double c, double K, double rho, double tol) {
    const double m01 = scaled_margin(ch.q0, ch.q1, MarginScale::Relative);
    const double m12 = scaled_margin(ch.q1, ch.q2, MarginScale::Relative);
    const double m23 = scaled_margin(ch.q2, ch.q3, MarginScale::Relative);
    IneqCase out = make_case("schwarz-chain",
                             {{"c", c}, {"K", K}, {"rho", rho}, {"link1", m01}, {"link2", m12}, {"link3", m23}},
                             ch.q0, ch.q3, tol);
    out.margin = std::min({m01, m12, m23});
    out.pass = std::isfinite(out.margin) && out.margin >= -tol;
    return out;
}

IneqCase schwarz_chain_case(double c, double K, double rho, double tol) {
    return schwarz_chain_case(schwarz_chain(c, K, rho), c, K, rho, tol);
}

IneqCase empirical_distortion_case(double c, double K, const HalfPlanePoint& x, const HalfPlanePoint& y,
                                   const HalfPlanePoint& fx, const HalfPlanePoint& fy, double lambda, double tol) {
    const double h = metrics::h_metric(c, x, y);
    const double lhs = metrics::h_metric(c, fx, fy);
    const double rhs = distortion_rhs(c, K, h, lambda);
    return make_case("distortion",
                     {{"c", c}, {"K", K}, {"x_re", x.re()}, {"x_im", x.im()}, {"y_re", y.re()}, {"y_im", y.im()}},
                     lhs, rhs, tol);
}

IneqCase empirical_stretch_case(double c, double K, const HalfPlanePoint& x, const HalfPlanePoint& y, double tol) {
    return empirical_distortion_case(c, K, x, y, metrics::stretch_map(K, x), metrics::stretch_map(K, y),
                                     specfun::lambda_K(K), tol);
}

IneqCase empirical_mobius_case(double c, const metrics::MobiusH& m, const HalfPlanePoint& x, const HalfPlanePoint& y,
                               double tol) {
    return empirical_distortion_case(c, 1.0, x, y, metrics::mobius_apply(m, x), metrics::mobius_apply(m, y), 1.0,
                                     tol);
}

}  // namespace hgf::ineq

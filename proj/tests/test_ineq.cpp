#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hgf/errors.hpp"
#include "hgf/ineq.hpp"
#include "hgf/specfun.hpp"
#include "oracle_values.hpp"

using namespace hgf::ineq;
using hgf::metrics::HalfPlanePoint;

namespace {

constexpr double kE = std::numbers::e;

HalfPlanePoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-10.0, 10.0);
    std::uniform_real_distribution<double> lg(-3.0, 1.0);
    return {re(rng), std::pow(10.0, lg(rng))};
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return out;
}

}  // namespace

TEST_SUITE("ineq") {

TEST_CASE("margin conventions") {
    auto a = make_case("x", {}, 2.0, 1.0, 0.0, MarginScale::Absolute);
    CHECK(a.margin == -1.0);
    CHECK_FALSE(a.pass);
    auto r = make_case("x", {}, 200.0, 100.0, 0.0, MarginScale::Relative);
    CHECK(r.margin == doctest::Approx(-0.5));
    auto s = make_case("x", {}, 0.5, 0.25, 0.0, MarginScale::Relative);
    CHECK(s.margin == doctest::Approx(-0.25));
    auto q = make_case("x", {}, 0.5, 0.25, 0.0, MarginScale::RhsRelative);
    CHECK(q.margin == doctest::Approx(-1.0));
    CHECK(make_case("x", {}, 1.0 + 5e-10, 1.0, 1e-9, MarginScale::Absolute).pass);
    CHECK_FALSE(make_case("x", {}, 1.0 + 2e-9, 1.0, 1e-9, MarginScale::Absolute).pass);
    CHECK(make_case("x", {}, std::nan(""), 1.0, 1e-9).pass == false);
}

TEST_CASE("case params are addressable by name") {
    const auto c = bernoulli_pair(5.0, 2.0, 0.3);
    CHECK(c.param("c1") == 5.0);
    CHECK(c.param("t") == 0.3);
    CHECK_THROWS(c.param("nope"));
}

TEST_CASE("Bernoulli pair reference values") {
    const auto c = bernoulli_pair(5.0, 2.0, 0.3);
    CHECK(c.lhs == doctest::Approx(oracle::kBernoulli_lhs).epsilon(1e-15));
    CHECK(c.rhs == doctest::Approx(oracle::kBernoulli_rhs).epsilon(1e-15));
    CHECK(c.pass);
    CHECK(bernoulli_pair(3.0, 3.0, 7.0).margin == 0.0);
    CHECK_THROWS_AS(bernoulli_pair(1.0, 2.0, 1.0), hgf::DomainError);
    CHECK_THROWS_AS(bernoulli_pair(2.0, 0.5, 1.0), hgf::DomainError);
}

TEST_CASE("Bernoulli pair holds on a grid") {
    for (double c2 : {1.0, 1.5, 2.0, 5.0}) {
        for (double c1 : {c2, 2 * c2, 10 * c2}) {
            for (double t : log_grid(1e-8, 1e8, 33)) CHECK(bernoulli_pair(c1, c2, t).pass);
        }
    }
}

TEST_CASE("x <= c(x - 1/x) + 1") {
    CHECK(prop21_case(1.0, 1.0).margin == 0.0);
    for (double c : {1.0, 2.0, 10.0}) {
        for (double x : log_grid(1.0, 1e6, 25)) CHECK(prop21_case(c, x).pass);
    }
    CHECK_THROWS_AS(prop21_case(0.5, 2.0), hgf::DomainError);
    CHECK_THROWS_AS(prop21_case(1.0, 0.5), hgf::DomainError);
}

TEST_CASE("f(x) = log(1 + c(x - 1/x)) / log x reference values and monotonicity") {
    CHECK(lemma22_f(1.0, 2.0) == doctest::Approx(oracle::kLemma22_2).epsilon(1e-15));
    CHECK(lemma22_f(1.0, 3.0) == doctest::Approx(oracle::kLemma22_3).epsilon(1e-15));
    CHECK(lemma22_f(1.0, 1e6) == doctest::Approx(oracle::kLemma22_1e6).epsilon(1e-15));
    CHECK_THROWS_AS(lemma22_f(1.0, 1.0), hgf::DomainError);
    const auto xs = log_grid(1.0 + 1e-6, 1e6, 80);
    for (double c : {1.0, 1.5, 5.0}) {
        for (std::size_t i = 1; i < xs.size(); ++i) CHECK(lemma22_monotone_case(c, xs[i - 1], xs[i], 1e-12).pass);
    }
}

TEST_CASE("F(t) reference value and identities") {
    CHECK(F_mfprop(1.0, 2.0) == doctest::Approx(oracle::kFmfprop_1_2).epsilon(1e-15));
    CHECK(F_mfprop(1.0, 0.0) == 0.0);
    for (double t : {1e-6, 0.3, 4.0, 40.0}) {
        CHECK(F_mfprop(2.5, t) == doctest::Approx(hgf::metrics::h_from_rho(2.5, t)).epsilon(1e-15));
        CHECK(F_mfprop(1.0, t) == doctest::Approx(std::log1p(std::sqrt(2.0 * (std::cosh(t) - 1.0)))).epsilon(1e-9));
    }
}

TEST_CASE("F increasing, F(t)/t decreasing, F subadditive") {
    const auto ts = log_grid(1e-4, 50.0, 60);
    for (double c : {1.0, 2.0, 10.0}) {
        for (std::size_t i = 1; i < ts.size(); ++i) {
            CHECK(mfprop_increasing_case(c, ts[i - 1], ts[i]).pass);
            CHECK(mfprop_ratio_case(c, ts[i - 1], ts[i]).pass);
        }
        for (double s : log_grid(1e-3, 20.0, 15)) {
            for (double t : log_grid(1e-3, 20.0, 15)) CHECK(subadditivity_case(c, s, t, 1e-12).pass);
        }
    }
}

TEST_CASE("triangle inequality for h on random half-plane triples") {
    std::mt19937_64 rng(99);
    for (double c : {1.0, 1.5, 2.0, 5.0}) {
        for (int i = 0; i < 3000; ++i) {
            const auto p = random_point(rng);
            const auto q = random_point(rng);
            const auto z = random_point(rng);
            CHECK(triangle_case(hgf::metrics::Domain::HalfPlane, c, p.coords(), q.coords(), z.coords(), 1e-12).pass);
        }
    }
}

TEST_CASE("triangle case reports the disk counterexample for c = 1") {
    const double r = 1.0 - 1e-8;
    const auto bad = triangle_case(hgf::metrics::Domain::Disk, 1.0, {-r, 0}, {r, 0}, {0, 0}, 1e-12);
    CHECK_FALSE(bad.pass);
    CHECK(bad.margin == doctest::Approx(-std::log(2.0)).epsilon(1e-3));
    CHECK(triangle_case(hgf::metrics::Domain::Disk, 2.0, {-r, 0}, {r, 0}, {0, 0}, 1e-12).pass);
}

TEST_CASE("h/c <= rho <= 2h on random pairs") {
    std::mt19937_64 rng(17);
    for (double c : {1.0, 2.0, 10.0}) {
        for (int i = 0; i < 5000; ++i) {
            const auto x = random_point(rng);
            const auto y = random_point(rng);
            const auto k = comp_rho_case(c, x, y, 1e-12);
            CHECK(k.pass);
            CHECK(k.param("rho") == doctest::Approx(hgf::metrics::rho_half_plane(x, y)));
        }
    }
    CHECK_THROWS_AS(comp_rho_case(0.5, {0, 1}, {1, 1}), hgf::DomainError);
}

TEST_CASE("bounds for arch") {
    for (double x : log_grid(1.0, 1e12, 60)) CHECK(arch_bounds_case(x).pass);
    CHECK(arch_bounds_case(5.0).param("arch") == doctest::Approx(std::acosh(5.0)).epsilon(1e-15));
    CHECK_THROWS_AS(arch_bounds_case(0.5), hgf::DomainError);
}

TEST_CASE("branch selection agrees with the closed-form branch point") {
    for (double c : {1.0, 1.5, 2.0, 5.0, 10.0}) {
        for (double K : {1.0, 1.2, 2.0, 8.0}) {
            const double branch = (kE - 1.0) / (2.0 * c);
            for (double f : {1e-6, 0.1, 0.5, 0.999, 1.001, 2.0, 1e3}) {
                CAPTURE(c);
                CAPTURE(K);
                CAPTURE(f);
                CHECK(log_max(c, K, branch * f) == doctest::Approx(log_max_closed_form(c, K, branch * f)).epsilon(1e-15));
            }
            // continuous at the branch point, where L = 1
            CHECK(log_max(c, K, branch * (1 - 1e-12)) == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(log_max(c, K, branch * (1 + 1e-12)) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    CHECK(power_max(2.0, 4.0) == 16.0);
    CHECK(power_max(2.0, 0.25) == 0.5);
    CHECK(power_max(2.0, 1.0) == 1.0);
}

TEST_CASE("two-branch Bernoulli-type inequality with factor K^(1+c)") {
    for (double c : {1.0, 1.5, 2.0, 5.0, 10.0}) {
        for (double K : {1.0, 1.01, 1.2, 1.5, 2.0, 4.0, 8.0}) {
            for (double t : log_grid(1e-6, 1e6, 61)) CHECK(fuji_case(c, K, t).pass);
        }
    }
    CHECK(fuji_case(1.0, 1.0, 0.5).margin == 0.0);
    CHECK_THROWS_AS(fuji_case(0.0, 2.0, 1.0), hgf::DomainError);
    CHECK_THROWS_AS(fuji_case(1.0, 0.5, 1.0), hgf::DomainError);
    CHECK_THROWS_AS(fuji_case(1.0, 2.0, 0.0), hgf::DomainError);
}

TEST_CASE("K^2 exponent counterexample at K = 1.2, c = 5, t = 0.001") {
    const auto bad = remark310_case();
    CHECK(bad.lhs == doctest::Approx(oracle::kRemark_lhs).epsilon(1e-14));
    CHECK(bad.rhs == doctest::Approx(oracle::kRemark_k2_rhs).epsilon(1e-14));
    CHECK_FALSE(bad.pass);
    CHECK(bad.margin < -1e-4);
    const auto good = fuji_case(5.0, 1.2, 0.001);
    CHECK(good.lhs == bad.lhs);
    CHECK(good.rhs == doctest::Approx(oracle::kRemark_fuji_rhs).epsilon(1e-14));
    CHECK(good.pass);
}

TEST_CASE("Lemma A value") {
    CHECK(lemmaA_value(1.0, 2.0) == doctest::Approx(oracle::kLemmaA_1_2).epsilon(1e-14));
    CHECK(lemmaA_value(2.0, 1.0) == doctest::Approx(oracle::kLemmaA_2_limit).epsilon(1e-15));
    CHECK(lemmaA_value(2.0, 1.0 + 1e-12) == doctest::Approx(oracle::kLemmaA_2_limit).epsilon(1e-10));
    for (double c : {1.0, 2.0, 10.0, 50.0}) {
        for (double K : {1.0, 1.001, 2.0, 8.0}) CHECK(lemmaA_case(c, K).pass);
    }
    CHECK_THROWS_AS(lemmaA_case(0.5, 2.0), hgf::DomainError);
}

TEST_CASE("Lemma B1 minimum is -K/e at t = e^-K") {
    for (double K : {1.0, 1.5, 2.0, 4.0, 8.0}) {
        CHECK(lemmaB1_value(K, std::exp(-K)) == doctest::Approx(-K / kE).epsilon(1e-15));
        // golden-section search in log t
        double a = -30.0, b = 5.0;
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int i = 0; i < 200 && b - a > 1e-9; ++i) {
            const double x1 = b - g * (b - a);
            const double x2 = a + g * (b - a);
            if (lemmaB1_value(K, std::exp(x1)) < lemmaB1_value(K, std::exp(x2))) {
                b = x2;
            } else {
                a = x1;
            }
        }
        const double tmin = std::exp(0.5 * (a + b));
        CAPTURE(K);
        CHECK(std::abs(tmin - std::exp(-K)) <= 1e-4 * std::exp(-K));
        for (double t : log_grid(1e-12, 1e4, 97)) CHECK(lemmaB1_case(K, t, 1e-12).pass);
    }
}

TEST_CASE("Lemma B2 reference values and domain") {
    const auto k = lemmaB2_case(1.0, 2.0, 0.9);
    CHECK(k.lhs == doctest::Approx(oracle::kLemmaB2_lhs).epsilon(1e-15));
    CHECK(k.rhs == doctest::Approx(oracle::kLemmaB2_rhs).epsilon(1e-15));
    CHECK(k.pass);
    CHECK_THROWS_AS(lemmaB2_case(1.0, 2.0, 0.5), hgf::DomainError);
    CHECK_THROWS_AS(lemmaB2_case(1.0, 2.0, 1.0), hgf::DomainError);
}

TEST_CASE("Lemma C values and monotonicity in K") {
    CHECK(lemmaC_value(3.0, 1.5, 5.0) == doctest::Approx(oracle::kLemmaC_3_1_5_5).epsilon(1e-14));
    CHECK(lemmaC_value(3.0, 2.5, 5.0) == doctest::Approx(oracle::kLemmaC_3_2_5_5).epsilon(1e-14));
    CHECK(lemmaC_value(3.0, 1.0, 5.0) == 0.0);
    for (double c : {1.0, 2.0, 10.0}) {
        for (double t : {1.0, 2.0, 100.0}) {
            CHECK(lemmaC_monotone_case(c, 1.0, 1.5, t).pass);
            CHECK(lemmaC_monotone_case(c, 1.5, 4.0, t).pass);
            CHECK(lemmaC_case(c, 3.0, t).pass);
        }
    }
    CHECK_THROWS_AS(lemmaC_value(1.0, 2.0, 0.5), hgf::DomainError);
}

TEST_CASE("distortion bound reference value") {
    CHECK(distortion_rhs(1.0, 2.0, 0.5) == doctest::Approx(oracle::kDistortionRhs_1_2_0_5).epsilon(1e-12));
    CHECK(distortion_rhs(1.0, 1.0, 0.7) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("proof chain links are ordered and collapse at K = 1") {
    for (double c : {1.0, 2.0, 10.0}) {
        for (double K : {1.0, 1.2, 2.0, 8.0}) {
            const double lam = hgf::specfun::lambda_K(K);
            for (double rho : log_grid(1e-4, 30.0, 25)) {
                CAPTURE(c);
                CAPTURE(K);
                CAPTURE(rho);
                const auto chain = schwarz_chain(c, K, rho, lam);
                CHECK(schwarz_chain_case(chain, c, K, rho, 1e-9).pass);
                if (K == 1.0) {
                    CHECK(chain.q0 == doctest::Approx(chain.h).epsilon(1e-9));
                    CHECK(chain.q3 == doctest::Approx(chain.h).epsilon(1e-15));
                }
            }
        }
    }
}

TEST_CASE("last proof link is the Bernoulli-type inequality at t = sh(rho/2)") {
    for (double c : {1.0, 5.0}) {
        for (double K : {1.2, 4.0}) {
            const double lam = hgf::specfun::lambda_K(K);
            for (double rho : {0.01, 1.0, 5.0, 20.0}) {
                const auto chain = schwarz_chain(c, K, rho, lam);
                const auto f = fuji_case(c, K, std::sinh(0.5 * rho));
                CHECK(chain.q2 / std::sqrt(lam) == doctest::Approx(f.lhs).epsilon(1e-12));
                CHECK(chain.q3 / std::sqrt(lam) == doctest::Approx(f.rhs).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("empirical distortion for stretches and Mobius maps") {
    std::mt19937_64 rng(23);
    for (double K : {1.25, 2.0, 4.0}) {
        for (int i = 0; i < 300; ++i) {
            const auto x = random_point(rng);
            const auto y = random_point(rng);
            CHECK(empirical_stretch_case(1.0, K, x, y).pass);
        }
    }
    const hgf::metrics::MobiusH m{2.0, 1.0, 1.0, 3.0};
    for (int i = 0; i < 300; ++i) {
        const auto x = random_point(rng);
        const auto y = random_point(rng);
        const auto k = empirical_mobius_case(2.0, m, x, y, 1e-10);
        CHECK(k.pass);
        CHECK(k.lhs == doctest::Approx(k.rhs).epsilon(1e-9));
    }
}

}

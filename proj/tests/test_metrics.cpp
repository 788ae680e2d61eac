#include <cmath>
#include <random>

#include "doctest.h"
#include "hgf/errors.hpp"
#include "hgf/metrics.hpp"
#include "oracle_values.hpp"

using namespace hgf::metrics;

namespace {

HalfPlanePoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-5.0, 5.0);
    std::uniform_real_distribution<double> lg(-4.0, 2.0);
    return {re(rng), std::pow(10.0, lg(rng))};
}

double rho_acosh(const HalfPlanePoint& x, const HalfPlanePoint& y) {
    const double d = euclidean_dist(x.coords(), y.coords());
    return std::acosh(1.0 + d * d / (2.0 * x.im() * y.im()));
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("reference distances") {
    CHECK(rho_half_plane({1, 1}, {3, 2}) == doctest::Approx(oracle::kRhoH_ex).epsilon(1e-15));
    CHECK(rho_disk({0.1, 0.2}, {0.0, -0.3}) == doctest::Approx(oracle::kRhoB_ex).epsilon(1e-15));
    CHECK(h_metric(1.0, HalfPlanePoint{1, 1}, HalfPlanePoint{3, 2}) ==
          doctest::Approx(oracle::kHHalf_ex).epsilon(1e-15));
    CHECK(h_metric(2.0, DiskPoint{0, 0}, DiskPoint{0.5, 0}) == doctest::Approx(oracle::kHDisk_ex).epsilon(1e-15));
    CHECK(h_from_rho(2.0, 1.0) == doctest::Approx(oracle::kHFromRho_2_1).epsilon(1e-15));
}

TEST_CASE("domain-tagged h_metric matches the typed overloads") {
    CHECK(h_metric(Domain::HalfPlane, 1.5, {1, 1}, {3, 2}) == h_metric(1.5, HalfPlanePoint{1, 1}, HalfPlanePoint{3, 2}));
    CHECK(h_metric(Domain::Disk, 1.5, {0.1, 0}, {0, 0.4}) == h_metric(1.5, DiskPoint{0.1, 0}, DiskPoint{0, 0.4}));
    CHECK(parse_domain("disk") == Domain::Disk);
    CHECK(parse_domain(to_string(Domain::HalfPlane)) == Domain::HalfPlane);
    CHECK_THROWS_AS(parse_domain("plane"), hgf::DomainError);
}

TEST_CASE("boundary distances") {
    CHECK(boundary_dist(HalfPlanePoint{3, 0.25}) == 0.25);
    CHECK(boundary_dist(DiskPoint{0.6, 0.0}) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(boundary_dist(DiskPoint{0.0, 0.0}) == 1.0);
    CHECK(boundary_dist(Domain::Disk, {0.0, -0.75}) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("asinh form of rho agrees with the acosh form") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const auto x = random_point(rng);
        const auto y = random_point(rng);
        const double a = rho_half_plane(x, y);
        if (a < 1e-3) continue;
        CHECK(a == doctest::Approx(rho_acosh(x, y)).epsilon(1e-10));
    }
}

TEST_CASE("rho keeps precision for nearby points") {
    const HalfPlanePoint x{0.0, 1.0};
    const HalfPlanePoint y{1e-12, 1.0};
    CHECK(rho_half_plane(x, y) == doctest::Approx(1e-12).epsilon(1e-12));
    CHECK(rho_half_plane(x, x) == 0.0);
}

TEST_CASE("h on the half plane equals log(1 + 2c sh(rho/2))") {
    std::mt19937_64 rng(11);
    for (double c : {0.5, 1.0, 2.0, 10.0}) {
        for (int i = 0; i < 500; ++i) {
            const auto x = random_point(rng);
            const auto y = random_point(rng);
            CHECK(h_metric(c, x, y) == doctest::Approx(h_from_rho(c, rho_half_plane(x, y))).epsilon(1e-12));
        }
    }
}

TEST_CASE("metric axioms: symmetry, identity, positivity") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const auto x = random_point(rng);
        const auto y = random_point(rng);
        CHECK(rho_half_plane(x, y) == rho_half_plane(y, x));
        CHECK(h_metric(1.0, x, y) == h_metric(1.0, y, x));
        CHECK(h_metric(1.0, x, x) == 0.0);
        if (!(x == y)) CHECK(h_metric(1.0, x, y) > 0.0);
    }
}

TEST_CASE("Mobius maps preserve rho and h") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    int checked = 0;
    while (checked < 500) {
        const MobiusH m{coef(rng), coef(rng), coef(rng), coef(rng)};
        if (m.det() < 0.1) continue;
        const auto x = random_point(rng);
        const auto y = random_point(rng);
        const auto fx = mobius_apply(m, x);
        const auto fy = mobius_apply(m, y);
        CHECK(fx.im() > 0.0);
        CHECK(rho_half_plane(fx, fy) == doctest::Approx(rho_half_plane(x, y)).epsilon(1e-9));
        CHECK(h_metric(2.0, fx, fy) == doctest::Approx(h_metric(2.0, x, y)).epsilon(1e-9));
        ++checked;
    }
}

TEST_CASE("Mobius validation and poles") {
    CHECK_THROWS_AS((MobiusH{1, 0, 0, -1}.validate()), hgf::DomainError);
    CHECK_THROWS_AS(mobius_apply(MobiusH{0, -1, 1, 0}, HalfPlanePoint{0.0, 1e-170}), hgf::DomainError);
    const auto w = mobius_apply(MobiusH{0, -1, 1, 0}, HalfPlanePoint{0.0, 2.0});
    CHECK(w.re() == doctest::Approx(0.0));
    CHECK(w.im() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("radial stretch keeps arguments and raises moduli to the power K") {
    for (double K : {1.0, 1.25, 2.0, 4.0}) {
        for (const HalfPlanePoint p : {HalfPlanePoint{1, 1}, HalfPlanePoint{-0.2, 0.1}, HalfPlanePoint{3, 0.5}}) {
            const auto q = stretch_map(K, p);
            CHECK(std::atan2(q.im(), q.re()) == doctest::Approx(std::atan2(p.im(), p.re())).epsilon(1e-14));
            CHECK(std::hypot(q.re(), q.im()) ==
                  doctest::Approx(std::pow(std::hypot(p.re(), p.im()), K)).epsilon(1e-14));
        }
    }
    CHECK_THROWS_AS(stretch_map(0.5, HalfPlanePoint{1, 1}), hgf::DomainError);
}

TEST_CASE("disk h with c = 1 fails the triangle inequality near the boundary") {
    const double r = 1.0 - 1e-6;
    const double direct = h_metric(Domain::Disk, 1.0, {-r, 0}, {r, 0});
    const double via0 = h_metric(Domain::Disk, 1.0, {-r, 0}, {0, 0}) + h_metric(Domain::Disk, 1.0, {0, 0}, {r, 0});
    CHECK(direct > via0);
}

TEST_CASE("disk h with c = 2 satisfies it on the same collinear triples") {
    for (double depth = 0.5; depth <= 12.0; depth += 0.5) {
        const double r = 1.0 - std::pow(10.0, -depth);
        const double direct = h_metric(Domain::Disk, 2.0, {-r, 0}, {r, 0});
        const double via0 =
            h_metric(Domain::Disk, 2.0, {-r, 0}, {0, 0}) + h_metric(Domain::Disk, 2.0, {0, 0}, {r, 0});
        CAPTURE(r);
        CHECK(direct <= via0 + 1e-12);
    }
}

TEST_CASE("invalid points and constants") {
    CHECK_THROWS_AS(HalfPlanePoint(0.0, 0.0), hgf::DomainError);
    CHECK_THROWS_AS(HalfPlanePoint(0.0, -1.0), hgf::DomainError);
    CHECK_THROWS_AS(HalfPlanePoint(std::nan(""), 1.0), hgf::DomainError);
    CHECK_THROWS_AS(DiskPoint(1.0, 0.0), hgf::DomainError);
    CHECK_THROWS_AS(DiskPoint(0.8, 0.8), hgf::DomainError);
    CHECK_THROWS_AS(h_metric(0.0, HalfPlanePoint{0, 1}, HalfPlanePoint{1, 1}), hgf::DomainError);
    CHECK_THROWS_AS(h_from_rho(1.0, -1.0), hgf::DomainError);
}

}

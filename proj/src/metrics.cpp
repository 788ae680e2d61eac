#include "hgf/metrics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hgf/errors.hpp"

namespace hgf::metrics {

namespace {

void require_c(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("metric constant c must be positive and finite");
}

}  // namespace

HalfPlanePoint::HalfPlanePoint(double re, double im) : re_(re), im_(im) {
    if (!std::isfinite(re) || !std::isfinite(im) || !(im > 0.0)) {
        throw DomainError("point is not in the upper half plane: (" + std::to_string(re) + ", " +
                          std::to_string(im) + ")");
    }
}

DiskPoint::DiskPoint(double re, double im) : re_(re), im_(im) {
    if (!std::isfinite(re) || !std::isfinite(im) || !(re * re + im * im < 1.0)) {
        throw DomainError("point is not in the unit disk: (" + std::to_string(re) + ", " + std::to_string(im) +
                          ")");
    }
}

std::string_view to_string(Domain d) { return d == Domain::HalfPlane ? "half-plane" : "disk"; }

Domain parse_domain(std::string_view name) {
    if (name == "half-plane") return Domain::HalfPlane;
    if (name == "disk") return Domain::Disk;
    throw DomainError("unknown domain '" + std::string(name) + "' (expected half-plane or disk)");
}

void MobiusH::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d) || !(det() > 0.0)) {
        throw DomainError("Mobius map must have finite coefficients with ad - bc > 0");
    }
}

double euclidean_dist(Point2 p, Point2 q) { return std::hypot(p.re - q.re, p.im - q.im); }

double boundary_dist(const HalfPlanePoint& p) { return p.im(); }

double boundary_dist(const DiskPoint& p) {
    // 1 - |p| without cancelling against 1 - |p|^2
    return (1.0 - p.abs2()) / (1.0 + std::sqrt(p.abs2()));
}

double boundary_dist(Domain dom, Point2 p) {
    return dom == Domain::HalfPlane ? boundary_dist(HalfPlanePoint(p)) : boundary_dist(DiskPoint(p));
}

double rho_half_plane(const HalfPlanePoint& x, const HalfPlanePoint& y) {
    const double d = euclidean_dist(x.coords(), y.coords());
    return 2.0 * std::asinh(d / (2.0 * std::sqrt(x.im() * y.im())));
}

double rho_disk(const DiskPoint& a, const DiskPoint& b) {
    const double d = euclidean_dist(a.coords(), b.coords());
    return 2.0 * std::asinh(d / std::sqrt((1.0 - a.abs2()) * (1.0 - b.abs2())));
}

double h_metric(double c, const HalfPlanePoint& p, const HalfPlanePoint& q) {
    require_c(c);
    const double d = euclidean_dist(p.coords(), q.coords());
    return std::log1p(c * d / std::sqrt(boundary_dist(p) * boundary_dist(q)));
}

double h_metric(double c, const DiskPoint& p, const DiskPoint& q) {
    require_c(c);
    const double d = euclidean_dist(p.coords(), q.coords());
    return std::log1p(c * d / std::sqrt(boundary_dist(p) * boundary_dist(q)));
}

double h_metric(Domain dom, double c, Point2 p, Point2 q) {
    if (dom == Domain::HalfPlane) return h_metric(c, HalfPlanePoint(p), HalfPlanePoint(q));
    return h_metric(c, DiskPoint(p), DiskPoint(q));
}

double h_from_rho(double c, double rho) {
    require_c(c);
    if (!(rho >= 0.0)) throw DomainError("hyperbolic distance must be non-negative");
    return std::log1p(2.0 * c * std::sinh(0.5 * rho));
}

HalfPlanePoint mobius_apply(const MobiusH& m, const HalfPlanePoint& p) {
    m.validate();
    const double x = p.re();
    const double y = p.im();
    const double wr = m.c * x + m.d;
    const double wi = m.c * y;
    const double den = wr * wr + wi * wi;
    if (!(den >= std::numeric_limits<double>::min())) throw DomainError("Mobius map is singular at the given point");
    // (a z + b) * conj(c z + d) / |c z + d|^2; Im part is det * y / den exactly.
    const double re = ((m.a * x + m.b) * wr + m.a * y * wi) / den;
    const double im = m.det() * y / den;
    return {re, im};
}

HalfPlanePoint stretch_map(double K, const HalfPlanePoint& p) {
    if (!(K >= 1.0) || !std::isfinite(K)) throw DomainError("stretch_map: K must be >= 1");
    const double scale = std::pow(std::hypot(p.re(), p.im()), K - 1.0);
    return {p.re() * scale, p.im() * scale};
}

}  // namespace hgf::metrics

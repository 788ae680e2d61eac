#pragma once

// Hyperbolic metrics of the upper half plane H and the unit disk B, and the
// hyperbolic-type metric
//
//   h_{D,c}(p, q) = log(1 + c |p - q| / sqrt(d_D(p) d_D(q))),
//
// with d_D the Euclidean distance to the boundary.

#include <string_view>

namespace hgf::metrics {

/// Raw plane coordinates; no domain attached.
struct Point2 {
    double re = 0.0;
    double im = 0.0;
};

class HalfPlanePoint {
public:
    /// Throws DomainError unless im > 0 and both coordinates are finite.
    HalfPlanePoint(double re, double im);
    explicit HalfPlanePoint(Point2 p) : HalfPlanePoint(p.re, p.im) {}

    double re() const { return re_; }
    double im() const { return im_; }
    Point2 coords() const { return {re_, im_}; }

    bool operator==(const HalfPlanePoint&) const = default;

private:
    double re_;
    double im_;
};

class DiskPoint {
public:
    /// Throws DomainError unless re^2 + im^2 < 1.
    DiskPoint(double re, double im);
    explicit DiskPoint(Point2 p) : DiskPoint(p.re, p.im) {}

    double re() const { return re_; }
    double im() const { return im_; }
    Point2 coords() const { return {re_, im_}; }
    double abs2() const { return re_ * re_ + im_ * im_; }

    bool operator==(const DiskPoint&) const = default;

private:
    double re_;
    double im_;
};

enum class Domain { HalfPlane, Disk };

std::string_view to_string(Domain d);
/// Accepts "half-plane" and "disk".
Domain parse_domain(std::string_view name);

/// z -> (a z + b) / (c z + d) with real coefficients and ad - bc > 0.
struct MobiusH {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double det() const { return a * d - b * c; }
    void validate() const;
};

double euclidean_dist(Point2 p, Point2 q);

double boundary_dist(const HalfPlanePoint& p);
double boundary_dist(const DiskPoint& p);
/// Validates p against dom; throws DomainError when p is outside.
double boundary_dist(Domain dom, Point2 p);

/// arch(1 + |x-y|^2 / (2 Im x Im y)), evaluated in the cancellation-free form
/// 2 arsh(|x-y| / (2 sqrt(Im x Im y))).
double rho_half_plane(const HalfPlanePoint& x, const HalfPlanePoint& y);

/// 2 arsh(|a-b| / sqrt((1-|a|^2)(1-|b|^2))).
double rho_disk(const DiskPoint& a, const DiskPoint& b);

double h_metric(double c, const HalfPlanePoint& p, const HalfPlanePoint& q);
double h_metric(double c, const DiskPoint& p, const DiskPoint& q);
double h_metric(Domain dom, double c, Point2 p, Point2 q);

/// log(1 + 2c sh(rho/2)); equals h_{H,c} at hyperbolic distance rho.
double h_from_rho(double c, double rho);

HalfPlanePoint mobius_apply(const MobiusH& m, const HalfPlanePoint& p);

/// Radial stretch z -> z |z|^{K-1}, a K-quasiconformal self-map of H.
HalfPlanePoint stretch_map(double K, const HalfPlanePoint& p);

}  // namespace hgf::metrics

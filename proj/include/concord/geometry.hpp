#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace concord {

struct Point {
    double u = 0.0;
    double v = 0.0;
};

struct Rect {
    double u0 = 0.0, u1 = 1.0;
    double v0 = 0.0, v1 = 1.0;

    double width() const { return u1 - u0; }
    double height() const { return v1 - v0; }
    double area() const { return width() * height(); }
    bool contains(double u, double v) const {
        return u >= u0 && u <= u1 && v >= v0 && v <= v1;
    }
    std::optional<Rect> intersect(const Rect& o) const;
};

/// The line a*u + b*v = c, along which a piecewise surface may have a kink.
struct KinkLine {
    double a = 0.0, b = 0.0, c = 0.0;
};

/// Local representation c0 + cu*u + cv*v + cuv*u*v of a surface patch.
struct BilinearPatch {
    double c0 = 0.0, cu = 0.0, cv = 0.0, cuv = 0.0;

    double eval(double u, double v) const { return c0 + cu * u + cv * v + cuv * u * v; }

    BilinearPatch operator+(const BilinearPatch& o) const {
        return {c0 + o.c0, cu + o.cu, cv + o.cv, cuv + o.cuv};
    }
    BilinearPatch operator*(double s) const { return {c0 * s, cu * s, cv * s, cuv * s}; }
};

/// Exact description of a surface that is bilinear between straight kink
/// lines. patch_at must return the local coefficients valid on the open
/// region containing the query point.
struct PiecewiseStructure {
    std::vector<KinkLine> lines;
    std::function<BilinearPatch(double, double)> patch_at;
};

/// A scalar field on the unit square; carries the exact piecewise structure
/// when one is known, enabling closed-form integration.
struct Surface {
    std::function<double(double, double)> eval;
    std::optional<PiecewiseStructure> structure;
};

using Polygon = std::vector<Point>;

/// Signed area (positive for counter-clockwise orientation).
double polygon_area(const Polygon& poly);

/// Moments of the polygon: integrals of 1, u, v, u*v over its interior.
struct PolygonMoments {
    double m00 = 0.0, m10 = 0.0, m01 = 0.0, m11 = 0.0;
};
PolygonMoments polygon_moments(const Polygon& poly);

/// Part of poly with a*u + b*v <= c (Sutherland-Hodgman against one half-plane).
Polygon clip_halfplane(const Polygon& poly, double a, double b, double c);

/// Exact integral of a piecewise-bilinear surface over a rectangle: the
/// rectangle is split along the structure's kink lines and each piece is
/// integrated from its local patch.
double integrate_piecewise(const PiecewiseStructure& s, const Rect& rect);

} // namespace concord

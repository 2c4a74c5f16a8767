#include "concord/geometry.hpp"

#include <cmath>

namespace concord {

std::optional<Rect> Rect::intersect(const Rect& o) const {
    Rect r{std::max(u0, o.u0), std::min(u1, o.u1), std::max(v0, o.v0), std::min(v1, o.v1)};
    if (r.u0 >= r.u1 || r.v0 >= r.v1) return std::nullopt;
    return r;
}

double polygon_area(const Polygon& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        acc += p.u * q.v - q.u * p.v;
    }
    return 0.5 * acc;
}

PolygonMoments polygon_moments(const Polygon& poly) {
    PolygonMoments m;
    const std::size_t n = poly.size();
    if (n < 3) return m;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        const double cross = p.u * q.v - q.u * p.v;
        m.m00 += cross;
        m.m10 += cross * (p.u + q.u);
        m.m01 += cross * (p.v + q.v);
        m.m11 += cross * (2.0 * p.u * p.v + p.u * q.v + q.u * p.v + 2.0 * q.u * q.v);
    }
    m.m00 /= 2.0;
    m.m10 /= 6.0;
    m.m01 /= 6.0;
    m.m11 /= 24.0;
    return m;
}

Polygon clip_halfplane(const Polygon& poly, double a, double b, double c) {
    Polygon out;
    const std::size_t n = poly.size();
    if (n == 0) return out;
    out.reserve(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        const double dp = a * p.u + b * p.v - c;
        const double dq = a * q.u + b * q.v - c;
        const bool pin = dp <= 0.0;
        const bool qin = dq <= 0.0;
        if (pin) out.push_back(p);
        if (pin != qin) {
            const double t = dp / (dp - dq);
            out.push_back({p.u + t * (q.u - p.u), p.v + t * (q.v - p.v)});
        }
    }
    return out;
}

double integrate_piecewise(const PiecewiseStructure& s, const Rect& rect) {
    if (rect.u1 <= rect.u0 || rect.v1 <= rect.v0) return 0.0;
    Polygon base{{rect.u0, rect.v0}, {rect.u1, rect.v0}, {rect.u1, rect.v1}, {rect.u0, rect.v1}};
    std::vector<Polygon> pieces{base};
    for (const KinkLine& line : s.lines) {
        std::vector<Polygon> next;
        next.reserve(pieces.size() * 2);
        for (const Polygon& poly : pieces) {
            Polygon lo = clip_halfplane(poly, line.a, line.b, line.c);
            Polygon hi = clip_halfplane(poly, -line.a, -line.b, -line.c);
            if (std::fabs(polygon_area(lo)) > 1e-30) next.push_back(std::move(lo));
            if (std::fabs(polygon_area(hi)) > 1e-30) next.push_back(std::move(hi));
        }
        pieces = std::move(next);
    }
    double total = 0.0;
    for (const Polygon& poly : pieces) {
        const PolygonMoments m = polygon_moments(poly);
        if (std::fabs(m.m00) < 1e-30) continue;
        const BilinearPatch patch = s.patch_at(m.m10 / m.m00, m.m01 / m.m00);
        total += patch.c0 * m.m00 + patch.cu * m.m10 + patch.cv * m.m01 + patch.cuv * m.m11;
    }
    return total;
}

} // namespace concord

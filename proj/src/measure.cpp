#include "concord/measure.hpp"

#include "concord/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace concord {

namespace {

/// Parameter interval of segment a + t*(b-a), t in [0,1], inside rect.
/// Returns {t0,t1} with t0 <= t1, or an empty interval.
std::pair<double, double> clip_segment(const Segment1D& s, const Rect& rect) {
    double t0 = 0.0, t1 = 1.0;
    const double d[2] = {s.b.u - s.a.u, s.b.v - s.a.v};
    const double p[2] = {s.a.u, s.a.v};
    const double lo[2] = {rect.u0, rect.v0};
    const double hi[2] = {rect.u1, rect.v1};
    for (int ax = 0; ax < 2; ++ax) {
        if (std::fabs(d[ax]) < 1e-300) {
            if (p[ax] < lo[ax] || p[ax] > hi[ax]) return {0.0, 0.0};
            continue;
        }
        double ta = (lo[ax] - p[ax]) / d[ax];
        double tb = (hi[ax] - p[ax]) / d[ax];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
    }
    if (t1 <= t0) return {0.0, 0.0};
    return {t0, t1};
}

} // namespace

double MeasureDescriptor::total_mass() const {
    double m = 0.0;
    for (const Panel2D& p : panels) m += p.density * p.rect.area();
    for (const Segment1D& s : segments) m += s.mass;
    for (const MassAtom& a : atoms) m += a.mass;
    return m;
}

double MeasureDescriptor::mass(const Rect& rect) const {
    double m = 0.0;
    for (const Panel2D& p : panels) {
        if (auto r = p.rect.intersect(rect)) m += p.density * r->area();
    }
    for (const Segment1D& s : segments) {
        const auto [t0, t1] = clip_segment(s, rect);
        m += s.mass * (t1 - t0);
    }
    for (const MassAtom& a : atoms) {
        if (rect.contains(a.p.u, a.p.v)) m += a.mass;
    }
    return m;
}

MeasureDescriptor descriptor_pi(int panel_order, int segment_order) {
    MeasureDescriptor d;
    d.panel_order = panel_order;
    d.segment_order = segment_order;
    // Quadrant panels keep every node strictly inside one quadrant, so
    // integrals over (0,1/2)^2 reuse the same nodes.
    d.panels = {{{0.0, 0.5, 0.0, 0.5}, 1.0},
                {{0.5, 1.0, 0.0, 0.5}, 1.0},
                {{0.0, 0.5, 0.5, 1.0}, 1.0},
                {{0.5, 1.0, 0.5, 1.0}, 1.0}};
    return d;
}

MeasureDescriptor descriptor_mgamma(int panel_order, int segment_order) {
    MeasureDescriptor d;
    d.panel_order = panel_order;
    d.segment_order = segment_order;
    d.segments = {{{0.0, 0.0}, {0.5, 0.5}, 0.25},
                  {{0.5, 0.5}, {1.0, 1.0}, 0.25},
                  {{0.0, 1.0}, {0.5, 0.5}, 0.25},
                  {{0.5, 0.5}, {1.0, 0.0}, 0.25}};
    return d;
}

MeasureDescriptor descriptor_v(int panel_order, int segment_order) {
    MeasureDescriptor d;
    d.panel_order = panel_order;
    d.segment_order = segment_order;
    d.segments = {{{0.0, 0.5}, {0.5, 0.0}, 0.25},
                  {{0.5, 0.0}, {1.0, 0.5}, 0.25},
                  {{1.0, 0.5}, {0.5, 1.0}, 0.25},
                  {{0.5, 1.0}, {0.0, 0.5}, 0.25}};
    return d;
}

MeasureDescriptor descriptor_m(int panel_order, int segment_order) {
    MeasureDescriptor d;
    d.panel_order = panel_order;
    d.segment_order = segment_order;
    d.segments = {{{0.0, 0.0}, {0.5, 0.5}, 0.5}, {{0.5, 0.5}, {1.0, 1.0}, 0.5}};
    return d;
}

MeasureDescriptor descriptor_a_alpha(double alpha_mix, int panel_order, int segment_order) {
    MeasureDescriptor d = descriptor_mgamma(panel_order, segment_order);
    for (Segment1D& s : d.segments) s.mass *= alpha_mix;
    MeasureDescriptor pi = descriptor_pi(panel_order, segment_order);
    for (Panel2D& p : pi.panels) {
        p.density *= 1.0 - alpha_mix;
        d.panels.push_back(p);
    }
    return d;
}

std::vector<QuadNode> quadrature_nodes(const MeasureDescriptor& d,
                                       const std::optional<Rect>& region) {
    std::vector<QuadNode> nodes;
    const GaussRule& prule = gauss_legendre(d.panel_order);
    for (const Panel2D& p : d.panels) {
        Rect r = p.rect;
        if (region) {
            auto clipped = r.intersect(*region);
            if (!clipped) continue;
            r = *clipped;
        }
        const double hu = 0.5 * r.width(), cu = 0.5 * (r.u0 + r.u1);
        const double hv = 0.5 * r.height(), cv = 0.5 * (r.v0 + r.v1);
        for (int i = 0; i < d.panel_order; ++i) {
            for (int j = 0; j < d.panel_order; ++j) {
                nodes.push_back({cu + hu * prule.nodes[i], cv + hv * prule.nodes[j],
                                 p.density * hu * hv * prule.weights[i] * prule.weights[j]});
            }
        }
    }
    const GaussRule& srule = gauss_legendre(d.segment_order);
    for (const Segment1D& s : d.segments) {
        double t0 = 0.0, t1 = 1.0;
        if (region) {
            std::tie(t0, t1) = clip_segment(s, *region);
            if (t1 <= t0) continue;
        }
        const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
        for (int i = 0; i < d.segment_order; ++i) {
            const double t = mid + half * srule.nodes[i];
            nodes.push_back({s.a.u + t * (s.b.u - s.a.u), s.a.v + t * (s.b.v - s.a.v),
                             s.mass * half * srule.weights[i]});
        }
    }
    for (const MassAtom& a : d.atoms) {
        if (region && !region->contains(a.p.u, a.p.v)) continue;
        nodes.push_back({a.p.u, a.p.v, a.mass});
    }
    return nodes;
}

} // namespace concord

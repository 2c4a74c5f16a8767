#include "concord/concordance.hpp"

#include "concord/errors.hpp"
#include "concord/families.hpp"
#include "concord/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace concord {

namespace {

std::pair<double, double> clip_param(const Segment1D& s, const Rect& rect) {
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
    return t1 <= t0 ? std::pair<double, double>{0.0, 0.0} : std::pair<double, double>{t0, t1};
}

double panel_tensor_gl(const std::function<double(double, double)>& f, const Rect& r,
                       double density, int order) {
    const GaussRule& rule = gauss_legendre(order);
    const double hu = 0.5 * r.width(), cu = 0.5 * (r.u0 + r.u1);
    const double hv = 0.5 * r.height(), cv = 0.5 * (r.v0 + r.v1);
    double acc = 0.0;
    for (int i = 0; i < order; ++i) {
        const double u = cu + hu * rule.nodes[i];
        double row = 0.0;
        for (int j = 0; j < order; ++j) row += rule.weights[j] * f(u, cv + hv * rule.nodes[j]);
        acc += rule.weights[i] * row;
    }
    return density * hu * hv * acc;
}

double segment_gl(const std::function<double(double, double)>& f, const Segment1D& s,
                  double t0, double t1, int order) {
    const GaussRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
    double acc = 0.0;
    for (int i = 0; i < order; ++i) {
        const double t = mid + half * rule.nodes[i];
        acc += rule.weights[i] * f(s.a.u + t * (s.b.u - s.a.u), s.a.v + t * (s.b.v - s.a.v));
    }
    return s.mass * half * acc;
}

/// Segment integral split at the surface's kink crossings; each piece is a
/// low-degree polynomial along the segment, so moderate orders are exact.
double segment_structured(const Surface& f, const Segment1D& s, double t0, double t1) {
    std::vector<double> cuts{t0, t1};
    const double du = s.b.u - s.a.u, dv = s.b.v - s.a.v;
    for (const KinkLine& l : f.structure->lines) {
        const double den = l.a * du + l.b * dv;
        if (std::fabs(den) < 1e-14) continue;
        const double t = (l.c - l.a * s.a.u - l.b * s.a.v) / den;
        if (t > t0 + 1e-14 && t < t1 - 1e-14) cuts.push_back(t);
    }
    std::sort(cuts.begin(), cuts.end());
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
        acc += segment_gl(f.eval, s, cuts[k], cuts[k + 1], 24);
    return acc;
}

double integrate_once(const Surface& f, const MeasureDescriptor& D,
                      const std::optional<Rect>& region, int panel_order, int segment_order) {
    double acc = 0.0;
    for (const Panel2D& p : D.panels) {
        Rect r = p.rect;
        if (region) {
            auto clipped = r.intersect(*region);
            if (!clipped) continue;
            r = *clipped;
        }
        if (f.structure)
            acc += p.density * integrate_piecewise(*f.structure, r);
        else
            acc += panel_tensor_gl(f.eval, r, p.density, panel_order);
    }
    for (const Segment1D& s : D.segments) {
        double t0 = 0.0, t1 = 1.0;
        if (region) {
            std::tie(t0, t1) = clip_param(s, *region);
            if (t1 <= t0) continue;
        }
        if (f.structure)
            acc += segment_structured(f, s, t0, t1);
        else
            acc += segment_gl(f.eval, s, t0, t1, segment_order);
    }
    for (const MassAtom& a : D.atoms) {
        if (region && !region->contains(a.p.u, a.p.v)) continue;
        acc += a.mass * f.eval(a.p.u, a.p.v);
    }
    return acc;
}

} // namespace

double biconvex(const Surface& f, const MeasureDescriptor& D,
                const std::optional<Rect>& region, bool check) {
    const double value = integrate_once(f, D, region, D.panel_order, D.segment_order);
    if (check && !f.structure) {
        const double coarse = integrate_once(f, D, region, std::max(8, D.panel_order / 2),
                                             std::max(16, D.segment_order / 2));
        if (std::fabs(value - coarse) > D.quad_tol)
            throw QuadratureFailure("biconvex: quadrature did not reach the target tolerance");
    }
    return value;
}

double biconvex(const CopulaModel& C, const MeasureDescriptor& D,
                const std::optional<Rect>& region, bool check) {
    return biconvex(C.surface(), D, region, check);
}

double alpha_normalizer(const CopulaModel& A, const MeasureDescriptor& D, bool check_invariance) {
    if (check_invariance && !is_invariant(A))
        throw NotInvariant("alpha_normalizer: copula is not invariant");
    const double m_a = biconvex(m_copula(), D);
    return 1.0 / (m_a - 0.25);
}

namespace {

ConcordanceSpec make_spec(SpecTag tag, std::string name, CopulaModel A, MeasureDescriptor D) {
    ConcordanceSpec s;
    s.tag = tag;
    s.name = std::move(name);
    s.A = std::move(A);
    s.measure = std::move(D);
    s.alpha = alpha_normalizer(s.A, s.measure, false);
    if (s.tag == SpecTag::Pi) {
        s.cell_average = [](const Rect& r) {
            return 0.25 * (r.u0 + r.u1) * (r.v0 + r.v1);
        };
    } else {
        const PiecewiseStructure structure = *s.A.structure;
        s.cell_average = [structure](const Rect& r) {
            return integrate_piecewise(structure, r) / r.area();
        };
    }
    return s;
}

} // namespace

ConcordanceSpec spec_pi() { return make_spec(SpecTag::Pi, "rho", pi_copula(), descriptor_pi()); }

ConcordanceSpec spec_mgamma() {
    return make_spec(SpecTag::MGamma, "gamma", m_gamma(), descriptor_mgamma());
}

ConcordanceSpec spec_v() { return make_spec(SpecTag::V, "kappaV", v_copula(), descriptor_v()); }

ConcordanceSpec spec_a_alpha(double alpha_mix) {
    return make_spec(SpecTag::AAlpha, "kappaA", a_alpha(alpha_mix),
                     descriptor_a_alpha(alpha_mix));
}

double kappa(const CopulaModel& C, const ConcordanceSpec& spec) {
    return spec.alpha * (biconvex(C, spec.measure) - 0.25);
}

double kappa_interpolated(const CopulaModel& C, double alpha_mix) {
    if (alpha_mix < 0.0 || alpha_mix > 1.0)
        throw ParamOutOfRange("kappa_interpolated: mixing weight must be in [0,1]");
    return kappa(C, spec_a_alpha(alpha_mix));
}

double kappa_interpolated_weighted(const CopulaModel& C, double alpha_mix) {
    if (alpha_mix < 0.0 || alpha_mix > 1.0)
        throw ParamOutOfRange("kappa_interpolated_weighted: mixing weight must be in [0,1]");
    const double a = alpha_mix;
    const double rho = kappa(C, spec_pi());
    const double gamma = kappa(C, spec_mgamma());
    return 2.0 * (1.0 - a) / (2.0 + a) * rho + 3.0 * a / (2.0 + a) * gamma;
}

double comparison_slack(const CopulaModel& C, const ConcordanceSpec& A,
                        const ConcordanceSpec& B) {
    if (!precede(A.A, B.A))
        throw OrderViolated("comparison_slack: A does not precede B");
    return A.alpha * kappa(C, B) - B.alpha * kappa(C, A);
}

double e_integral(const CopulaModel& C, const MeasureDescriptor& D, bool lower_quadrant) {
    std::optional<Rect> region;
    if (lower_quadrant) region = Rect{0.0, 0.5, 0.0, 0.5};
    return biconvex(e_surface(C), D, region);
}

} // namespace concord

#include "concord/copula.hpp"

#include "concord/errors.hpp"
#include "concord/rng.hpp"

#include <cmath>

namespace concord {

namespace {

// Every group element acts on the random vector as: flip coordinates, then
// optionally swap them.
struct GroupElement {
    bool swap = false;
    bool flip_u = false;
    bool flip_v = false;
};

GroupElement element_of(ReflectionTag g) {
    switch (g) {
        case ReflectionTag::Identity: return {false, false, false};
        case ReflectionTag::Nu1:      return {false, true,  false};
        case ReflectionTag::Nu2:      return {false, false, true};
        case ReflectionTag::Nu:       return {false, true,  true};
        case ReflectionTag::Pi:       return {true,  false, false};
        case ReflectionTag::PiNu1:    return {true,  true,  false};
        case ReflectionTag::PiNu2:    return {true,  false, true};
        case ReflectionTag::PiNu:     return {true,  true,  true};
    }
    return {};
}

ReflectionTag tag_of(const GroupElement& e) {
    if (!e.swap) {
        if (!e.flip_u && !e.flip_v) return ReflectionTag::Identity;
        if (e.flip_u && !e.flip_v) return ReflectionTag::Nu1;
        if (!e.flip_u && e.flip_v) return ReflectionTag::Nu2;
        return ReflectionTag::Nu;
    }
    if (!e.flip_u && !e.flip_v) return ReflectionTag::Pi;
    if (e.flip_u && !e.flip_v) return ReflectionTag::PiNu1;
    if (!e.flip_u && e.flip_v) return ReflectionTag::PiNu2;
    return ReflectionTag::PiNu;
}

Point apply_element(const GroupElement& e, Point p) {
    const double s = e.flip_u ? 1.0 - p.u : p.u;
    const double t = e.flip_v ? 1.0 - p.v : p.v;
    return e.swap ? Point{t, s} : Point{s, t};
}

// Substitute u -> au + bu*u, v -> av + bv*v into a patch.
BilinearPatch affine_subst(const BilinearPatch& p, double au, double bu, double av, double bv) {
    BilinearPatch r;
    r.c0 = p.c0 + p.cu * au + p.cv * av + p.cuv * au * av;
    r.cu = p.cu * bu + p.cuv * bu * av;
    r.cv = p.cv * bv + p.cuv * au * bv;
    r.cuv = p.cuv * bu * bv;
    return r;
}

KinkLine affine_subst(const KinkLine& l, double au, double bu, double av, double bv) {
    // a*(au + bu*u) + b*(av + bv*v) = c
    return {l.a * bu, l.b * bv, l.c - l.a * au - l.b * av};
}

BilinearPatch swap_patch(const BilinearPatch& p) { return {p.c0, p.cv, p.cu, p.cuv}; }
KinkLine swap_line(const KinkLine& l) { return {l.b, l.a, l.c}; }

} // namespace

const std::array<ReflectionTag, 8>& all_reflections() {
    static const std::array<ReflectionTag, 8> tags = {
        ReflectionTag::Identity, ReflectionTag::Nu1, ReflectionTag::Nu2, ReflectionTag::Nu,
        ReflectionTag::Pi, ReflectionTag::PiNu1, ReflectionTag::PiNu2, ReflectionTag::PiNu};
    return tags;
}

std::string reflection_name(ReflectionTag g) {
    switch (g) {
        case ReflectionTag::Identity: return "iota";
        case ReflectionTag::Nu1:      return "nu1";
        case ReflectionTag::Nu2:      return "nu2";
        case ReflectionTag::Nu:       return "nu";
        case ReflectionTag::Pi:       return "pi";
        case ReflectionTag::PiNu1:    return "pi.nu1";
        case ReflectionTag::PiNu2:    return "pi.nu2";
        case ReflectionTag::PiNu:     return "pi.nu";
    }
    return "?";
}

ReflectionTag compose(ReflectionTag g, ReflectionTag h) {
    // g(h(C)) corresponds to the point map T_g o T_h; identify the composite
    // by tracing where the symbolic coordinates go.
    const GroupElement eg = element_of(g);
    const GroupElement eh = element_of(h);
    // Track (source, flipped) for both output slots of T_h, then feed into T_g.
    struct Slot { bool from_v; bool flipped; };
    Slot h1{false, eh.flip_u}, h2{true, eh.flip_v};
    if (eh.swap) std::swap(h1, h2);
    Slot g1 = h1, g2 = h2;
    g1.flipped = g1.flipped != eg.flip_u;
    g2.flipped = g2.flipped != eg.flip_v;
    if (eg.swap) std::swap(g1, g2);
    GroupElement out;
    out.swap = g1.from_v;
    out.flip_u = out.swap ? g2.flipped : g1.flipped;
    out.flip_v = out.swap ? g1.flipped : g2.flipped;
    return tag_of(out);
}

CopulaModel reflect(const CopulaModel& C, ReflectionTag g) {
    if (g == ReflectionTag::Identity) return C;
    const GroupElement e = element_of(g);

    CopulaModel out;
    out.family = reflection_name(g) + "(" + C.family + ")";
    out.params = C.params;
    // nu1 and nu2 break symmetry; iota, nu, pi and pi.nu preserve it.
    out.symmetric = C.symmetric && (e.flip_u == e.flip_v);

    const auto base_cdf = C.cdf;
    const bool swap = e.swap, fu = e.flip_u, fv = e.flip_v;

    out.cdf = [base_cdf, swap, fu, fv](double x, double y) {
        const double p = swap ? y : x;
        const double q = swap ? x : y;
        if (!fu && !fv) return base_cdf(p, q);
        if (fu && !fv) return q - base_cdf(1.0 - p, q);
        if (!fu && fv) return p - base_cdf(p, 1.0 - q);
        return p + q - 1.0 + base_cdf(1.0 - p, 1.0 - q);
    };

    if (C.has_density()) {
        const auto base_density = C.density;
        out.density = [base_density, swap, fu, fv](double x, double y) {
            double u = swap ? (fu ? 1.0 - y : y) : (fu ? 1.0 - x : x);
            double v = swap ? (fv ? 1.0 - x : x) : (fv ? 1.0 - y : y);
            return base_density(u, v);
        };
    }

    if (C.has_kernel() && (!e.swap || C.symmetric)) {
        const auto base_kernel = C.kernel;
        const bool flip_cond = swap ? fv : fu;
        const bool flip_event = swap ? fu : fv;
        out.kernel = [base_kernel, flip_cond, flip_event](double x, double y) {
            const double u = flip_cond ? 1.0 - x : x;
            if (flip_event) return 1.0 - base_kernel(u, 1.0 - y);
            return base_kernel(u, y);
        };
    }

    if (C.has_sampler()) {
        const auto base_sampler = C.sampler;
        out.sampler = [base_sampler, e](std::size_t n, std::uint64_t seed) {
            std::vector<Point> pts = base_sampler(n, seed);
            for (Point& p : pts) p = apply_element(e, p);
            return pts;
        };
    }

    if (C.structure) {
        const PiecewiseStructure base = *C.structure;
        PiecewiseStructure s;
        s.lines.reserve(base.lines.size());
        for (KinkLine l : base.lines) {
            l = affine_subst(l, fu ? 1.0 : 0.0, fu ? -1.0 : 1.0, fv ? 1.0 : 0.0, fv ? -1.0 : 1.0);
            if (swap) l = swap_line(l);
            s.lines.push_back(l);
        }
        s.patch_at = [base, swap, fu, fv](double x, double y) {
            const double p = swap ? y : x;
            const double q = swap ? x : y;
            const double su = fu ? 1.0 - p : p;
            const double sv = fv ? 1.0 - q : q;
            BilinearPatch patch = base.patch_at(su, sv);
            patch = affine_subst(patch, fu ? 1.0 : 0.0, fu ? -1.0 : 1.0,
                                 fv ? 1.0 : 0.0, fv ? -1.0 : 1.0);
            BilinearPatch result;
            if (!fu && !fv) {
                result = patch;
            } else if (fu && !fv) {
                result = BilinearPatch{-patch.c0, -patch.cu, 1.0 - patch.cv, -patch.cuv};
            } else if (!fu && fv) {
                result = BilinearPatch{-patch.c0, 1.0 - patch.cu, -patch.cv, -patch.cuv};
            } else {
                result = BilinearPatch{patch.c0 - 1.0, patch.cu + 1.0, patch.cv + 1.0, patch.cuv};
            }
            return swap ? swap_patch(result) : result;
        };
        out.structure = std::move(s);
    }

    return out;
}

double e_map(const CopulaModel& C, double u, double v) {
    return C.cdf(u, v) + C.cdf(1.0 - u, v) + C.cdf(u, 1.0 - v) + C.cdf(1.0 - u, 1.0 - v) - 1.0;
}

Surface e_surface(const CopulaModel& C) {
    Surface s;
    const auto cdf = C.cdf;
    s.eval = [cdf](double u, double v) {
        return cdf(u, v) + cdf(1.0 - u, v) + cdf(u, 1.0 - v) + cdf(1.0 - u, 1.0 - v) - 1.0;
    };
    if (C.structure) {
        const PiecewiseStructure base = *C.structure;
        PiecewiseStructure ps;
        ps.lines.reserve(base.lines.size() * 4);
        for (const KinkLine& l : base.lines) {
            ps.lines.push_back(l);
            ps.lines.push_back(affine_subst(l, 1.0, -1.0, 0.0, 1.0));
            ps.lines.push_back(affine_subst(l, 0.0, 1.0, 1.0, -1.0));
            ps.lines.push_back(affine_subst(l, 1.0, -1.0, 1.0, -1.0));
        }
        ps.patch_at = [base](double u, double v) {
            BilinearPatch p = base.patch_at(u, v);
            p = p + affine_subst(base.patch_at(1.0 - u, v), 1.0, -1.0, 0.0, 1.0);
            p = p + affine_subst(base.patch_at(u, 1.0 - v), 0.0, 1.0, 1.0, -1.0);
            p = p + affine_subst(base.patch_at(1.0 - u, 1.0 - v), 1.0, -1.0, 1.0, -1.0);
            p.c0 -= 1.0;
            return p;
        };
        s.structure = std::move(ps);
    }
    return s;
}

double ec_volume(const CopulaModel& C, const Rect& rect) {
    return e_map(C, rect.u1, rect.v1) - e_map(C, rect.u0, rect.v1) -
           e_map(C, rect.u1, rect.v0) + e_map(C, rect.u0, rect.v0);
}

CopulaModel gamma_average(const CopulaModel& C) {
    std::vector<CopulaModel> orbit;
    orbit.reserve(8);
    for (ReflectionTag g : all_reflections()) orbit.push_back(reflect(C, g));

    CopulaModel out;
    out.family = "gamma_average(" + C.family + ")";
    out.params = C.params;
    out.symmetric = true;

    out.cdf = [orbit](double u, double v) {
        double acc = 0.0;
        for (const CopulaModel& m : orbit) acc += m.cdf(u, v);
        return acc / 8.0;
    };

    bool all_density = true, all_kernel = true;
    for (const CopulaModel& m : orbit) {
        all_density = all_density && m.has_density();
        all_kernel = all_kernel && m.has_kernel();
    }
    if (all_density) {
        out.density = [orbit](double u, double v) {
            double acc = 0.0;
            for (const CopulaModel& m : orbit) acc += m.density(u, v);
            return acc / 8.0;
        };
    }
    if (all_kernel) {
        out.kernel = [orbit](double u, double v) {
            double acc = 0.0;
            for (const CopulaModel& m : orbit) acc += m.kernel(u, v);
            return acc / 8.0;
        };
    }
    if (C.has_sampler()) {
        const auto base_sampler = C.sampler;
        out.sampler = [base_sampler](std::size_t n, std::uint64_t seed) {
            std::vector<Point> pts = base_sampler(n, derive_seed(seed, 1));
            Rng rng(derive_seed(seed, 2));
            for (Point& p : pts)
                p = apply_element(element_of(all_reflections()[rng.below(8)]), p);
            return pts;
        };
    }
    if (C.structure) {
        PiecewiseStructure s;
        std::vector<PiecewiseStructure> parts;
        parts.reserve(8);
        for (const CopulaModel& m : orbit) {
            s.lines.insert(s.lines.end(), m.structure->lines.begin(), m.structure->lines.end());
            parts.push_back(*m.structure);
        }
        s.patch_at = [parts](double u, double v) {
            BilinearPatch acc;
            for (const PiecewiseStructure& p : parts) acc = acc + p.patch_at(u, v);
            return acc * (1.0 / 8.0);
        };
        out.structure = std::move(s);
    }
    return out;
}

bool is_invariant(const CopulaModel& C, int m, double tol) {
    if (m < 2) throw ParamOutOfRange("is_invariant: grid size must be >= 2");
    for (ReflectionTag g : all_reflections()) {
        if (g == ReflectionTag::Identity) continue;
        const CopulaModel R = reflect(C, g);
        for (int i = 0; i <= m; ++i) {
            const double u = static_cast<double>(i) / m;
            for (int j = 0; j <= m; ++j) {
                const double v = static_cast<double>(j) / m;
                if (std::fabs(R.cdf(u, v) - C.cdf(u, v)) > tol) return false;
            }
        }
    }
    return true;
}

CopulaModel theta_transform(const CopulaModel& C, double sym_tol) {
    if (!C.symmetric) {
        const int m = 33;
        for (int i = 1; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const double u = static_cast<double>(i) / m;
                const double v = static_cast<double>(j) / m;
                if (std::fabs(C.cdf(u, v) - C.cdf(v, u)) > sym_tol)
                    throw NotSymmetric("theta_transform: copula is not symmetric");
            }
        }
    }

    CopulaModel out;
    out.family = "theta(" + C.family + ")";
    out.params = C.params;
    out.symmetric = true;

    const auto cdf = C.cdf;
    out.cdf = [cdf](double u, double v) {
        if (u <= 0.5 && v <= 0.5) return 0.25 * cdf(2.0 * u, 2.0 * v);
        if (u > 0.5 && v <= 0.5) return v - 0.25 * cdf(2.0 - 2.0 * u, 2.0 * v);
        if (u <= 0.5 && v > 0.5) return u - 0.25 * cdf(2.0 * u, 2.0 - 2.0 * v);
        return u + v - 1.0 + 0.25 * cdf(2.0 - 2.0 * u, 2.0 - 2.0 * v);
    };

    if (C.has_density()) {
        const auto density = C.density;
        out.density = [density](double u, double v) {
            const double s = u <= 0.5 ? 2.0 * u : 2.0 - 2.0 * u;
            const double t = v <= 0.5 ? 2.0 * v : 2.0 - 2.0 * v;
            return density(s, t);
        };
    }

    if (C.has_sampler()) {
        const auto base_sampler = C.sampler;
        out.sampler = [base_sampler](std::size_t n, std::uint64_t seed) {
            std::vector<Point> pts = base_sampler(n, derive_seed(seed, 1));
            Rng rng(derive_seed(seed, 2));
            for (Point& p : pts) {
                const std::uint64_t quadrant = rng.below(4);
                const double x = 0.5 * p.u, y = 0.5 * p.v;
                p.u = (quadrant & 1) ? 1.0 - x : x;
                p.v = (quadrant & 2) ? 1.0 - y : y;
            }
            return pts;
        };
    }

    if (C.structure) {
        const PiecewiseStructure base = *C.structure;
        PiecewiseStructure s;
        s.lines.push_back({1.0, 0.0, 0.5});
        s.lines.push_back({0.0, 1.0, 0.5});
        for (const KinkLine& l : base.lines) {
            s.lines.push_back(affine_subst(l, 0.0, 2.0, 0.0, 2.0));
            s.lines.push_back(affine_subst(l, 2.0, -2.0, 0.0, 2.0));
            s.lines.push_back(affine_subst(l, 0.0, 2.0, 2.0, -2.0));
            s.lines.push_back(affine_subst(l, 2.0, -2.0, 2.0, -2.0));
        }
        s.patch_at = [base](double u, double v) {
            const bool right = u > 0.5, top = v > 0.5;
            const double su = right ? 2.0 - 2.0 * u : 2.0 * u;
            const double sv = top ? 2.0 - 2.0 * v : 2.0 * v;
            BilinearPatch p = base.patch_at(su, sv);
            p = affine_subst(p, right ? 2.0 : 0.0, right ? -2.0 : 2.0,
                             top ? 2.0 : 0.0, top ? -2.0 : 2.0);
            p = p * 0.25;
            if (right && !top) p = BilinearPatch{-p.c0, -p.cu, 1.0 - p.cv, -p.cuv};
            else if (!right && top) p = BilinearPatch{-p.c0, 1.0 - p.cu, -p.cv, -p.cuv};
            else if (right && top) p = BilinearPatch{p.c0 - 1.0, p.cu + 1.0, p.cv + 1.0, p.cuv};
            return p;
        };
        out.structure = std::move(s);
    }

    return out;
}

CopulaModel theta_inverse(const CopulaModel& A) {
    CopulaModel out;
    out.family = "theta_inverse(" + A.family + ")";
    out.params = A.params;
    out.symmetric = true;
    const auto cdf = A.cdf;
    out.cdf = [cdf](double u, double v) { return 4.0 * cdf(0.5 * u, 0.5 * v); };
    if (A.structure) {
        const PiecewiseStructure base = *A.structure;
        PiecewiseStructure s;
        for (const KinkLine& l : base.lines) s.lines.push_back(affine_subst(l, 0.0, 0.5, 0.0, 0.5));
        s.patch_at = [base](double u, double v) {
            return affine_subst(base.patch_at(0.5 * u, 0.5 * v), 0.0, 0.5, 0.0, 0.5) * 4.0;
        };
        out.structure = std::move(s);
    }
    return out;
}

bool precede(const CopulaModel& A, const CopulaModel& B, int m, double tol) {
    if (!is_invariant(A) || !is_invariant(B))
        throw NotInvariant("precede: both copulas must be invariant");
    for (int i = 0; i <= m; ++i) {
        const double u = 0.5 * i / m;
        for (int j = 0; j <= m; ++j) {
            const double v = 0.5 * j / m;
            if (A.cdf(u, v) > B.cdf(u, v) + tol) return false;
        }
    }
    return true;
}

AxiomReport check_copula_axioms(const CopulaModel& C, int m) {
    AxiomReport report;
    std::vector<std::vector<double>> grid(m + 1, std::vector<double>(m + 1));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
            grid[i][j] = C.cdf(static_cast<double>(i) / m, static_cast<double>(j) / m);
    for (int i = 0; i <= m; ++i) {
        const double t = static_cast<double>(i) / m;
        report.grounded = std::max({report.grounded, std::fabs(grid[i][0]), std::fabs(grid[0][i])});
        report.margins = std::max({report.margins, std::fabs(grid[i][m] - t), std::fabs(grid[m][i] - t)});
    }
    double min_volume = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            min_volume = std::min(min_volume,
                                  grid[i + 1][j + 1] - grid[i][j + 1] - grid[i + 1][j] + grid[i][j]);
    report.two_increasing = -min_volume;
    return report;
}

} // namespace concord

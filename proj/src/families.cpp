#include "concord/families.hpp"

#include "concord/errors.hpp"
#include "concord/normal.hpp"
#include "concord/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace concord {

namespace {

double step(double v, double at) { return v >= at ? 1.0 : 0.0; }

/// Smallest v with K(u,[0,v]) >= p, by bisection on the right-continuous
/// non-decreasing kernel. Robust for kernels with atoms.
double invert_kernel(const std::function<double(double, double)>& kernel, double u, double p) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (kernel(u, mid) >= p)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

Sampler kernel_inversion_sampler(std::function<double(double, double)> kernel) {
    return [kernel](std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        std::vector<Point> pts(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double u = rng.uniform();
            const double p = rng.uniform();
            pts[i] = {u, invert_kernel(kernel, u, p)};
        }
        return pts;
    };
}

} // namespace

CopulaModel pi_copula() {
    CopulaModel m;
    m.family = "pi";
    m.symmetric = true;
    m.cdf = [](double u, double v) { return u * v; };
    m.density = [](double, double) { return 1.0; };
    m.kernel = [](double, double v) { return v; };
    m.sampler = [](std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        std::vector<Point> pts(n);
        for (auto& p : pts) {
            p.u = rng.uniform();
            p.v = rng.uniform();
        }
        return pts;
    };
    PiecewiseStructure s;
    s.patch_at = [](double, double) { return BilinearPatch{0.0, 0.0, 0.0, 1.0}; };
    m.structure = std::move(s);
    return m;
}

CopulaModel m_copula() {
    CopulaModel m;
    m.family = "m";
    m.symmetric = true;
    m.cdf = [](double u, double v) { return std::min(u, v); };
    m.kernel = [](double u, double v) { return step(v, u); };
    m.sampler = [](std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        std::vector<Point> pts(n);
        for (auto& p : pts) {
            p.u = rng.uniform();
            p.v = p.u;
        }
        return pts;
    };
    PiecewiseStructure s;
    s.lines = {{1.0, -1.0, 0.0}};
    s.patch_at = [](double u, double v) {
        return u <= v ? BilinearPatch{0.0, 1.0, 0.0, 0.0} : BilinearPatch{0.0, 0.0, 1.0, 0.0};
    };
    m.structure = std::move(s);
    return m;
}

CopulaModel w_copula() {
    CopulaModel m;
    m.family = "w";
    m.symmetric = true;
    m.cdf = [](double u, double v) { return std::max(u + v - 1.0, 0.0); };
    m.kernel = [](double u, double v) { return step(v, 1.0 - u); };
    m.sampler = [](std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        std::vector<Point> pts(n);
        for (auto& p : pts) {
            p.u = rng.uniform();
            p.v = 1.0 - p.u;
        }
        return pts;
    };
    PiecewiseStructure s;
    s.lines = {{1.0, 1.0, 1.0}};
    s.patch_at = [](double u, double v) {
        return u + v <= 1.0 ? BilinearPatch{} : BilinearPatch{-1.0, 1.0, 1.0, 0.0};
    };
    m.structure = std::move(s);
    return m;
}

CopulaModel v_copula() {
    CopulaModel m;
    m.family = "v";
    m.symmetric = true;
    m.cdf = [](double u, double v) {
        if (std::fabs(u - v) > 0.5) return std::min(u, v);
        if (std::fabs(u + v - 1.0) > 0.5) return std::max(u + v - 1.0, 0.0);
        return 0.5 * u + 0.5 * v - 0.25;
    };
    // Conditional on U = u, V sits on the two diamond edges with mass 1/2 each.
    m.kernel = [](double u, double v) {
        const double lo = std::fabs(u - 0.5);
        const double hi = 0.5 + std::min(u, 1.0 - u);
        return 0.5 * step(v, lo) + 0.5 * step(v, hi);
    };
    m.sampler = [](std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        std::vector<Point> pts(n);
        for (auto& p : pts) {
            p.u = rng.uniform();
            const double lo = std::fabs(p.u - 0.5);
            const double hi = 0.5 + std::min(p.u, 1.0 - p.u);
            p.v = rng.uniform() < 0.5 ? lo : hi;
        }
        return pts;
    };
    PiecewiseStructure s;
    s.lines = {{1.0, -1.0, 0.5}, {-1.0, 1.0, 0.5}, {1.0, 1.0, 0.5}, {1.0, 1.0, 1.5}};
    s.patch_at = [](double u, double v) {
        if (u - v > 0.5) return BilinearPatch{0.0, 0.0, 1.0, 0.0};
        if (v - u > 0.5) return BilinearPatch{0.0, 1.0, 0.0, 0.0};
        if (u + v < 0.5) return BilinearPatch{};
        if (u + v > 1.5) return BilinearPatch{-1.0, 1.0, 1.0, 0.0};
        return BilinearPatch{-0.25, 0.5, 0.5, 0.0};
    };
    m.structure = std::move(s);
    return m;
}

CopulaModel m_gamma() {
    CopulaModel m;
    m.family = "m_gamma";
    m.symmetric = true;
    m.cdf = [](double u, double v) {
        return 0.5 * (std::min(u, v) + std::max(u + v - 1.0, 0.0));
    };
    m.kernel = [](double u, double v) { return 0.5 * step(v, u) + 0.5 * step(v, 1.0 - u); };
    m.sampler = [](std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        std::vector<Point> pts(n);
        for (auto& p : pts) {
            p.u = rng.uniform();
            p.v = rng.uniform() < 0.5 ? p.u : 1.0 - p.u;
        }
        return pts;
    };
    PiecewiseStructure s;
    s.lines = {{1.0, -1.0, 0.0}, {1.0, 1.0, 1.0}};
    s.patch_at = [](double u, double v) {
        BilinearPatch p = u <= v ? BilinearPatch{0.0, 0.5, 0.0, 0.0} : BilinearPatch{0.0, 0.0, 0.5, 0.0};
        if (u + v > 1.0) p = p + BilinearPatch{-0.5, 0.5, 0.5, 0.0};
        return p;
    };
    m.structure = std::move(s);
    return m;
}

CopulaModel a_alpha(double alpha_mix) {
    if (alpha_mix < 0.0 || alpha_mix > 1.0)
        throw ParamOutOfRange("a_alpha: mixing weight must be in [0,1]");
    const double a = alpha_mix;
    CopulaModel m;
    m.family = "a_alpha";
    m.params = {a};
    m.symmetric = true;
    m.cdf = [a](double u, double v) {
        return a * 0.5 * (std::min(u, v) + std::max(u + v - 1.0, 0.0)) + (1.0 - a) * u * v;
    };
    m.kernel = [a](double u, double v) {
        return a * (0.5 * step(v, u) + 0.5 * step(v, 1.0 - u)) + (1.0 - a) * v;
    };
    m.sampler = [a](std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        std::vector<Point> pts(n);
        for (auto& p : pts) {
            p.u = rng.uniform();
            if (rng.uniform() < a)
                p.v = rng.uniform() < 0.5 ? p.u : 1.0 - p.u;
            else
                p.v = rng.uniform();
        }
        return pts;
    };
    PiecewiseStructure s;
    s.lines = {{1.0, -1.0, 0.0}, {1.0, 1.0, 1.0}};
    s.patch_at = [a](double u, double v) {
        BilinearPatch p = u <= v ? BilinearPatch{0.0, 0.5 * a, 0.0, 0.0}
                                 : BilinearPatch{0.0, 0.0, 0.5 * a, 0.0};
        if (u + v > 1.0) p = p + BilinearPatch{-0.5 * a, 0.5 * a, 0.5 * a, 0.0};
        p.cuv += 1.0 - a;
        return p;
    };
    m.structure = std::move(s);
    return m;
}

CopulaModel gaussian(double rho) {
    if (!(std::fabs(rho) < 1.0))
        throw ParamOutOfRange("gaussian: rho must satisfy |rho| < 1");
    const double w = std::sqrt(1.0 - rho * rho);

    CopulaModel m;
    m.family = "gaussian";
    m.params = {rho};
    m.symmetric = true;
    m.cdf = [rho](double u, double v) {
        if (u <= 0.0 || v <= 0.0) return 0.0;
        if (u >= 1.0) return std::min(v, 1.0);
        if (v >= 1.0) return u;
        return biv_norm_cdf(norm_quantile(u), norm_quantile(v), rho);
    };
    m.density = [rho, w](double u, double v) {
        const double x = norm_quantile(u);
        const double y = norm_quantile(v);
        const double q = (x * x - 2.0 * rho * x * y + y * y) / (2.0 * (1.0 - rho * rho));
        return std::exp(-q + 0.5 * (x * x + y * y)) / w;
    };
    m.kernel = [rho, w](double u, double v) {
        if (v <= 0.0) return 0.0;
        if (v >= 1.0) return 1.0;
        return norm_cdf((norm_quantile(v) - rho * norm_quantile(u)) / w);
    };
    m.sampler = [rho, w](std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        std::vector<Point> pts(n);
        for (auto& p : pts) {
            const double x = rng.normal();
            const double y = rho * x + w * rng.normal();
            p.u = norm_cdf(x);
            p.v = norm_cdf(y);
        }
        return pts;
    };
    return m;
}

CopulaModel frank(double delta) {
    if (std::fabs(delta) < 1e-8)
        throw ParamOutOfRange("frank: |delta| < 1e-8 is numerically singular; use the "
                              "independence copula instead");
    const double d = delta;
    const double ed = -std::expm1(-d);  // 1 - e^{-delta}

    CopulaModel m;
    m.family = "frank";
    m.params = {d};
    m.symmetric = true;
    m.cdf = [d, ed](double u, double v) {
        if (u <= 0.0 || v <= 0.0) return 0.0;
        if (u >= 1.0) return std::min(v, 1.0);
        if (v >= 1.0) return u;
        const double x = -std::expm1(-d * u);
        const double y = -std::expm1(-d * v);
        return -std::log1p(-x * y / ed) / d;
    };
    m.density = [d, ed](double u, double v) {
        const double x = -std::expm1(-d * u);
        const double y = -std::expm1(-d * v);
        const double den = ed - x * y;
        return d * ed * std::exp(-d * (u + v)) / (den * den);
    };
    m.kernel = [d, ed](double u, double v) {
        if (v <= 0.0) return 0.0;
        if (v >= 1.0) return 1.0;
        const double x = -std::expm1(-d * u);
        const double y = -std::expm1(-d * v);
        return std::exp(-d * u) * y / (ed - x * y);
    };
    m.sampler = [d, ed](std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        std::vector<Point> pts(n);
        for (auto& p : pts) {
            const double u = rng.uniform();
            const double t = rng.uniform();
            // Closed-form conditional inversion of the kernel above.
            const double x = -std::expm1(-d * u);
            const double y = t * ed / (t * x + std::exp(-d * u));
            p.u = u;
            p.v = -std::log1p(-y) / d;
        }
        return pts;
    };
    return m;
}

CopulaModel fgm_generalized(std::function<double(double)> f,
                            std::function<double(double)> f_prime,
                            std::function<double(double)> g,
                            std::function<double(double)> g_prime,
                            const std::string& name) {
    for (double t : {0.0, 1.0}) {
        if (std::fabs(f(t)) > 1e-12 || std::fabs(g(t)) > 1e-12)
            throw InvalidGenerators(name + ": f and g must vanish at 0 and 1");
    }
    const int grid = 200;
    for (int i = 0; i < grid; ++i) {
        const double u = static_cast<double>(i) / (grid - 1);
        const double fp = f_prime(u);
        for (int j = 0; j < grid; ++j) {
            const double v = static_cast<double>(j) / (grid - 1);
            if (fp * g_prime(v) < -1.0 - 1e-9)
                throw InvalidGenerators(name + ": f'(u) g'(v) < -1, density would be negative");
        }
    }

    CopulaModel m;
    m.family = name;
    m.cdf = [f, g](double u, double v) { return u * v + f(u) * g(v); };
    m.density = [f_prime, g_prime](double u, double v) { return 1.0 + f_prime(u) * g_prime(v); };
    m.kernel = [f_prime, g](double u, double v) {
        return std::clamp(v + f_prime(u) * g(v), 0.0, 1.0);
    };
    m.sampler = kernel_inversion_sampler(m.kernel);
    return m;
}

CopulaModel fgm(double theta) {
    if (theta < -1.0 || theta > 1.0)
        throw ParamOutOfRange("fgm: theta must be in [-1,1]");
    CopulaModel m = fgm_generalized(
        [theta](double u) { return theta * u * (1.0 - u); },
        [theta](double u) { return theta * (1.0 - 2.0 * u); },
        [](double v) { return v * (1.0 - v); },
        [](double v) { return 1.0 - 2.0 * v; },
        "fgm");
    m.params = {theta};
    m.symmetric = false;
    return m;
}

CopulaModel fgm_quartic(double theta) {
    if (theta < -1.0 || theta > 1.0)
        throw ParamOutOfRange("fgm_quartic: theta must be in [-1,1]");
    CopulaModel m = fgm_generalized(
        [theta](double u) { return theta * u * u * (1.0 - u) * (1.0 - u); },
        [theta](double u) { return theta * 2.0 * u * (1.0 - u) * (1.0 - 2.0 * u); },
        [](double v) { return v * (1.0 - v); },
        [](double v) { return 1.0 - 2.0 * v; },
        "fgm_quartic");
    m.params = {theta};
    return m;
}

CopulaModel fgm_cubic() {
    CopulaModel m = fgm_generalized(
        [](double u) { return u * (1.0 - u) * (1.0 - 2.0 * u); },
        [](double u) { return 1.0 - 6.0 * u + 6.0 * u * u; },
        [](double v) { return v * (1.0 - v); },
        [](double v) { return 1.0 - 2.0 * v; },
        "fgm_cubic");
    return m;
}

CopulaModel frechet(double alpha, double beta) {
    if (alpha < 0.0 || beta < 0.0 || alpha > 1.0 || beta > 1.0 || alpha + beta > 1.0 + 1e-15)
        throw ParamOutOfRange("frechet: need alpha, beta in [0,1] with alpha + beta <= 1");
    const double a = alpha, b = beta, c = 1.0 - alpha - beta;

    CopulaModel m;
    m.family = "frechet";
    m.params = {a, b};
    m.symmetric = true;
    m.cdf = [a, b, c](double u, double v) {
        return a * std::min(u, v) + c * u * v + b * std::max(u + v - 1.0, 0.0);
    };
    if (a == 0.0 && b == 0.0) m.density = [](double, double) { return 1.0; };
    m.kernel = [a, b, c](double u, double v) {
        return a * step(v, u) + c * v + b * step(v, 1.0 - u);
    };
    m.sampler = [a, b](std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        std::vector<Point> pts(n);
        for (auto& p : pts) {
            p.u = rng.uniform();
            const double pick = rng.uniform();
            if (pick < a)
                p.v = p.u;
            else if (pick < a + b)
                p.v = 1.0 - p.u;
            else
                p.v = rng.uniform();
        }
        return pts;
    };
    PiecewiseStructure s;
    s.lines = {{1.0, -1.0, 0.0}, {1.0, 1.0, 1.0}};
    s.patch_at = [a, b, c](double u, double v) {
        BilinearPatch p = u <= v ? BilinearPatch{0.0, a, 0.0, 0.0} : BilinearPatch{0.0, 0.0, a, 0.0};
        if (u + v > 1.0) p = p + BilinearPatch{-b, b, b, 0.0};
        p.cuv += c;
        return p;
    };
    m.structure = std::move(s);
    return m;
}

CopulaModel marshall_olkin(double alpha, double beta) {
    if (alpha < 0.0 || alpha > 1.0 || beta < 0.0 || beta > 1.0)
        throw ParamOutOfRange("marshall_olkin: alpha, beta must be in [0,1]");
    const double a = alpha, b = beta;

    CopulaModel m;
    m.family = "marshall_olkin";
    m.params = {a, b};
    m.symmetric = (a == b);
    m.cdf = [a, b](double u, double v) {
        if (u <= 0.0 || v <= 0.0) return 0.0;
        return std::min(std::pow(u, 1.0 - a) * v, u * std::pow(v, 1.0 - b));
    };
    m.kernel = [a, b](double u, double v) {
        if (v <= 0.0) return 0.0;
        if (v >= 1.0) return 1.0;
        if (a == 0.0 || b == 0.0) {
            // At least one exponent vanishes and the copula degenerates to
            // Pi in the relevant direction.
            if (b == 0.0) return v;
            // a == 0: C = min(v, v^{1-b}) * u = u v, kernel v
            return v;
        }
        const double vstar = std::pow(u, a / b);
        if (v < vstar) return (1.0 - a) * std::pow(u, -a) * v;
        return std::pow(v, 1.0 - b);
    };
    m.sampler = kernel_inversion_sampler(m.kernel);
    return m;
}

// ---------------------------------------------------------------------------
// Pickands functions and extreme-value copulas
// ---------------------------------------------------------------------------

void PickandsFunction::validate() const {
    const int grid = 1000;
    double prev_slope = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= grid; ++i) {
        const double t = static_cast<double>(i) / grid;
        const double a = value_(t);
        if (a < std::max(1.0 - t, t) - 1e-9 || a > 1.0 + 1e-9)
            throw InvalidPickands("Pickands function violates max(1-t,t) <= A(t) <= 1");
        if (i < grid) {
            const double slope = dplus_(t);
            if (slope < prev_slope - 1e-9)
                throw InvalidPickands("Pickands function is not convex");
            prev_slope = slope;
        }
    }
    if (std::fabs(value_(0.0) - 1.0) > 1e-12 || std::fabs(value_(1.0) - 1.0) > 1e-12)
        throw InvalidPickands("Pickands function must satisfy A(0) = A(1) = 1");
}

PickandsFunction PickandsFunction::piecewise_linear(std::vector<std::pair<double, double>> knots) {
    if (knots.size() < 2) throw InvalidPickands("need at least two knots");
    std::sort(knots.begin(), knots.end());
    if (knots.front().first != 0.0 || knots.back().first != 1.0)
        throw InvalidPickands("knots must span [0,1]");

    auto shared = std::make_shared<std::vector<std::pair<double, double>>>(std::move(knots));
    auto segment_slope = [shared](std::size_t k) {
        const auto& kn = *shared;
        return (kn[k + 1].second - kn[k].second) / (kn[k + 1].first - kn[k].first);
    };
    PickandsFunction A;
    A.value_ = [shared](double t) {
        const auto& kn = *shared;
        t = std::clamp(t, 0.0, 1.0);
        auto it = std::upper_bound(kn.begin(), kn.end(), std::make_pair(t, 2.0));
        if (it == kn.begin()) return kn.front().second;
        if (it == kn.end()) return kn.back().second;
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        const double w = (t - lo.first) / (hi.first - lo.first);
        return lo.second + w * (hi.second - lo.second);
    };
    A.dplus_ = [shared, segment_slope](double t) {
        const auto& kn = *shared;
        t = std::clamp(t, 0.0, 1.0);
        if (t >= 1.0) return segment_slope(kn.size() - 2);
        // right-hand slope: the segment starting at or containing t
        std::size_t k = 0;
        while (k + 2 < kn.size() && kn[k + 1].first <= t) ++k;
        return segment_slope(k);
    };
    A.validate();
    return A;
}

PickandsFunction PickandsFunction::from_callable(std::function<double(double)> value,
                                                 std::function<double(double)> dplus) {
    PickandsFunction A;
    A.value_ = std::move(value);
    A.dplus_ = std::move(dplus);
    A.validate();
    return A;
}

PickandsFunction pickands_kinked() {
    return PickandsFunction::piecewise_linear(
        {{0.0, 1.0}, {0.2, 0.8}, {0.5, 0.65}, {0.8, 0.8}, {1.0, 1.0}});
}

CopulaModel evc(const PickandsFunction& A) {
    CopulaModel m;
    m.family = "evc";
    auto cdf = [A](double u, double v) {
        if (u <= 0.0 || v <= 0.0) return 0.0;
        if (u >= 1.0) return std::min(v, 1.0);
        if (v >= 1.0) return u;
        const double lu = std::log(u), lv = std::log(v);
        const double t = lu / (lu + lv);
        return std::exp(A.value(t) * (lu + lv));
    };
    m.cdf = cdf;
    m.kernel = [A, cdf](double u, double v) {
        if (v <= 0.0) return 0.0;
        if (v >= 1.0) return 1.0;
        const double lu = std::log(u), lv = std::log(v);
        const double t = lu / (lu + lv);
        const double fa = A.value(t) + (1.0 - t) * A.dplus(t);
        return std::clamp(cdf(u, v) / u * fa, 0.0, 1.0);
    };
    m.sampler = kernel_inversion_sampler(m.kernel);
    return m;
}

// ---------------------------------------------------------------------------
// Archimedean copulas
// ---------------------------------------------------------------------------

ArchimedeanGenerator independence_generator() {
    return {"independence", [](double t) { return -std::log(t); },
            [](double x) { return std::exp(-x); },
            std::numeric_limits<double>::infinity()};
}

ArchimedeanGenerator linear_generator() {
    return {"linear", [](double t) { return 1.0 - t; },
            [](double x) { return std::max(1.0 - x, 0.0); }, 1.0};
}

ArchimedeanGenerator frank_generator(double delta) {
    if (std::fabs(delta) < 1e-8)
        throw InvalidGenerator("frank_generator: |delta| < 1e-8");
    const double d = delta;
    return {"frank",
            [d](double t) { return -std::log(std::expm1(-d * t) / std::expm1(-d)); },
            [d](double x) { return -std::log1p(std::exp(-x) * std::expm1(-d)) / d; },
            std::numeric_limits<double>::infinity()};
}

ArchimedeanGenerator clayton_generator(double theta) {
    if (theta < -1.0 || theta == 0.0)
        throw InvalidGenerator("clayton_generator: theta must be in [-1,inf) \\ {0}");
    const double th = theta;
    const double phi0 = th > 0.0 ? std::numeric_limits<double>::infinity() : -1.0 / th;
    return {"clayton",
            [th](double t) { return (std::pow(t, -th) - 1.0) / th; },
            [th, phi0](double x) {
                if (x >= phi0) return 0.0;
                return std::pow(1.0 + th * x, -1.0 / th);
            },
            phi0};
}

ArchimedeanGenerator gumbel_generator(double theta) {
    if (theta < 1.0) throw InvalidGenerator("gumbel_generator: theta must be >= 1");
    const double th = theta;
    return {"gumbel", [th](double t) { return std::pow(-std::log(t), th); },
            [th](double x) { return std::exp(-std::pow(x, 1.0 / th)); },
            std::numeric_limits<double>::infinity()};
}

CopulaModel archimedean(const ArchimedeanGenerator& gen) {
    if (std::fabs(gen.phi(1.0)) > 1e-12)
        throw InvalidGenerator("archimedean: phi(1) must be 0");
    double prev = gen.phi(1.0 / 64.0);
    for (int i = 2; i <= 63; ++i) {
        const double t = static_cast<double>(i) / 64.0;
        const double cur = gen.phi(t);
        if (cur > prev + 1e-12)
            throw InvalidGenerator("archimedean: phi must be decreasing");
        if (std::fabs(gen.psi(cur) - t) > 1e-9)
            throw InvalidGenerator("archimedean: psi is not the pseudo-inverse of phi");
        prev = cur;
    }

    const auto phi = gen.phi;
    const auto psi = gen.psi;
    const double phi0 = gen.phi_at_zero;

    CopulaModel m;
    m.family = "archimedean(" + gen.name + ")";
    m.symmetric = true;
    auto cdf = [phi, psi, phi0](double u, double v) {
        if (u <= 0.0 || v <= 0.0) return 0.0;
        if (u >= 1.0) return std::min(v, 1.0);
        if (v >= 1.0) return u;
        const double x = phi(u) + phi(v);
        if (x >= phi0) return 0.0;
        return psi(x);
    };
    m.cdf = cdf;
    m.kernel = [cdf](double u, double v) {
        if (v <= 0.0) return 0.0;
        if (v >= 1.0) return 1.0;
        const double h = 1e-6;
        const double hi = std::min(u + h, 1.0), lo = std::max(u - h, 0.0);
        return std::clamp((cdf(hi, v) - cdf(lo, v)) / (hi - lo), 0.0, 1.0);
    };
    m.sampler = kernel_inversion_sampler(m.kernel);
    return m;
}

std::vector<Point> sample(const CopulaModel& C, std::size_t n, std::uint64_t seed) {
    if (C.has_sampler()) return C.sampler(n, seed);
    if (C.has_kernel()) return kernel_inversion_sampler(C.kernel)(n, seed);
    throw NoSamplingPath("sample: copula has neither a sampler nor a Markov kernel");
}

} // namespace concord

#include "doctest.h"

#include "concord/copula.hpp"
#include "concord/errors.hpp"
#include "concord/families.hpp"
#include "concord/normal.hpp"
#include "concord/quadrature.hpp"
#include "concord/rng.hpp"

#include <algorithm>
#include <cmath>

using namespace concord;

namespace {

double max_grid_diff(const CopulaModel& A, const CopulaModel& B, int m = 64) {
    double worst = 0.0;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) {
            const double u = static_cast<double>(i) / m, v = static_cast<double>(j) / m;
            worst = std::max(worst, std::fabs(A.cdf(u, v) - B.cdf(u, v)));
        }
    return worst;
}

/// Kolmogorov-Smirnov distance of values against the uniform law.
double ks_uniform(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        d = std::max(d, std::fabs((i + 1) / n - xs[i]));
        d = std::max(d, std::fabs(xs[i] - i / n));
    }
    return d;
}

} // namespace

TEST_CASE("parameter guards") {
    CHECK_THROWS_AS((void)gaussian(1.5), ParamOutOfRange);
    CHECK_THROWS_AS((void)gaussian(-1.0), ParamOutOfRange);
    CHECK_THROWS_AS((void)frank(0.0), ParamOutOfRange);
    CHECK_THROWS_AS((void)frank(5e-9), ParamOutOfRange);
    CHECK_THROWS_AS((void)frechet(0.7, 0.5), ParamOutOfRange);
    CHECK_THROWS_AS((void)marshall_olkin(-0.1, 0.5), ParamOutOfRange);
    CHECK_THROWS_AS((void)fgm(1.2), ParamOutOfRange);
}

TEST_CASE("gaussian(0) equals Pi on a grid") {
    CHECK(max_grid_diff(gaussian(0.0), pi_copula(), 32) < 1e-9);
}

TEST_CASE("gaussian density point symmetry") {
    const CopulaModel C = gaussian(0.5);
    Rng rng(3);
    for (int k = 0; k < 100; ++k) {
        const double u = rng.uniform(), v = rng.uniform();
        CHECK(C.density(u, v) == doctest::Approx(C.density(1.0 - u, 1.0 - v)).epsilon(1e-10));
    }
}

TEST_CASE("gaussian cdf against an independent 2-D quadrature oracle") {
    const double rho = 0.5;
    const double w = std::sqrt(1.0 - rho * rho);
    // Tensor adaptive quadrature of the raw bivariate normal integrand.
    auto inner = [&](double s) {
        return integrate_adaptive(
            [&](double t) {
                return std::exp(-(s * s - 2.0 * rho * s * t + t * t) / (2.0 * (1.0 - rho * rho))) /
                       (2.0 * M_PI * w);
            },
            -12.0, 0.0, 1e-12, 1e-12);
    };
    const double oracle = integrate_adaptive(inner, -12.0, 0.0, 1e-10, 1e-10);
    const CopulaModel C = gaussian(rho);
    CHECK(C.cdf(0.5, 0.5) == doctest::Approx(oracle).epsilon(1e-8));
    // analytic value 1/4 + asin(1/2)/(2 pi) = 1/3
    CHECK(C.cdf(0.5, 0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("frank closed forms") {
    const CopulaModel C = frank(5.0);
    Rng rng(17);
    for (int k = 0; k < 100; ++k) {
        const double u = rng.uniform(), v = rng.uniform();
        CHECK(C.density(u, v) == doctest::Approx(C.density(1.0 - u, 1.0 - v)).epsilon(1e-10));
    }
    const CopulaModel C2 = frank(2.0);
    CHECK(C2.cdf(1, 1) - C2.cdf(0, 1) - C2.cdf(1, 0) + C2.cdf(0, 0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // frank is symmetric bit for bit
    CHECK(C.cdf(0.21, 0.77) == C.cdf(0.77, 0.21));
}

TEST_CASE("fgm family") {
    CHECK(max_grid_diff(fgm(0.0), pi_copula(), 32) < 1e-14);
    CHECK_THROWS_AS((void)fgm_generalized([](double u) { return 1.5 * u * (1.0 - u); },
                                          [](double u) { return 1.5 * (1.0 - 2.0 * u); },
                                          [](double v) { return v * (1.0 - v); },
                                          [](double v) { return 1.0 - 2.0 * v; }),
                    InvalidGenerators);
    // E_{C_{f,g}}(u,v) = [f(u)+f(1-u)][g(v)+g(1-v)], asserted against e_map
    const CopulaModel C = fgm(0.7);
    auto f = [](double u) { return 0.7 * u * (1.0 - u); };
    auto g = [](double v) { return v * (1.0 - v); };
    Rng rng(23);
    for (int k = 0; k < 50; ++k) {
        const double u = rng.uniform(), v = rng.uniform();
        const double expected = (f(u) + f(1.0 - u)) * (g(v) + g(1.0 - v));
        CHECK(e_map(C, u, v) == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("frechet endpoints") {
    CHECK(max_grid_diff(frechet(1.0, 0.0), m_copula(), 32) < 1e-14);
    CHECK(max_grid_diff(frechet(0.0, 1.0), w_copula(), 32) < 1e-14);
    CHECK(max_grid_diff(frechet(0.0, 0.0), pi_copula(), 32) < 1e-14);
}

TEST_CASE("marshall-olkin") {
    CHECK(max_grid_diff(marshall_olkin(0.0, 0.0), pi_copula(), 32) < 1e-14);
    CHECK(max_grid_diff(marshall_olkin(1.0, 1.0), m_copula(), 32) < 1e-12);
    // the kernel jumps by alpha * u^{alpha(1-beta)/beta} at v = u^{alpha/beta}
    const CopulaModel C = marshall_olkin(0.4, 0.7);
    const double u = 0.3;
    const double vstar = std::pow(u, 0.4 / 0.7);
    const double jump = C.kernel(u, vstar) - C.kernel(u, vstar - 1e-9);
    CHECK(jump == doctest::Approx(0.4 * std::pow(u, 0.4 / 0.7 - 0.4)).epsilon(1e-6));
    // right-continuous and non-decreasing in v
    double prev = 0.0;
    for (int j = 0; j <= 200; ++j) {
        const double K = C.kernel(u, j / 200.0);
        CHECK(K >= prev - 1e-12);
        prev = K;
    }
}

TEST_CASE("extreme-value copulas") {
    const CopulaModel indep = evc(PickandsFunction::piecewise_linear({{0.0, 1.0}, {1.0, 1.0}}));
    CHECK(max_grid_diff(indep, pi_copula(), 32) < 1e-12);
    const CopulaModel como =
        evc(PickandsFunction::piecewise_linear({{0.0, 1.0}, {0.5, 0.5}, {1.0, 1.0}}));
    CHECK(max_grid_diff(como, m_copula(), 32) < 1e-12);
    CHECK_THROWS_AS((void)PickandsFunction::piecewise_linear({{0.0, 1.0}, {0.5, 0.4}, {1.0, 1.0}}),
                    InvalidPickands);
    CHECK_THROWS_AS((void)PickandsFunction::piecewise_linear(
                        {{0.0, 1.0}, {0.3, 0.9}, {0.6, 0.95}, {0.8, 0.85}, {1.0, 1.0}}),
                    InvalidPickands);
}

TEST_CASE("archimedean constructions") {
    CHECK(max_grid_diff(archimedean(independence_generator()), pi_copula(), 32) < 1e-12);
    CHECK(max_grid_diff(archimedean(linear_generator()), w_copula(), 32) < 1e-12);
    const CopulaModel via_gen = archimedean(frank_generator(5.0));
    const CopulaModel direct = frank(5.0);
    Rng rng(31);
    for (int k = 0; k < 100; ++k) {
        const double u = rng.uniform(), v = rng.uniform();
        CHECK(via_gen.cdf(u, v) == doctest::Approx(direct.cdf(u, v)).epsilon(1e-10));
    }
    // symmetric by construction
    CHECK(via_gen.cdf(0.123, 0.789) == via_gen.cdf(0.789, 0.123));
    CHECK_THROWS_AS(
        (void)archimedean({"bad", [](double t) { return t; }, [](double x) { return x; }, 1.0}),
        InvalidGenerator);
}

TEST_CASE("every family instance passes the copula axioms") {
    for (const CopulaModel& C :
         {gaussian(0.7), gaussian(-0.4), frank(5.0), frank(-3.0), fgm(1.0), fgm_cubic(),
          frechet(0.3, 0.4), marshall_olkin(0.05, 1.0), evc(pickands_kinked()),
          archimedean(clayton_generator(2.0)), archimedean(gumbel_generator(1.7)), v_copula(),
          m_gamma(), a_alpha(0.42)}) {
        const AxiomReport r = check_copula_axioms(C, 64);
        INFO(C.family);
        CHECK(r.grounded < 1e-9);
        CHECK(r.margins < 1e-9);
        CHECK(r.two_increasing < 1e-9);
    }
}

TEST_CASE("kernel-cdf consistency") {
    for (const CopulaModel& C : {gaussian(0.5), frank(4.0), fgm(0.8), evc(pickands_kinked())}) {
        INFO(C.family);
        Rng rng(41);
        for (int k = 0; k < 25; ++k) {
            const double u = 0.04 + 0.92 * rng.uniform();
            const double v = 0.04 + 0.92 * rng.uniform();
            const double integral =
                integrate_adaptive([&](double p) { return C.kernel(p, v); }, 0.0, u, 1e-9, 1e-9);
            CHECK(integral == doctest::Approx(C.cdf(u, v)).epsilon(1e-6));
        }
    }
}

TEST_CASE("density-cdf consistency") {
    for (const CopulaModel& C : {gaussian(0.5), frank(4.0), fgm(0.8)}) {
        INFO(C.family);
        const Rect r{0.15, 0.65, 0.3, 0.9};
        auto inner = [&](double u) {
            return integrate_gl([&](double v) { return C.density(u, v); }, r.v0, r.v1, 48);
        };
        const double vol_density = integrate_gl(inner, r.u0, r.u1, 48);
        const double vol_cdf =
            C.cdf(r.u1, r.v1) - C.cdf(r.u0, r.v1) - C.cdf(r.u1, r.v0) + C.cdf(r.u0, r.v0);
        CHECK(vol_density == doctest::Approx(vol_cdf).epsilon(1e-6));
    }
}

TEST_CASE("samplers: margins uniform, known geometries") {
    // M: all samples on the diagonal
    for (const Point& p : sample(m_copula(), 100, 7))
        CHECK(p.u == doctest::Approx(p.v).epsilon(1e-12));

    // Pi: empirical Spearman-style moment near zero
    {
        const auto pts = sample(pi_copula(), 10000, 1234);
        double mean_uv = 0.0;
        for (const Point& p : pts) mean_uv += p.u * p.v;
        mean_uv /= pts.size();
        CHECK(std::fabs(12.0 * mean_uv - 3.0) < 0.03);
    }

    // margins pass a KS band at alpha ~ 0.01
    const double band = 1.63 / std::sqrt(10000.0);
    for (const CopulaModel& C :
         {gaussian(0.5), frank(-6.0), frechet(0.5, 0.2), marshall_olkin(0.3, 0.6), v_copula()}) {
        INFO(C.family);
        const auto pts = sample(C, 10000, 99);
        std::vector<double> us, vs;
        us.reserve(pts.size());
        vs.reserve(pts.size());
        for (const Point& p : pts) {
            us.push_back(p.u);
            vs.push_back(p.v);
        }
        CHECK(ks_uniform(us) < band);
        CHECK(ks_uniform(vs) < band);
    }

    // gaussian(0.5): empirical copula near the true CDF at the center
    {
        const CopulaModel C = gaussian(0.5);
        const auto pts = sample(C, 100000, 2024);
        int count = 0;
        for (const Point& p : pts) count += (p.u <= 0.5 && p.v <= 0.5) ? 1 : 0;
        CHECK(std::fabs(static_cast<double>(count) / pts.size() - C.cdf(0.5, 0.5)) < 0.01);
    }

    CHECK_THROWS_AS((void)sample(CopulaModel{}, 10, 1), NoSamplingPath);
}

TEST_CASE("sampling through kernel inversion matches the closed-form sampler") {
    CopulaModel C = frank(3.0);
    const auto direct = sample(C, 20000, 5);
    CopulaModel no_sampler = C;
    no_sampler.sampler = nullptr;
    const auto inverted = sample(no_sampler, 20000, 5);
    for (const Point q : {Point{0.3, 0.4}, Point{0.6, 0.2}, Point{0.8, 0.85}}) {
        int cd = 0, ci = 0;
        for (std::size_t i = 0; i < direct.size(); ++i) {
            cd += (direct[i].u <= q.u && direct[i].v <= q.v) ? 1 : 0;
            ci += (inverted[i].u <= q.u && inverted[i].v <= q.v) ? 1 : 0;
        }
        CHECK(std::fabs(cd - ci) / 20000.0 < 0.015);
    }
}

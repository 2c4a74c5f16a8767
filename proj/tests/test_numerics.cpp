#include "doctest.h"

#include "concord/geometry.hpp"
#include "concord/normal.hpp"
#include "concord/quadrature.hpp"
#include "concord/rng.hpp"

#include <cmath>

using namespace concord;

TEST_CASE("normal quantile inverts the cdf") {
    for (double p : {1e-12, 1e-6, 0.01, 0.2, 0.5, 0.7, 0.975, 1.0 - 1e-9}) {
        const double x = norm_quantile(p);
        CHECK(norm_cdf(x) == doctest::Approx(p).epsilon(1e-12));
    }
    CHECK(norm_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
    CHECK(norm_quantile(0.5) == 0.0);
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    auto cubic = [](double x) { return 3.0 * x * x * x - x + 2.0; };
    CHECK(integrate_gl(cubic, 0.0, 2.0, 8) == doctest::Approx(12.0 - 2.0 + 4.0).epsilon(1e-14));
    const GaussRule& rule = gauss_legendre(64);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("adaptive quadrature reaches tight tolerances") {
    const double got = integrate_adaptive([](double x) { return std::exp(-x * x); }, 0.0, 5.0,
                                          1e-12, 1e-14);
    CHECK(got == doctest::Approx(0.8862269254527580).epsilon(1e-12));  // sqrt(pi)/2
}

TEST_CASE("bivariate normal cdf matches closed forms") {
    // P(X<=0, Y<=0) = 1/4 + asin(rho)/(2 pi)
    for (double rho : {-0.9, -0.5, 0.0, 0.3, 0.8}) {
        const double expected = 0.25 + std::asin(rho) / (2.0 * M_PI);
        CHECK(biv_norm_cdf(0.0, 0.0, rho) == doctest::Approx(expected).epsilon(1e-10));
    }
    // Independence factorizes.
    CHECK(biv_norm_cdf(0.7, -0.3, 0.0) ==
          doctest::Approx(norm_cdf(0.7) * norm_cdf(-0.3)).epsilon(1e-12));
    // Perfect symmetry in the arguments.
    CHECK(biv_norm_cdf(0.4, -1.1, 0.6) == doctest::Approx(biv_norm_cdf(-1.1, 0.4, 0.6)).epsilon(1e-9));
}

TEST_CASE("polygon moments of the unit square") {
    Polygon square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const PolygonMoments m = polygon_moments(square);
    CHECK(m.m00 == doctest::Approx(1.0));
    CHECK(m.m10 == doctest::Approx(0.5));
    CHECK(m.m01 == doctest::Approx(0.5));
    CHECK(m.m11 == doctest::Approx(0.25));
}

TEST_CASE("piecewise integration splits at kinks") {
    // integral of min(u,v) over the unit square = 1/3
    PiecewiseStructure s;
    s.lines = {{1.0, -1.0, 0.0}};
    s.patch_at = [](double u, double v) {
        return u <= v ? BilinearPatch{0, 1, 0, 0} : BilinearPatch{0, 0, 1, 0};
    };
    CHECK(integrate_piecewise(s, {0, 1, 0, 1}) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(integrate_piecewise(s, {0, 0.5, 0, 0.5}) == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
}

TEST_CASE("seeded rng streams are reproducible and distinct") {
    Rng a(42), b(42), c(43);
    bool same = true, differ = false;
    for (int i = 0; i < 100; ++i) {
        const double xa = a.uniform(), xb = b.uniform(), xc = c.uniform();
        same = same && xa == xb;
        differ = differ || xa != xc;
        CHECK(xa > 0.0);
        CHECK(xa < 1.0);
    }
    CHECK(same);
    CHECK(differ);
    CHECK(derive_seed(1, 2) != derive_seed(1, 3));
    CHECK(derive_seed(1, 2) == derive_seed(1, 2));
}

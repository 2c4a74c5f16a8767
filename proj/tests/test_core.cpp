#include "doctest.h"

#include "concord/copula.hpp"
#include "concord/errors.hpp"
#include "concord/families.hpp"
#include "concord/rng.hpp"

#include <cmath>

using namespace concord;

namespace {

double max_grid_diff(const CopulaModel& A, const CopulaModel& B, int m = 64) {
    double worst = 0.0;
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
            const double u = static_cast<double>(i) / m;
            const double v = static_cast<double>(j) / m;
            worst = std::max(worst, std::fabs(A.cdf(u, v) - B.cdf(u, v)));
        }
    }
    return worst;
}

} // namespace

TEST_CASE("reflection group structure") {
    // nu2 = pi o nu1 o pi, nu = nu1 o nu2, iota is neutral
    CHECK(compose(ReflectionTag::Pi, compose(ReflectionTag::Nu1, ReflectionTag::Pi)) ==
          ReflectionTag::Nu2);
    CHECK(compose(ReflectionTag::Nu1, ReflectionTag::Nu2) == ReflectionTag::Nu);
    for (ReflectionTag g : all_reflections()) {
        CHECK(compose(ReflectionTag::Identity, g) == g);
        CHECK(compose(g, ReflectionTag::Identity) == g);
        // each element is an involution except the two rotations pi.nu1, pi.nu2
        const ReflectionTag sq = compose(g, g);
        if (g == ReflectionTag::PiNu1 || g == ReflectionTag::PiNu2)
            CHECK(sq == ReflectionTag::Nu);
        else
            CHECK(sq == ReflectionTag::Identity);
    }
}

TEST_CASE("reflect maps M to W under nu1") {
    const CopulaModel R = reflect(m_copula(), ReflectionTag::Nu1);
    CHECK(max_grid_diff(R, w_copula()) < 1e-14);
}

TEST_CASE("Pi is invariant under every reflection") {
    for (ReflectionTag g : all_reflections())
        CHECK(max_grid_diff(reflect(pi_copula(), g), pi_copula()) < 1e-14);
}

TEST_CASE("nu1 is an involution on Frank") {
    const CopulaModel C = frank(3.7);
    const CopulaModel back = reflect(reflect(C, ReflectionTag::Nu1), ReflectionTag::Nu1);
    Rng rng(7);
    for (int k = 0; k < 100; ++k) {
        const double u = rng.uniform(), v = rng.uniform();
        CHECK(back.cdf(u, v) == doctest::Approx(C.cdf(u, v)).epsilon(1e-13));
    }
}

TEST_CASE("reflections preserve copula axioms") {
    for (const CopulaModel& C :
         {m_copula(), w_copula(), frank(4.0), gaussian(0.6), frechet(0.3, 0.5), fgm(0.8)}) {
        for (ReflectionTag g : all_reflections()) {
            const AxiomReport r = check_copula_axioms(reflect(C, g), 64);
            CHECK(r.grounded < 1e-9);
            CHECK(r.margins < 1e-9);
            CHECK(r.two_increasing < 1e-9);
        }
    }
}

TEST_CASE("reflected density, kernel and sampler stay consistent") {
    const CopulaModel C = frank(2.5);
    const CopulaModel R = reflect(C, ReflectionTag::Nu1);
    // density of nu1(C) at (u,v) equals density of C at (1-u,v)
    CHECK(R.density(0.3, 0.7) == doctest::Approx(C.density(0.7, 0.7)).epsilon(1e-13));
    // kernel conditions on the flipped coordinate
    CHECK(R.kernel(0.2, 0.6) == doctest::Approx(C.kernel(0.8, 0.6)).epsilon(1e-13));
    // samples of nu1(C) are reflected samples of C
    const auto pts = R.sampler(64, 99);
    const auto base = C.sampler(64, 99);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].u == doctest::Approx(1.0 - base[i].u));
        CHECK(pts[i].v == doctest::Approx(base[i].v));
    }
}

TEST_CASE("e_map values") {
    CHECK(e_map(pi_copula(), 0.3, 0.4) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(e_map(m_copula(), 0.25, 0.25) == doctest::Approx(0.5));
    // Frechet: E_C = (alpha-beta) E_M
    const CopulaModel F = frechet(0.6, 0.2);
    const CopulaModel M = m_copula();
    Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        const double u = rng.uniform(), v = rng.uniform();
        CHECK(e_map(F, u, v) == doctest::Approx(0.4 * e_map(M, u, v)).epsilon(1e-12));
    }
}

TEST_CASE("e_map reflection symmetries") {
    Rng rng(5);
    for (const CopulaModel& C : {frank(3.0), gaussian(0.4), frechet(0.5, 0.1)}) {
        for (int k = 0; k < 200; ++k) {
            const double u = rng.uniform(), v = rng.uniform();
            const double e = e_map(C, u, v);
            CHECK(e == doctest::Approx(e_map(C, 1.0 - u, v)).epsilon(1e-12));
            CHECK(e == doctest::Approx(e_map(C, u, 1.0 - v)).epsilon(1e-12));
        }
    }
}

TEST_CASE("ec_volume values") {
    CHECK(ec_volume(pi_copula(), {0.1, 0.4, 0.2, 0.45}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(ec_volume(m_copula(), {0.0, 0.25, 0.0, 0.25}) == doctest::Approx(0.5));
    CHECK(ec_volume(w_copula(), {0.0, 0.25, 0.0, 0.25}) == doctest::Approx(-0.5));
}

TEST_CASE("gamma_average") {
    CHECK(max_grid_diff(gamma_average(m_copula()), m_gamma()) < 1e-14);
    CHECK(max_grid_diff(gamma_average(pi_copula()), pi_copula()) < 1e-14);
    // idempotence on an invariant input
    const CopulaModel V = v_copula();
    CHECK(max_grid_diff(gamma_average(V), V) < 1e-14);
    CHECK(is_invariant(gamma_average(frank(4.0)), 32, 1e-12));
}

TEST_CASE("is_invariant") {
    CHECK(is_invariant(pi_copula(), 100, 1e-12));
    CHECK(is_invariant(v_copula(), 100, 1e-12));
    CHECK(is_invariant(m_gamma(), 100, 1e-12));
    CHECK_FALSE(is_invariant(gaussian(0.5), 100, 1e-9));
    CHECK_FALSE(is_invariant(m_copula(), 16, 1e-9));
}

TEST_CASE("theta transform on the canonical triple") {
    CHECK(max_grid_diff(theta_transform(m_copula()), m_gamma()) < 1e-14);
    CHECK(max_grid_diff(theta_transform(pi_copula()), pi_copula()) < 1e-14);
    CHECK(max_grid_diff(theta_transform(w_copula()), v_copula()) < 1e-14);
    // results are invariant
    CHECK(is_invariant(theta_transform(frank(3.0)), 32, 1e-12));
    CHECK(is_invariant(theta_transform(gaussian(0.5), 1e-9), 32, 1e-8));
}

TEST_CASE("theta rejects asymmetric copulas") {
    CHECK_THROWS_AS((void)theta_transform(fgm_cubic()), NotSymmetric);
}

TEST_CASE("theta inverse is a right inverse on invariant copulas") {
    for (const CopulaModel& A : {pi_copula(), m_gamma(), v_copula()}) {
        const CopulaModel round = theta_transform(theta_inverse(A));
        CHECK(max_grid_diff(round, A) < 1e-12);
    }
}

TEST_CASE("precede ordering") {
    CHECK(precede(v_copula(), pi_copula()));
    CHECK(precede(pi_copula(), m_gamma()));
    CHECK_FALSE(precede(m_gamma(), v_copula()));
    CHECK_THROWS_AS((void)precede(gaussian(0.5), pi_copula()), NotInvariant);
}

TEST_CASE("precede is reflexive and transitive on the invariant test set") {
    const std::vector<CopulaModel> set = {v_copula(), a_alpha(0.3), pi_copula(), a_alpha(0.7),
                                          m_gamma()};
    const int k = static_cast<int>(set.size());
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) rel[i][j] = precede(set[i], set[j], 100);
    for (int i = 0; i < k; ++i) CHECK(rel[i][i]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                if (rel[i][j] && rel[j][l]) CHECK(rel[i][l]);
    // V below everything, M_Gamma above everything
    for (int j = 0; j < k; ++j) {
        CHECK(rel[0][j]);
        CHECK(rel[j][4]);
    }
}

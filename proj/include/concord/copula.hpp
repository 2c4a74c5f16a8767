#pragma once

#include "concord/geometry.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace concord {

using Sampler = std::function<std::vector<Point>(std::size_t, std::uint64_t)>;

/// A bivariate copula. Models are immutable after construction and cheap
/// enough to copy; every operation on them is pure.
struct CopulaModel {
    std::string family;
    std::vector<double> params;

    /// C(u,v) on [0,1]^2. Required.
    std::function<double(double, double)> cdf;

    /// Lebesgue density on (0,1)^2 when the copula is absolutely continuous.
    std::function<double(double, double)> density;

    /// Markov kernel K(u,[0,v]) for u in (0,1), right-continuous and
    /// non-decreasing in v, K(u,[0,0])=0, K(u,[0,1])=1.
    std::function<double(double, double)> kernel;

    /// (n, seed) -> n i.i.d. points in (0,1)^2.
    Sampler sampler;

    /// Exact piecewise-bilinear description of the CDF, when available.
    std::optional<PiecewiseStructure> structure;

    /// True when C(u,v) = C(v,u) holds exactly by construction.
    bool symmetric = false;

    bool has_density() const { return static_cast<bool>(density); }
    bool has_kernel() const { return static_cast<bool>(kernel); }
    bool has_sampler() const { return static_cast<bool>(sampler); }

    Surface surface() const { return Surface{cdf, structure}; }
};

/// The eight transformations generated by the permutation pi and the partial
/// reflection nu1 (the symmetry group of the square acting on copulas).
enum class ReflectionTag { Identity, Nu1, Nu2, Nu, Pi, PiNu1, PiNu2, PiNu };

const std::array<ReflectionTag, 8>& all_reflections();
std::string reflection_name(ReflectionTag g);

/// Group composition: compose(g,h)(C) = g(h(C)).
ReflectionTag compose(ReflectionTag g, ReflectionTag h);

/// The transformed copula g(C). CDF, density, kernel, sampler and exact
/// structure are carried over whenever they are derivable; for tags involving
/// the permutation the kernel requires a symmetric base copula.
CopulaModel reflect(const CopulaModel& C, ReflectionTag g);

/// E_C(u,v) = C(u,v) + C(1-u,v) + C(u,1-v) + C(1-u,1-v) - 1.
double e_map(const CopulaModel& C, double u, double v);

/// E_C as a surface, with exact structure when the copula has one.
Surface e_surface(const CopulaModel& C);

/// E_C-volume of [a,b] x [c,d].
double ec_volume(const CopulaModel& C, const Rect& rect);

/// Arithmetic mean of the full reflection orbit of C; always invariant.
CopulaModel gamma_average(const CopulaModel& C);

/// True iff max_g max_grid |g(C) - C| <= tol on an m x m grid.
bool is_invariant(const CopulaModel& C, int m = 64, double tol = 1e-9);

/// The quadrant transform taking symmetric copulas to invariant ones.
/// Throws NotSymmetric unless C is symmetric within sym_tol on a grid.
CopulaModel theta_transform(const CopulaModel& C, double sym_tol = 1e-12);

/// Restriction-and-rescale inverse of theta on invariant copulas:
/// (u,v) -> 4 A(u/2, v/2).
CopulaModel theta_inverse(const CopulaModel& A);

/// Ordering on invariant copulas: A precedes B iff A <= B + tol on an
/// m x m grid of [0,1/2]^2. Throws NotInvariant when either input fails
/// the invariance check.
bool precede(const CopulaModel& A, const CopulaModel& B, int m = 200, double tol = 1e-9);

/// Worst violations of the copula axioms on an m x m grid; used by tests.
struct AxiomReport {
    double grounded = 0.0;       // max |C(u,0)|, |C(0,v)|
    double margins = 0.0;        // max |C(u,1)-u|, |C(1,v)-v|
    double two_increasing = 0.0; // most negative C-volume (0 when none)
};
AxiomReport check_copula_axioms(const CopulaModel& C, int m = 64);

} // namespace concord

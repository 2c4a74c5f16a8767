#pragma once

#include "concord/copula.hpp"

#include <vector>

namespace concord {

enum class Direction { PMI, NMI };

enum class Criterion { Volume, Kernel, Density, PQD };

/// One recorded violation: a single grid point for the volume/density/PQD
/// criteria, a pair of points (same u, consecutive v) for the kernel one.
struct Violation {
    Point first;
    Point second;
    double slack = 0.0;
};

struct PmiReport {
    Criterion criterion = Criterion::Volume;
    int grid = 0;
    Direction direction = Direction::PMI;
    bool passed = false;
    double min_slack = 0.0;
    std::vector<Violation> violations;  // capped at max_violations entries
};

inline constexpr std::size_t max_violations = 64;

/// E_C-volumes of all cells of an m x m grid on (0,1/2)^2 must be >= -tol
/// (NMI: <= tol).
PmiReport check_pmi_volume(const CopulaModel& C, int m = 200, double tol = 1e-9,
                           Direction dir = Direction::PMI);

/// For each grid u in (0,1/2) the kernel contrast
/// v -> K(u,[0,v]) - K(1-u,[0,v]) + K(u,[0,1-v]) - K(1-u,[0,1-v])
/// must be non-decreasing (NMI: non-increasing) in v over the grid of (0,1/2).
/// Throws NoKernel when the copula has no Markov kernel.
PmiReport check_pmi_kernel(const CopulaModel& C, int m = 200, double tol = 1e-9,
                           Direction dir = Direction::PMI);

/// c(u,v) - c(1-u,v) - c(u,1-v) + c(1-u,1-v) >= -tol on grid midpoints of
/// (0,1/2)^2 (NMI: negated). Throws NoDensity when there is no density.
PmiReport check_pmi_density(const CopulaModel& C, int m = 200, double tol = 1e-9,
                            Direction dir = Direction::PMI);

/// C >= Pi - tol on grid midpoints of (0,1)^2; with dir == NMI the reversed
/// inequality C <= Pi + tol (negative quadrant dependence) is checked.
PmiReport check_pqd(const CopulaModel& C, int m = 200, double tol = 1e-9,
                    Direction dir = Direction::PMI);

/// The kernel contrast of the PMI criterion at one point, exposed for
/// direct evaluation of the cited counterexamples.
double kernel_contrast(const CopulaModel& C, double u, double v);

} // namespace concord

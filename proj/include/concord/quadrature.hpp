#pragma once

#include <functional>
#include <vector>

namespace concord {

/// Gauss-Legendre nodes and weights on [-1,1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Rule of the given order, computed once and cached (thread-safe).
const GaussRule& gauss_legendre(int order);

/// Integrate f over [a,b] with a fixed Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int order);

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a,b].
/// Subdivides until the local error estimate is below
/// max(abs_tol_local, rel_tol * |I|). Throws QuadratureFailure when the
/// recursion limit is hit before the tolerance is met.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-10, double rel_tol = 1e-12);

} // namespace concord

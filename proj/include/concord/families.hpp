#pragma once

#include "concord/copula.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace concord {

// ---------------------------------------------------------------------------
// Basic copulas
// ---------------------------------------------------------------------------

CopulaModel pi_copula();  // independence
CopulaModel m_copula();   // upper Frechet-Hoeffding bound, comonotonicity
CopulaModel w_copula();   // lower Frechet-Hoeffding bound, countermonotonicity
CopulaModel v_copula();   // the invariant diamond copula V
CopulaModel m_gamma();    // (M+W)/2
CopulaModel a_alpha(double alpha_mix);  // alpha*M_Gamma + (1-alpha)*Pi

// ---------------------------------------------------------------------------
// Parametric families
// ---------------------------------------------------------------------------

/// Gaussian copula, |rho| < 1. CDF via adaptive quadrature of the
/// conditional-normal integrand, closed-form density and Markov kernel,
/// sampling by linear transformation of independent normals.
CopulaModel gaussian(double rho);

/// Frank copula, delta != 0 (|delta| < 1e-8 rejected as numerically
/// singular). Closed-form CDF, density, kernel and conditional-inversion
/// sampler.
CopulaModel frank(double delta);

/// Generalized FGM copula uv + f(u) g(v). Requires f(0)=f(1)=g(0)=g(1)=0 and
/// f'(u) g'(v) >= -1, checked on a 200 x 200 grid.
CopulaModel fgm_generalized(std::function<double(double)> f,
                            std::function<double(double)> f_prime,
                            std::function<double(double)> g,
                            std::function<double(double)> g_prime,
                            const std::string& name = "fgm_generalized");

/// Standard FGM copula: f(u) = theta*u(1-u), g(v) = v(1-v), theta in [-1,1].
CopulaModel fgm(double theta);

/// Quartic variant: f(u) = theta*u^2(1-u)^2, g(v) = v(1-v).
CopulaModel fgm_quartic(double theta);

/// The cubic example f(u) = u(1-u)(1-2u), g(v) = v(1-v); PMI but not PQD.
CopulaModel fgm_cubic();

/// Frechet copula alpha*M + (1-alpha-beta)*Pi + beta*W, alpha+beta <= 1.
CopulaModel frechet(double alpha, double beta);

/// Marshall-Olkin copula min(u^(1-alpha) v, u v^(1-beta)), alpha,beta in [0,1].
/// The Markov kernel carries an atom at v = u^(alpha/beta).
CopulaModel marshall_olkin(double alpha, double beta);

// ---------------------------------------------------------------------------
// Extreme-value copulas
// ---------------------------------------------------------------------------

/// Pickands dependence function: convex on [0,1] with
/// max(1-t, t) <= A(t) <= 1 and A(0) = A(1) = 1.
class PickandsFunction {
public:
    /// Piecewise-linear function through the given (t, A(t)) knots.
    static PickandsFunction piecewise_linear(std::vector<std::pair<double, double>> knots);

    /// Closed-form function with its right-hand derivative.
    static PickandsFunction from_callable(std::function<double(double)> value,
                                          std::function<double(double)> dplus);

    double value(double t) const { return value_(t); }

    /// Right-hand derivative; the left-hand slope is used at t = 1.
    double dplus(double t) const { return dplus_(t); }

private:
    PickandsFunction() = default;
    void validate() const;

    std::function<double(double)> value_;
    std::function<double(double)> dplus_;
};

/// The piecewise-linear Pickands function with knots at 0.2 / 0.5 / 0.8
/// whose extreme-value copula is SI but not PMI.
PickandsFunction pickands_kinked();

/// Extreme-value copula (uv)^(A(log u / log uv)).
CopulaModel evc(const PickandsFunction& A);

// ---------------------------------------------------------------------------
// Archimedean copulas
// ---------------------------------------------------------------------------

/// Generator phi: [0,1] -> [0,inf], convex, strictly decreasing, phi(1) = 0,
/// together with its pseudo-inverse psi (psi(x) = 0 for x >= phi(0)).
struct ArchimedeanGenerator {
    std::string name;
    std::function<double(double)> phi;
    std::function<double(double)> psi;
    double phi_at_zero = 0.0;  // may be +infinity
};

ArchimedeanGenerator independence_generator();
ArchimedeanGenerator linear_generator();  // phi(t) = 1 - t, yields W
ArchimedeanGenerator frank_generator(double delta);
ArchimedeanGenerator clayton_generator(double theta);  // theta in [-1,inf) \ {0}
ArchimedeanGenerator gumbel_generator(double theta);   // theta >= 1

/// Archimedean copula psi(phi(u) + phi(v)); symmetric by construction,
/// Markov kernel by numeric partial derivative of the CDF.
CopulaModel archimedean(const ArchimedeanGenerator& gen);

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// n i.i.d. points from C. Uses the model sampler when present, otherwise
/// conditional inversion of the Markov kernel by bisection (tolerance 1e-12,
/// at most 200 iterations). Throws NoSamplingPath when neither exists.
std::vector<Point> sample(const CopulaModel& C, std::size_t n, std::uint64_t seed);

} // namespace concord

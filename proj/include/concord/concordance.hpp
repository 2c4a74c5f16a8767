#pragma once

#include "concord/copula.hpp"
#include "concord/measure.hpp"

#include <functional>
#include <optional>
#include <string>

namespace concord {

/// The biconvex form [f, D] = integral of f against the measure described by
/// D, optionally restricted to a rectangle. Surfaces with exact piecewise
/// structure are integrated in closed form; smooth surfaces by Gauss-Legendre
/// with an embedded half-order error estimate (QuadratureFailure when the
/// estimate exceeds D.quad_tol and check is set).
double biconvex(const Surface& f, const MeasureDescriptor& D,
                const std::optional<Rect>& region = std::nullopt, bool check = true);

double biconvex(const CopulaModel& C, const MeasureDescriptor& D,
                const std::optional<Rect>& region = std::nullopt, bool check = true);

/// alpha(A) = ([M,A] - 1/4)^{-1}. Throws NotInvariant unless A passes the
/// invariance check.
double alpha_normalizer(const CopulaModel& A, const MeasureDescriptor& D,
                        bool check_invariance = true);

enum class SpecTag { Pi, MGamma, V, AAlpha };

/// Everything needed to evaluate and estimate the measure of concordance
/// kappa_A for one invariant copula A.
struct ConcordanceSpec {
    SpecTag tag = SpecTag::Pi;
    std::string name;  // rho | gamma | kappaV | kappaA
    CopulaModel A;
    MeasureDescriptor measure;
    double alpha = 0.0;
    /// Exact mean of A over a rectangle (drives the checkerboard estimator).
    std::function<double(const Rect&)> cell_average;
};

ConcordanceSpec spec_pi();               // Spearman's rho
ConcordanceSpec spec_mgamma();           // Gini's gamma
ConcordanceSpec spec_v();                // kappa_V
ConcordanceSpec spec_a_alpha(double alpha_mix);

/// kappa_A(C) = alpha(A) ([C,A] - 1/4).
double kappa(const CopulaModel& C, const ConcordanceSpec& spec);

/// kappa for the interpolated family A_alpha, computed directly from the
/// mixed measure.
double kappa_interpolated(const CopulaModel& C, double alpha_mix);

/// The same value through the weighted mean of rho and gamma; kept as an
/// independent computation path.
double kappa_interpolated_weighted(const CopulaModel& C, double alpha_mix);

/// alpha(A) kappa_B(C) - alpha(B) kappa_A(C); nonnegative for PMI copulas
/// when A precedes B, nonpositive for NMI ones. Throws OrderViolated when
/// the ordering precondition fails.
double comparison_slack(const CopulaModel& C, const ConcordanceSpec& A,
                        const ConcordanceSpec& B);

/// Integral of E_C against the measure, over the whole square or only the
/// lower-left quadrant (0,1/2)^2.
double e_integral(const CopulaModel& C, const MeasureDescriptor& D, bool lower_quadrant = false);

} // namespace concord

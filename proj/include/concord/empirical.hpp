#pragma once

#include "concord/concordance.hpp"
#include "concord/geometry.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace concord {

enum class TiePolicy { Error, MidrankJitter };

/// Integer rank pairs of a bivariate sample; each column is a permutation of
/// 1..n once the tie policy has been applied.
struct RankData {
    int n = 0;
    std::vector<int> r1, r2;  // 1-based ranks
    TiePolicy policy = TiePolicy::Error;
};

/// Column-wise ranks. Under TiePolicy::Error tied values raise TiesPresent
/// (the message lists the offending rows); under MidrankJitter ties are
/// broken by a seeded jitter of relative magnitude 1e-9, so ranks are
/// deterministic given the seed.
RankData ranks(const std::vector<Point>& sample, TiePolicy policy = TiePolicy::Error,
               std::uint64_t seed = 0, int min_n = 4);

enum class EmpiricalVariant { NPlusOne, Star, StarStar };

/// Empirical copula value at (u,v): C_n with R/(n+1) normalization, the
/// quantile-transform variant C_n*, or the classical C_n** with R/n.
double emp_copula(const RankData& R, EmpiricalVariant variant, double u, double v);

/// Empirical checkerboard copula: density n on the n open rank cells.
double checkerboard(const RankData& R, double u, double v);

/// [C_n, A] = (1/n) sum A(R_i1/(n+1), R_i2/(n+1)).
double biconvex_ec(const RankData& R, const ConcordanceSpec& spec);

/// [C-hat_n, A] = (1/n) sum n^2 integral of A over the rank cell of i.
double biconvex_ecc(const RankData& R, const ConcordanceSpec& spec);

/// Normalizers alpha_n(A) = ([M_n,A] - 1/4)^{-1} (needs n >= 4) and
/// alpha-hat_n(A) = ([M-hat_n,A] - 1/4)^{-1} (needs n >= 2).
double alpha_n(const ConcordanceSpec& spec, int n);
double alpha_hat_n(const ConcordanceSpec& spec, int n);

/// Closed forms of the normalizers where known (Pi, MGamma both kinds; V for
/// the empirical-copula kind only).
std::optional<double> alpha_n_closed(SpecTag tag, int n);
std::optional<double> alpha_hat_n_closed(SpecTag tag, int n);

enum class EstimatorKind { EC, ECC };

struct ConcordanceEstimate {
    double value = 0.0;
    EstimatorKind kind = EstimatorKind::EC;
    SpecTag spec_tag = SpecTag::Pi;
    double alpha_n = 0.0;
    int n = 0;
};

/// kappa_{A,n} (EC) or kappa-hat_{A,n} (ECC) through the generic
/// biconvex-form path.
ConcordanceEstimate estimate(const RankData& R, const ConcordanceSpec& spec, EstimatorKind kind);

/// Closed-form fast paths: Spearman's rho (both kinds coincide), Gini's
/// gamma for either kind, kappa_V for the EC kind. Empty when no closed
/// form is known.
std::optional<double> estimate_closed(const RankData& R, SpecTag tag, EstimatorKind kind);

/// Sample version of Spearman's rho.
double spearman_rho(const RankData& R);

/// Sample version of Gini's gamma (EC normalization).
double gini_gamma(const RankData& R);

/// Sample version of Kendall's tau; reported by the CLI as a descriptive
/// statistic only.
double kendall_tau(const RankData& R);

} // namespace concord

#include "concord/empirical.hpp"

#include "concord/errors.hpp"
#include "concord/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace concord {

namespace {

std::vector<int> column_ranks(const std::vector<double>& x, TiePolicy policy,
                              std::uint64_t seed, const char* label) {
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    if (policy == TiePolicy::Error) {
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
        std::ostringstream ties;
        int tie_count = 0;
        for (std::size_t k = 1; k < n; ++k) {
            if (x[order[k]] == x[order[k - 1]]) {
                if (tie_count < 8)
                    ties << (tie_count ? ", " : "") << "rows " << order[k - 1] + 1 << "/"
                         << order[k] + 1;
                ++tie_count;
            }
        }
        if (tie_count > 0)
            throw TiesPresent(std::string("ranks: tied values in ") + label + " column (" +
                              ties.str() + (tie_count > 8 ? ", ..." : "") + ")");
    } else {
        // Seeded jitter of relative size 1e-9 breaks ties deterministically.
        double lo = x[0], hi = x[0];
        for (double v : x) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const double eps = 1e-9 * std::max(hi - lo, 1e-300);
        Rng rng(seed);
        std::vector<double> jitter(n);
        for (auto& j : jitter) j = eps * rng.uniform();
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const double xa = x[a] + jitter[a], xb = x[b] + jitter[b];
            if (xa != xb) return xa < xb;
            return a < b;
        });
    }

    std::vector<int> rank(n);
    for (std::size_t k = 0; k < n; ++k) rank[order[k]] = static_cast<int>(k) + 1;
    return rank;
}

} // namespace

RankData ranks(const std::vector<Point>& sample, TiePolicy policy, std::uint64_t seed,
               int min_n) {
    const int n = static_cast<int>(sample.size());
    if (n < min_n)
        throw TooFewObservations("ranks: need at least " + std::to_string(min_n) +
                                 " observations, got " + std::to_string(n));
    std::vector<double> x1(n), x2(n);
    for (int i = 0; i < n; ++i) {
        x1[i] = sample[i].u;
        x2[i] = sample[i].v;
    }
    RankData R;
    R.n = n;
    R.policy = policy;
    R.r1 = column_ranks(x1, policy, derive_seed(seed, 1), "first");
    R.r2 = column_ranks(x2, policy, derive_seed(seed, 2), "second");
    return R;
}

double emp_copula(const RankData& R, EmpiricalVariant variant, double u, double v) {
    const int n = R.n;
    int count = 0;
    switch (variant) {
        case EmpiricalVariant::NPlusOne: {
            const double denom = n + 1.0;
            for (int i = 0; i < n; ++i)
                count += (R.r1[i] / denom <= u && R.r2[i] / denom <= v) ? 1 : 0;
            break;
        }
        case EmpiricalVariant::Star: {
            // F_{n,j}^{-1}(u) is the order statistic with index ceil(n u).
            auto cut = [n](double t) {
                if (t <= 0.0) return 0;
                if (t >= 1.0) return n;
                int k = static_cast<int>(std::ceil(n * t));
                while (k > 0 && (k - 1.0) / n >= t) --k;
                while (k < n && static_cast<double>(k) / n < t) ++k;
                return k;
            };
            const int k1 = cut(u), k2 = cut(v);
            for (int i = 0; i < n; ++i) count += (R.r1[i] <= k1 && R.r2[i] <= k2) ? 1 : 0;
            break;
        }
        case EmpiricalVariant::StarStar: {
            const double denom = n;
            for (int i = 0; i < n; ++i)
                count += (R.r1[i] / denom <= u && R.r2[i] / denom <= v) ? 1 : 0;
            break;
        }
    }
    return static_cast<double>(count) / n;
}

double checkerboard(const RankData& R, double u, double v) {
    const int n = R.n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ou = std::clamp(n * u - (R.r1[i] - 1.0), 0.0, 1.0);
        if (ou == 0.0) continue;
        const double ov = std::clamp(n * v - (R.r2[i] - 1.0), 0.0, 1.0);
        acc += ou * ov;
    }
    return acc / n;
}

double biconvex_ec(const RankData& R, const ConcordanceSpec& spec) {
    const double denom = R.n + 1.0;
    double acc = 0.0;
    for (int i = 0; i < R.n; ++i) acc += spec.A.cdf(R.r1[i] / denom, R.r2[i] / denom);
    return acc / R.n;
}

double biconvex_ecc(const RankData& R, const ConcordanceSpec& spec) {
    const double n = R.n;
    double acc = 0.0;
    for (int i = 0; i < R.n; ++i) {
        const Rect cell{(R.r1[i] - 1.0) / n, R.r1[i] / n, (R.r2[i] - 1.0) / n, R.r2[i] / n};
        acc += spec.cell_average(cell);
    }
    return acc / R.n;
}

double alpha_n(const ConcordanceSpec& spec, int n) {
    if (n < 4) throw TooFewObservations("alpha_n: needs n >= 4");
    const double denom = n + 1.0;
    double acc = 0.0;
    for (int i = 1; i <= n; ++i) acc += spec.A.cdf(i / denom, i / denom);
    return 1.0 / (acc / n - 0.25);
}

double alpha_hat_n(const ConcordanceSpec& spec, int n) {
    if (n < 2) throw TooFewObservations("alpha_hat_n: needs n >= 2");
    double acc = 0.0;
    for (int i = 1; i <= n; ++i) {
        const Rect cell{(i - 1.0) / n, static_cast<double>(i) / n, (i - 1.0) / n,
                        static_cast<double>(i) / n};
        acc += spec.cell_average(cell);
    }
    return 1.0 / (acc / n - 0.25);
}

std::optional<double> alpha_n_closed(SpecTag tag, int n) {
    const double nn = n;
    switch (tag) {
        case SpecTag::Pi:
            return 12.0 * (nn + 1.0) * (nn + 1.0) / (nn * nn - 1.0);
        case SpecTag::MGamma:
            return 4.0 * nn * (nn + 1.0) / std::floor(nn * nn / 2.0);
        case SpecTag::V:
            return 2.0 * nn * (nn + 1.0) / std::floor((nn - 1.0) * (nn - 1.0) / 8.0);
        case SpecTag::AAlpha:
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<double> alpha_hat_n_closed(SpecTag tag, int n) {
    const double nn = n;
    switch (tag) {
        case SpecTag::Pi:
            return 12.0 * nn * nn / (nn * nn - 1.0);
        case SpecTag::MGamma:
            return 6.0 * nn * nn / std::floor(nn * (3.0 * nn - 2.0) / 4.0);
        default:
            return std::nullopt;
    }
}

ConcordanceEstimate estimate(const RankData& R, const ConcordanceSpec& spec,
                             EstimatorKind kind) {
    ConcordanceEstimate est;
    est.kind = kind;
    est.spec_tag = spec.tag;
    est.n = R.n;
    if (kind == EstimatorKind::EC) {
        est.alpha_n = alpha_n(spec, R.n);
        est.value = est.alpha_n * (biconvex_ec(R, spec) - 0.25);
    } else {
        est.alpha_n = alpha_hat_n(spec, R.n);
        est.value = est.alpha_n * (biconvex_ecc(R, spec) - 0.25);
    }
    return est;
}

double spearman_rho(const RankData& R) {
    const double n = R.n;
    double sum_sq = 0.0;
    for (int i = 0; i < R.n; ++i) {
        const double d = R.r1[i] - R.r2[i];
        sum_sq += d * d;
    }
    return 1.0 - 6.0 * sum_sq / (n * (n * n - 1.0));
}

double gini_gamma(const RankData& R) {
    const int n = R.n;
    long long anti = 0, diag = 0;
    for (int i = 0; i < n; ++i) {
        anti += std::llabs(static_cast<long long>(R.r1[i]) + R.r2[i] - (n + 1));
        diag += std::llabs(static_cast<long long>(R.r1[i]) - R.r2[i]);
    }
    const long long denom = static_cast<long long>(n) * n / 2;
    return static_cast<double>(anti - diag) / static_cast<double>(denom);
}

namespace {

double gini_gamma_ecc(const RankData& R) {
    const int n = R.n;
    long long anti = 0, diag = 0, on_anti = 0, on_diag = 0;
    for (int i = 0; i < n; ++i) {
        anti += std::llabs(static_cast<long long>(R.r1[i]) + R.r2[i] - (n + 1));
        diag += std::llabs(static_cast<long long>(R.r1[i]) - R.r2[i]);
        if (R.r1[i] + R.r2[i] == n + 1) ++on_anti;
        if (R.r1[i] == R.r2[i]) ++on_diag;
    }
    const long long denom = (static_cast<long long>(n) * (3LL * n - 2)) / 4;
    return 3.0 / (2.0 * denom) *
           (static_cast<double>(anti - diag) + (on_anti - on_diag) / 3.0);
}

double kappa_v_ec(const RankData& R) {
    const int n = R.n;
    const long long L = (static_cast<long long>(n - 1) * (n - 1)) / 8;
    if (L == 0) throw TooFewObservations("kappa_v estimator needs n >= 4");
    const double half = (n + 1.0) / 2.0;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = std::fabs(static_cast<double>(R.r1[i]) - R.r2[i]);
        const double s = std::fabs(static_cast<double>(R.r1[i]) + R.r2[i] - (n + 1.0));
        if (d > half)
            acc += d;
        else if (s > half)
            acc += (n + 1.0) - s;
        else
            acc += half;
    }
    return n * (n + 1.0) / (2.0 * L) - acc / L;
}

} // namespace

std::optional<double> estimate_closed(const RankData& R, SpecTag tag, EstimatorKind kind) {
    switch (tag) {
        case SpecTag::Pi:
            return spearman_rho(R);  // both estimators of rho coincide
        case SpecTag::MGamma:
            return kind == EstimatorKind::EC ? gini_gamma(R) : gini_gamma_ecc(R);
        case SpecTag::V:
            if (kind == EstimatorKind::EC) return kappa_v_ec(R);
            return std::nullopt;
        case SpecTag::AAlpha:
            return std::nullopt;
    }
    return std::nullopt;
}

double kendall_tau(const RankData& R) {
    const int n = R.n;
    long long concordant = 0, discordant = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const long long s = static_cast<long long>(R.r1[i] - R.r1[j]) *
                                (R.r2[i] - R.r2[j]);
            if (s > 0)
                ++concordant;
            else if (s < 0)
                ++discordant;
        }
    }
    return 2.0 * static_cast<double>(concordant - discordant) /
           (static_cast<double>(n) * (n - 1));
}

} // namespace concord

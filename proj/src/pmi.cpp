#include "concord/pmi.hpp"

#include "concord/errors.hpp"

#include <algorithm>
#include <cmath>

namespace concord {

namespace {

void finish(PmiReport& report, double tol) {
    report.passed = report.min_slack >= -tol;
}

} // namespace

double kernel_contrast(const CopulaModel& C, double u, double v) {
    if (!C.has_kernel()) throw NoKernel("kernel_contrast: copula has no Markov kernel");
    return C.kernel(u, v) - C.kernel(1.0 - u, v) + C.kernel(u, 1.0 - v) -
           C.kernel(1.0 - u, 1.0 - v);
}

PmiReport check_pmi_volume(const CopulaModel& C, int m, double tol, Direction dir) {
    if (m < 4) throw ParamOutOfRange("check_pmi_volume: grid size must be >= 4");
    PmiReport report;
    report.criterion = Criterion::Volume;
    report.grid = m;
    report.direction = dir;
    report.min_slack = 1e300;
    const double sign = dir == Direction::PMI ? 1.0 : -1.0;
    const double h = 0.5 / m;
    // Row-wise evaluation of E_C on the (m+1)^2 corner grid of (0,1/2)^2.
    std::vector<double> prev(m + 1), cur(m + 1);
    for (int j = 0; j <= m; ++j) prev[j] = e_map(C, 0.0, j * h);
    for (int i = 1; i <= m; ++i) {
        const double u = i * h;
        for (int j = 0; j <= m; ++j) cur[j] = e_map(C, u, j * h);
        for (int j = 1; j <= m; ++j) {
            const double volume = cur[j] - cur[j - 1] - prev[j] + prev[j - 1];
            const double slack = sign * volume;
            report.min_slack = std::min(report.min_slack, slack);
            if (slack < -tol && report.violations.size() < max_violations)
                report.violations.push_back({{(i - 1) * h, (j - 1) * h}, {u, j * h}, slack});
        }
        std::swap(prev, cur);
    }
    finish(report, tol);
    return report;
}

PmiReport check_pmi_kernel(const CopulaModel& C, int m, double tol, Direction dir) {
    if (!C.has_kernel()) throw NoKernel("check_pmi_kernel: copula has no Markov kernel");
    if (m < 2) throw ParamOutOfRange("check_pmi_kernel: grid size must be >= 2");
    PmiReport report;
    report.criterion = Criterion::Kernel;
    report.grid = m;
    report.direction = dir;
    report.min_slack = 1e300;
    const double sign = dir == Direction::PMI ? 1.0 : -1.0;
    // Cell midpoints of (0,1/2); the kernel may be undefined on the boundary.
    for (int i = 0; i < m; ++i) {
        const double u = (2.0 * i + 1.0) / (4.0 * m);
        double prev = kernel_contrast(C, u, 1.0 / (4.0 * m));
        double prev_v = 1.0 / (4.0 * m);
        for (int j = 1; j < m; ++j) {
            const double v = (2.0 * j + 1.0) / (4.0 * m);
            const double cur = kernel_contrast(C, u, v);
            const double slack = sign * (cur - prev);
            report.min_slack = std::min(report.min_slack, slack);
            if (slack < -tol && report.violations.size() < max_violations)
                report.violations.push_back({{u, prev_v}, {u, v}, slack});
            prev = cur;
            prev_v = v;
        }
    }
    finish(report, tol);
    return report;
}

PmiReport check_pmi_density(const CopulaModel& C, int m, double tol, Direction dir) {
    if (!C.has_density()) throw NoDensity("check_pmi_density: copula has no density");
    if (m < 2) throw ParamOutOfRange("check_pmi_density: grid size must be >= 2");
    PmiReport report;
    report.criterion = Criterion::Density;
    report.grid = m;
    report.direction = dir;
    report.min_slack = 1e300;
    const double sign = dir == Direction::PMI ? 1.0 : -1.0;
    for (int i = 0; i < m; ++i) {
        const double u = (2.0 * i + 1.0) / (4.0 * m);
        for (int j = 0; j < m; ++j) {
            const double v = (2.0 * j + 1.0) / (4.0 * m);
            const double contrast = C.density(u, v) - C.density(1.0 - u, v) -
                                    C.density(u, 1.0 - v) + C.density(1.0 - u, 1.0 - v);
            const double slack = sign * contrast;
            report.min_slack = std::min(report.min_slack, slack);
            if (slack < -tol && report.violations.size() < max_violations)
                report.violations.push_back({{u, v}, {u, v}, slack});
        }
    }
    finish(report, tol);
    return report;
}

PmiReport check_pqd(const CopulaModel& C, int m, double tol, Direction dir) {
    if (m < 2) throw ParamOutOfRange("check_pqd: grid size must be >= 2");
    PmiReport report;
    report.criterion = Criterion::PQD;
    report.grid = m;
    report.direction = dir;
    report.min_slack = 1e300;
    const double sign = dir == Direction::PMI ? 1.0 : -1.0;
    for (int i = 0; i < m; ++i) {
        const double u = (2.0 * i + 1.0) / (2.0 * m);
        for (int j = 0; j < m; ++j) {
            const double v = (2.0 * j + 1.0) / (2.0 * m);
            const double slack = sign * (C.cdf(u, v) - u * v);
            report.min_slack = std::min(report.min_slack, slack);
            if (slack < -tol && report.violations.size() < max_violations)
                report.violations.push_back({{u, v}, {u, v}, slack});
        }
    }
    finish(report, tol);
    return report;
}

} // namespace concord

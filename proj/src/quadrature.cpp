#include "concord/quadrature.hpp"

#include "concord/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace concord {

namespace {

GaussRule compute_gauss_legendre(int order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev initial guess, refined by Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[order - 1 - i] = rule.weights[i];
    }
    return rule;
}

} // namespace

const GaussRule& gauss_legendre(int order) {
    static std::mutex mtx;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int order) {
    const GaussRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule.
const double kronrod_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kronrod_w[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double gauss_w[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

void gk15(const std::function<double(double)>& f, double a, double b,
          double* result, double* err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double result_g = fc * gauss_w[3];
    double result_k = fc * kronrod_w[7];
    for (int j = 0; j < 7; ++j) {
        const double x = half * kronrod_x[j];
        const double fsum = f(mid - x) + f(mid + x);
        result_k += kronrod_w[j] * fsum;
        if (j % 2 == 1) result_g += gauss_w[j / 2] * fsum;
    }
    *result = result_k * half;
    *err = std::fabs((result_k - result_g) * half);
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth) {
    double result, err;
    gk15(f, a, b, &result, &err);
    if (err <= tol || b - a < 1e-14) return result;
    if (depth > 50)
        throw QuadratureFailure("integrate_adaptive: recursion limit reached");
    const double mid = 0.5 * (a + b);
    return adapt(f, a, mid, 0.5 * tol, depth + 1) + adapt(f, mid, b, 0.5 * tol, depth + 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol) {
    if (a == b) return 0.0;
    double coarse, err;
    gk15(f, a, b, &coarse, &err);
    const double tol = std::max(abs_tol, rel_tol * std::fabs(coarse));
    if (err <= tol) return coarse;
    return adapt(f, a, b, tol, 0);
}

} // namespace concord

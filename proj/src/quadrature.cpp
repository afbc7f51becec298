#include "grouppart/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "grouppart/errors.hpp"

namespace grouppart {

namespace {

// Abscissa expressed through its distance to the nearer endpoint so that
// f sees arguments arbitrarily close to a singular endpoint without
// cancellation.
struct TsNode {
    double x;
    double w;
};

TsNode ts_node(double a, double b, double t) {
    const double half = 0.5 * (b - a);
    const double u = 1.5707963267948966 * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = half * 1.5707963267948966 * std::cosh(t) / (ch * ch);
    double x;
    if (t <= 0) {
        const double da = half * 2.0 / (1.0 + std::exp(-2.0 * u)); // half*(1+tanh u)
        x = a + da;
    } else {
        const double db = half * 2.0 / (1.0 + std::exp(2.0 * u)); // half*(1-tanh u)
        x = b - db;
    }
    return {x, w};
}

} // namespace

QuadResult tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) throw std::invalid_argument("tanh_sinh: need b > a");
    const double t_max = 6.8; // beyond this the weights underflow
    double prev = 0.0;
    double value = 0.0;
    double err = HUGE_VAL;
    for (int level = 0; level <= 12; ++level) {
        const double h = 1.0 / static_cast<double>(1u << level);
        double sum = 0.0;
        const long kmax = static_cast<long>(t_max / h);
        for (long k = -kmax; k <= kmax; ++k) {
            const auto node = ts_node(a, b, static_cast<double>(k) * h);
            if (node.w <= 0.0 || node.x <= a || node.x >= b) continue;
            sum += node.w * f(node.x);
        }
        value = h * sum;
        if (level >= 2) {
            err = std::abs(value - prev);
            if (err <= tol) return {value, err};
        }
        prev = value;
    }
    throw ToleranceError("tanh_sinh did not reach the requested tolerance");
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
// iteration on P_16.
struct GaussRule {
    double x[16];
    double w[16];
};

const GaussRule& gauss16() {
    static const GaussRule rule = [] {
        GaussRule r{};
        const int n = 16;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            r.x[i] = x;
            r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }();
    return rule;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
    const auto& g = gauss16();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += g.w[i] * f(mid + half * g.x[i]);
    return half * s;
}

} // namespace

QuadResult composite_gauss(const std::function<double(double)>& f,
                           const std::vector<double>& breakpoints, double tol) {
    if (breakpoints.size() < 2) throw std::invalid_argument("composite_gauss: need >= 2 breakpoints");
    std::vector<double> pts = breakpoints;
    double prev = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) prev += gauss_panel(f, pts[i], pts[i + 1]);
    for (int round = 0; round < 10; ++round) {
        std::vector<double> refined;
        refined.reserve(pts.size() * 2);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            refined.push_back(pts[i]);
            refined.push_back(0.5 * (pts[i] + pts[i + 1]));
        }
        refined.push_back(pts.back());
        pts = std::move(refined);
        double cur = 0.0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) cur += gauss_panel(f, pts[i], pts[i + 1]);
        const double err = std::abs(cur - prev);
        prev = cur;
        if (err <= tol) return {cur, err};
    }
    throw ToleranceError("composite_gauss did not reach the requested tolerance");
}

} // namespace grouppart

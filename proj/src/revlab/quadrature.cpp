#include "quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "error.hpp"
#include "kahan.hpp"

namespace revlab {

namespace {

struct GL64 {
    std::array<double, 64> x{}, w{};
    GL64() {
        // Nodes/weights of 64-point Gauss-Legendre on [-1,1] via Newton on
        // Legendre polynomials; exact to machine precision at this order.
        for (int i = 0; i < 32; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (64 + 0.5));
            double p0, p1, dp;
            for (int it = 0; it < 100; ++it) {
                p0 = 1.0;
                p1 = t;
                for (int k = 2; k <= 64; ++k) {
                    double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = 64.0 * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            x[i] = -t;
            x[63 - i] = t;
            double wi = 2.0 / ((1.0 - t * t) * dp * dp);
            w[i] = wi;
            w[63 - i] = wi;
        }
    }
};

const GL64& gl64() {
    static const GL64 table;
    return table;
}

std::complex<double> sweep(const std::function<std::complex<double>(double)>& f,
                           double a, double b, int panels) {
    const GL64& g = gl64();
    KahanSum acc;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        const double half = 0.5 * h;
        for (int i = 0; i < 64; ++i)
            acc.add(half * g.w[i] * f(mid + half * g.x[i]));
    }
    return acc.value();
}

} // namespace

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               double a, double b,
                               double max_panel,
                               double abs_tol,
                               int depth_limit) {
    if (!(b > a)) return {0.0, 0.0};
    int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel)));
    std::complex<double> prev = sweep(f, a, b, panels);
    for (int depth = 0; depth < depth_limit; ++depth) {
        panels *= 2;
        std::complex<double> cur = sweep(f, a, b, panels);
        if (std::abs(cur - prev) < abs_tol) return cur;
        prev = cur;
    }
    fail(Errc::quadrature_failure, "adaptive quadrature did not settle");
}

} // namespace revlab

#include "diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "kahan.hpp"

namespace revlab {

namespace {

double trapezoid_abs2(const std::vector<double>& grid, const std::vector<cplx>& v) {
    KahanSumReal acc;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double h = grid[i + 1] - grid[i];
        acc.add(0.5 * h * (std::norm(v[i]) + std::norm(v[i + 1])));
    }
    return acc.value();
}

} // namespace

double energy(const FieldSample& field) {
    if (field.grid.size() < 2) fail(Errc::bad_arg, "energy needs at least two samples");
    const double span = field.grid.back() - field.grid.front();
    if (!(span > 0.0)) fail(Errc::bad_arg, "energy needs a nondegenerate grid");
    return trapezoid_abs2(field.grid, field.values) / span;
}

ComparisonReport compare(const FieldSample& a, const FieldSample& b) {
    if (a.grid.size() != b.grid.size())
        fail(Errc::grid_mismatch, "fields sampled on different grid sizes");
    for (std::size_t i = 0; i < a.grid.size(); ++i)
        if (std::abs(a.grid[i] - b.grid[i]) > 1e-12 * std::max(1.0, std::abs(a.grid[i])))
            fail(Errc::grid_mismatch, "fields sampled on different grids");
    if (a.grid.size() < 2) fail(Errc::bad_arg, "compare needs at least two samples");

    ComparisonReport rep;
    rep.grid_size = static_cast<int>(a.grid.size());
    std::vector<cplx> diff(a.values.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
        diff[i] = a.values[i] - b.values[i];
        rep.sup = std::max(rep.sup, std::abs(diff[i]));
    }
    const double span = a.grid.back() - a.grid.front();
    rep.l2 = std::sqrt(trapezoid_abs2(a.grid, diff) / span);
    return rep;
}

RoughnessReport box_dimension(const FieldSample& field) {
    const std::size_t n = field.grid.size();
    if (n < 1024) fail(Errc::insufficient_resolution, "box_dimension needs >= 1024 samples");

    std::vector<double> y(n);
    double ymin = 1e300, ymax = -1e300;
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = field.values[i].real();
        ymin = std::min(ymin, y[i]);
        ymax = std::max(ymax, y[i]);
    }
    RoughnessReport rep;
    if (ymax - ymin < 1e-14 * (std::abs(ymax) + std::abs(ymin) + 1.0)) {
        rep.dimension = 1.0; // flat graph
        return rep;
    }
    for (double& v : y) v = (v - ymin) / (ymax - ymin);

    const int kmax = static_cast<int>(std::floor(std::log2(static_cast<double>(n)))) - 2;
    const int kmin = 2;
    std::vector<double> ks, logs;
    const auto column_of = [&n](std::size_t i, int ncol) {
        return static_cast<int>(std::min<std::size_t>(
            (i * static_cast<std::size_t>(ncol)) / (n - 1), ncol - 1));
    };
    for (int k = kmin; k <= kmax; ++k) {
        const int ncol = 1 << k;
        const double eps = 1.0 / ncol;
        long total = 0;
        std::size_t i = 0;
        for (int col = 0; col < ncol; ++col) {
            const std::size_t first = i;
            while (i < n && column_of(i, ncol) == col) ++i;
            if (i == first) continue; // empty column
            // include the shared boundary samples of the neighbouring columns
            // so the covered graph stays connected
            const std::size_t lo = first > 0 ? first - 1 : 0;
            const std::size_t hi = std::min(i, n - 1);
            double cmin = 1e300, cmax = -1e300;
            for (std::size_t s = lo; s <= hi; ++s) {
                cmin = std::min(cmin, y[s]);
                cmax = std::max(cmax, y[s]);
            }
            total += static_cast<long>(std::floor(cmax / eps) - std::floor(cmin / eps)) + 1;
        }
        ks.push_back(static_cast<double>(k));
        logs.push_back(std::log2(static_cast<double>(total)));
    }
    // fit window: drop the first and last octave of the dyadic range
    const double klo = kmin + 1, khi = kmax - 1;
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (ks[i] >= klo && ks[i] <= khi)
            rep.scales_used.push_back(std::pow(2.0, -ks[i]));
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    int cnt = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < klo || ks[i] > khi) continue;
        sx += ks[i];
        sy += logs[i];
        sxx += ks[i] * ks[i];
        sxy += ks[i] * logs[i];
        syy += logs[i] * logs[i];
        ++cnt;
    }
    if (cnt < 3) fail(Errc::insufficient_resolution, "too few scales for the dimension fit");
    const double denom = cnt * sxx - sx * sx;
    const double slope = (cnt * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / cnt;
    double ssr = 0, sst = 0;
    const double mean = sy / cnt;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < klo || ks[i] > khi) continue;
        const double pred = slope * ks[i] + intercept;
        ssr += (logs[i] - pred) * (logs[i] - pred);
        sst += (logs[i] - mean) * (logs[i] - mean);
    }
    rep.dimension = slope;
    rep.r_squared = sst > 0 ? 1.0 - ssr / sst : 1.0;
    return rep;
}

std::vector<double> linearity_breakpoints(const FieldSample& field, double tol) {
    const std::size_t n = field.grid.size();
    if (n < 3) fail(Errc::bad_arg, "breakpoint detection needs >= 3 samples");
    const double h = field.grid[1] - field.grid[0];
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (std::abs((field.grid[i + 1] - field.grid[i]) - h) > 1e-9 * std::max(1.0, h))
            fail(Errc::bad_arg, "breakpoint detection needs a uniform grid");

    double supv = 0.0;
    for (const cplx& v : field.values) supv = std::max(supv, std::abs(v));
    const double thresh = tol * std::max(supv, 1e-300);

    std::vector<double> out;
    bool in_cluster = false;
    double cluster_lo = 0, cluster_hi = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const cplx d2 = field.values[i + 1] - 2.0 * field.values[i] + field.values[i - 1];
        const bool hit = std::max(std::abs(d2.real()), std::abs(d2.imag())) > thresh;
        if (hit) {
            if (!in_cluster) {
                in_cluster = true;
                cluster_lo = field.grid[i];
            }
            cluster_hi = field.grid[i];
        } else if (in_cluster) {
            out.push_back(0.5 * (cluster_lo + cluster_hi));
            in_cluster = false;
        }
    }
    if (in_cluster) out.push_back(0.5 * (cluster_lo + cluster_hi));
    return out;
}

} // namespace revlab

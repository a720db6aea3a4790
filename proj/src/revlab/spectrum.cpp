#include "spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "error.hpp"

namespace revlab {

namespace {

struct GenCoeffsABCD {
    cplx a, b, c, d;
};

GenCoeffsABCD gen_abcd(const BoundaryConditions& bc) {
    return GenCoeffsABCD{
        bc.b11 * bc.b22 - bc.b14 * bc.b23 + bc.b13 * bc.b24,
        bc.b13 * bc.b22 - bc.b12 * bc.b23 + bc.b11 * bc.b24,
        bc.b12 * bc.b24 - bc.b14 * bc.b22,
        bc.b11 * bc.b23,
    };
}

constexpr cplx kI{0.0, 1.0};

double axis_tol(cplx z) { return 1e-8 * std::max(1.0, std::abs(z)); }

RootClass classify_root(cplx z) {
    const double t = axis_tol(z);
    if (std::abs(z.imag()) <= t)
        return z.real() > 0.0 ? RootClass::RealPositive : RootClass::RealNegative;
    if (std::abs(z.real()) <= t)
        return z.imag() > 0.0 ? RootClass::ImagUp : RootClass::ImagDown;
    return RootClass::ComplexQuadrant;
}

bool residual_ok(const BoundaryConditions& bc, cplx z) {
    return std::abs(discriminant(bc, z)) < 1e-10 * std::max(1.0, std::norm(z));
}

cplx newton_refine(const BoundaryConditions& bc, cplx z0) {
    cplx z = z0;
    for (int it = 0; it < 100; ++it) {
        const cplx f = discriminant(bc, z);
        const cplx d = discriminant_derivative(bc, z);
        if (d == cplx{}) break;
        const cplx step = f / d;
        z -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    return z;
}

// design-decision ordering: |Re| ascending, then Im descending
bool root_order(const Root& x, const Root& y) {
    const double ax = std::abs(x.kappa.real()), ay = std::abs(y.kappa.real());
    if (std::abs(ax - ay) > 1e-12 * std::max(1.0, std::max(ax, ay))) return ax < ay;
    if (x.kappa.imag() != y.kappa.imag()) return x.kappa.imag() > y.kappa.imag();
    return x.kappa.real() > y.kappa.real();
}

} // namespace

const char* root_class_name(RootClass c) {
    switch (c) {
        case RootClass::RealPositive: return "RealPositive";
        case RootClass::RealNegative: return "RealNegative";
        case RootClass::ImagUp: return "ImagUp";
        case RootClass::ImagDown: return "ImagDown";
        case RootClass::ComplexQuadrant: return "ComplexQuadrant";
    }
    return "?";
}

cplx discriminant(const BoundaryConditions& bc, cplx kappa) {
    if (bc.is_pseudoperiodic()) {
        return 2.0 * (bc.beta0 + bc.beta1) * std::cos(kappa * bc.L) -
               2.0 * (1.0 + bc.beta0 * bc.beta1);
    }
    const auto [a, b, c, d] = gen_abcd(bc);
    const cplx kl = kappa * bc.L;
    return 2.0 * kI *
           (a * kappa + b * kappa * std::cos(kl) + (c + d * kappa * kappa) * std::sin(kl));
}

cplx discriminant_derivative(const BoundaryConditions& bc, cplx kappa) {
    if (bc.is_pseudoperiodic())
        return -2.0 * bc.L * (bc.beta0 + bc.beta1) * std::sin(kappa * bc.L);
    const auto [a, b, c, d] = gen_abcd(bc);
    const cplx kl = kappa * bc.L;
    const cplx cs = std::cos(kl), sn = std::sin(kl);
    return 2.0 * kI *
           (a + b * (cs - kappa * bc.L * sn) + 2.0 * d * kappa * sn +
            (c + d * kappa * kappa) * bc.L * cs);
}

cplx pseudoperiodic_kappa0(const BoundaryConditions& bc) {
    if (!bc.is_pseudoperiodic()) fail(Errc::bad_arg, "kappa0 is a pseudoperiodic quantity");
    bc.validate();
    const cplx arg = (1.0 + bc.beta0 * bc.beta1) / (bc.beta0 + bc.beta1);
    return std::acos(arg) / bc.L;
}

cplx asymptotic_root(const BoundaryConditions& bc, int j, int branch) {
    if (bc.is_pseudoperiodic()) fail(Errc::bad_arg, "asymptotic_root applies to general BCs");
    const auto [a, b, c, d] = gen_abcd(bc);
    if (std::abs(d) > 0.0) return cplx(j * M_PI / bc.L, 0.0);
    if (std::abs(b) < 1e-14 * std::max(1.0, std::abs(a)))
        fail(Errc::bad_arg, "asymptote undefined: acos denominator vanishes");
    const cplx theta = std::acos(-a / b);
    return (2.0 * M_PI * static_cast<double>(j) + static_cast<double>(branch) * theta) / bc.L;
}

int count_zeros_in_rectangle(const BoundaryConditions& bc,
                             double re_lo, double re_hi,
                             double im_lo, double im_hi) {
    if (!(re_lo < re_hi) || !(im_lo < im_hi))
        fail(Errc::bad_arg, "degenerate rectangle");
    const cplx corners[5] = {
        {re_lo, im_lo}, {re_hi, im_lo}, {re_hi, im_hi}, {re_lo, im_hi}, {re_lo, im_lo}};
    double winding = 0.0;
    long evals = 0;
    const long eval_cap = 4'000'000;
    for (int e = 0; e < 4; ++e) {
        const cplx z0 = corners[e], z1 = corners[e + 1];
        // adaptive phase walk: keep adjacent sample arguments within pi/2
        std::function<void(double, cplx, double, cplx, int)> walk =
            [&](double t0, cplx f0, double t1, cplx f1, int depth) {
                const double a0 = std::arg(f0);
                double da = std::arg(f1) - a0;
                while (da > M_PI) da -= 2.0 * M_PI;
                while (da < -M_PI) da += 2.0 * M_PI;
                if (std::abs(da) < M_PI / 2) {
                    winding += da;
                    return;
                }
                if (depth > 48 || ++evals > eval_cap)
                    fail(Errc::bad_arg, "discriminant zero on rectangle boundary");
                const double tm = 0.5 * (t0 + t1);
                const cplx zm = z0 + tm * (z1 - z0);
                const cplx fm = discriminant(bc, zm);
                if (std::abs(fm) == 0.0)
                    fail(Errc::bad_arg, "discriminant zero on rectangle boundary");
                walk(t0, f0, tm, fm, depth + 1);
                walk(tm, fm, t1, f1, depth + 1);
            };
        // initial density: the discriminant phase advances at <= ~L rad per
        // unit along an edge (plus near-root spikes the recursion absorbs);
        // sample well below pi per step so no full turn can alias away.
        const double edge_len = std::abs(z1 - z0);
        const int init = std::max(
            48, static_cast<int>(std::ceil(edge_len * bc.L * 16.0 / M_PI)) + 16);
        cplx prev = discriminant(bc, z0);
        for (int i = 1; i <= init; ++i) {
            const double t = static_cast<double>(i) / init;
            const cplx z = z0 + t * (z1 - z0);
            const cplx f = discriminant(bc, z);
            evals += 1;
            if (std::abs(f) == 0.0)
                fail(Errc::bad_arg, "discriminant zero on rectangle boundary");
            walk((i - 1.0) / init, prev, t, f, 0);
            prev = f;
        }
    }
    const double turns = winding / (2.0 * M_PI);
    const long n = std::lround(turns);
    if (std::abs(turns - static_cast<double>(n)) > 0.25)
        fail(Errc::bad_arg, "winding number did not settle to an integer");
    return static_cast<int>(n);
}

namespace {

Spectrum compute_pseudoperiodic(const BoundaryConditions& bc, int count) {
    const cplx k0 = pseudoperiodic_kappa0(bc);
    if (std::abs(k0.imag()) > 1e-10)
        fail(Errc::ill_posed,
             "kappa0 has nonzero imaginary part: infinitely many unstable modes");
    if (std::abs(std::sin(k0.real() * bc.L)) < 1e-8)
        fail(Errc::degenerate_spectrum, "kappa0 collides with j*pi/L (double zeros)");

    const int half = count / 2; // 2*half+1 >= count
    Spectrum spec{bc, k0, {}};
    for (int j = -half; j <= half; ++j) {
        const double kj = k0.real() + 2.0 * M_PI * j / bc.L;
        for (int mirror = 0; mirror < 2; ++mirror) {
            const cplx kappa = mirror ? cplx(-kj, 0.0) : cplx(kj, 0.0);
            Root r;
            r.pair_index = j;
            r.mirrored = mirror != 0;
            r.kappa = kappa;
            r.ddelta = discriminant_derivative(bc, kappa);
            r.cls = classify_root(kappa);
            if (std::abs(r.ddelta) < 1e-6 * std::max(1.0, std::abs(kappa)))
                fail(Errc::degenerate_spectrum, "discriminant derivative too small at root");
            spec.roots.push_back(r);
        }
    }
    std::sort(spec.roots.begin(), spec.roots.end(), root_order);
    return spec;
}

Spectrum compute_general(const BoundaryConditions& bc, int count) {
    const auto [a, b, c, d] = gen_abcd(bc);
    const double L = bc.L;
    // kappa = 0 is always a zero of the (odd) general discriminant but carries
    // no residue (zeta+ vanishes there too); it must be simple.
    if (std::abs(a + b + c * L) < 1e-10 * std::max({1.0, std::abs(a), std::abs(b)}))
        fail(Errc::degenerate_spectrum, "higher-order discriminant zero at kappa = 0");

    const int want_pairs = count;
    const int search_pairs = 2 * (count + 1) + 8;
    const double y_band = 20.0 / L;

    std::vector<cplx> seeds;
    if (std::abs(d) > 0.0) {
        for (int j = 1; j <= search_pairs + 8; ++j) seeds.push_back(cplx(j * M_PI / L, 0.0));
    } else {
        for (int j = 0; j <= search_pairs / 2 + 6; ++j)
            for (int br : {+1, -1}) {
                const cplx s = asymptotic_root(bc, j, br);
                if (s.real() > 1e-9 || (std::abs(s.real()) <= 1e-9 && s.imag() > 0.0))
                    seeds.push_back(s);
            }
    }
    // imaginary axis sweep
    for (int i = 1; i <= 80; ++i) seeds.push_back(cplx(0.0, y_band * i / 80.0));
    // low-lying complex sweep
    auto add_grid = [&seeds, y_band](double re0, double re1, int nre, int nim) {
        for (int i = 0; i <= nre; ++i)
            for (int k = -nim; k <= nim; ++k)
                seeds.push_back(cplx(re0 + (re1 - re0) * i / nre, y_band * k / nim));
    };
    const double x_dense = std::min((count + 1) * 2.0 * M_PI / L, 16.0 * M_PI / L);
    add_grid(0.08 * M_PI / L, x_dense, 96, 12);

    auto harvest = [&](const std::vector<cplx>& starts, std::vector<cplx>& reps) {
        for (const cplx s : starts) {
            cplx z = newton_refine(bc, s);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
            if (!residual_ok(bc, z)) continue;
            if (std::abs(z) < 1e-6 * M_PI / L) continue; // trivial zero at origin
            const double t = axis_tol(z);
            if (z.real() < -t || (std::abs(z.real()) <= t && z.imag() < 0.0)) z = -z;
            bool dup = false;
            for (const cplx r : reps)
                if (std::abs(r - z) < 1e-8) { dup = true; break; }
            if (!dup) reps.push_back(z);
        }
    };

    std::vector<cplx> reps;
    harvest(seeds, reps);

    std::sort(reps.begin(), reps.end(), [](cplx x, cplx y) {
        const double ax = std::abs(x.real()), ay = std::abs(y.real());
        if (std::abs(ax - ay) > 1e-12 * std::max(1.0, std::max(ax, ay))) return ax < ay;
        return x.imag() > y.imag();
    });

    // argument-principle certification over the search band: the winding count
    // inside [-X, X] x [-Y, Y] must equal the trivial zero plus both members of
    // every found pair inside. A mismatch means the sweep missed roots.
    auto safe_edge = [&](double target) {
        double x = target;
        for (int attempt = 0; attempt < 64; ++attempt) {
            double clear = 1e9;
            for (const cplx r : reps) clear = std::min(clear, std::abs(std::abs(r.real()) - x));
            if (clear > 0.05 * M_PI / L) return x;
            x += 0.11 * M_PI / L;
        }
        return x;
    };
    const double x_edge = safe_edge((count + 1) * 2.0 * M_PI / L);
    const double y_edge = y_band + 0.37 * M_PI / L;

    for (int attempt = 0;; ++attempt) {
        int expected = 1; // trivial zero at the origin
        for (const cplx r : reps)
            if (std::abs(r.real()) < x_edge && std::abs(r.imag()) < y_edge) expected += 2;
        const int counted = count_zeros_in_rectangle(bc, -x_edge, x_edge, -y_edge, y_edge);
        if (counted == expected) break;
        if (attempt >= 2)
            fail(Errc::internal, "root sweep incomplete: winding count " +
                                     std::to_string(counted) + " vs found " +
                                     std::to_string(expected));
        // densify the sweep and retry
        std::vector<cplx> extra;
        for (int i = 0; i <= 256; ++i)
            for (int k = -24; k <= 24; ++k)
                extra.push_back(cplx(x_edge * i / 256.0, y_band * k / 24.0));
        harvest(extra, reps);
        std::sort(reps.begin(), reps.end(), [](cplx x, cplx y) {
            const double ax = std::abs(x.real()), ay = std::abs(y.real());
            if (std::abs(ax - ay) > 1e-12 * std::max(1.0, std::max(ax, ay))) return ax < ay;
            return x.imag() > y.imag();
        });
    }

    if (static_cast<int>(reps.size()) < want_pairs)
        fail(Errc::internal, "root search found fewer pairs than requested");

    Spectrum spec{bc, std::nullopt, {}};
    int m = 0;
    for (const cplx r : reps) {
        ++m;
        const cplx dd = discriminant_derivative(bc, r);
        if (std::abs(dd) < 1e-6 * std::max(1.0, std::abs(r)))
            fail(Errc::degenerate_spectrum, "discriminant derivative too small at root");
        Root rep;
        rep.pair_index = m;
        rep.mirrored = false;
        rep.kappa = r;
        rep.ddelta = dd;
        rep.cls = classify_root(r);
        spec.roots.push_back(rep);
        Root mir = rep;
        mir.mirrored = true;
        mir.kappa = -r;
        mir.ddelta = discriminant_derivative(bc, -r);
        mir.cls = classify_root(-r);
        spec.roots.push_back(mir);
    }
    std::sort(spec.roots.begin(), spec.roots.end(), root_order);
    return spec;
}

} // namespace

Spectrum compute_spectrum(const BoundaryConditions& bc, int count) {
    bc.validate();
    if (count < 1) fail(Errc::bad_arg, "root count must be positive");
    return bc.is_pseudoperiodic() ? compute_pseudoperiodic(bc, count)
                                  : compute_general(bc, count);
}

std::vector<Root> Spectrum::representatives() const {
    std::vector<Root> reps;
    reps.reserve(roots.size() / 2);
    for (const Root& r : roots)
        if (!r.mirrored) reps.push_back(r);
    if (bc.is_pseudoperiodic()) {
        // family order 0, +1, -1, +2, -2, ... (pairwise |j| ascending)
        std::sort(reps.begin(), reps.end(), [](const Root& x, const Root& y) {
            const int ax = std::abs(x.pair_index), ay = std::abs(y.pair_index);
            if (ax != ay) return ax < ay;
            return x.pair_index > y.pair_index;
        });
    } else {
        std::sort(reps.begin(), reps.end(),
                  [](const Root& x, const Root& y) { return x.pair_index < y.pair_index; });
    }
    return reps;
}

ModeReport classify_modes(const Spectrum& spec) {
    ModeReport rep;
    for (const Root& r : spec.roots) {
        const double im2 = (r.kappa * r.kappa).imag();
        if (std::abs(im2) < 1e-9) rep.neutral += 1;
        else if (im2 > 0.0) rep.growing += 1;
        else rep.decaying += 1;
    }
    rep.well_posed = true;
    if (spec.bc.is_pseudoperiodic()) {
        rep.energy_conserving = spec.bc.energy_conserving();
        if (spec.kappa0 && std::abs(spec.kappa0->imag()) > 1e-10) rep.well_posed = false;
    }
    return rep;
}

} // namespace revlab

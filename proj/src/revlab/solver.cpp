#include "solver.hpp"

#include <cmath>

#include "eigenbasis.hpp"
#include "error.hpp"
#include "kahan.hpp"
#include "parallel.hpp"

namespace revlab {

namespace {

constexpr cplx kI{0.0, 1.0};

void validate_grid(const std::vector<double>& grid, double L) {
    if (grid.empty()) fail(Errc::bad_arg, "empty evaluation grid");
    double prev = -1.0;
    for (double x : grid) {
        if (!(x >= -1e-12 && x <= L + 1e-12))
            fail(Errc::bad_arg, "grid point outside [0, L]");
        if (x <= prev) fail(Errc::bad_arg, "grid must be strictly increasing");
        prev = x;
    }
}

FieldMeta make_meta(Method m, double t, int nterms, const BoundaryConditions& bc,
                    const PiecewisePoly& u0) {
    FieldMeta meta;
    meta.method = m;
    meta.t = t;
    meta.nterms = nterms;
    meta.bc_desc = bc.describe();
    meta.datum_desc = "piecewise[" + std::to_string(u0.segments().size()) + " segments]";
    return meta;
}

int needed_pairs(const BoundaryConditions& bc, const TruncationPlan& plan) {
    return bc.is_pseudoperiodic() ? plan.nterms : plan.half();
}

} // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::Series: return "series";
        case Method::Residue: return "residue";
        case Method::Revival: return "revival";
    }
    return "?";
}

void TruncationPlan::validate() const {
    if (nterms < 3 || nterms % 2 == 0)
        fail(Errc::bad_arg, "truncation N must be odd and >= 3");
}

std::vector<double> uniform_grid(double L, int n) {
    if (n < 2) fail(Errc::bad_arg, "grid needs at least two points");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = L * static_cast<double>(i) / (n - 1);
    return g;
}

cplx zeta_plus(const BoundaryConditions& bc, const PiecewisePoly& u0, cplx kappa) {
    const cplx up = u0.bounded_ft(kappa);
    const cplx um = u0.bounded_ft(-kappa);
    const cplx e = std::exp(kI * kappa * bc.L);
    if (bc.is_pseudoperiodic())
        return ((bc.beta0 + bc.beta1) * e - 2.0) * up +
               (bc.beta0 - bc.beta1) / e * um;
    const cplx ik = kI * kappa;
    const cplx k2 = kappa * kappa;
    const cplx e1 = bc.b13 * bc.b22 - bc.b12 * bc.b23;
    const cplx coef_p = 2.0 * ik * bc.b11 * bc.b22 +
                        e * (bc.b12 * bc.b24 - bc.b14 * bc.b22 +
                             ik * (e1 + bc.b11 * bc.b24) + k2 * bc.b11 * bc.b23);
    const cplx coef_m = (bc.b14 * bc.b22 - bc.b12 * bc.b24 +
                         ik * (-e1 + bc.b11 * bc.b24) + k2 * bc.b11 * bc.b23) / e;
    return coef_p * up + coef_m * um;
}

cplx zeta_minus(const BoundaryConditions& bc, const PiecewisePoly& u0, cplx kappa) {
    if (!bc.is_pseudoperiodic())
        fail(Errc::bad_arg, "zeta_minus is defined for pseudoperiodic BCs");
    const cplx up = u0.bounded_ft(kappa);
    const cplx um = u0.bounded_ft(-kappa);
    const cplx e = std::exp(kI * kappa * bc.L);
    return (2.0 * bc.beta0 * bc.beta1 * e - bc.beta0 - bc.beta1) * up +
           (bc.beta0 - bc.beta1) * um;
}

cplx series_coefficient(const BoundaryConditions& bc, const Spectrum& spec,
                        const PiecewisePoly& u0, int j) {
    if (bc.is_pseudoperiodic()) {
        const PPConstants c = pp_constants(bc);
        const cplx kj = spec.kappa0.value() + 2.0 * M_PI * static_cast<double>(j) / bc.L;
        return (u0.bounded_ft(kj) + c.delta * u0.bounded_ft(-kj)) / (c.tau * bc.L);
    }
    for (const Root& r : spec.roots) {
        if (!r.mirrored && r.pair_index == j) {
            const GenCoeffs c = gen_coeffs(bc, r.kappa);
            return (u0.bounded_ft(r.kappa) + c.b2bar * u0.bounded_ft(-r.kappa)) /
                   (c.tau_j * bc.L);
        }
    }
    fail(Errc::bad_arg, "no spectrum root with the requested index");
}

FieldSample evaluate_series(const BoundaryConditions& bc, const PiecewisePoly& u0,
                            double t, const std::vector<double>& grid,
                            const TruncationPlan& plan) {
    plan.validate();
    return evaluate_series(compute_spectrum(bc, needed_pairs(bc, plan)), u0, t, grid, plan);
}

FieldSample evaluate_series(const Spectrum& spec, const PiecewisePoly& u0,
                            double t, const std::vector<double>& grid,
                            const TruncationPlan& plan) {
    const BoundaryConditions& bc = spec.bc;
    plan.validate();
    validate_grid(grid, bc.L);
    FieldSample out;
    out.grid = grid;
    out.values.assign(grid.size(), cplx{});
    out.meta = make_meta(Method::Series, t, plan.nterms, bc, u0);

    if (bc.is_pseudoperiodic()) {
        const PPConstants c = pp_constants(bc);
        const double k0 = spec.kappa0.value().real();
        const int half = plan.half();
        if (static_cast<int>(spec.pair_count()) < plan.nterms)
            fail(Errc::bad_arg, "spectrum has fewer pairs than the truncation plan");
        // weights W_j = c_j e^{-i k_j^2 t}, family index j in [-half, half]
        std::vector<cplx> w(2 * half + 1);
        for (int j = -half; j <= half; ++j) {
            const double kj = k0 + 2.0 * M_PI * j / bc.L;
            const cplx cj = (u0.bounded_ft(kj) + c.delta * u0.bounded_ft(-kj)) / (c.tau * bc.L);
            w[j + half] = cj * std::exp(-kI * (kj * kj) * t);
        }
        const cplx refl = c.refl;
        parallel_for(grid.size(), [&](std::size_t ix) {
            const double x = grid[ix];
            // e^{i k_j x} = e^{i k0 x} omega^j with omega = e^{2 pi i x / L};
            // the j-recursion trades one complex exp per term for one multiply.
            const cplx base = std::exp(kI * (k0 * x));
            const cplx omega = std::exp(kI * (2.0 * M_PI * x / bc.L));
            KahanSum acc;
            {
                const cplx e0 = base;
                acc.add(w[half] * (e0 + refl * std::conj(e0)));
            }
            cplx wp = cplx{1.0, 0.0};
            for (int j = 1; j <= half; ++j) {
                wp *= omega;
                const cplx ep = base * wp;             // e^{i k_j x}
                const cplx em = base * std::conj(wp);  // e^{i k_{-j} x}
                acc.add(w[half + j] * (ep + refl * std::conj(ep)) +
                        w[half - j] * (em + refl * std::conj(em)));
            }
            out.values[ix] = acc.value();
        });
        return out;
    }

    // general boundary conditions: direct evaluation over representatives
    const int pairs = plan.half();
    const auto reps = spec.representatives();
    if (static_cast<int>(reps.size()) < pairs)
        fail(Errc::bad_arg, "spectrum has fewer pairs than the truncation plan");
    struct Mode { cplx kappa, b1, weight; };
    std::vector<Mode> modes(pairs);
    for (int m = 0; m < pairs; ++m) {
        const cplx k = reps[m].kappa;
        const GenCoeffs gc = gen_coeffs(bc, k);
        const cplx cj = (u0.bounded_ft(k) + gc.b2bar * u0.bounded_ft(-k)) / (gc.tau_j * bc.L);
        modes[m] = {k, gc.b1, cj * std::exp(-kI * (k * k) * t)};
    }
    parallel_for(grid.size(), [&](std::size_t ix) {
        const double x = grid[ix];
        KahanSum acc;
        for (const Mode& md : modes)
            acc.add(md.weight *
                    (std::exp(kI * md.kappa * x) + md.b1 * std::exp(-kI * md.kappa * x)));
        out.values[ix] = acc.value();
    });
    return out;
}

FieldSample evaluate_residue(const BoundaryConditions& bc, const PiecewisePoly& u0,
                             double t, const std::vector<double>& grid,
                             const TruncationPlan& plan) {
    plan.validate();
    return evaluate_residue(compute_spectrum(bc, needed_pairs(bc, plan)), u0, t, grid, plan);
}

FieldSample evaluate_residue(const Spectrum& spec, const PiecewisePoly& u0,
                             double t, const std::vector<double>& grid,
                             const TruncationPlan& plan) {
    const BoundaryConditions& bc = spec.bc;
    plan.validate();
    validate_grid(grid, bc.L);
    FieldSample out;
    out.grid = grid;
    out.values.assign(grid.size(), cplx{});
    out.meta = make_meta(Method::Residue, t, plan.nterms, bc, u0);

    // per-pair residue weights: i e^{-i k^2 t} zeta+(k)/Delta'(k) at the
    // representative and at its mirror
    const auto reps = spec.representatives();
    const int pairs = bc.is_pseudoperiodic() ? plan.nterms : plan.half();
    if (static_cast<int>(reps.size()) < pairs)
        fail(Errc::bad_arg, "spectrum has fewer pairs than the truncation plan");

    struct PairW { cplx kappa, wplus, wminus; };
    std::vector<PairW> pw(pairs);
    for (int m = 0; m < pairs; ++m) {
        const cplx k = reps[m].kappa;
        const cplx ddp = reps[m].ddelta;
        const cplx ddm = discriminant_derivative(bc, -k);
        if (std::abs(ddp) < 1e-6 * std::max(1.0, std::abs(k)) ||
            std::abs(ddm) < 1e-6 * std::max(1.0, std::abs(k)))
            fail(Errc::root_derivative_too_small, "residue series needs simple zeros");
        const cplx tf = std::exp(-kI * (k * k) * t);
        pw[m] = {k, kI * tf * zeta_plus(bc, u0, k) / ddp,
                 kI * tf * zeta_plus(bc, u0, -k) / ddm};
    }

    if (bc.is_pseudoperiodic()) {
        const double k0 = spec.kappa0.value().real();
        parallel_for(grid.size(), [&](std::size_t ix) {
            const double x = grid[ix];
            const cplx base = std::exp(kI * (k0 * x));
            const cplx omega = std::exp(kI * (2.0 * M_PI * x / bc.L));
            // pairwise order: family j = 0, +1, -1, ... as laid out in reps
            KahanSum acc;
            cplx wp{1.0, 0.0}, wm{1.0, 0.0};
            for (int m = 0; m < pairs; ++m) {
                cplx e; // e^{i k_j x} for the family index laid out in reps
                if (m == 0) e = base;
                else if (m % 2 == 1) { wp *= omega; e = base * wp; }
                else { wm *= std::conj(omega); e = base * wm; }
                acc.add(pw[m].wplus * e + pw[m].wminus * std::conj(e));
            }
            out.values[ix] = acc.value();
        });
        return out;
    }

    parallel_for(grid.size(), [&](std::size_t ix) {
        const double x = grid[ix];
        KahanSum acc;
        for (const PairW& p : pw)
            acc.add(p.wplus * std::exp(kI * p.kappa * x) +
                    p.wminus * std::exp(-kI * p.kappa * x));
        out.values[ix] = acc.value();
    });
    return out;
}

} // namespace revlab

#include "eigenbasis.hpp"

#include <cmath>

#include "error.hpp"
#include "quadrature.hpp"
#include "spectrum.hpp"

namespace revlab {

namespace {
constexpr cplx kI{0.0, 1.0};
}

PPConstants pp_constants(const BoundaryConditions& bc) {
    if (!bc.is_pseudoperiodic()) fail(Errc::bad_arg, "pp_constants needs pseudoperiodic BCs");
    bc.validate();
    const cplx k0 = pseudoperiodic_kappa0(bc);
    const cplx g = std::exp(kI * k0 * bc.L);
    const cplx b0 = bc.beta0, b1 = bc.beta1;
    const cplx dd = g * ((b0 + b1) * g - 2.0);
    const cplx td = (b0 * g - 1.0) * (b1 * g - 1.0);
    const double scale = 1.0 + std::abs(b0) + std::abs(b1);
    if (std::abs(dd) < 1e-12 * scale || std::abs(td) < 1e-12 * scale)
        fail(Errc::degenerate_constants, "vanishing denominator in delta/tau");
    PPConstants out;
    out.kappa0 = k0;
    out.gamma = g;
    out.delta = (b0 - b1) / dd;
    out.tau = ((1.0 + b0 * b1) * (g * g + 1.0) - 2.0 * g * (b0 + b1)) / td;
    out.refl = (g - b0) / (b0 - 1.0 / g);
    out.energy_conserving = bc.energy_conserving();
    return out;
}

GenCoeffs gen_coeffs(const BoundaryConditions& bc, cplx kappa) {
    if (bc.is_pseudoperiodic()) fail(Errc::bad_arg, "gen_coeffs needs general BCs");
    const cplx e = std::exp(kI * kappa * bc.L);
    const cplx em = 1.0 / e;
    const cplx ik = kI * kappa;

    // two closed forms for b1 (first-row and second-row reductions)
    const cplx n1 = -(e * (ik * bc.b11 + bc.b12) + ik * bc.b13 + bc.b14);
    const cplx d1 = em * (bc.b12 - ik * bc.b11) + bc.b14 - ik * bc.b13;
    const cplx n2 = -(e * bc.b22 + ik * bc.b23 + bc.b24);
    const cplx d2 = em * bc.b22 + bc.b24 - ik * bc.b23;
    const double mag = std::max(1.0, std::abs(kappa));
    const double floor1 = 1e-12 * mag * (std::abs(bc.b11) + std::abs(bc.b12) +
                                         std::abs(bc.b13) + std::abs(bc.b14) + 1e-30);
    const double floor2 = 1e-12 * mag * (std::abs(bc.b22) + std::abs(bc.b23) +
                                         std::abs(bc.b24) + 1e-30);
    const bool ok1 = std::abs(d1) > floor1;
    const bool ok2 = std::abs(d2) > floor2;
    if (!ok1 && !ok2)
        fail(Errc::degenerate_constants, "both eigenfunction coefficient forms degenerate");
    cplx b1v;
    if (ok1 && ok2) {
        const cplx f1 = n1 / d1, f2 = n2 / d2;
        if (std::abs(f1 - f2) > 1e-8 * std::max(1.0, std::abs(f1)))
            fail(Errc::inconsistent_root,
                 "eigenfunction coefficient forms disagree (spurious root?)");
        b1v = std::abs(d1) >= std::abs(d2) ? f1 : f2;
    } else {
        b1v = ok1 ? n1 / d1 : n2 / d2;
    }

    // two closed forms for the conjugated adjoint coefficient
    const cplx p1n = em * (-ik * bc.b11 * bc.b24 - bc.b14 * bc.b22 + bc.b12 * bc.b24) -
                     ik * bc.b11 * bc.b22;
    const cplx p1d = e * (-ik * bc.b11 * bc.b24 + bc.b14 * bc.b22 - bc.b12 * bc.b24) -
                     ik * bc.b11 * bc.b22;
    const cplx p2n = em * (-ik * bc.b11 * bc.b23 + bc.b12 * bc.b23 - bc.b13 * bc.b22) -
                     bc.b11 * bc.b22;
    const cplx p2d = e * (-ik * bc.b11 * bc.b23 - bc.b12 * bc.b23 + bc.b13 * bc.b22) +
                     bc.b11 * bc.b22;
    const bool q1 = std::abs(p1d) > 1e-30 && std::abs(p1d) > 1e-12 * std::abs(p1n);
    const bool q2 = std::abs(p2d) > 1e-30 && std::abs(p2d) > 1e-12 * std::abs(p2n);
    if (!q1 && !q2)
        fail(Errc::degenerate_constants, "both dual coefficient forms degenerate");
    cplx b2v;
    if (q1 && q2)
        b2v = std::abs(p1d) >= std::abs(p2d) ? p1n / p1d : p2n / p2d;
    else
        b2v = q1 ? p1n / p1d : p2n / p2d;

    GenCoeffs out;
    out.b1 = b1v;
    out.b2bar = b2v;
    const cplx kl = kappa * bc.L;
    out.tau_j = 1.0 + b1v * b2v + std::sin(kl) / kl * (b1v * em + b2v * e);
    return out;
}

cplx eigenfunction(const BoundaryConditions& bc, cplx kappa, double x) {
    if (bc.is_pseudoperiodic()) {
        const PPConstants c = pp_constants(bc);
        return std::exp(kI * kappa * x) + c.refl * std::exp(-kI * kappa * x);
    }
    const GenCoeffs c = gen_coeffs(bc, kappa);
    return std::exp(kI * kappa * x) + c.b1 * std::exp(-kI * kappa * x);
}

cplx dual_eigenfunction(const BoundaryConditions& bc, cplx kappa, double x) {
    const cplx ck = std::conj(kappa);
    if (bc.is_pseudoperiodic()) {
        const PPConstants c = pp_constants(bc);
        return std::exp(kI * ck * x) + std::conj(c.delta) * std::exp(-kI * ck * x);
    }
    const GenCoeffs c = gen_coeffs(bc, kappa);
    return std::exp(kI * ck * x) + std::conj(c.b2bar) * std::exp(-kI * ck * x);
}

cplx pairing(const std::function<cplx(double)>& f,
             const std::function<cplx(double)>& g, double L) {
    if (!(L > 0.0)) fail(Errc::bad_arg, "pairing needs L > 0");
    const auto integrand = [&](double x) { return f(x) * std::conj(g(x)); };
    return integrate(integrand, 0.0, L, L / 8.0) / L;
}

} // namespace revlab

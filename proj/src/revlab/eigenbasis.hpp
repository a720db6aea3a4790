#pragma once

#include <complex>
#include <functional>

#include "bc.hpp"

namespace revlab {

// Pseudoperiodic constants derived from kappa0:
//   gamma = e^{i kappa0 L}
//   delta = (beta0-beta1) / (gamma ((beta0+beta1) gamma - 2))
//   tau   = ((1+beta0 beta1)(gamma^2+1) - 2 gamma (beta0+beta1))
//           / ((beta0 gamma - 1)(beta1 gamma - 1))
//   refl  = (gamma-beta0)/(beta0-gamma^{-1}), the e^{-i kappa x} eigenfunction
//           coefficient (j-independent).
struct PPConstants {
    cplx kappa0{};
    cplx gamma{};
    cplx delta{};
    cplx tau{};
    cplx refl{};
    bool energy_conserving = false;
};

// Errors: degenerate_constants when (beta0+beta1)gamma = 2 or
// (beta0 gamma - 1)(beta1 gamma - 1) = 0.
PPConstants pp_constants(const BoundaryConditions& bc);

// Per-root coefficients for general boundary conditions.
//   X_j(x) = e^{i kappa x} + b1 e^{-i kappa x}
//   c_j    = (1/(tau_j L)) [u0_hat(kappa) + b2bar * u0_hat(-kappa)]
//   tau_j  = 1 + b1 b2bar + sin(kL)/(kL) (b1 e^{-ikL} + b2bar e^{ikL})
// Both closed forms of b1 (and of b2bar) are evaluated; the better-conditioned
// one is used and agreement is checked when both are defined.
struct GenCoeffs {
    cplx b1{};
    cplx b2bar{};
    cplx tau_j{};
};

// Errors: degenerate_constants (both denominators vanish),
// inconsistent_root (the two b1 forms disagree beyond 1e-8; spurious root).
GenCoeffs gen_coeffs(const BoundaryConditions& bc, cplx kappa);

// X_j and the dual Y_j at a point. The dual convention is fixed by the
// bring-up checks asserted in the eigenbasis tests:
//   pairing(f,g) = (1/L) integral f conj(g);
//   pseudoperiodic: Y(x) = e^{i conj(k) x} + conj(delta) e^{-i conj(k) x};
//   general:        Y(x) = e^{i conj(k) x} + conj(b2bar) e^{-i conj(k) x}.
cplx eigenfunction(const BoundaryConditions& bc, cplx kappa, double x);
cplx dual_eigenfunction(const BoundaryConditions& bc, cplx kappa, double x);

// Sesquilinear pairing (1/L) integral_0^L f(x) conj(g(x)) dx via composite
// 64-point Gauss-Legendre panels (<= L/8 long), halved adaptively to 1e-12.
cplx pairing(const std::function<cplx(double)>& f,
             const std::function<cplx(double)>& g, double L);

} // namespace revlab

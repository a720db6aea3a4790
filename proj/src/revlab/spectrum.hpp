#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "bc.hpp"

namespace revlab {

enum class RootClass { RealPositive, RealNegative, ImagUp, ImagDown, ComplexQuadrant };

const char* root_class_name(RootClass c);

struct Root {
    int pair_index = 0;   // pseudoperiodic: family index j; general: pair number m >= 1
    bool mirrored = false; // true for the -kappa member of a +- pair
    cplx kappa{};
    cplx ddelta{};        // Delta'(kappa)
    RootClass cls = RootClass::RealPositive;
};

struct Spectrum {
    BoundaryConditions bc;
    std::optional<cplx> kappa0;  // pseudoperiodic only
    std::vector<Root> roots;     // all +- pairs, ordered by (|Re| asc, Im desc)

    // Summation representatives (one per +- pair) in deterministic order:
    // pseudoperiodic: family index 0, +1, -1, +2, -2, ...;
    // general: pair number ascending.
    std::vector<Root> representatives() const;
    std::size_t pair_count() const { return roots.size() / 2; }
};

struct ModeReport {
    int growing = 0;
    int decaying = 0;
    int neutral = 0;
    bool well_posed = true;
    bool energy_conserving = false; // pseudoperiodic only
};

// Delta(kappa), entire in kappa:
//   pseudoperiodic: 2(beta0+beta1)cos(kappa L) - 2(1+beta0 beta1)
//   general:        2i[a k + b k cos(kL) + (c + d k^2) sin(kL)] with
//                   a = b11 b22 - b14 b23 + b13 b24,
//                   b = b13 b22 - b12 b23 + b11 b24,
//                   c = b12 b24 - b14 b22,  d = b11 b23.
cplx discriminant(const BoundaryConditions& bc, cplx kappa);
cplx discriminant_derivative(const BoundaryConditions& bc, cplx kappa);

// Closed-form kappa0 = acos((1+beta0 beta1)/(beta0+beta1))/L, principal branch.
cplx pseudoperiodic_kappa0(const BoundaryConditions& bc);

// Large-j root location for general boundary conditions:
// j*pi/L when b11*b23 != 0, else (2 j pi +- acos(...))/L.
cplx asymptotic_root(const BoundaryConditions& bc, int j, int branch);

// At least `count` certified root pairs. Pseudoperiodic roots are closed form
// (kappa0 + 2 j pi / L plus mirrors); general roots are found by Newton from
// asymptotic seeds plus an imaginary-axis and low-lying rectangle sweep, then
// certified strip-by-strip with argument-principle counts.
// Errors: ill_posed (pseudoperiodic kappa0 not real), degenerate_spectrum.
Spectrum compute_spectrum(const BoundaryConditions& bc, int count);

ModeReport classify_modes(const Spectrum& spec);

// Number of zeros of Delta strictly inside the axis-aligned rectangle
// [re_lo, re_hi] x [im_lo, im_hi], by the winding number of Delta around the
// boundary. Throws Errc::bad_arg if a zero sits (numerically) on the boundary.
int count_zeros_in_rectangle(const BoundaryConditions& bc,
                             double re_lo, double re_hi,
                             double im_lo, double im_hi);

} // namespace revlab

#pragma once

#include <string>
#include <utility>

#include "bc.hpp"
#include "eigenbasis.hpp"
#include "piecewise.hpp"
#include "solver.hpp"

namespace revlab {

// t = (L^2 / 4 pi) * (p / q) with coprime positive p, q. parse() accepts
// "p/q" (or a bare integer) and reduces the fraction.
struct RationalTime {
    long long p = 1;
    long long q = 1;
    double L = 1.0;

    RationalTime() = default;
    RationalTime(long long p, long long q, double L); // reduces, validates
    static RationalTime parse(const std::string& text, double L);

    double t() const { return L * L * static_cast<double>(p) /
                              (4.0 * M_PI * static_cast<double>(q)); }
    std::string tag() const; // "p_over_q" (filename component)
};

// Inner Gauss sum of the revival construction:
//   sum_{n=0}^{q-1} alpha^(sign*2nm - p n^2),  alpha = e^{i pi / q},
// with the exponent reduced exactly in integers modulo 2q.
cplx gauss_sum(long long p, long long q, long long m, int sign);

enum class ParityBranch { Even, OddOdd };

struct RevivalPlan {
    PiecewisePoly phi, psi;
    double shift = 0.0;      // s = -p L^2 kappa0 / (2 pi q)
    double phase = 0.0;      // c = p L^2 kappa0^2 / (4 pi q)
    cplx c1{}, c2{}, c3{}, c4{};
    cplx alpha{};
    ParityBranch branch = ParityBranch::Even;
};

// phi and psi assembled segment-by-segment on the q subintervals
// [(1-l/q)L, (1-(l-1)/q)L]. When p and q are both odd the construction runs on
// the gamma^{±1/2}-weighted half-interval swaps of u0 with the (q-1)-kernel;
// otherwise directly on u0. Outputs stay piecewise polynomial.
std::pair<PiecewisePoly, PiecewisePoly> build_phi_psi(const PiecewisePoly& u0,
                                                      const RationalTime& rt,
                                                      const PPConstants& consts);

// (s, c) with s = -p L^2 kappa0 / (2 pi q), c = p L^2 kappa0^2 / (4 pi q).
// Errors: ill_posed when kappa0 is not real.
std::pair<double, double> revival_shift(const RationalTime& rt, const PPConstants& consts);

RevivalPlan build_revival_plan(const BoundaryConditions& bc, const PiecewisePoly& u0,
                               const RationalTime& rt);

// Closed-form solution at the rational time as an exact piecewise polynomial:
//   u = e^{ic} [c1 phi_s^sharp(.;gamma) + c2 phi_s^flat(.;gamma^{-1})
//             + c3 psi_{-s}^sharp(.;gamma^{-1}) + c4 psi_{-s}^flat(.;gamma)]
// with c1 = 1/(1 - delta^2 gamma^2), c2 = -delta gamma^2 c1, c3 = delta c2,
// c4 = delta c1. (The psi weights carry one extra delta factor relative to the
// phi weights; the series expansion of the combination forces it.)
PiecewisePoly revival_field_poly(const BoundaryConditions& bc, const PiecewisePoly& u0,
                                 const RationalTime& rt);

FieldSample evaluate_revival(const BoundaryConditions& bc, const PiecewisePoly& u0,
                             const RationalTime& rt, const std::vector<double>& grid);

// Pointwise evaluation straight through the four full-line extensions,
// bypassing the piecewise assembly; used as a cross-check oracle.
cplx revival_eval_direct(const RevivalPlan& plan, const PPConstants& consts, double x);

} // namespace revlab

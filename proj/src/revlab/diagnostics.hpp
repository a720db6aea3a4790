#pragma once

#include <vector>

#include "solver.hpp"

namespace revlab {

// Trapezoidal (1/L) integral of |u|^2 over the sampled grid, L taken as the
// grid span (fields are sampled over the full interval).
double energy(const FieldSample& field);

struct ComparisonReport {
    double l2 = 0.0;   // sqrt of trapezoidal (1/L) integral of |a-b|^2
    double sup = 0.0;
    int grid_size = 0;
};

// Errors: grid_mismatch unless the grids agree elementwise.
ComparisonReport compare(const FieldSample& a, const FieldSample& b);

struct RoughnessReport {
    double dimension = 1.0;
    std::vector<double> scales_used; // box widths entering the fit
    double r_squared = 1.0;
};

// Box-counting dimension estimate of the graph of Re u, rescaled to the unit
// square. Counts dyadic boxes for eps = 2^-k, k = 2 .. log2(n)-2, and fits
// log2 N against k over the middle of that range (first and last octave
// dropped). Errors: insufficient_resolution for grids < 1024.
RoughnessReport box_dimension(const FieldSample& field);

// x-locations where the discrete second difference of Re u or Im u exceeds
// tol * sup|u|; adjacent flagged samples merge into one breakpoint. Between
// consecutive breakpoints the field is affine to within the same tolerance.
// Requires a uniform grid.
std::vector<double> linearity_breakpoints(const FieldSample& field, double tol = 1e-3);

} // namespace revlab

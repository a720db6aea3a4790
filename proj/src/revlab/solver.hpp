#pragma once

#include <string>
#include <vector>

#include "bc.hpp"
#include "piecewise.hpp"
#include "spectrum.hpp"

namespace revlab {

enum class Method { Series, Residue, Revival };

const char* method_name(Method m);

struct FieldMeta {
    Method method = Method::Series;
    double t = 0.0;
    int nterms = 0;
    std::string bc_desc;
    std::string datum_desc;
};

struct FieldSample {
    std::vector<double> grid;   // strictly increasing, within [0, L]
    std::vector<cplx> values;
    FieldMeta meta;
};

// Symmetric truncation: indices -(N-1)/2 .. (N-1)/2. N odd, >= 3.
struct TruncationPlan {
    int nterms = 20001;
    void validate() const;
    int half() const { return (nterms - 1) / 2; }
};

std::vector<double> uniform_grid(double L, int n); // n points, endpoints included

// c_j for the eigenfunction series:
//   pseudoperiodic: (1/(tau L)) [u0_hat(k_j) + delta u0_hat(-k_j)], k_j from
//     the kappa0 family index j;
//   general: (1/(tau_j L)) [u0_hat(k_j) + b2bar u0_hat(-k_j)], j >= 1 the pair
//     number.
cplx series_coefficient(const BoundaryConditions& bc, const Spectrum& spec,
                        const PiecewisePoly& u0, int j);

// Truncated biorthogonal eigenfunction series, pairwise |j|-ascending order,
// compensated accumulation. Throws ill_posed for pseudoperiodic problems with
// complex kappa0 (via compute_spectrum).
FieldSample evaluate_series(const BoundaryConditions& bc, const PiecewisePoly& u0,
                            double t, const std::vector<double>& grid,
                            const TruncationPlan& plan);
FieldSample evaluate_series(const Spectrum& spec, const PiecewisePoly& u0,
                            double t, const std::vector<double>& grid,
                            const TruncationPlan& plan);

// UTM residue series: i * sum over the full root set of
//   e^{i mu x - i mu^2 t} zeta_plus(mu) / Delta'(mu),
// accumulated pair by pair. Throws root_derivative_too_small.
FieldSample evaluate_residue(const BoundaryConditions& bc, const PiecewisePoly& u0,
                             double t, const std::vector<double>& grid,
                             const TruncationPlan& plan);
FieldSample evaluate_residue(const Spectrum& spec, const PiecewisePoly& u0,
                             double t, const std::vector<double>& grid,
                             const TruncationPlan& plan);

// zeta+ of the UTM; homogeneous boundary data only.
cplx zeta_plus(const BoundaryConditions& bc, const PiecewisePoly& u0, cplx kappa);
cplx zeta_minus(const BoundaryConditions& bc, const PiecewisePoly& u0, cplx kappa);

} // namespace revlab

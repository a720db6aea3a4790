#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace revlab {

using cplx = std::complex<double>;

// One polynomial piece: value(x) = sum_k coeffs[k] * (x - lo)^k on [lo, hi).
struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<cplx> coeffs;
};

// Complex piecewise polynomial on [0, L]. Gaps between segments are zero.
// Evaluation is right-continuous at internal breakpoints; x == L falls to the
// covering segment so the top endpoint is defined.
class PiecewisePoly {
public:
    static constexpr int kMaxDegree = 8;

    PiecewisePoly() = default;
    PiecewisePoly(double length, std::vector<Segment> segments);

    double length() const { return length_; }
    const std::vector<Segment>& segments() const { return segments_; }

    cplx eval(double x) const;          // Errc::out_of_domain outside [0,L]
    cplx eval_unchecked(double x) const; // 0 on gaps, no domain check

    // Exact bounded Fourier transform  integral_0^L e^{-i kappa x} u(x) dx,
    // entire in kappa.
    cplx bounded_ft(cplx kappa) const;

    // (1/L) * integral_0^L |u|^2 dx, exact.
    double energy_exact() const;

    // Largest |coefficient| over all segments (cheap magnitude scale).
    double coeff_scale() const;

private:
    double length_ = 0.0;
    std::vector<Segment> segments_;
};

// --- datum constructors ------------------------------------------------------

struct BoxSpec {                // height on [a, b], zero elsewhere
    double a = 0.0, b = 0.0;
    cplx height{1.0, 0.0};
};
struct RampSpec {               // slope*(x-center)+offset on |x-center|<halfwidth
    double center = 0.0, halfwidth = 0.0;
    cplx slope{0.0, 0.0}, offset{0.0, 0.0};
};
struct PolyBumpSpec {           // C^2 bump ((x-a)(b-x))^3 scaled to unit peak
    double a = 0.0, b = 0.0;
};
struct RawSegments {
    std::vector<Segment> segments;
};

using DatumSpec = std::variant<BoxSpec, RampSpec, PolyBumpSpec, RawSegments>;

PiecewisePoly make_datum(double L, const DatumSpec& spec);

// --- closure algebra (used by the revival construction) ----------------------

// v(x) = u(x + a); segments move to [lo-a, hi-a] with unchanged coefficients.
std::vector<Segment> translated(const std::vector<Segment>& segs, double a);
// v(x) = u(c - x).
std::vector<Segment> reflected(const std::vector<Segment>& segs, double c);
std::vector<Segment> scaled(const std::vector<Segment>& segs, cplx w);
// clips to [a, b], re-basing coefficients to the clipped lo.
std::vector<Segment> restricted(const std::vector<Segment>& segs, double a, double b);
// sum of several piecewise polys on their common refinement.
std::vector<Segment> merged_sum(const std::vector<std::vector<Segment>>& parts);

// --- pseudoperiodic full-line extensions --------------------------------------

enum class ExtensionMode { Sharp, Flat };

// Full-line extension of `base` (defined on [0, L]):
//   Sharp: value(x) = g^m base(y - mL),  y = x + shift,  mL <= y < (m+1)L
//   Flat : value(x) = g^m base(mL - y),  y = x - shift,  (m-1)L <= y < mL
// with g^m = exp(i * gamma_phase * m); gamma_phase is kappa0*L for the gamma
// extension and -kappa0*L for the gamma^{-1} one.
struct ExtensionSpec {
    PiecewisePoly base;
    cplx gamma_phase{0.0, 0.0};
    ExtensionMode mode = ExtensionMode::Sharp;
    double shift = 0.0;
};

cplx extended_eval(const ExtensionSpec& spec, double x);

// The restriction of the extension to [0, L] as an exact piecewise polynomial
// (each wrapped period contributes a weighted translated/reflected clip).
std::vector<Segment> extension_restricted_to_domain(const ExtensionSpec& spec);

} // namespace revlab

#include "piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "error.hpp"
#include "kahan.hpp"

namespace revlab {

namespace {

constexpr double kSliver = 1e-13; // segments thinner than this are dropped

// coefficients of p expressed around a new base point: p(x) = sum c_k (x-lo)^k
// rewritten as sum out_m (x-lo_new)^m via the binomial theorem.
std::vector<cplx> rebased(const std::vector<cplx>& coeffs, double lo, double lo_new) {
    const double t = lo_new - lo;
    if (t == 0.0) return coeffs;
    std::vector<cplx> out(coeffs.size(), cplx{});
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        double binom = 1.0;
        for (std::size_t m = 0; m <= k; ++m) {
            if (m > 0) binom = binom * static_cast<double>(k - m + 1) / static_cast<double>(m);
            out[m] += coeffs[k] * binom * std::pow(t, static_cast<double>(k - m));
        }
    }
    return out;
}

cplx horner(const std::vector<cplx>& coeffs, double u) {
    cplx v{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * u + *it;
    return v;
}

} // namespace

PiecewisePoly::PiecewisePoly(double length, std::vector<Segment> segments)
    : length_(length), segments_(std::move(segments)) {
    if (!(length_ > 0.0)) fail(Errc::bad_arg, "piecewise domain length must be positive");
    std::sort(segments_.begin(), segments_.end(),
              [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    double prev_hi = 0.0;
    for (const auto& s : segments_) {
        if (!(s.lo < s.hi))
            fail(Errc::bad_spec, "piecewise segment must have lo < hi");
        if (s.lo < -kSliver || s.hi > length_ + kSliver)
            fail(Errc::bad_spec, "piecewise segment outside [0, L]");
        if (s.lo < prev_hi - kSliver)
            fail(Errc::bad_spec, "piecewise segments overlap");
        if (s.coeffs.empty() || static_cast<int>(s.coeffs.size()) > kMaxDegree + 1)
            fail(Errc::bad_spec, "piecewise segment degree out of range");
        prev_hi = s.hi;
    }
}

cplx PiecewisePoly::eval(double x) const {
    if (x < -1e-12 || x > length_ + 1e-12)
        fail(Errc::out_of_domain, "evaluation point outside [0, L]");
    return eval_unchecked(x);
}

cplx PiecewisePoly::eval_unchecked(double x) const {
    // segments are sorted by lo: locate the last segment starting at or
    // before x
    auto it = std::upper_bound(segments_.begin(), segments_.end(), x,
                               [](double v, const Segment& s) { return v < s.lo; });
    if (it == segments_.begin()) return cplx{};
    const Segment& s = *(it - 1);
    if (x < s.hi) return horner(s.coeffs, x - s.lo);
    // top endpoint falls to the segment that ends there
    if (x == s.hi && !(x < length_)) return horner(s.coeffs, x - s.lo);
    return cplx{};
}

cplx PiecewisePoly::bounded_ft(cplx kappa) const {
    // Per segment, integral_lo^hi e^{-i k x} p(x-lo) dx
    //   = e^{-i k lo} * sum_m c_m J_m(w),  J_m(w) = integral_0^w u^m e^{-iku} du,
    // with the integration-by-parts recurrence
    //   J_0 = (1 - e^{-ikw})/(ik),  J_m = (-w^m e^{-ikw} + m J_{m-1})/(ik).
    // The recurrence amplifies roundoff by ~m!/(|k|w)^m, so below |k| w <= 8
    // (where the top degree can exceed |k| w) each J_m is summed from its
    // Taylor series in k instead, to converged term magnitude.
    KahanSum acc;
    for (const auto& s : segments_) {
        const double w = s.hi - s.lo;
        const int top = static_cast<int>(s.coeffs.size()) - 1;
        std::vector<cplx> J(top + 1);
        if (std::abs(kappa) * w <= 8.0) {
            for (int m = 0; m <= top; ++m) {
                cplx sum{}, term{1.0, 0.0};
                double wpow = std::pow(w, m + 1);
                for (int t = 0; t < 64; ++t) {
                    const cplx add = term * wpow / static_cast<double>(m + t + 1);
                    sum += add;
                    if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum)) && t > 2) break;
                    term *= cplx{0.0, -1.0} * kappa / static_cast<double>(t + 1);
                    wpow *= w;
                }
                J[m] = sum;
            }
        } else {
            const cplx ik = cplx{0.0, 1.0} * kappa;
            const cplx ew = std::exp(-ik * w);
            J[0] = (1.0 - ew) / ik;
            double wm = 1.0;
            for (int m = 1; m <= top; ++m) {
                wm *= w;
                J[m] = (-wm * ew + static_cast<double>(m) * J[m - 1]) / ik;
            }
        }
        cplx seg{};
        for (int m = 0; m <= top; ++m) seg += s.coeffs[m] * J[m];
        acc.add(std::exp(cplx{0.0, -1.0} * kappa * s.lo) * seg);
    }
    return acc.value();
}

double PiecewisePoly::energy_exact() const {
    KahanSumReal acc;
    for (const auto& s : segments_) {
        // |p|^2 is a polynomial of degree <= 2*kMaxDegree; integrate monomials.
        const auto& c = s.coeffs;
        const std::size_t n = c.size();
        std::vector<cplx> prod(2 * n - 1, cplx{});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                prod[i + j] += c[i] * std::conj(c[j]);
        const double w = s.hi - s.lo;
        double wp = w;
        for (std::size_t m = 0; m < prod.size(); ++m) {
            acc.add(prod[m].real() * wp / static_cast<double>(m + 1));
            wp *= w;
        }
    }
    return acc.value() / length_;
}

double PiecewisePoly::coeff_scale() const {
    double s = 0.0;
    for (const auto& seg : segments_)
        for (const auto& c : seg.coeffs) s = std::max(s, std::abs(c));
    return s;
}

PiecewisePoly make_datum(double L, const DatumSpec& spec) {
    if (std::holds_alternative<BoxSpec>(spec)) {
        const auto& b = std::get<BoxSpec>(spec);
        if (!(b.a < b.b) || b.a < 0.0 || b.b > L)
            fail(Errc::bad_spec, "box datum needs 0 <= a < b <= L");
        return PiecewisePoly(L, {Segment{b.a, b.b, {b.height}}});
    }
    if (std::holds_alternative<RampSpec>(spec)) {
        const auto& r = std::get<RampSpec>(spec);
        const double a = r.center - r.halfwidth, b = r.center + r.halfwidth;
        if (!(r.halfwidth > 0.0) || a < 0.0 || b > L)
            fail(Errc::bad_spec, "ramp datum support must lie inside [0, L]");
        // slope*(x-center)+offset, rebased to (x-a)
        return PiecewisePoly(L, {Segment{a, b, {r.offset - r.slope * r.halfwidth, r.slope}}});
    }
    if (std::holds_alternative<PolyBumpSpec>(spec)) {
        const auto& p = std::get<PolyBumpSpec>(spec);
        if (!(p.a < p.b) || p.a < 0.0 || p.b > L)
            fail(Errc::bad_spec, "bump datum needs 0 <= a < b <= L");
        const double w = p.b - p.a;
        const double scale = 64.0 / std::pow(w, 6);
        // ((x-a)(b-x))^3 = u^3 (w-u)^3, u = x-a
        std::vector<cplx> c(7, cplx{});
        c[3] = scale * w * w * w;
        c[4] = -3.0 * scale * w * w;
        c[5] = 3.0 * scale * w;
        c[6] = -scale;
        return PiecewisePoly(L, {Segment{p.a, p.b, std::move(c)}});
    }
    const auto& raw = std::get<RawSegments>(spec);
    return PiecewisePoly(L, raw.segments);
}

std::vector<Segment> translated(const std::vector<Segment>& segs, double a) {
    std::vector<Segment> out;
    out.reserve(segs.size());
    for (const auto& s : segs) out.push_back(Segment{s.lo - a, s.hi - a, s.coeffs});
    return out;
}

std::vector<Segment> reflected(const std::vector<Segment>& segs, double c) {
    std::vector<Segment> out;
    out.reserve(segs.size());
    for (const auto& s : segs) {
        const double w = s.hi - s.lo;
        const std::size_t n = s.coeffs.size();
        // v(x) = p(c - x) on [c-hi, c-lo]; with u = x-(c-hi):  p-argument-offset
        // (c-x) - lo = w - u, so expand sum c_k (w-u)^k.
        std::vector<cplx> cc(n, cplx{});
        for (std::size_t k = 0; k < n; ++k) {
            double binom = 1.0;
            for (std::size_t m = 0; m <= k; ++m) {
                if (m > 0) binom = binom * static_cast<double>(k - m + 1) / static_cast<double>(m);
                cc[m] += s.coeffs[k] * binom * std::pow(w, static_cast<double>(k - m)) *
                         ((m % 2) ? -1.0 : 1.0);
            }
        }
        out.push_back(Segment{c - s.hi, c - s.lo, std::move(cc)});
    }
    std::sort(out.begin(), out.end(),
              [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
    return out;
}

std::vector<Segment> scaled(const std::vector<Segment>& segs, cplx w) {
    std::vector<Segment> out = segs;
    for (auto& s : out)
        for (auto& c : s.coeffs) c *= w;
    return out;
}

std::vector<Segment> restricted(const std::vector<Segment>& segs, double a, double b) {
    std::vector<Segment> out;
    for (const auto& s : segs) {
        const double lo = std::max(s.lo, a), hi = std::min(s.hi, b);
        if (hi - lo > kSliver)
            out.push_back(Segment{lo, hi, rebased(s.coeffs, s.lo, lo)});
    }
    return out;
}

std::vector<Segment> merged_sum(const std::vector<std::vector<Segment>>& parts) {
    std::vector<double> pts;
    for (const auto& part : parts)
        for (const auto& s : part) {
            pts.push_back(s.lo);
            pts.push_back(s.hi);
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double x, double y) { return std::abs(x - y) < kSliver; }),
              pts.end());
    std::vector<Segment> out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double a = pts[i], b = pts[i + 1];
        if (b - a <= kSliver) continue;
        std::vector<cplx> acc;
        bool covered = false;
        for (const auto& part : parts)
            for (const auto& s : part) {
                if (s.lo <= a + kSliver && b <= s.hi + kSliver) {
                    auto cc = rebased(s.coeffs, s.lo, a);
                    if (cc.size() > acc.size()) acc.resize(cc.size(), cplx{});
                    for (std::size_t m = 0; m < cc.size(); ++m) acc[m] += cc[m];
                    covered = true;
                }
            }
        if (covered) out.push_back(Segment{a, b, std::move(acc)});
    }
    return out;
}

cplx extended_eval(const ExtensionSpec& spec, double x) {
    const double L = spec.base.length();
    if (spec.mode == ExtensionMode::Sharp) {
        const double y = x + spec.shift;
        const double m = std::floor(y / L);
        const cplx weight = std::exp(cplx{0.0, 1.0} * spec.gamma_phase * m);
        return weight * spec.base.eval_unchecked(y - m * L);
    }
    const double y = x - spec.shift;
    const double m = std::floor(y / L) + 1.0;
    const cplx weight = std::exp(cplx{0.0, 1.0} * spec.gamma_phase * m);
    return weight * spec.base.eval_unchecked(m * L - y);
}

std::vector<Segment> extension_restricted_to_domain(const ExtensionSpec& spec) {
    const double L = spec.base.length();
    std::vector<std::vector<Segment>> parts;
    if (spec.mode == ExtensionMode::Sharp) {
        const long m0 = static_cast<long>(std::floor(spec.shift / L)) - 1;
        const long m1 = static_cast<long>(std::floor((L + spec.shift) / L)) + 1;
        for (long m = m0; m <= m1; ++m) {
            const double lo = std::max(0.0, m * L - spec.shift);
            const double hi = std::min(L, (m + 1) * L - spec.shift);
            if (hi - lo <= kSliver) continue;
            const cplx weight = std::exp(cplx{0.0, 1.0} * spec.gamma_phase * double(m));
            auto piece = restricted(
                scaled(translated(spec.base.segments(), spec.shift - m * L), weight), lo, hi);
            if (!piece.empty()) parts.push_back(std::move(piece));
        }
    } else {
        const long m0 = static_cast<long>(std::floor(-spec.shift / L));
        const long m1 = static_cast<long>(std::floor((L - spec.shift) / L)) + 2;
        for (long m = m0; m <= m1; ++m) {
            const double lo = std::max(0.0, (m - 1) * L + spec.shift);
            const double hi = std::min(L, m * L + spec.shift);
            if (hi - lo <= kSliver) continue;
            const cplx weight = std::exp(cplx{0.0, 1.0} * spec.gamma_phase * double(m));
            // value = base(mL - (x - shift)) = base((mL + shift) - x)
            auto piece = restricted(
                scaled(reflected(spec.base.segments(), m * L + spec.shift), weight), lo, hi);
            if (!piece.empty()) parts.push_back(std::move(piece));
        }
    }
    return merged_sum(parts);
}

} // namespace revlab

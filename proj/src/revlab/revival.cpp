#include "revival.hpp"

#include <cmath>
#include <numeric>

#include "error.hpp"
#include "parallel.hpp"

namespace revlab {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx gamma_power(double kappa0L, double r) {
    // gamma^r = exp(i kappa0 L r); branch-free for fractional r since
    // gamma = e^{i kappa0 L} by definition.
    return std::exp(kI * (kappa0L * r));
}

// sum_{n=0}^{q-1} alpha^(sign*2nm + C n^2) with exact exponent reduction mod
// 2q; every factor is reduced first so the products stay within int64 range
// for any q the construction can reach.
cplx inner_sum(long long q, long long m, int sign, long long quad_coeff) {
    const long long twoq = 2 * q;
    const long long quad = ((quad_coeff % twoq) + twoq) % twoq;
    cplx acc{};
    for (long long n = 0; n < q; ++n) {
        const long long lin = (2 * ((n * (m % twoq)) % twoq)) % twoq;
        const long long sq = quad * ((n * n) % twoq) % twoq;
        long long e = (sign * lin + sq) % twoq;
        if (e < 0) e += twoq;
        acc += std::exp(kI * (M_PI * static_cast<double>(e) / static_cast<double>(q)));
    }
    return acc;
}

// gamma^{±1/2}-weighted half-interval swap of u0 (the odd-odd base functions)
std::vector<Segment> half_swap(const PiecewisePoly& u0, double kappa0L, int sign) {
    const double L = u0.length();
    const cplx w_lo = gamma_power(kappa0L, sign > 0 ? 0.5 : -0.5);
    const cplx w_hi = gamma_power(kappa0L, sign > 0 ? -0.5 : 0.5);
    auto lo_part = restricted(scaled(translated(u0.segments(), L / 2.0), w_lo), 0.0, L / 2.0);
    auto hi_part = restricted(scaled(translated(u0.segments(), -L / 2.0), w_hi), L / 2.0, L);
    return merged_sum({lo_part, hi_part});
}

} // namespace

RationalTime::RationalTime(long long p_, long long q_, double L_) : p(p_), q(q_), L(L_) {
    if (p <= 0 || q <= 0) fail(Errc::not_rational, "rational time needs positive p and q");
    if (!(L > 0.0)) fail(Errc::bad_arg, "rational time needs L > 0");
    const long long g = std::gcd(p, q);
    p /= g;
    q /= g;
}

RationalTime RationalTime::parse(const std::string& text, double L) {
    const auto whole_number = [&text](const std::string& part) {
        std::size_t pos = 0;
        const long long v = std::stoll(part, &pos);
        if (pos != part.size())
            fail(Errc::parse_error, "bad rational time '" + text + "'");
        return v;
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return RationalTime(whole_number(text), 1, L);
        return RationalTime(whole_number(text.substr(0, slash)),
                            whole_number(text.substr(slash + 1)), L);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::parse_error, "bad rational time '" + text + "'");
    }
}

std::string RationalTime::tag() const {
    return std::to_string(p) + "_over_" + std::to_string(q);
}

constexpr long long kMaxRevivalQ = 65536; // keeps exponent products in int64
                                          // and the O(q^2) assembly bounded

cplx gauss_sum(long long p, long long q, long long m, int sign) {
    if (p <= 0 || q <= 0 || std::gcd(p, q) != 1)
        fail(Errc::bad_arg, "gauss_sum needs coprime positive p, q");
    if (m < 0 || m >= q) fail(Errc::bad_arg, "gauss_sum needs 0 <= m < q");
    if (q > kMaxRevivalQ) fail(Errc::bad_arg, "gauss_sum: q too large");
    return inner_sum(q, m, sign, -p);
}

std::pair<PiecewisePoly, PiecewisePoly> build_phi_psi(const PiecewisePoly& u0,
                                                      const RationalTime& rt,
                                                      const PPConstants& consts) {
    const double L = u0.length();
    const double k0L = consts.kappa0.real() * L;
    const long long p = rt.p, q = rt.q;
    if (q > kMaxRevivalQ)
        fail(Errc::bad_arg, "revival construction needs q <= " +
                                std::to_string(kMaxRevivalQ));
    const bool odd_odd = (p % 2 == 1) && (q % 2 == 1);
    // odd-odd branch: run the construction on the half-swapped data with the
    // quadratic kernel coefficient p(q-1); even branch uses u0 and -p.
    const long long quad = odd_odd ? p * (q - 1) : -p;
    const std::vector<Segment> base_phi =
        odd_odd ? half_swap(u0, k0L, -1) : u0.segments();
    const std::vector<Segment> base_psi =
        odd_odd ? half_swap(u0, k0L, +1) : u0.segments();

    std::vector<std::vector<Segment>> phi_parts, psi_parts;
    for (long long ell = 1; ell <= q; ++ell) {
        const double a = (1.0 - static_cast<double>(ell) / q) * L;
        const double b = (1.0 - static_cast<double>(ell - 1) / q) * L;
        for (long long m = 0; m < q; ++m) {
            // m < ell: translate by Lm/q; m >= ell: translate by Lm/q - L
            const double shift = (m < ell) ? L * m / q : L * m / q - L;
            const double gpow_phi = (m < ell) ? -static_cast<double>(m) / q
                                              : 1.0 - static_cast<double>(m) / q;
            const double gpow_psi = -gpow_phi;
            const cplx wphi =
                gamma_power(k0L, gpow_phi) * inner_sum(q, m, -1, quad) / static_cast<double>(q);
            const cplx wpsi =
                gamma_power(k0L, gpow_psi) * inner_sum(q, m, +1, quad) / static_cast<double>(q);
            auto tphi = restricted(scaled(translated(base_phi, shift), wphi), a, b);
            auto tpsi = restricted(scaled(translated(base_psi, shift), wpsi), a, b);
            if (!tphi.empty()) phi_parts.push_back(std::move(tphi));
            if (!tpsi.empty()) psi_parts.push_back(std::move(tpsi));
        }
    }
    return {PiecewisePoly(L, merged_sum(phi_parts)),
            PiecewisePoly(L, merged_sum(psi_parts))};
}

std::pair<double, double> revival_shift(const RationalTime& rt, const PPConstants& consts) {
    if (std::abs(consts.kappa0.imag()) > 1e-10)
        fail(Errc::ill_posed, "revival shift needs real kappa0");
    const double k0 = consts.kappa0.real();
    const double s = -static_cast<double>(rt.p) * rt.L * rt.L * k0 /
                     (2.0 * M_PI * static_cast<double>(rt.q));
    const double c = static_cast<double>(rt.p) * rt.L * rt.L * k0 * k0 /
                     (4.0 * M_PI * static_cast<double>(rt.q));
    return {s, c};
}

RevivalPlan build_revival_plan(const BoundaryConditions& bc, const PiecewisePoly& u0,
                               const RationalTime& rt) {
    if (!bc.is_pseudoperiodic())
        fail(Errc::bad_arg, "the revival construction needs pseudoperiodic BCs");
    if (std::abs(bc.L - u0.length()) > 1e-12 * bc.L)
        fail(Errc::bad_arg, "datum and boundary conditions disagree on L");
    const PPConstants consts = pp_constants(bc);
    if (std::abs(consts.kappa0.imag()) > 1e-10)
        fail(Errc::ill_posed, "revival needs a well-posed (real) spectrum");

    RevivalPlan plan;
    const cplx g = consts.gamma, d = consts.delta;
    const cplx den = 1.0 - d * d * g * g;
    if (std::abs(den) < 1e-8)
        fail(Errc::degenerate_constants, "1 - delta^2 gamma^2 too small");
    plan.c1 = 1.0 / den;
    plan.c2 = -d * g * g / den;
    plan.c3 = d * plan.c2;
    plan.c4 = d * plan.c1;
    plan.alpha = std::exp(kI * (M_PI / static_cast<double>(rt.q)));
    plan.branch = ((rt.p % 2 == 1) && (rt.q % 2 == 1)) ? ParityBranch::OddOdd
                                                       : ParityBranch::Even;
    auto [s, c] = revival_shift(rt, consts);
    plan.shift = s;
    plan.phase = c;
    auto [phi, psi] = build_phi_psi(u0, rt, consts);
    plan.phi = std::move(phi);
    plan.psi = std::move(psi);
    return plan;
}

cplx revival_eval_direct(const RevivalPlan& plan, const PPConstants& consts, double x) {
    const double k0L = consts.kappa0.real() * plan.phi.length();
    const ExtensionSpec t1{plan.phi, cplx(k0L, 0.0), ExtensionMode::Sharp, plan.shift};
    const ExtensionSpec t2{plan.phi, cplx(-k0L, 0.0), ExtensionMode::Flat, plan.shift};
    const ExtensionSpec t3{plan.psi, cplx(-k0L, 0.0), ExtensionMode::Sharp, -plan.shift};
    const ExtensionSpec t4{plan.psi, cplx(k0L, 0.0), ExtensionMode::Flat, -plan.shift};
    return std::exp(kI * plan.phase) *
           (plan.c1 * extended_eval(t1, x) + plan.c2 * extended_eval(t2, x) +
            plan.c3 * extended_eval(t3, x) + plan.c4 * extended_eval(t4, x));
}

PiecewisePoly revival_field_poly(const BoundaryConditions& bc, const PiecewisePoly& u0,
                                 const RationalTime& rt) {
    const PPConstants consts = pp_constants(bc);
    const RevivalPlan plan = build_revival_plan(bc, u0, rt);
    const double k0L = consts.kappa0.real() * bc.L;
    const cplx phase = std::exp(kI * plan.phase);
    const ExtensionSpec t1{plan.phi, cplx(k0L, 0.0), ExtensionMode::Sharp, plan.shift};
    const ExtensionSpec t2{plan.phi, cplx(-k0L, 0.0), ExtensionMode::Flat, plan.shift};
    const ExtensionSpec t3{plan.psi, cplx(-k0L, 0.0), ExtensionMode::Sharp, -plan.shift};
    const ExtensionSpec t4{plan.psi, cplx(k0L, 0.0), ExtensionMode::Flat, -plan.shift};
    auto segs = merged_sum({
        scaled(extension_restricted_to_domain(t1), phase * plan.c1),
        scaled(extension_restricted_to_domain(t2), phase * plan.c2),
        scaled(extension_restricted_to_domain(t3), phase * plan.c3),
        scaled(extension_restricted_to_domain(t4), phase * plan.c4),
    });
    return PiecewisePoly(bc.L, std::move(segs));
}

FieldSample evaluate_revival(const BoundaryConditions& bc, const PiecewisePoly& u0,
                             const RationalTime& rt, const std::vector<double>& grid) {
    const PiecewisePoly field = revival_field_poly(bc, u0, rt);
    FieldSample out;
    out.grid = grid;
    out.values.assign(grid.size(), cplx{});
    out.meta.method = Method::Revival;
    out.meta.t = rt.t();
    out.meta.nterms = 0; // exact: no truncation
    out.meta.bc_desc = bc.describe();
    out.meta.datum_desc =
        "piecewise[" + std::to_string(u0.segments().size()) + " segments]";
    parallel_for(grid.size(), [&](std::size_t i) {
        out.values[i] = field.eval_unchecked(grid[i]);
    });
    return out;
}

} // namespace revlab

#include "bc.hpp"

#include <cmath>
#include <sstream>

#include "error.hpp"

namespace revlab {

BoundaryConditions BoundaryConditions::pseudoperiodic(cplx beta0, cplx beta1, double L) {
    BoundaryConditions bc;
    bc.kind = Kind::Pseudoperiodic;
    bc.beta0 = beta0;
    bc.beta1 = beta1;
    bc.L = L;
    bc.validate();
    return bc;
}

BoundaryConditions BoundaryConditions::general(cplx b11, cplx b12, cplx b13, cplx b14,
                                               cplx b22, cplx b23, cplx b24, double L) {
    BoundaryConditions bc;
    bc.kind = Kind::General;
    bc.b11 = b11; bc.b12 = b12; bc.b13 = b13; bc.b14 = b14;
    bc.b22 = b22; bc.b23 = b23; bc.b24 = b24;
    bc.L = L;
    bc.validate();
    return bc;
}

bool BoundaryConditions::energy_conserving() const {
    if (kind != Kind::Pseudoperiodic) return false;
    return std::abs(std::conj(beta0) * beta1 - 1.0) < 1e-12;
}

void BoundaryConditions::validate() const {
    if (!(L > 0.0) || !std::isfinite(L))
        fail(Errc::bad_arg, "interval length must be positive");
    if (kind == Kind::Pseudoperiodic) {
        if (std::abs(beta0 + beta1) < 1e-14 * (1.0 + std::abs(beta0) + std::abs(beta1)))
            fail(Errc::bad_arg, "pseudoperiodic boundary conditions need beta0 + beta1 != 0");
        return;
    }
    // rank-2 check on rows (b11,b12,b13,b14) and (0,b22,b23,b24): every 2x2
    // minor involving the second row.
    const cplx r1[4] = {b11, b12, b13, b14};
    const cplx r2[4] = {cplx{}, b22, b23, b24};
    double best = 0.0, scale = 0.0;
    for (int i = 0; i < 4; ++i) {
        scale = std::max(scale, std::abs(r1[i]));
        scale = std::max(scale, std::abs(r2[i]));
        for (int j = i + 1; j < 4; ++j)
            best = std::max(best, std::abs(r1[i] * r2[j] - r1[j] * r2[i]));
    }
    if (best < 1e-14 * std::max(1.0, scale * scale))
        fail(Errc::bad_arg, "general boundary-condition rows must be linearly independent");
}

std::string BoundaryConditions::describe() const {
    std::ostringstream os;
    auto c = [](cplx z) {
        std::ostringstream s;
        s << z.real();
        if (z.imag() != 0.0) s << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
        return s.str();
    };
    if (kind == Kind::Pseudoperiodic)
        os << "pseudoperiodic beta0=" << c(beta0) << " beta1=" << c(beta1) << " L=" << L;
    else
        os << "general b11=" << c(b11) << " b12=" << c(b12) << " b13=" << c(b13)
           << " b14=" << c(b14) << " b22=" << c(b22) << " b23=" << c(b23)
           << " b24=" << c(b24) << " L=" << L;
    return os.str();
}

} // namespace revlab

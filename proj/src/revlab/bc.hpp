#pragma once

#include <complex>
#include <string>

namespace revlab {

using cplx = std::complex<double>;

// Homogeneous boundary conditions on [0, L] for i u_t + u_xx = 0.
//
// Pseudoperiodic couples the endpoints:
//     beta0 u(t,0) = u(t,L),   beta1 u_x(t,0) = u_x(t,L).
// General is the two-row coefficient family
//     b11 u_x(t,L) + b12 u(t,L) + b13 u_x(t,0) + b14 u(t,0) = 0,
//     b22 u(t,L)   + b23 u_x(t,0) + b24 u(t,0) = 0.
struct BoundaryConditions {
    enum class Kind { Pseudoperiodic, General };

    Kind kind = Kind::Pseudoperiodic;
    double L = 1.0;

    // Pseudoperiodic
    cplx beta0{1.0, 0.0}, beta1{1.0, 0.0};

    // General (note: the second row has no u_x(t,L) slot)
    cplx b11{}, b12{}, b13{}, b14{}, b22{}, b23{}, b24{};

    static BoundaryConditions pseudoperiodic(cplx beta0, cplx beta1, double L);
    static BoundaryConditions general(cplx b11, cplx b12, cplx b13, cplx b14,
                                      cplx b22, cplx b23, cplx b24, double L);

    bool is_pseudoperiodic() const { return kind == Kind::Pseudoperiodic; }

    // conj(beta0)*beta1 == 1, the condition under which the L2 norm of the
    // solution is time-invariant (pseudoperiodic only).
    bool energy_conserving() const;

    // Throws Errc::bad_arg on invariant violations: L > 0; pseudoperiodic
    // needs beta0 + beta1 != 0; general needs the two coefficient rows
    // linearly independent (rank 2).
    void validate() const;

    std::string describe() const;
};

} // namespace revlab

#pragma once

#include <complex>
#include <functional>

namespace revlab {

// Composite 64-point Gauss-Legendre integration of a complex-valued function
// over [a, b]. Starts from panels no longer than max_panel and halves the
// panel width until two successive estimates differ by less than abs_tol.
// Throws Errc::quadrature_failure past depth_limit halvings.
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               double a, double b,
                               double max_panel,
                               double abs_tol = 1e-12,
                               int depth_limit = 10);

} // namespace revlab

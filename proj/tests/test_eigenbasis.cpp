#include <doctest.h>

#include <cmath>

#include "revlab/eigenbasis.hpp"
#include "revlab/error.hpp"
#include "revlab/spectrum.hpp"

using namespace revlab;

namespace {

BoundaryConditions pp15_5() {
    return BoundaryConditions::pseudoperiodic({0.2, 0.0}, {5.0, 0.0}, 1.0);
}
BoundaryConditions pp15_2() {
    return BoundaryConditions::pseudoperiodic({0.2, 0.0}, {2.0, 0.0}, 1.0);
}
BoundaryConditions self_adjoint_set() {
    return BoundaryConditions::general({5, 0}, {0.5, 0}, {1, 0}, {0, 0},
                                       {0.2, 0}, {0, 0}, {1, 0}, 1.0);
}
BoundaryConditions dirichlet_at_0() {
    return BoundaryConditions::general({-2, 0}, {1, 0}, {0, 0}, {0, 0},
                                       {0, 0}, {0, 0}, {1, 0}, 1.0);
}

} // namespace

TEST_CASE("pseudoperiodic constants: gamma, delta, tau closed forms") {
    const PPConstants c = pp_constants(pp15_5());
    CHECK(std::abs(c.gamma - cplx{5.0 / 13.0, 12.0 / 13.0}) < 1e-14);
    CHECK(std::abs(c.delta - cplx{12.0 / 13.0, 5.0 / 13.0}) < 1e-14);
    CHECK(std::abs(c.tau - cplx{2.0, 0.0}) < 1e-13);
    CHECK(c.energy_conserving); // conj(1/5) * 5 = 1

    const PPConstants c2 = pp_constants(pp15_2());
    CHECK(std::abs(c2.gamma - cplx{7.0 / 11.0, 6.0 * std::sqrt(2.0) / 11.0}) < 1e-14);
    CHECK_FALSE(c2.energy_conserving);

    // |gamma| = 1 and the definitional identity gamma = e^{i kappa0 L}
    CHECK(std::abs(std::abs(c2.gamma) - 1.0) < 1e-12);
    CHECK(std::abs(c2.gamma - std::exp(cplx{0.0, 1.0} * c2.kappa0)) < 1e-12);
}

TEST_CASE("the gamma cross identity holds for valid beta pairs") {
    for (const auto& bc : {pp15_5(), pp15_2(),
                           BoundaryConditions::pseudoperiodic({0.5, 0.0}, {3.0, 0.0}, 1.0),
                           BoundaryConditions::pseudoperiodic({0.6, 0.8}, {0.6, 0.8}, 1.0)}) {
        const PPConstants c = pp_constants(bc);
        const cplx lhs = (c.gamma - bc.beta0) / (bc.beta0 - 1.0 / c.gamma);
        const cplx rhs = (c.gamma - bc.beta1) / (1.0 / c.gamma - bc.beta1);
        CHECK(std::abs(lhs - rhs) < 1e-10);
        CHECK(std::abs(lhs - c.refl) < 1e-12);
        // delta equals its alternate closed form (beta1-gamma)/(gamma(1-gamma beta1))
        const cplx dalt = (bc.beta1 - c.gamma) / (c.gamma * (1.0 - c.gamma * bc.beta1));
        CHECK(std::abs(c.delta - dalt) < 1e-12);
    }
}

TEST_CASE("eigenfunction values and boundary residuals") {
    const auto bc = pp15_5();
    const auto spec = compute_spectrum(bc, 11);
    // X_0(0) = 1 + (12-5i)/13
    CHECK(std::abs(eigenfunction(bc, spec.kappa0.value(), 0.0) -
                   cplx{25.0 / 13.0, -5.0 / 13.0}) < 1e-13);
    // both boundary conditions hold for several family members
    for (int j : {0, 1, -1, 5, -5}) {
        const cplx kj = spec.kappa0.value() + 2.0 * M_PI * static_cast<double>(j);
        const cplx x0 = eigenfunction(bc, kj, 0.0);
        const cplx xL = eigenfunction(bc, kj, 1.0);
        CHECK(std::abs(bc.beta0 * x0 - xL) < 1e-10);
        const double h = 1e-6;
        auto deriv = [&](double x) {
            // the closed form extends analytically, so the stencil may
            // straddle the endpoints
            return (eigenfunction(bc, kj, x + h) - eigenfunction(bc, kj, x - h)) / (2.0 * h);
        };
        CHECK(std::abs(bc.beta1 * deriv(0.0) - deriv(1.0)) /
                  std::max(1.0, std::abs(deriv(0.0))) < 1e-7);
    }
}

TEST_CASE("eigenfunctions satisfy the ODE with second-order accuracy") {
    const auto bc = pp15_2();
    const cplx k = pp_constants(bc).kappa0 + 2.0 * M_PI;
    auto residual = [&](double h) {
        double worst = 0.0;
        for (double x : {0.21, 0.5, 0.83}) {
            const cplx d2 = (eigenfunction(bc, k, x + h) - 2.0 * eigenfunction(bc, k, x) +
                             eigenfunction(bc, k, x - h)) / (h * h);
            worst = std::max(worst, std::abs(d2 + k * k * eigenfunction(bc, k, x)));
        }
        return worst;
    };
    const double r1 = residual(1e-3), r2 = residual(5e-4);
    const double order = std::log(r1 / r2) / std::log(2.0);
    CHECK(order > 1.9);
}

TEST_CASE("pairing normalization and biorthogonality (pseudoperiodic)") {
    const auto bc = pp15_2();
    const auto one = [](double) { return cplx{1.0, 0.0}; };
    CHECK(std::abs(pairing(one, one, 1.0) - cplx{1.0, 0.0}) < 1e-14);

    const PPConstants c = pp_constants(bc);
    auto X = [&](int j) {
        return [&, j](double x) {
            return eigenfunction(bc, c.kappa0 + 2.0 * M_PI * j, x);
        };
    };
    auto Y = [&](int k) {
        return [&, k](double x) {
            return dual_eigenfunction(bc, c.kappa0 + 2.0 * M_PI * k, x);
        };
    };
    CHECK(std::abs(pairing(X(0), Y(1), 1.0)) < 1e-10);
    CHECK(std::abs(pairing(X(0), Y(0), 1.0) - c.tau) < 1e-10);
    CHECK(std::abs(pairing(X(-2), Y(3), 1.0)) < 1e-10);
    CHECK(std::abs(pairing(X(-2), Y(-2), 1.0) - c.tau) < 1e-10);
}

TEST_CASE("general coefficients: Dirichlet-at-0 forces b1 = -1") {
    const auto bc = dirichlet_at_0();
    const auto spec = compute_spectrum(bc, 4);
    for (const Root& r : spec.representatives()) {
        const GenCoeffs gc = gen_coeffs(bc, r.kappa);
        CHECK(std::abs(gc.b1 + 1.0) < 1e-10);
        CHECK(std::abs(eigenfunction(bc, r.kappa, 0.0)) < 1e-10);
    }
}

TEST_CASE("tau_j matches direct quadrature of <X_j, Y_j>") {
    const auto bc = dirichlet_at_0();
    const auto spec = compute_spectrum(bc, 3);
    const cplx k = spec.representatives()[0].kappa;
    const GenCoeffs gc = gen_coeffs(bc, k);
    auto X = [&](double x) { return eigenfunction(bc, k, x); };
    auto Y = [&](double x) { return dual_eigenfunction(bc, k, x); };
    CHECK(std::abs(pairing(X, Y, 1.0) - gc.tau_j) < 1e-10);
}

TEST_CASE("biorthogonality matrix on the self-adjoint set") {
    const auto bc = self_adjoint_set();
    const auto spec = compute_spectrum(bc, 6);
    const auto reps = spec.representatives();
    for (int i = 0; i < 6; ++i) {
        auto X = [&](double x) { return eigenfunction(bc, reps[i].kappa, x); };
        for (int j = 0; j < 6; ++j) {
            auto Y = [&](double x) { return dual_eigenfunction(bc, reps[j].kappa, x); };
            const cplx v = pairing(X, Y, 1.0);
            if (i == j) {
                const GenCoeffs gc = gen_coeffs(bc, reps[i].kappa);
                CHECK(std::abs(v - gc.tau_j) < 1e-8);
            } else {
                CHECK(std::abs(v) < 1e-8);
            }
        }
    }
}

TEST_CASE("degenerate constants are reported") {
    // beta0 + beta1 = 0 violates the type invariant outright
    CHECK_THROWS_AS(
        (void)BoundaryConditions::pseudoperiodic({1.0, 0.0}, {-1.0, 0.0}, 1.0), Error);
}

TEST_CASE("constants degenerate when beta0 gamma = 1") {
    // beta0 = beta1 = e^{-i pi/3} gives a real kappa0 = pi/3 but
    // (beta0 gamma - 1)(beta1 gamma - 1) = 0
    const auto bc = BoundaryConditions::pseudoperiodic(
        {0.5, -std::sqrt(3.0) / 2.0}, {0.5, -std::sqrt(3.0) / 2.0}, 1.0);
    CHECK_THROWS_AS((void)pp_constants(bc), Error);
    try {
        (void)pp_constants(bc);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::degenerate_constants);
    }
}

TEST_CASE("a non-root is flagged as inconsistent") {
    const auto bc = self_adjoint_set();
    bool threw = false;
    try {
        (void)gen_coeffs(bc, cplx{2.0, 0.0}); // not a discriminant zero
    } catch (const Error& e) {
        threw = true;
        CHECK(e.code() == Errc::inconsistent_root);
    }
    CHECK(threw);
}

TEST_CASE("quadrature reports failure on a jump it cannot settle") {
    const auto step = [](double x) { return cplx{x < 1.0 / M_PI ? 1.0 : 0.0, 0.0}; };
    const auto one = [](double) { return cplx{1.0, 0.0}; };
    bool threw = false;
    try {
        (void)pairing(step, one, 1.0);
    } catch (const Error& e) {
        threw = true;
        CHECK(e.code() == Errc::quadrature_failure);
    }
    CHECK(threw);
}

TEST_CASE("the dual coefficient equals conj(delta) for pseudoperiodic BCs") {
    for (const auto& bc : {pp15_5(), pp15_2()}) {
        const PPConstants c = pp_constants(bc);
        const cplx cb1 = std::conj(bc.beta1);
        const cplx literal = (c.gamma - 1.0 / cb1) / (1.0 / cb1 - 1.0 / c.gamma);
        CHECK(std::abs(literal - std::conj(c.delta)) < 1e-12);
    }
}

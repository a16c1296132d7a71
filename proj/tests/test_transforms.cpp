#include <cmath>

#include "matspec/gamma.hpp"
#include "matspec/quadrature.hpp"
#include "matspec/scalar_gamma.hpp"
#include "matspec/transforms.hpp"
#include "support.hpp"

using namespace matspec;
using namespace testing;

TEST_SUITE("transforms") {

TEST_CASE("quadrature rules integrate their moments") {
    const QuadratureRule gl = gauss_legendre(10, 0.0, 2.0);
    double s = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * std::pow(gl.nodes[i], 7);
    CHECK(std::abs(s - 256.0 / 8.0) < 1e-12);
    const QuadratureRule gj = gauss_jacobi(12, -0.5, 0.3);
    double m = 0.0;
    for (std::size_t i = 0; i < gj.nodes.size(); ++i) m += gj.weights[i] * gj.nodes[i];
    // B(1.5, 1.3)
    CHECK(std::abs(m - std::tgamma(1.5) * std::tgamma(1.3) / std::tgamma(2.8)) < 1e-13);
}

TEST_CASE("adaptive integral of a matrix function") {
    const SquareMatrix a = similar({{0.5, 0.2}, {1.5, 0.0}});
    const QuadratureResult r =
        adaptive_integral([&](double t) { return matrix_exp(a * t); }, 0.0, 1.0, 2, 1e-12);
    check_close(r.value, a.solve(matrix_exp(a) - SquareMatrix::identity(2)), 1e-11);
}

TEST_CASE("beta transform of a constant is the beta matrix") {
    const SquareMatrix a = similar({{0.7, 0.2}, {1.6, 0.0}});
    const SquareMatrix b = similar({{1.9, 0.0}, {0.6, -0.1}});
    const QuadratureResult r = beta_transform([](double) { return SquareMatrix::identity(2); }, a, b);
    check_close(r.value, matrix_beta(a, b), 1e-10);
}

TEST_CASE("Laplace transforms") {
    const QuadratureResult r =
        laplace_transform([](double t) { return SquareMatrix::identity(1) * std::exp(-t); }, 2.0, {0.0, 1.0, 1e-12});
    CHECK(rel(r.value(0, 0), 1.0 / 3.0) < 1e-10);
    // int e^{-st} t^{P-I} dt = Gamma(P) s^{-P}
    const SquareMatrix p = similar({{0.8, 0.1}, {1.7, 0.0}});
    const QuadratureResult w =
        laplace_transform_weighted([](double) { return SquareMatrix::identity(2); }, p, 1.5, {0.0, 1.0, 1e-11});
    check_close(w.value, matrix_gamma(p) * matrix_power(1.5, -p), 1e-8);
}

TEST_CASE("Laplace tail bound is enforced") {
    try {
        laplace_transform([](double t) { return SquareMatrix::identity(1) * std::exp(3.0 * t); }, 1.0,
                          {3.0, 1.0, 1e-10});
        FAIL("growth beyond s accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TailBoundViolation);
    }
}

TEST_CASE("fractional integrals of powers") {
    // I^mu t^2 at x: Gamma(3)/Gamma(3+mu) x^{2+mu}
    const double mu = 0.6, x = 1.7;
    const QuadratureResult r =
        rl_integral([](double t) { return SquareMatrix::identity(1) * (t * t); }, mu, x);
    CHECK(rel(r.value(0, 0), 2.0 / std::tgamma(3.0 + mu) * std::pow(x, 2.0 + mu)) < 1e-10);
    // Erdelyi-Kober left on t^k: Gamma(eta+k+1)/Gamma(eta+alpha+k+1) x^k
    const double alpha = 0.4, eta = 0.8;
    const QuadratureResult ek =
        erdelyi_kober_left([](double t) { return SquareMatrix::identity(1) * std::pow(t, 3); }, alpha, eta, x);
    CHECK(rel(ek.value(0, 0), std::tgamma(eta + 4.0) / std::tgamma(eta + alpha + 4.0) * std::pow(x, 3)) < 1e-9);
    // right operator on t^{-k}: Gamma(eta+k)/Gamma(eta+alpha+k) x^{-k}
    const QuadratureResult ekr =
        erdelyi_kober_right([](double t) { return SquareMatrix::identity(1) / (t * t); }, alpha, eta, x);
    CHECK(rel(ekr.value(0, 0), std::tgamma(eta + 2.0) / std::tgamma(eta + alpha + 2.0) / (x * x)) < 1e-9);
}

TEST_CASE("right Erdelyi-Kober diverges when eta is too small") {
    try {
        erdelyi_kober_right([](double t) { return SquareMatrix::identity(1) * (t * t); }, 0.5, 0.3, 1.0, 2.0);
        FAIL("divergent integral accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivergentIntegral);
    }
}

TEST_CASE("formal fractional derivative of a constant") {
    const MatrixPowerSeries one = MatrixPowerSeries::scalar_series(2, {1.0});
    const FormalResult r = fractional_derivative_formal(one, 0.5, FractionalVariant::RiemannLiouvilleLeft);
    // D^{1/2} 1 = x^{-1/2} / Gamma(1/2)
    check_close(r.series.evaluate(0.9), SquareMatrix::identity(2) * (1.0 / std::sqrt(M_PI * 0.9)), 1e-13);
}

TEST_CASE("Weyl branch policy") {
    const MatrixPowerSeries one = MatrixPowerSeries::scalar_series(1, {1.0, 1.0});
    const FormalResult r = fractional_derivative_formal(one, 0.5, FractionalVariant::Weyl);
    CHECK_FALSE(r.note.empty());
    try {
        fractional_derivative_formal(one, 0.5, FractionalVariant::Weyl, BranchPolicy::Strict);
        FAIL("ambiguous power accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonIntegerPowerAmbiguity);
    }
    CHECK(fractional_derivative_formal(one, 2.0, FractionalVariant::Weyl, BranchPolicy::Strict).note.empty());
}

TEST_CASE("hyper series coefficients") {
    const SquareMatrix a = similar({{0.5, 0.0}, {1.2, 0.0}});
    const MatrixPowerSeries s = hyper_series(HyperParams({a}, {}), 12);
    // 1F0(A; ; z) = (1 - z)^{-A}
    check_close(s.evaluate(0.01), matrix_power(0.99, -a), 1e-13);
}

}

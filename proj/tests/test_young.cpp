#include <cmath>

#include "matspec/young.hpp"
#include "support.hpp"

using namespace matspec;
using namespace testing;

TEST_SUITE("young") {

TEST_CASE("Y_0 is cos and J_0(1) matches") {
    for (double x : {0.3, 1.0, 2.5, 7.0}) CHECK(rel(young_Y(scalar(0.0), x)(0, 0), std::cos(x)) < 1e-13);
    CHECK(rel(bessel_J_matrix(scalar(0.0), 1.0)(0, 0), 0.7651976865579666) < 1e-13);
    // J_{1/2}(x) = sqrt(2 / (pi x)) sin x
    CHECK(rel(bessel_J_matrix(scalar(0.5), 2.0)(0, 0), std::sqrt(1.0 / M_PI) * std::sin(2.0)) < 1e-13);
}

TEST_CASE("scalar values against frozen oracles") {
    CHECK(rel(young_Y(scalar(0.7), 1.9)(0, 0), 0.62462610846303742) < 1e-13);
    CHECK(rel(young_Y(scalar(2.3), 3.5)(0, 0), 2.6385144602917242) < 1e-13);
    CHECK(rel(bessel_J_matrix(scalar(0.35), 2.7)(0, 0), 0.10949911174253909) < 1e-12);
    CHECK(rel(bessel_J_matrix(scalar({1.5, 0.3}), 1.2)(0, 0), {0.29075024613086924, -0.10521868254394353}) < 1e-13);
}

TEST_CASE("both definitions of Y agree on matrices") {
    const SquareMatrix a = similar({{0.7, 0.2}, {2.3, 0.0}, {1.0, -0.3}});
    for (double x : {0.5, 1.9, 3.5}) check_close(young_Y(a, x), young_Y_gamma_sum(a, x), 1e-12);
    check_close(young_Y(a, 1.1), young_series(a, 60).evaluate(1.1), 1e-13);
}

TEST_CASE("expansions converge in corrected form") {
    const SquareMatrix a = similar({{1.0, 0.0}, {1.6, 0.2}});
    for (YoungExpansion v : {YoungExpansion::Eq39, YoungExpansion::Eq40, YoungExpansion::Eq41, YoungExpansion::Eq42}) {
        const ExpansionValue e = young_expansion(v, a, 0.8, 25, ExpansionForm::Corrected);
        CAPTURE(static_cast<int>(v));
        CHECK(e.error < 1e-10);
    }
}

TEST_CASE("Bessel expansion of Y at A = 1 collapses to its first term") {
    const ExpansionValue e = young_expansion(YoungExpansion::Eq39, scalar(1.0), 0.8, 15);
    CHECK(std::abs(e.value(0, 0) - e.reference(0, 0)) < 1e-6);
    CHECK(e.error < 1e-13);
}

TEST_CASE("the extra x^{2k} weighting misses away from A = 1") {
    const ExpansionValue printed = young_expansion(YoungExpansion::Eq39, scalar(2.5), 0.8, 25);
    const ExpansionValue fixed = young_expansion(YoungExpansion::Eq39, scalar(2.5), 0.8, 25, ExpansionForm::Corrected);
    CHECK(printed.error > 1e-3);
    CHECK(fixed.error < 1e-12);
}

TEST_CASE("ODE residuals") {
    const SquareMatrix a = similar({{0.7, 0.2}, {1.3, 0.0}});
    CHECK(young_ode_residual(scalar(0.0), 30) < 1e-12);
    CHECK(young_ode_residual(a, 30) < 1e-12);
    CHECK(young_ode_residual(a, 30, YoungOde::Prose) < 1e-12);
    CHECK(young_ode_residual(a, 30, YoungOde::Eq45) < 1e-12);
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(young_Y(scalar(0.5), 0.0), Error);
    CHECK_THROWS_AS(young_expansion(YoungExpansion::Eq40, scalar(0.5), 4.5, 10), Error);
    CHECK_THROWS_AS(young_expansion(YoungExpansion::Eq40, scalar(0.5), 1.0, 26), Error);
}

}

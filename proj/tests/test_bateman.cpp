#include <cmath>

#include "matspec/bateman.hpp"
#include "support.hpp"

using namespace matspec;
using namespace testing;

namespace {

BatemanParams scalar_params(Complex a, Complex b) { return {scalar(a), scalar(b)}; }

}  // namespace

TEST_SUITE("bateman") {

TEST_CASE("low degrees in closed form") {
    // B_2^{0,0}(1) = 1 - 2 + 1/4
    CHECK(rel(bateman_B(2, scalar_params(0.0, 0.0), 1.0)(0, 0), -0.75) < 1e-15);
    CHECK(rel(bateman_B(0, scalar_params(0.3, 0.4), 5.0)(0, 0), 1.0) < 1e-15);
    // B_1 = I - z (A+I)^{-1} (B+I)^{-1}
    const SquareMatrix a = similar({{0.3, 0.1}, {1.2, 0.0}});
    const SquareMatrix b = similar({{0.9, 0.0}, {0.4, -0.2}});
    const SquareMatrix want = SquareMatrix::identity(2) - (a.shifted(1.0) * b.shifted(1.0)).inverse() * 2.0;
    check_close(bateman_B(1, BatemanParams(a, b), 2.0), want, 1e-14);
}

TEST_CASE("scalar values against frozen oracles") {
    CHECK(rel(bateman_B(5, scalar_params(0.4, 1.3), 2.5)(0, 0), -0.82817956950974635) < 1e-13);
    CHECK(rel(bateman_B(7, scalar_params(1.1, 0.2), {-1.0, 0.5})(0, 0), {4.7296701788194819, -2.8352596901182873}) <
          1e-13);
    CHECK(rel(bateman_J(4, scalar_params(0.6, 0.9), 1.3)(0, 0), -3.1735057070131449) < 1e-13);
    CHECK(rel(bateman_J(3, scalar_params(1.4, 0.5), {0.7, 0.4})(0, 0), {2.3416848960919385, 0.90852194265662533}) <
          1e-13);
    CHECK(rel(hyper_bessel(scalar_params(0.5, 1.2), 2.0)(0, 0), 0.91186482519808282) < 1e-13);
}

TEST_CASE("diagonal parameters act entrywise") {
    const BatemanParams p(similar({0.4, 1.1}), similar({1.3, 0.2}));
    const Complex v0 = bateman_B(5, scalar_params(0.4, 1.3), 2.5)(0, 0);
    const Complex v1 = bateman_B(5, scalar_params(1.1, 0.2), 2.5)(0, 0);
    check_close(bateman_B(5, p, 2.5), similar({v0, v1}), 1e-12);
}

TEST_CASE("series form matches evaluation") {
    const BatemanParams p(similar({{0.4, 0.2}, {1.1, 0.0}}), similar({{1.3, 0.0}, {0.2, 0.1}}));
    const MatrixPowerSeries s = bateman_B_series(6, p);
    CHECK(s.high() == 6);
    check_close(s.evaluate(0.8), bateman_B(6, p, 0.8), 1e-13);
}

TEST_CASE("Laguerre polynomials") {
    CHECK(rel(laguerre_L(6, scalar(0.8), 2.2)(0, 0), 1.1361190222222225) < 1e-13);
    CHECK(rel(laguerre_L(4, scalar({1.5, 0.5}), 0.9)(0, 0), {-0.11507916666666678, 1.3225833333333333}) < 1e-13);
    // (n+1) L_{n+1} = (2n+1+a-x) L_n - (n+a) L_{n-1}
    const double a = 0.35, x = 1.7;
    for (int n = 1; n < 10; ++n) {
        const Complex lhs = double(n + 1) * laguerre_L(n + 1, scalar(a), x)(0, 0);
        const Complex rhs = (2.0 * n + 1.0 + a - x) * laguerre_L(n, scalar(a), x)(0, 0) -
                            (n + a) * laguerre_L(n - 1, scalar(a), x)(0, 0);
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("domain errors") {
    const BatemanParams p = scalar_params(0.5, 0.5);
    try {
        bateman_J(2, p, -1.0);
        FAIL("branch cut accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BranchCut);
    }
    try {
        bateman_B(3, scalar_params(-2.0, 0.5), 1.0);
        FAIL("singular shift accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularShift);
    }
    try {
        BatemanParams(SquareMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}}), SquareMatrix::from_rows({{1.0, 0.0}, {1.0, 1.0}}));
        FAIL("non-commuting pair accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonCommuting);
    }
}

}

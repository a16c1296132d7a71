#include <cmath>

#include "matspec/series.hpp"
#include "support.hpp"

using namespace matspec;
using namespace testing;

namespace {

// exp(z) through z^k
MatrixPowerSeries exp_series(std::size_t dim, int k) {
    std::vector<Complex> c;
    double f = 1.0;
    for (int i = 0; i <= k; ++i) {
        c.push_back(1.0 / f);
        f *= i + 1;
    }
    return MatrixPowerSeries::scalar_series(dim, c);
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("product of exponentials") {
    const MatrixPowerSeries e = exp_series(2, 20);
    const MatrixPowerSeries e2 = exp_series(2, 20).substitute(2.0, 1);
    CHECK(compare(e * e, e2).residual < 1e-14);
}

TEST_CASE("derivative and theta") {
    const MatrixPowerSeries e = exp_series(1, 15);
    // d/dz exp = exp, one order lower at the top
    CHECK(compare(derivative(e), e.truncated(14)).residual < 1e-14);
    CHECK(compare(theta(e), e.times_z(1).truncated(15)).residual < 1e-14);
}

TEST_CASE("operators apply right to left") {
    using Op = SeriesOperator;
    const MatrixPowerSeries e = exp_series(1, 20);
    // (d - 1) exp = 0
    CHECK(residual_of(apply_operator(e, Op::d() - Op::identity())).residual < 1e-14);
    // (theta - z) exp = 0
    CHECK(residual_of(apply_operator(e, Op::theta() - Op::z())).residual < 1e-14);
    // z d differs from d z by the identity
    const MatrixPowerSeries lhs = apply_operator(e, Op::d() * Op::z() - Op::z() * Op::d());
    CHECK(compare(lhs, e.truncated(lhs.high())).residual < 1e-14);
}

TEST_CASE("matrix offsets shift theta") {
    const SquareMatrix a = similar({{0.3, 0.0}, {1.1, 0.2}});
    const MatrixPowerSeries s = exp_series(2, 25).with_offset(a);
    // theta(z^A f) = z^A (A + theta) f
    const MatrixPowerSeries want =
        (exp_series(2, 25).left_multiplied(a) + theta(exp_series(2, 25))).with_offset(a);
    CHECK(compare(theta(s), want).residual < 1e-14);
    check_close(s.evaluate(0.7), matrix_power(0.7, a) * std::exp(0.7), 1e-12);
}

TEST_CASE("offset gap") {
    const SquareMatrix a = similar({{0.3, 0.0}, {1.1, 0.2}});
    CHECK(offset_gap(a.shifted(3.0), a) == 3);
    CHECK_THROWS_AS(offset_gap(a.shifted(0.5), a), Error);
}

TEST_CASE("cancellation is measured against accumulated magnitude") {
    const MatrixPowerSeries big = Complex(1e12) * exp_series(1, 5);
    const MatrixPowerSeries nearly = big - big;
    CHECK(residual_of(nearly).residual == 0.0);
    const MatrixPowerSeries off = exp_series(1, 5) + exp_series(1, 5).times_z(1).truncated(5);
    CHECK(compare(off, exp_series(1, 5)).residual > 0.1);
}

TEST_CASE("Taylor coefficients by contour extraction") {
    // exp(z t) has t-coefficients z^n / n!
    auto gen = [](Complex z, Complex t) { return SquareMatrix::identity(2) * std::exp(z * t); };
    const std::vector<SquareMatrix> c = bivariate_coefficient(gen, 1.5, 10, {1.0, 64});
    double f = 1.0;
    for (int n = 0; n <= 10; ++n) {
        check_close(c[n], SquareMatrix::identity(2) * (std::pow(1.5, n) / f), 1e-9);
        f *= n + 1;
    }
}

TEST_CASE("extraction reports an unresolved contour") {
    auto gen = [](Complex, Complex t) { return SquareMatrix::identity(1) / (1.0 - t / 0.6); };
    try {
        bivariate_coefficient(gen, 0.0, 30, {0.59, 16});
        FAIL("unstable extraction accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ExtractionUnstable);
    }
}

}

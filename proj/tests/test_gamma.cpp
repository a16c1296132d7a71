#include <cmath>

#include "matspec/gamma.hpp"
#include "matspec/scalar_gamma.hpp"
#include "support.hpp"

using namespace matspec;
using namespace testing;

TEST_SUITE("gamma") {

TEST_CASE("matrix gamma on a non-diagonal matrix") {
    const std::vector<Complex> eig{{0.3, 0.7}, {4.5, 0.0}};
    check_close(matrix_gamma(similar(eig)),
                similar({{0.30968625674374916, -0.85678775293927057}, {11.631728396567449, 0.0}}), 1e-12);
}

TEST_CASE("beta against frozen values and quadrature") {
    CHECK(rel(matrix_beta(scalar(0.7), scalar(1.9))(0, 0), 0.87325393169017936) < 1e-12);
    CHECK(rel(matrix_beta(scalar({1.2, 0.3}), scalar(0.8))(0, 0), {1.0177425142637896, -0.2157490070215591}) < 1e-12);
    const SquareMatrix p = similar({{0.7, 0.1}, {1.6, 0.0}});
    const SquareMatrix q = similar({{1.9, 0.0}, {0.9, -0.2}});
    check_close(matrix_beta_quadrature(p, q).value, matrix_beta(p, q), 1e-9);
}

TEST_CASE("functional equation and duplication over random matrices") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        for (std::size_t dim = 1; dim <= 3; ++dim) {
            SpectralSampler s(seed, dim);
            const SquareMatrix a = s.matrix(s.eigenvalues(0.3, 3.0));
            CAPTURE(seed);
            CAPTURE(dim);
            check_close(matrix_gamma(a.shifted(1.0)), a * matrix_gamma(a), 1e-11);
            // Gamma(2A) = 2^{2A-I} / sqrt(pi) Gamma(A) Gamma(A + I/2)
            const SquareMatrix rhs = matrix_power(2.0, a * 2.0 - SquareMatrix::identity(dim)) *
                                     matrix_gamma(a) * matrix_gamma(a.shifted(0.5)) / std::sqrt(M_PI);
            check_close(matrix_gamma(a * 2.0), rhs, 1e-10);
        }
    }
}

TEST_CASE("reciprocal gamma is entire") {
    const SquareMatrix a = similar({{-2.0, 0.0}, {0.5, 0.0}});
    const SquareMatrix r = reciprocal_gamma(a);
    check_close(r, similar({0.0, 1.0 / std::sqrt(M_PI)}), 1e-13);
}

TEST_CASE("pochhammer products and inverses") {
    CHECK(rel(pochhammer_value(scalar({0.4, 0.1}), 6)(0, 0), {102.229595, 46.708038}) < 1e-13);
    const SquareMatrix a = similar({{0.4, 0.1}, {2.5, 0.0}, {1.0, -1.0}});
    const PochhammerCache c = pochhammer(a, 8);
    for (int k = 0; k < 8; ++k) check_close(c[k + 1], c[k] * a.shifted(k), 1e-14);
    check_close(pochhammer_inverse(a, 8) * c[8], SquareMatrix::identity(3), 1e-12);
    try {
        pochhammer_inverse(similar({-3.0, 0.5}), 5);
        FAIL("singular shift not detected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularShift);
    }
}

}

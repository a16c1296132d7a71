#include <cmath>

#include "matspec/matrix.hpp"
#include "matspec/scalar_gamma.hpp"
#include "support.hpp"

using namespace matspec;
using namespace testing;

TEST_SUITE("matrix") {

TEST_CASE("exp and power agree with the eigenvalue map") {
    const std::vector<Complex> eig{{0.4, 0.2}, {1.3, 0.0}, {2.1, -0.5}};
    const SquareMatrix a = similar(eig);
    std::vector<Complex> e, p;
    for (Complex l : eig) {
        e.push_back(std::exp(l));
        p.push_back(std::pow(Complex(2.5), l));
    }
    check_close(matrix_exp(a), similar(e), 1e-13);
    check_close(matrix_power(2.5, a), similar(p), 1e-13);
}

TEST_CASE("power is rejected on the branch cut") {
    const SquareMatrix a = SquareMatrix::identity(2) * 0.5;
    CHECK_THROWS_AS(matrix_power(Complex(-1.0, 0.0), a), Error);
    try {
        matrix_power(Complex(-2.0, 0.0), a);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BranchCut);
    }
}

TEST_CASE("inverse and solve") {
    const SquareMatrix a = similar({{1.0, 0.5}, {2.0, 0.0}, {0.7, -0.1}});
    check_close(a * a.inverse(), SquareMatrix::identity(3), 1e-14);
    const SquareMatrix b = similar({{3.0, 0.0}, {1.0, 1.0}, {0.2, 0.0}});
    check_close(a * a.solve(b), b, 1e-14);
    SquareMatrix sing(2);
    sing(0, 0) = 1.0;
    try {
        sing.inverse();
        FAIL("singular matrix inverted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularDenominator);
    }
}

TEST_CASE("positive stability and commutation") {
    CHECK(is_positive_stable(similar({{0.1, 3.0}, {2.0, 0.0}})));
    CHECK_FALSE(is_positive_stable(similar({{-0.1, 0.0}, {2.0, 0.0}})));
    const SquareMatrix a = similar({{1.0, 0.0}, {2.0, 0.0}});
    const SquareMatrix b = similar({{5.0, 1.0}, {-1.0, 0.0}});
    CHECK(commutes(a, b));
    CHECK_FALSE(commutes(a, SquareMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})));
}

TEST_CASE("commuting families commute and respect the constraints") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const CommutingFamily fam = commuting_family(seed, 3, 4);
        REQUIRE(fam.members.size() == 4);
        for (const SquareMatrix& m : fam.members) {
            CHECK(is_positive_stable(m));
            for (const SquareMatrix& other : fam.members) CHECK(commutes(m, other));
        }
    }
}

TEST_CASE("spectral sampler is deterministic") {
    SpectralSampler s1(42, 3), s2(42, 3);
    const SquareMatrix a = s1.matrix(s1.eigenvalues(0.3, 2.0));
    const SquareMatrix b = s2.matrix(s2.eigenvalues(0.3, 2.0));
    CHECK(relative_difference(a, b) == 0.0);
}

TEST_CASE("scalar gamma against frozen values") {
    CHECK(rel(complex_gamma({0.3, 0.7}), {0.30968625674374916, -0.85678775293927057}) < 1e-13);
    CHECK(rel(complex_gamma(4.5), 11.631728396567449) < 1e-13);
    CHECK(rel(complex_gamma({-1.5, 0.2}), {1.9625551258028472, 0.27845955312126246}) < 1e-13);
    CHECK(rel(complex_gamma(12.25), 73711509.046769949) < 1e-13);
    CHECK(complex_rgamma(-3.0) == Complex(0.0));
    CHECK(is_nonpositive_integer(0.0));
    CHECK_FALSE(is_nonpositive_integer(0.5));
}

}

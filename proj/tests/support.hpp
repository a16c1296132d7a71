#pragma once

#include <complex>
#include <vector>

#include <doctest.h>

#include "matspec/matrix.hpp"

namespace testing {

using matspec::Complex;
using matspec::SquareMatrix;

inline SquareMatrix scalar(Complex v) { return SquareMatrix::scalar(1, v); }

// Fixed, non-normal eigenbasis so that matrix tests are not just diagonal ones.
inline SquareMatrix similar(const std::vector<Complex>& eig) {
    const std::size_t n = eig.size();
    SquareMatrix v(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v(i, j) = (i == j) ? Complex(1.0) : Complex(0.3 / (1.0 + i + 2.0 * j), 0.1 * (j > i));
    return v * SquareMatrix::diagonal(eig) * v.inverse();
}

inline double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

inline void check_close(const SquareMatrix& got, const SquareMatrix& want, double tol) {
    const double d = matspec::relative_difference(got, want);
    CAPTURE(d);
    CHECK(d < tol);
}

}  // namespace testing

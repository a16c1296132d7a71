#pragma once

#include <vector>

#include "matspec/matrix.hpp"
#include "matspec/series.hpp"

namespace matspec {

// Commuting pair (A, B); NonCommuting otherwise.
struct BatemanParams {
    SquareMatrix a;
    SquareMatrix b;

    BatemanParams(SquareMatrix a_, SquareMatrix b_);
    std::size_t dim() const { return a.dim(); }
    BatemanParams shifted(double da, double db) const { return {a.shifted(da), b.shifted(db)}; }
};

// sum_{k=0}^n (-n)_k w^k / k! [(P)_k]^{-1} [(Q)_k]^{-1}, the terminating 1F2.
// Coefficients of w^0..w^n; SingularShift when some P + jI or Q + jI is singular.
std::vector<SquareMatrix> terminating_1F2_coefficients(int n, const SquareMatrix& p, const SquareMatrix& q);

// B_n^{A,B}(z) = 1F2(-nI; A+I, B+I; z), n+1 terms.
std::vector<SquareMatrix> bateman_B_coefficients(int n, const BatemanParams& p);
MatrixPowerSeries bateman_B_series(int n, const BatemanParams& p);
SquareMatrix bateman_B(int n, const BatemanParams& p, Complex z);

// J_n^{A,B}(z) = (C+I)_n / n! Gamma^{-1}(A+I) z^A 1F2(-nI; A+I, C+I; z^2), C = A/2 + B.
// BranchCut for z on (-inf, 0].
SquareMatrix bateman_J(int n, const BatemanParams& p, Complex z);

// L_n^{(A)}(x) = sum_k (-1)^k / (k! (n-k)!) (A+I)_n [(A+I)_k]^{-1} x^k
SquareMatrix laguerre_L(int n, const SquareMatrix& a, Complex x);

// 0F2(-; A+I, B+I; -(x/3)^3)
SquareMatrix hyper_bessel(const BatemanParams& p, Complex x);

}  // namespace matspec

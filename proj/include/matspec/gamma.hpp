#pragma once

#include <vector>

#include "matspec/matrix.hpp"
#include "matspec/quadrature.hpp"

namespace matspec {

SquareMatrix matrix_gamma(const SquareMatrix& a);
// Entire; defined for every diagonalizable A.
SquareMatrix reciprocal_gamma(const SquareMatrix& a);
// Gamma(P) Gamma(Q) Gamma^{-1}(P+Q)
SquareMatrix matrix_beta(const SquareMatrix& p, const SquareMatrix& q);
// int_0^1 t^{P-I} (1-t)^{Q-I} dt by quadrature, kept for cross-checks.
QuadratureResult matrix_beta_quadrature(const SquareMatrix& p, const SquareMatrix& q, double tol = 1e-11);

// (A)_0 .. (A)_K by the running product terms[k+1] = terms[k] (A + kI).
class PochhammerCache {
public:
    PochhammerCache(const SquareMatrix& base, int k);

    const SquareMatrix& base() const { return base_; }
    int order() const { return static_cast<int>(terms_.size()) - 1; }
    const SquareMatrix& operator[](int k) const { return terms_.at(static_cast<std::size_t>(k)); }
    const std::vector<SquareMatrix>& terms() const { return terms_; }

private:
    SquareMatrix base_;
    std::vector<SquareMatrix> terms_;
};

PochhammerCache pochhammer(const SquareMatrix& a, int k);
SquareMatrix pochhammer_value(const SquareMatrix& a, int n);
// [(A)_n]^{-1}, failing with SingularShift when some A + jI is singular.
SquareMatrix pochhammer_inverse(const SquareMatrix& a, int n);

}  // namespace matspec

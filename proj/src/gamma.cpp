#include "matspec/gamma.hpp"

#include "matspec/scalar_gamma.hpp"

namespace matspec {

SquareMatrix matrix_gamma(const SquareMatrix& a) {
    if (!is_positive_stable(a)) throw Error(ErrorCode::NotPositiveStable, "matrix gamma needs a positive stable argument");
    return apply_spectral(a, [](Complex z) { return complex_gamma(z); });
}

SquareMatrix reciprocal_gamma(const SquareMatrix& a) {
    return apply_spectral(a, [](Complex z) { return complex_rgamma(z); });
}

SquareMatrix matrix_beta(const SquareMatrix& p, const SquareMatrix& q) {
    if (!is_positive_stable(p) || !is_positive_stable(q))
        throw Error(ErrorCode::NotPositiveStable, "beta arguments must be positive stable");
    if (!commutes(p, q)) throw Error(ErrorCode::NonCommuting, "beta arguments must commute");
    return matrix_gamma(p) * matrix_gamma(q) * reciprocal_gamma(p + q);
}

QuadratureResult matrix_beta_quadrature(const SquareMatrix& p, const SquareMatrix& q, double tol) {
    if (!commutes(p, q)) throw Error(ErrorCode::NonCommuting, "beta arguments must commute");
    const SquareMatrix ident = SquareMatrix::identity(p.dim());
    return beta_weighted_integral(p, q, [&](double) { return ident; }, tol);
}

PochhammerCache::PochhammerCache(const SquareMatrix& base, int k) : base_(base) {
    if (k < 0) throw Error(ErrorCode::DomainError, "Pochhammer order must be non-negative");
    terms_.reserve(static_cast<std::size_t>(k) + 1);
    terms_.push_back(SquareMatrix::identity(base.dim()));
    for (int j = 0; j < k; ++j) terms_.push_back(terms_.back() * base.shifted(static_cast<double>(j)));
}

PochhammerCache pochhammer(const SquareMatrix& a, int k) { return PochhammerCache(a, k); }

SquareMatrix pochhammer_value(const SquareMatrix& a, int n) {
    SquareMatrix acc = SquareMatrix::identity(a.dim());
    for (int j = 0; j < n; ++j) acc = acc * a.shifted(static_cast<double>(j));
    return acc;
}

SquareMatrix pochhammer_inverse(const SquareMatrix& a, int n) {
    SquareMatrix acc = SquareMatrix::identity(a.dim());
    for (int j = 0; j < n; ++j) {
        const SquareMatrix f = a.shifted(static_cast<double>(j));
        if (!f.is_invertible()) throw Error(ErrorCode::SingularShift, "A + " + std::to_string(j) + "I is singular");
        acc = f.solve(acc);
    }
    return acc;
}

}  // namespace matspec

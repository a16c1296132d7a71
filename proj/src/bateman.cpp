#include "matspec/bateman.hpp"

#include <cmath>

#include "matspec/gamma.hpp"
#include "matspec/hyper.hpp"

namespace matspec {

namespace {

SquareMatrix horner(const std::vector<SquareMatrix>& c, Complex w) {
    SquareMatrix acc = c.back();
    for (int j = static_cast<int>(c.size()) - 2; j >= 0; --j) {
        acc *= w;
        acc += c[static_cast<std::size_t>(j)];
    }
    return acc;
}

void require_order(int n) {
    if (n < 0) throw Error(ErrorCode::DomainError, "polynomial index must be non-negative");
}

}  // namespace

BatemanParams::BatemanParams(SquareMatrix a_, SquareMatrix b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "A and B must share a dimension");
    if (!commutes(a, b)) throw Error(ErrorCode::NonCommuting, "A and B must commute");
}

std::vector<SquareMatrix> terminating_1F2_coefficients(int n, const SquareMatrix& p, const SquareMatrix& q) {
    require_order(n);
    std::vector<SquareMatrix> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    SquareMatrix c = SquareMatrix::identity(p.dim());
    out.push_back(c);
    for (int k = 0; k < n; ++k) {
        const SquareMatrix pk = p.shifted(static_cast<double>(k)), qk = q.shifted(static_cast<double>(k));
        if (!pk.is_invertible() || !qk.is_invertible())
            throw Error(ErrorCode::SingularShift, "parameter plus " + std::to_string(k) + "I is singular");
        // (-n+k) / (k+1) times the two inverse factors
        c = qk.solve(pk.solve(c)) * (static_cast<double>(k - n) / (k + 1));
        out.push_back(c);
    }
    return out;
}

std::vector<SquareMatrix> bateman_B_coefficients(int n, const BatemanParams& p) {
    return terminating_1F2_coefficients(n, p.a.shifted(1.0), p.b.shifted(1.0));
}

MatrixPowerSeries bateman_B_series(int n, const BatemanParams& p) {
    return MatrixPowerSeries::from_coefficients(bateman_B_coefficients(n, p));
}

SquareMatrix bateman_B(int n, const BatemanParams& p, Complex z) { return horner(bateman_B_coefficients(n, p), z); }

SquareMatrix bateman_J(int n, const BatemanParams& p, Complex z) {
    require_order(n);
    if (z.imag() == 0.0 && z.real() <= 0.0) throw Error(ErrorCode::BranchCut, "z^A needs z off (-inf, 0]");
    const SquareMatrix c = p.a * 0.5 + p.b;
    const SquareMatrix poly = horner(terminating_1F2_coefficients(n, p.a.shifted(1.0), c.shifted(1.0)), z * z);
    const double inv_fact = std::exp(-std::lgamma(n + 1.0));
    return pochhammer_value(c.shifted(1.0), n) * reciprocal_gamma(p.a.shifted(1.0)) * matrix_power(z, p.a) * poly *
           inv_fact;
}

SquareMatrix laguerre_L(int n, const SquareMatrix& a, Complex x) {
    require_order(n);
    const SquareMatrix a1 = a.shifted(1.0);
    // (A+I)_n [(A+I)_k]^{-1} = (A+(k+1)I)...(A+nI), built downward from k = n.
    std::vector<SquareMatrix> c(static_cast<std::size_t>(n) + 1, SquareMatrix(a.dim()));
    SquareMatrix tail = SquareMatrix::identity(a.dim());
    for (int k = n; k >= 0; --k) {
        const double w = std::exp(-std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) * ((k % 2) ? -1.0 : 1.0);
        c[static_cast<std::size_t>(k)] = tail * w;
        if (k > 0) tail = tail * a1.shifted(static_cast<double>(k - 1));
    }
    return horner(c, x);
}

SquareMatrix hyper_bessel(const BatemanParams& p, Complex x) {
    const Complex w = x / 3.0;
    return hyp(HyperParams({}, {p.a.shifted(1.0), p.b.shifted(1.0)}, p.dim()), -w * w * w);
}

}  // namespace matspec

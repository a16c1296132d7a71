#pragma once

// Helpers shared by the identity catalogs. Not installed.

#include <cmath>
#include <vector>

#include "matspec/catalog.hpp"
#include "matspec/gamma.hpp"
#include "matspec/hyper.hpp"
#include "matspec/series.hpp"

namespace matspec::detail {

inline SquareMatrix eye(std::size_t n) { return SquareMatrix::identity(n); }
inline SquareMatrix sc(std::size_t n, Complex v) { return SquareMatrix::scalar(n, v); }

inline double rel(const SquareMatrix& a, const SquareMatrix& b) { return relative_difference(a, b); }

// Positive-stable draw over the sampler's shared basis.
inline SquareMatrix draw(SpectralSampler& s, double lo = 0.3, double hi = 2.5, double imag = 0.3) {
    return s.matrix(s.eigenvalues(lo, hi, imag));
}

inline SquareMatrix pfq(const std::vector<SquareMatrix>& num, const std::vector<SquareMatrix>& den, Complex z) {
    SeriesControl ctrl;
    ctrl.maxTerms = 2000;
    return hyp(HyperParams(num, den), z, ctrl);
}

// Coefficients U_k cached once, then summed by Horner for any |w| <= radius.
class CachedSeries {
public:
    CachedSeries(const std::vector<SquareMatrix>& num, const std::vector<SquareMatrix>& den, double radius) {
        const HyperParams params(num, den);
        int k = 32;
        for (;;) {
            coeffs_ = pFq_coefficients(params, k);
            double head = 0.0;
            for (int j = 0; j <= k; ++j) head = std::max(head, coeffs_[j].norm() * std::pow(radius, j));
            const double tail = coeffs_[k].norm() * std::pow(radius, k) + coeffs_[k - 1].norm() * std::pow(radius, k - 1);
            if (tail <= 1e-18 * std::max(head, 1e-300)) break;
            if (k >= 4000) throw Error(ErrorCode::Nonconvergence, "cached series needs more than 4000 terms");
            k *= 2;
        }
    }

    SquareMatrix operator()(Complex w) const {
        SquareMatrix acc = coeffs_.back();
        for (int j = static_cast<int>(coeffs_.size()) - 2; j >= 0; --j) {
            acc *= w;
            acc += coeffs_[j];
        }
        return acc;
    }

private:
    std::vector<SquareMatrix> coeffs_;
};

// max_t ||f(t)|| e^{-rate t} on a grid, doubled: the constant of a growth bound.
template <class F>
double growth_constant(const F& f, double rate, double t_max) {
    double m = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double t = t_max * i / 400.0;
        m = std::max(m, f(t).norm() * std::exp(-rate * t));
    }
    return 2.0 * std::max(m, 1.0);
}

inline double gamma_ratio(double a, double b) { return std::exp(std::lgamma(a) - std::lgamma(b)); }

}  // namespace matspec::detail

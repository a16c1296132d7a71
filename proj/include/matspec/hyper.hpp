#pragma once

#include <utility>
#include <vector>

#include "matspec/matrix.hpp"

namespace matspec {

struct SeriesControl {
    int maxTerms = 500;
    double absTol = 1e-16;
    int tailWindow = 3;

    void validate() const;
};

// Numerator and denominator parameters of a pFq. All matrices must share a
// dimension and commute; this is checked once, here.
class HyperParams {
public:
    HyperParams(std::vector<SquareMatrix> numerators, std::vector<SquareMatrix> denominators, std::size_t dim = 0);

    std::size_t dim() const { return dim_; }
    const std::vector<SquareMatrix>& numerators() const { return num_; }
    const std::vector<SquareMatrix>& denominators() const { return den_; }

private:
    std::size_t dim_;
    std::vector<SquareMatrix> num_;
    std::vector<SquareMatrix> den_;

};

struct SeriesValue {
    SquareMatrix value;
    double tail_bound = 0.0;
    int terms = 0;
    double condition = 1.0;  // sum of term norms over the norm of the sum
};

SeriesValue eval_pFq(const HyperParams& params, Complex z, const SeriesControl& ctrl = {});
SquareMatrix hyp(const HyperParams& params, Complex z, const SeriesControl& ctrl = {});

// U_0 .. U_K with U_{s+1} = U_s prod(A_i + sI) prod(B_j + sI)^{-1} / (s+1).
std::vector<SquareMatrix> pFq_coefficients(const HyperParams& params, int k);

struct OrderTypeEstimate {
    std::vector<std::pair<int, double>> orderSamples;
    std::vector<std::pair<int, double>> typeSamples;
};

// Sampled rho(s) = s ln s / ln(1/||U_s||) and tau(s) = s ||U_s||^{rho/s} / (e rho).
// Coefficients are carried as mantissa times exp(log-scale) because
// ||U_500|| of a 1F2 is far below the double range.
OrderTypeEstimate order_type_estimate(const HyperParams& params, const std::vector<int>& s_grid, double rho = 0.5);

}  // namespace matspec

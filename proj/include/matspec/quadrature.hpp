#pragma once

#include <functional>
#include <vector>

#include "matspec/matrix.hpp"

namespace matspec {

enum class RuleKind { GaussLegendre, GaussJacobi, TruncatedExponential };

// Nodes and weights for  int_lo^hi w(t) g(t) dt  where
//   GaussLegendre:        w = 1
//   GaussJacobi:          w = t^a_exp (1-t)^b_exp on [0, 1]
//   TruncatedExponential: w = e^{-t} on [0, cutoff]  (composite Legendre panels)
// Each constructor checks the rule against exact moments up to degree 20.
struct QuadratureRule {
    RuleKind kind = RuleKind::GaussLegendre;
    double lo = -1.0;
    double hi = 1.0;
    double a_exp = 0.0;
    double b_exp = 0.0;
    double cutoff = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0);
QuadratureRule gauss_jacobi(int n, double a_exp, double b_exp);
QuadratureRule truncated_exponential(double cutoff, int panels = 0, int order = 20);

using MatrixFunction = std::function<SquareMatrix(double)>;

struct QuadratureResult {
    SquareMatrix value;
    double error_estimate = 0.0;
    int evaluations = 0;
};

SquareMatrix apply_rule(const QuadratureRule& rule, const MatrixFunction& g, std::size_t dim);

// Adaptive Gauss-Kronrod (7/15) on [a, b], bisecting the worst interval.
// Stops when the summed |K15 - G7| falls below max(abs_tol, rel_tol*||I||).
QuadratureResult adaptive_integral(const MatrixFunction& g, double a, double b, std::size_t dim,
                                   double rel_tol, double abs_tol = 0.0, int initial_panels = 1,
                                   int max_intervals = 4000);

// int_0^1 t^{P-I} (1-t)^{Q-I} f(t) dt for commuting positive-stable P, Q.
// Real scalar exponents use Gauss-Jacobi directly. Matrix exponents are
// handled by t = e^{-u} on each half of [0,1], which turns t^{P-I} dt into
// the smooth, exponentially decaying e^{-uP} du.
QuadratureResult beta_weighted_integral(const SquareMatrix& p, const SquareMatrix& q, const MatrixFunction& f,
                                        double tol = 1e-11);

// int_lo^hi (t-lo)^{L-I} (hi-t)^{R-I} f(t) dt
QuadratureResult endpoint_singular_integral(double lo, double hi, const SquareMatrix& l, const SquareMatrix& r,
                                            const MatrixFunction& f, double tol = 1e-11);

// Cached exp(s*M) for repeated scalar s; spectral when M is well conditioned.
class ExponentialFamily {
public:
    explicit ExponentialFamily(const SquareMatrix& m);
    SquareMatrix operator()(double s) const;

private:
    SquareMatrix m_;
    bool spectral_ = false;
    bool diagonal_ = false;
    Eigen::MatrixXcd v_;
    Eigen::MatrixXcd v_inv_;
    Eigen::VectorXcd d_;
};

}  // namespace matspec

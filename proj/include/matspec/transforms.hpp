#pragma once

#include <string>

#include "matspec/hyper.hpp"
#include "matspec/quadrature.hpp"
#include "matspec/series.hpp"

namespace matspec {

// int_0^1 t^{A-I} (1-t)^{B-I} f(t) dt
QuadratureResult beta_transform(const MatrixFunction& f, const SquareMatrix& a, const SquareMatrix& b,
                                double tol = 1e-11);

// Growth model ||f(t)|| <= constant * exp(rate * t) used for the tail bound.
struct LaplaceOptions {
    double growth_rate = 0.0;
    double growth_constant = 1.0;
    double tol = 1e-10;
    double cutoff = 0.0;  // 0 picks the smallest cutoff meeting tol
};

// int_0^inf e^{-st} f(t) dt, truncated at a cutoff whose analytic tail bound
// stays below tol (TailBoundViolation otherwise).
QuadratureResult laplace_transform(const MatrixFunction& f, Complex s, const LaplaceOptions& opts = {});
// int_0^inf e^{-st} t^{P-I} f(t) dt for positive-stable P.
QuadratureResult laplace_transform_weighted(const MatrixFunction& f, const SquareMatrix& p, Complex s,
                                            const LaplaceOptions& opts = {});

// x^{-eta-alpha}/Gamma(alpha) int_0^x (x-t)^{alpha-1} t^eta f(t) dt
QuadratureResult erdelyi_kober_left(const MatrixFunction& f, double alpha, double eta, double x, double tol = 1e-11);
// x^eta/Gamma(alpha) int_x^inf (t-x)^{alpha-1} t^{-eta-alpha} f(t) dt, computed
// after t = x/u. growth_power is the caller's bound on polynomial growth of f;
// the integral needs eta > growth_power.
QuadratureResult erdelyi_kober_right(const MatrixFunction& f, double alpha, double eta, double x,
                                     double growth_power = 0.0, double tol = 1e-11);

// 1/Gamma(mu) int_0^x (x-t)^{mu-1} f(t) dt
QuadratureResult rl_integral(const MatrixFunction& f, double mu, double x, double tol = 1e-11);
// 1/Gamma(alpha) int_b^x (x-t)^{alpha-1} f(t) dt, x > b
QuadratureResult rl_integral_left(const MatrixFunction& f, double alpha, double b, double x, double tol = 1e-11);
// 1/Gamma(alpha) int_x^c (t-x)^{alpha-1} f(t) dt, x < c
QuadratureResult rl_integral_right(const MatrixFunction& f, double alpha, double x, double c, double tol = 1e-11);

// Plain power series of a pFq through z^k.
MatrixPowerSeries hyper_series(const HyperParams& params, int k);

enum class FractionalVariant { RiemannLiouvilleLeft, RiemannLiouvilleRight, Weyl, Classical, WeylIntegral };

enum class BranchPolicy { Principal, Strict };

struct FormalResult {
    MatrixPowerSeries series;
    std::string note;  // branch choice, when one was made
};

// Termwise action of a fractional operator on sum c_k w^k, w the natural
// variable of the variant (x-b, c-x or x). Results carry a matrix offset
// (a multiple of I) for the non-integer power of w.
FormalResult fractional_derivative_formal(const MatrixPowerSeries& f, double alpha, FractionalVariant variant,
                                          BranchPolicy branch = BranchPolicy::Principal);

}  // namespace matspec

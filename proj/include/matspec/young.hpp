#pragma once

#include "matspec/hyper.hpp"
#include "matspec/series.hpp"

namespace matspec {

// Y_A(x) = x^A Gamma^{-1}(A+I) 1F2(I; (A+I)/2, (A+2I)/2; -x^2/4), x > 0
SquareMatrix young_Y(const SquareMatrix& a, double x, const SeriesControl& ctrl = {});
// The same function as x^A sum_k (-1)^k Gamma^{-1}(A+(2k+1)I) x^{2k}.
SquareMatrix young_Y_gamma_sum(const SquareMatrix& a, double x, const SeriesControl& ctrl = {});
// Gamma^{-1}(A+I) (x/2)^A 0F1(-; A+I; -x^2/4), x > 0
SquareMatrix bessel_J_matrix(const SquareMatrix& a, double x, const SeriesControl& ctrl = {});

// Coefficients of x^A Y-series: plain part sum_k (-1)^k Gamma^{-1}(A+(2k+1)I) x^{2k}, through x^k_max.
MatrixPowerSeries young_series(const SquareMatrix& a, int k_max);

enum class YoungExpansion { Eq39, Eq40, Eq41, Eq42 };
enum class ExpansionForm { Printed, Corrected };

struct ExpansionValue {
    SquareMatrix value;      // partial sum through k_max
    SquareMatrix reference;  // young_Y or bessel_J_matrix evaluated directly
    double error = 0.0;      // relative distance between the two
    double last_term = 0.0;  // norm of the k_max term, a tail estimate
};

// Partial sums of the Bessel/Young cross expansions; x in (0, 4), k_max <= 25.
// 4.39 and 4.41 expand Y_A and J_{A/2}; 4.40 and 4.42 expand Y_A and J_{(A-I)/2}.
ExpansionValue young_expansion(YoungExpansion variant, const SquareMatrix& a, double x, int k_max,
                               ExpansionForm form = ExpansionForm::Printed);

enum class YoungOde { Eq47, Prose, Eq45 };

// Formal residual of the third-order equation on the Y_A series (Eq45: on W = 1F2(...; -x^2/4)).
double young_ode_residual(const SquareMatrix& a, int k_order, YoungOde form = YoungOde::Eq47);

}  // namespace matspec

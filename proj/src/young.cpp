#include "matspec/young.hpp"

#include <cmath>

#include "matspec/gamma.hpp"
#include "matspec/transforms.hpp"

namespace matspec {

namespace {

void require_positive(double x) {
    if (!(x > 0.0)) throw Error(ErrorCode::DomainError, "x must be positive");
}

SquareMatrix eye(std::size_t n) { return SquareMatrix::identity(n); }

double inv_factorial(int k) { return std::exp(-std::lgamma(k + 1.0)); }

}  // namespace

SquareMatrix young_Y(const SquareMatrix& a, double x, const SeriesControl& ctrl) {
    require_positive(x);
    const std::size_t n = a.dim();
    const HyperParams h({eye(n)}, {a.shifted(1.0) * 0.5, a.shifted(2.0) * 0.5});
    return matrix_power(x, a) * reciprocal_gamma(a.shifted(1.0)) * hyp(h, -x * x / 4.0, ctrl);
}

SquareMatrix young_Y_gamma_sum(const SquareMatrix& a, double x, const SeriesControl& ctrl) {
    require_positive(x);
    ctrl.validate();
    SquareMatrix sum(a.dim());
    int small = 0;
    for (int k = 0; k < ctrl.maxTerms; ++k) {
        const SquareMatrix term = reciprocal_gamma(a.shifted(2.0 * k + 1.0)) * (std::pow(-x * x, k));
        sum += term;
        small = term.norm() <= ctrl.absTol * std::max(sum.norm(), 1.0) ? small + 1 : 0;
        if (small >= ctrl.tailWindow) return matrix_power(x, a) * sum;
    }
    throw Error(ErrorCode::Nonconvergence, "gamma-sum form of Y_A did not converge");
}

SquareMatrix bessel_J_matrix(const SquareMatrix& a, double x, const SeriesControl& ctrl) {
    require_positive(x);
    const HyperParams h({}, {a.shifted(1.0)}, a.dim());
    return reciprocal_gamma(a.shifted(1.0)) * matrix_power(x / 2.0, a) * hyp(h, -x * x / 4.0, ctrl);
}

MatrixPowerSeries young_series(const SquareMatrix& a, int k_max) {
    if (k_max < 0) throw Error(ErrorCode::DomainError, "series order must be non-negative");
    std::vector<SquareMatrix> c;
    for (int p = 0; p <= k_max; ++p) {
        if (p % 2) {
            c.emplace_back(a.dim());
            continue;
        }
        const int k = p / 2;
        c.push_back(reciprocal_gamma(a.shifted(2.0 * k + 1.0)) * ((k % 2) ? -1.0 : 1.0));
    }
    return MatrixPowerSeries(std::move(c), a, 0);
}

ExpansionValue young_expansion(YoungExpansion variant, const SquareMatrix& a, double x, int k_max,
                               ExpansionForm form) {
    if (!(x > 0.0 && x < 4.0)) throw Error(ErrorCode::DomainError, "expansions are taken for x in (0, 4)");
    if (k_max < 0 || k_max > 25) throw Error(ErrorCode::DomainError, "k_max must lie in [0, 25]");
    const bool fixed = form == ExpansionForm::Corrected;
    const SquareMatrix ident = eye(a.dim());
    const SquareMatrix half = a * 0.5;
    const SquareMatrix ga = reciprocal_gamma(a.shifted(1.0));

    auto term = [&](int k) -> SquareMatrix {
        const double dk = k;
        const SquareMatrix inv2k = pochhammer_inverse(a.shifted(1.0), 2 * k);
        const double sign = (k % 2) ? -1.0 : 1.0;
        switch (variant) {
        case YoungExpansion::Eq39: {
            SquareMatrix t = matrix_power(2.0 * x, half.shifted(dk)) * pochhammer_value((a - ident) * 0.5, k) * inv2k *
                             ga * matrix_gamma(half.shifted(dk + 1.0)) * bessel_J_matrix(half.shifted(dk), x);
            // printed with an extra x^{2k}; the variable z in (2z) is read as x
            if (!fixed) t *= std::pow(x, 2 * k);
            return t * inv_factorial(k);
        }
        case YoungExpansion::Eq40:
            return pochhammer_value(half, k) * inv2k * matrix_power(2.0 * x, half.shifted(dk + 0.5)) * ga *
                   matrix_gamma(half.shifted(dk + 0.5)) * bessel_J_matrix(half.shifted(dk - 0.5), x) *
                   (0.5 * inv_factorial(k));
        case YoungExpansion::Eq41:
            return matrix_power(2.0 * x, -half) * pochhammer_value((a - ident) * 0.5, k) * inv2k *
                   reciprocal_gamma(half.shifted(1.0)) * matrix_gamma(a.shifted(2.0 * dk + 1.0)) *
                   young_Y(a.shifted(2.0 * dk), x) * (sign * inv_factorial(k));
        case YoungExpansion::Eq42: {
            const SquareMatrix power = fixed ? half.shifted(0.5) : half;
            return pochhammer_value(half, k) * matrix_power(2.0 * x, -power) * inv2k *
                   reciprocal_gamma(half.shifted(0.5)) * matrix_gamma(a.shifted(2.0 * dk + 1.0)) *
                   young_Y(a.shifted(2.0 * dk), x) * (2.0 * sign * inv_factorial(k));
        }
        }
        throw Error(ErrorCode::DomainError, "unknown expansion");
    };

    ExpansionValue out{SquareMatrix(a.dim()), SquareMatrix(a.dim())};
    for (int k = 0; k <= k_max; ++k) {
        const SquareMatrix t = term(k);
        out.value += t;
        out.last_term = t.norm();
    }
    switch (variant) {
    case YoungExpansion::Eq39:
    case YoungExpansion::Eq40: out.reference = young_Y(a, x); break;
    case YoungExpansion::Eq41: out.reference = bessel_J_matrix(half, x); break;
    case YoungExpansion::Eq42: out.reference = bessel_J_matrix(half.shifted(-0.5), x); break;
    }
    out.error = relative_difference(out.value, out.reference);
    return out;
}

double young_ode_residual(const SquareMatrix& a, int k_order, YoungOde form) {
    using Op = SeriesOperator;
    const SquareMatrix ident = eye(a.dim());
    const Op d = Op::d();
    if (form == YoungOde::Eq45) {
        const HyperParams h({ident}, {a.shifted(1.0) * 0.5, a.shifted(2.0) * 0.5});
        const MatrixPowerSeries w = hyper_series(h, k_order / 2).substitute(-0.25, 2);
        const Op op = Op::z(2) * d * d * d + Op::constant(a.shifted(1.0) * 2.0) * Op::z() * d * d +
                      (Op::z(2) + Op::constant(a * a.shifted(1.0))) * d + Op::scalar(2.0) * Op::z();
        return residual_of(apply_operator(w, op)).residual;
    }
    const SquareMatrix c = ident * 2.0 - a;
    const MatrixPowerSeries y = young_series(a, k_order);
    const Op op = form == YoungOde::Eq47
                      ? Op::z(3) * d * d * d + Op::constant(c) * Op::z(2) * d * d + Op::z(3) * d +
                            Op::constant(c) * Op::z(2)
                      : Op::z() * d * d * d + Op::constant(c) * d * d + Op::z() * d + Op::constant(c);
    return residual_of(apply_operator(y, op)).residual;
}

}  // namespace matspec

#include "matspec/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace matspec {

void SeriesControl::validate() const {
    if (tailWindow < 1 || maxTerms < tailWindow || !(absTol > 0.0))
        throw Error(ErrorCode::DomainError, "series control needs maxTerms >= tailWindow >= 1 and absTol > 0");
}

HyperParams::HyperParams(std::vector<SquareMatrix> numerators, std::vector<SquareMatrix> denominators,
                         std::size_t dim)
    : dim_(dim), num_(std::move(numerators)), den_(std::move(denominators)) {
    std::vector<const SquareMatrix*> all;
    for (const auto& m : num_) all.push_back(&m);
    for (const auto& m : den_) all.push_back(&m);
    if (dim_ == 0) {
        if (all.empty()) throw Error(ErrorCode::ShapeMismatch, "dimension needed when there are no parameters");
        dim_ = all.front()->dim();
    }
    for (const auto* m : all)
        if (m->dim() != dim_) throw Error(ErrorCode::ShapeMismatch, "parameters must share one dimension");
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (!commutes(*all[i], *all[j]))
                throw Error(ErrorCode::NonCommuting, "hypergeometric parameters must commute");
    double bound = 0.0;
    for (const auto& d : den_) bound = std::max(bound, d.norm());
    // D + sI with s > 2||D|| + 1 has smallest singular value above ||D|| + 1,
    // so only the first few shifts need an explicit test.
    const int upto = den_.empty() ? -1 : static_cast<int>(std::ceil(2.0 * bound + 1.0));
    for (int s = 0; s <= upto; ++s)
        for (const auto& d : den_)
            if (!d.shifted(static_cast<double>(s)).is_invertible())
                throw Error(ErrorCode::SingularDenominator,
                            "denominator parameter plus " + std::to_string(s) + "I is singular");
}

namespace {

Eigen::MatrixXcd step(const HyperParams& params, const Eigen::MatrixXcd& u, int s) {
    Eigen::MatrixXcd next = u;
    for (const auto& a : params.numerators()) next = next * a.shifted(static_cast<double>(s)).eigen();
    for (const auto& b : params.denominators()) next = b.shifted(static_cast<double>(s)).eigen().partialPivLu().solve(next);
    return next / static_cast<double>(s + 1);
}

}  // namespace

SeriesValue eval_pFq(const HyperParams& params, Complex z, const SeriesControl& ctrl) {
    ctrl.validate();
    const std::size_t n = params.dim();
    // The running term U_s z^s, so neither factor over- or underflows alone.
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd sum = term;
    int small = 0;
    double last = 1.0, prev = 1.0, mass = 1.0;
    for (int s = 0; s < ctrl.maxTerms; ++s) {
        term = step(params, z * term, s);
        sum += term;
        if (!sum.allFinite())
            throw Error(ErrorCode::Nonconvergence, "partial sums overflowed at term " + std::to_string(s + 1));
        prev = last;
        last = term.stableNorm();
        mass += last;
        if (last <= ctrl.absTol * std::max(1.0, sum.stableNorm()))
            ++small;
        else
            small = 0;
        if (small >= ctrl.tailWindow) {
            double tail = 0.0;
            if (last > 0.0) {
                const double ratio = prev > 0.0 ? last / prev : 1.0;
                tail = ratio < 1.0 ? last * ratio / (1.0 - ratio) : last;
            }
            const double size = sum.stableNorm();
            const double condition = size > 0.0 ? mass / size : HUGE_VAL;
            // every digit cancelled; the partial sum is rounding noise
            if (condition * std::numeric_limits<double>::epsilon() > 1.0 && mass > 1.0)
                throw Error(ErrorCode::Nonconvergence,
                            "cancellation: term norms sum to " + std::to_string(mass) + " against a result of size " +
                                std::to_string(size));
            return SeriesValue{SquareMatrix(std::move(sum)), tail, s + 2, condition};
        }
    }
    throw Error(ErrorCode::Nonconvergence, "series did not converge within " + std::to_string(ctrl.maxTerms) + " terms");
}

SquareMatrix hyp(const HyperParams& params, Complex z, const SeriesControl& ctrl) {
    return eval_pFq(params, z, ctrl).value;
}

std::vector<SquareMatrix> pFq_coefficients(const HyperParams& params, int k) {
    if (k < 0) throw Error(ErrorCode::DomainError, "coefficient count must be non-negative");
    const std::size_t n = params.dim();
    std::vector<SquareMatrix> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
    out.emplace_back(u);
    for (int s = 0; s < k; ++s) {
        u = step(params, u, s);
        out.emplace_back(u);
    }
    return out;
}

OrderTypeEstimate order_type_estimate(const HyperParams& params, const std::vector<int>& s_grid, double rho) {
    if (s_grid.empty()) return {};
    const int top = *std::max_element(s_grid.begin(), s_grid.end());
    const std::size_t n = params.dim();
    std::vector<double> log_norm(static_cast<std::size_t>(top) + 1, 0.0);
    std::vector<bool> zero(static_cast<std::size_t>(top) + 1, false);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
    double log_scale = 0.0;
    bool dead = false;
    for (int s = 0; s < top; ++s) {
        if (!dead) {
            u = step(params, u, s);
            const double nu = u.norm();
            if (nu == 0.0) {
                dead = true;
            } else {
                u /= nu;
                log_scale += std::log(nu);
            }
        }
        zero[s + 1] = dead;
        // u has unit Frobenius norm; the spectral norm is its SVD top value.
        if (!dead) {
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(u);
            log_norm[s + 1] = log_scale + std::log(svd.singularValues()(0));
        }
    }
    OrderTypeEstimate est;
    for (int s : s_grid) {
        if (s < 2) throw Error(ErrorCode::DomainError, "sample points must be at least 2");
        if (zero[s]) throw Error(ErrorCode::DegenerateSeries, "coefficient U_" + std::to_string(s) + " vanishes");
        const double ln_u = log_norm[s];
        est.orderSamples.emplace_back(s, s * std::log(static_cast<double>(s)) / (-ln_u));
        est.typeSamples.emplace_back(s, s * std::exp(rho * ln_u / s) / (std::exp(1.0) * rho));
    }
    return est;
}

}  // namespace matspec

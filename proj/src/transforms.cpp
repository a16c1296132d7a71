#include "matspec/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "matspec/scalar_gamma.hpp"

namespace matspec {

namespace {

std::size_t probe_dim(const MatrixFunction& f, double t) { return f(t).dim(); }

SquareMatrix scalar_matrix(std::size_t n, double v) { return SquareMatrix::scalar(n, v); }

void require_order(double order, const char* what) {
    if (!(order > 0.0)) throw Error(ErrorCode::DomainError, std::string(what) + " must be positive");
}

// (hi - lo)^alpha / Gamma(alpha) int_0^1 (1-u)^{alpha-1} f(lo + (hi-lo)u) du,
// mirrored so that the singular factor always sits at u = 1.
QuadratureResult unit_convolution(const MatrixFunction& g, double alpha, double len, std::size_t n, double tol) {
    QuadratureResult r = beta_weighted_integral(scalar_matrix(n, 1.0), scalar_matrix(n, alpha), g, tol);
    const double c = std::pow(len, alpha) / std::tgamma(alpha);
    r.value *= c;
    r.error_estimate *= c;
    return r;
}

double tail_cutoff(double sigma, double constant, double tol, double poly, double start) {
    // smallest T (on a doubling-then-bisection search) with
    // constant * T^poly * e^{-sigma T} / (sigma - poly/T) <= tol
    auto bound = [&](double t) {
        const double denom = sigma - std::max(poly, 0.0) / t;
        if (denom <= 0.0) return HUGE_VAL;
        return constant * std::pow(t, std::max(poly, 0.0)) * std::exp(-sigma * t) / denom;
    };
    double hi = std::max(start, 1.0);
    int guard = 0;
    while (bound(hi) > tol) {
        hi *= 2.0;
        if (++guard > 60) throw Error(ErrorCode::TailBoundViolation, "no finite cutoff meets the tail tolerance");
    }
    double lo = std::max(start, 1.0);
    if (bound(lo) <= tol) return lo;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (bound(mid) > tol ? lo : hi) = mid;
    }
    return hi;
}

QuadratureResult laplace_panels(const MatrixFunction& integrand, double a, double b, std::size_t n, double tol) {
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / 2.0)));
    return adaptive_integral(integrand, a, b, n, tol, 1e-300, panels, 20000);
}

}  // namespace

QuadratureResult beta_transform(const MatrixFunction& f, const SquareMatrix& a, const SquareMatrix& b, double tol) {
    QuadratureResult r = beta_weighted_integral(a, b, f, tol);
    if (r.error_estimate > std::max(tol * r.value.norm(), 1e-300))
        throw Error(ErrorCode::QuadratureError, "beta transform error estimate above tolerance");
    return r;
}

QuadratureResult laplace_transform(const MatrixFunction& f, Complex s, const LaplaceOptions& opts) {
    const double sigma = s.real() - opts.growth_rate;
    if (sigma <= 0.0) throw Error(ErrorCode::TailBoundViolation, "Re(s) does not exceed the growth rate");
    double cutoff = opts.cutoff;
    const double tail_tol = 0.5 * opts.tol;
    if (cutoff > 0.0) {
        const double tail = opts.growth_constant * std::exp(-sigma * cutoff) / sigma;
        if (tail > tail_tol) throw Error(ErrorCode::TailBoundViolation, "tail bound exceeds tolerance at the cutoff");
    } else {
        cutoff = tail_cutoff(sigma, opts.growth_constant, tail_tol, 0.0, 1.0);
    }
    const std::size_t n = probe_dim(f, 0.0);
    auto g = [&](double t) { return SquareMatrix(std::exp(-s * t) * f(t)); };
    QuadratureResult r = laplace_panels(g, 0.0, cutoff, n, 0.1 * opts.tol);
    r.error_estimate += opts.growth_constant * std::exp(-sigma * cutoff) / sigma;
    return r;
}

QuadratureResult laplace_transform_weighted(const MatrixFunction& f, const SquareMatrix& p, Complex s,
                                            const LaplaceOptions& opts) {
    const double sigma = s.real() - opts.growth_rate;
    if (sigma <= 0.0) throw Error(ErrorCode::TailBoundViolation, "Re(s) does not exceed the growth rate");
    const std::size_t n = p.dim();
    const SquareMatrix ident = SquareMatrix::identity(n);
    const Spectrum sp = spectrum(p);
    if (sp.minRe <= 0.0) throw Error(ErrorCode::NotPositiveStable, "weight exponent must be positive stable");

    // Bound ||t^{P-I}|| <= kappa t^{maxRe-1}; kappa read off at t = e.
    const ExponentialFamily power(p - ident);
    const double poly = sp.maxRe - 1.0;
    const double kappa = std::max(1.0, power(1.0).norm() / std::exp(poly));
    const double tail_tol = 0.5 * opts.tol;
    double cutoff = opts.cutoff;
    auto tail_at = [&](double t) {
        const double denom = sigma - std::max(poly, 0.0) / t;
        if (denom <= 0.0) return HUGE_VAL;
        return kappa * opts.growth_constant * std::pow(t, std::max(poly, 0.0)) * std::exp(-sigma * t) / denom;
    };
    if (cutoff > 0.0) {
        if (cutoff <= 1.0 || tail_at(cutoff) > tail_tol)
            throw Error(ErrorCode::TailBoundViolation, "tail bound exceeds tolerance at the cutoff");
    } else {
        cutoff = tail_cutoff(sigma, kappa * opts.growth_constant, tail_tol, poly, 2.0);
    }

    auto near = [&](double t) { return SquareMatrix(std::exp(-s * t) * f(t)); };
    QuadratureResult head = beta_weighted_integral(p, ident, near, 0.1 * opts.tol);
    auto far = [&](double t) { return SquareMatrix(std::exp(-s * t) * (power(std::log(t)) * f(t))); };
    QuadratureResult body = laplace_panels(far, 1.0, cutoff, n, 0.1 * opts.tol);
    return QuadratureResult{head.value + body.value, head.error_estimate + body.error_estimate + tail_at(cutoff),
                            head.evaluations + body.evaluations};
}

QuadratureResult erdelyi_kober_left(const MatrixFunction& f, double alpha, double eta, double x, double tol) {
    require_order(alpha, "alpha");
    if (!(x > 0.0)) throw Error(ErrorCode::DomainError, "x must be positive");
    if (!(eta > -1.0)) throw Error(ErrorCode::DivergentIntegral, "t^eta is not integrable at 0 for eta <= -1");
    const std::size_t n = probe_dim(f, x);
    auto g = [&](double u) { return f(x * u); };
    QuadratureResult r =
        beta_weighted_integral(scalar_matrix(n, eta + 1.0), scalar_matrix(n, alpha), g, tol);
    const double c = 1.0 / std::tgamma(alpha);
    r.value *= c;
    r.error_estimate *= c;
    return r;
}

QuadratureResult erdelyi_kober_right(const MatrixFunction& f, double alpha, double eta, double x,
                                     double growth_power, double tol) {
    require_order(alpha, "alpha");
    if (!(x > 0.0)) throw Error(ErrorCode::DomainError, "x must be positive");
    if (!(eta > growth_power))
        throw Error(ErrorCode::DivergentIntegral, "eta must exceed the growth power of the integrand");
    // u^kappa f(x/u) must stay bounded as u -> 0 for the weight split below to be valid.
    auto damped = [&](double u) { return SquareMatrix(std::pow(u, growth_power) * f(x / u)); };
    auto probe = [&](double u) {
        try {
            const double v = damped(u).norm();
            return std::isfinite(v) ? v : HUGE_VAL;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Nonconvergence) throw;
            return HUGE_VAL;  // f overflowed out there
        }
    };
    const double r1 = probe(1e-2), r2 = probe(1e-4), r3 = probe(1e-6);
    const double base = std::max({r1, 1e-300});
    if (r3 > 1e3 * std::max(base, 1.0) || (r3 > 10.0 * r2 && r2 > 10.0 * r1 && r3 > 1.0))
        throw Error(ErrorCode::DivergentIntegral, "integrand grows faster than the declared power");
    const std::size_t n = probe_dim(f, x);
    QuadratureResult r =
        beta_weighted_integral(scalar_matrix(n, eta - growth_power), scalar_matrix(n, alpha), damped, tol);
    const double c = 1.0 / std::tgamma(alpha);
    r.value *= c;
    r.error_estimate *= c;
    return r;
}

QuadratureResult rl_integral(const MatrixFunction& f, double mu, double x, double tol) {
    return rl_integral_left(f, mu, 0.0, x, tol);
}

QuadratureResult rl_integral_left(const MatrixFunction& f, double alpha, double b, double x, double tol) {
    require_order(alpha, "order");
    if (!(x > b)) throw Error(ErrorCode::DomainError, "left integral needs x > b");
    const double len = x - b;
    const std::size_t n = probe_dim(f, x);
    return unit_convolution([&](double u) { return f(b + len * u); }, alpha, len, n, tol);
}

QuadratureResult rl_integral_right(const MatrixFunction& f, double alpha, double x, double c, double tol) {
    require_order(alpha, "order");
    if (!(c > x)) throw Error(ErrorCode::DomainError, "right integral needs x < c");
    const double len = c - x;
    const std::size_t n = probe_dim(f, x);
    return unit_convolution([&](double u) { return f(c - len * u); }, alpha, len, n, tol);
}

MatrixPowerSeries hyper_series(const HyperParams& params, int k) {
    return MatrixPowerSeries::from_coefficients(pFq_coefficients(params, k));
}

namespace {

MatrixPowerSeries termwise(const MatrixPowerSeries& f, double offset, const std::function<Complex(int)>& factor) {
    if (f.has_offset()) throw Error(ErrorCode::DomainError, "formal fractional rules act on plain series");
    std::vector<SquareMatrix> c;
    std::vector<double> mag;
    for (int k = f.low(); k <= f.high(); ++k) {
        const Complex w = factor(k);
        c.push_back(f.coeff(k) * w);
        mag.push_back(f.magnitude(k) * std::abs(w));
    }
    return MatrixPowerSeries(std::move(c), std::move(mag), SquareMatrix::scalar(f.dim(), offset), f.low());
}

}  // namespace

FormalResult fractional_derivative_formal(const MatrixPowerSeries& f, double alpha, FractionalVariant variant,
                                          BranchPolicy branch) {
    FormalResult out{f, {}};
    switch (variant) {
    case FractionalVariant::RiemannLiouvilleLeft:
    case FractionalVariant::RiemannLiouvilleRight: {
        if (!(alpha >= 0.0)) throw Error(ErrorCode::DomainError, "order must be non-negative");
        const int n = static_cast<int>(std::floor(alpha)) + 1;
        const double lift = n - alpha;
        // I^{n-alpha} w^k = Gamma(k+1)/Gamma(n-alpha+k+1) w^{k+n-alpha}
        MatrixPowerSeries s = termwise(f, lift, [&](int k) {
            return std::exp(std::lgamma(k + 1.0)) * complex_rgamma(Complex(lift + k + 1.0));
        });
        const bool right = variant == FractionalVariant::RiemannLiouvilleRight;
        // On the right, d/dx = -d/dw; the (-1)^n prefactor of the operator cancels it.
        for (int i = 0; i < n; ++i) s = right ? Complex(-1.0) * derivative(s) : derivative(s);
        if (right && n % 2 == 1) s *= -1.0;
        out.series = s;
        return out;
    }
    case FractionalVariant::Weyl: {
        Complex phase = 1.0;
        if (alpha != std::floor(alpha)) {
            if (branch == BranchPolicy::Strict)
                throw Error(ErrorCode::NonIntegerPowerAmbiguity, "(-1)^alpha has no single value for non-integer alpha");
            out.note = "(-1)^alpha taken on the principal branch exp(i pi alpha)";
        }
        phase = std::exp(Complex(0.0, M_PI * alpha));
        out.series = termwise(f, -alpha, [&](int k) {
            return phase * std::exp(std::lgamma(k + 1.0)) * complex_rgamma(Complex(k - alpha + 1.0));
        });
        return out;
    }
    case FractionalVariant::Classical:
        out.series = termwise(f, -alpha, [&](int k) {
            return std::exp(std::lgamma(k + 1.0)) * complex_rgamma(Complex(k - alpha + 1.0));
        });
        return out;
    case FractionalVariant::WeylIntegral: {
        if (!(alpha > 0.0)) throw Error(ErrorCode::DomainError, "Weyl integral order must be positive");
        out.series = termwise(f, alpha, [&](int k) {
            double poch = 1.0;
            for (int j = 0; j < k; ++j) poch *= alpha + j;
            return Complex(1.0 / poch);
        });
        return out;
    }
    }
    return out;
}

}  // namespace matspec

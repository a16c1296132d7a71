#include <cmath>

#include "catalog_support.hpp"
#include "matspec/scalar_gamma.hpp"
#include "matspec/transforms.hpp"

namespace matspec {

namespace {

using namespace detail;

// A, B, C for a 1F2 plus the parameters of an integral weight.
struct Draw {
    std::size_t n;
    SquareMatrix a, b, c;
    SpectralSampler s;

    explicit Draw(const SampleContext& ctx) : n(ctx.dim), a(ctx.dim), b(ctx.dim), c(ctx.dim), s(ctx.sampler()) {
        a = draw(s);
        b = draw(s);
        c = draw(s);
    }
    SquareMatrix stable(double lo = 0.3, double hi = 2.5) { return draw(s, lo, hi); }
    double u(double lo, double hi) { return s.uniform(lo, hi); }
    Complex z(double r) { return s.complex_in_disk(r); }
    CachedSeries f12(double radius) const { return CachedSeries({a}, {b, c}, radius); }
};

IdentityEntry entry(std::string id, std::string eq, std::string desc, CheckMode mode, ResidualFn printed) {
    IdentityEntry e;
    e.id = std::move(id);
    e.paperEq = std::move(eq);
    e.description = std::move(desc);
    e.mode = mode;
    e.printed = std::move(printed);
    return e;
}

IdentityEntry typo(IdentityEntry e, ResidualFn corrected, std::string form) {
    e.kind = EntryKind::SuspectedTypo;
    e.corrected = std::move(corrected);
    e.correctedForm = std::move(form);
    return e;
}

SquareMatrix gamma_product(const SquareMatrix& p, const SquareMatrix& q) { return matrix_beta(p, q); }

// ---- section 2 integral representations ---------------------------------

double int_rep(const SampleContext& ctx) {
    Draw d(ctx);
    const SquareMatrix a = d.stable(0.3, 1.2);
    const SquareMatrix b = a + d.stable(0.4, 1.5);
    const SquareMatrix c = a + d.stable(0.4, 1.5);
    const Complex z = d.z(2.0);
    const SquareMatrix target = pfq({a}, {b, c}, z);
    const CachedSeries f0c({}, {c}, std::abs(z)), f0b({}, {b}, std::abs(z));
    const SquareMatrix lhs1 = matrix_gamma(b) * reciprocal_gamma(a) * reciprocal_gamma(b - a) *
                              beta_transform([&](double t) { return f0c(z * t); }, a, b - a).value;
    const SquareMatrix lhs2 = matrix_gamma(c) * reciprocal_gamma(a) * reciprocal_gamma(c - a) *
                              beta_transform([&](double t) { return f0b(z * t); }, a, c - a).value;
    return std::max(rel(lhs1, target), rel(lhs2, target));
}

double eq2_9(const SampleContext& ctx) {
    Draw d(ctx);
    const SquareMatrix a1 = d.stable(0.3, 1.2);
    const SquareMatrix b1 = a1 + d.stable(0.4, 1.5);
    const Complex z = d.z(0.95);
    const CachedSeries f = d.f12(1.0);
    const SquareMatrix lhs = beta_transform([&](double t) { return f(z * t); }, a1, b1 - a1).value;
    const SquareMatrix rhs = gamma_product(a1, b1 - a1) * pfq({d.a, a1}, {d.b, b1, d.c}, z);
    return rel(lhs, rhs);
}

double eq2_10(const SampleContext& ctx, bool fixed) {
    Draw d(ctx);
    const SquareMatrix a1 = d.stable(), b1 = d.stable();
    const Complex z = d.z(0.95);
    const CachedSeries f = d.f12(1.0);
    const SquareMatrix lhs = beta_transform([&](double t) { return f(z * t); }, a1, b1).value;
    const SquareMatrix den = fixed ? a1 + b1 : d.b + b1;
    return rel(lhs, gamma_product(a1, b1) * pfq({d.a, a1}, {d.b, den, d.c}, z));
}

double eq2_11(const SampleContext& ctx, bool fixed) {
    Draw d(ctx);
    const SquareMatrix p = d.stable(), q = d.stable();
    const double t = d.u(0.0, 0.5), x = t + d.u(0.5, 1.5);
    const Complex z = d.z(0.95);
    const CachedSeries f = d.f12(1.5);
    const SquareMatrix lhs =
        endpoint_singular_integral(t, x, q, p, [&](double s) { return f(z * (s - t)); }).value;
    const SquareMatrix pre = gamma_product(p, q) * matrix_power(x - t, p + q - eye(d.n));
    const SquareMatrix rhs = fixed ? pfq({d.a, q}, {d.b, d.c, p + q}, z * (x - t))
                                   : pfq({d.a, p}, {d.b, d.b + q, d.c}, z * (x - t));
    return rel(lhs, pre * rhs);
}

// 2.12 (sign +1) and 2.13 (sign -1); scaled adds a complex z to the argument.
double eq2_12(const SampleContext& ctx, double sign, bool scaled) {
    Draw d(ctx);
    const SquareMatrix p = d.stable(), q = d.stable();
    const double x = d.u(-0.5, 0.5), y = x + d.u(0.3, 1.5);
    const Complex z = scaled ? d.z(1.0) : Complex(1.0);
    const CachedSeries f = d.f12(1.5);
    const SquareMatrix lhs =
        endpoint_singular_integral(x, y, q, p, [&](double t) { return f(z * sign * (t - x)); }).value;
    const SquareMatrix rhs = gamma_product(p, q) * matrix_power(y - x, p + q - eye(d.n)) *
                             pfq({d.a, q}, {p + q, d.b, d.c}, z * sign * (y - x));
    return rel(lhs, rhs);
}

double eq2_16(const SampleContext& ctx, bool fixed) {
    Draw d(ctx);
    const SquareMatrix a1 = d.stable(0.3, 1.5);
    const double p = d.u(1.5, 2.5);
    const double lambda = d.u(-0.25, 0.25) * p;
    const CachedSeries f = d.f12(1.0);
    auto g = [&](double t) { return f(lambda * lambda * t * t); };
    LaplaceOptions opts;
    opts.growth_rate = 0.5 * p;
    opts.growth_constant = growth_constant([&](double t) { return pfq({d.a}, {d.b, d.c}, lambda * lambda * t * t); },
                                           opts.growth_rate, 40.0);
    opts.tol = 1e-10;
    const SquareMatrix lhs = laplace_transform_weighted(g, a1 * 2.0, p, opts).value;
    const SquareMatrix pre = matrix_gamma(a1 * 2.0) * matrix_power(p, a1 * -2.0);
    const Complex w = 4.0 * lambda * lambda / (p * p);
    const SquareMatrix rhs = fixed ? pfq({d.a, a1, a1.shifted(0.5)}, {d.b, d.c}, w)
                                   : pfq({d.a, a1 * 0.5, (a1 + eye(d.n)) * 0.5}, {d.b, d.c}, w);
    return rel(lhs, pre * rhs);
}

double eq2_17(const SampleContext& ctx, bool fixed) {
    Draw d(ctx);
    const SquareMatrix a1 = d.stable(), b1 = d.stable();
    const double x = d.u(0.3, 1.5);
    const Complex z = d.z(0.95);
    const CachedSeries f = d.f12(1.5);
    const SquareMatrix lhs =
        endpoint_singular_integral(0.0, x, b1, a1, [&](double s) { return f(z * (x - s)); }).value;
    const SquareMatrix pre = gamma_product(a1, b1) * matrix_power(x, a1 + b1 - eye(d.n));
    const SquareMatrix rhs =
        fixed ? pfq({d.a, a1}, {d.b, d.c, a1 + b1}, z * x) : pfq({d.a, a1}, {d.b, d.b + b1, d.c}, z * x);
    return rel(lhs, pre * rhs);
}

double thm3_2_sec2(const SampleContext& ctx) {
    Draw d(ctx);
    const SquareMatrix p = d.stable(), q = d.stable();
    const double x = d.u(0.2, 2.0);
    const CachedSeries f = d.f12(2.0);
    const SquareMatrix lhs = endpoint_singular_integral(0.0, x, p, q, [&](double t) { return f(t); }).value;
    const SquareMatrix rhs =
        matrix_power(x, p + q - eye(d.n)) * gamma_product(p, q) * pfq({d.a, p}, {d.b, d.c, p + q}, x);
    return rel(lhs, rhs);
}

// ---- expansions of Theorems 2.12 and 2.14 --------------------------------

// Sum of term(k) for k = 0..kmax; the terms are expected to have decayed.
template <class T>
SquareMatrix series_sum(int kmax, const T& term) {
    SquareMatrix acc = term(0);
    for (int k = 1; k <= kmax; ++k) acc += term(k);
    return acc;
}

double inv_factorial(int k) { return std::exp(-std::lgamma(k + 1.0)); }

// 2.28 (swap=false) and 2.29 (swap=true)
double eq2_28(const SampleContext& ctx, bool swap) {
    Draw d(ctx);
    const SquareMatrix a = d.stable(0.3, 1.2);
    const SquareMatrix b = a + d.stable(0.3, 1.5), c = d.stable();
    const SquareMatrix& big = swap ? c : b;  // the parameter paired with A in (X-A)_k
    const SquareMatrix& other = swap ? b : c;
    const Complex z = d.z(0.9);
    const SquareMatrix lhs = pfq({a}, {b, c}, z);
    const PochhammerCache pd(big - a, 60);
    const SquareMatrix rhs = series_sum(60, [&](int k) {
        const SquareMatrix coef = pd[k] * pochhammer_inverse(b, k) * pochhammer_inverse(c, k);
        return SquareMatrix(coef * pfq({}, {other.shifted(k)}, z) * (std::pow(-z, k) * inv_factorial(k)));
    });
    return rel(lhs, rhs);
}

// 2.30 (swap=false) and 2.31 (swap=true)
double eq2_30(const SampleContext& ctx, bool swap) {
    Draw d(ctx);
    const SquareMatrix a = d.stable(0.3, 1.2);
    const SquareMatrix b = a + d.stable(0.3, 1.5), c = a + d.stable(0.3, 1.5);
    const SquareMatrix& paired = swap ? c : b;
    const SquareMatrix& lone = swap ? b : c;
    const Complex z = d.z(0.9);
    const SquareMatrix lhs = pfq({}, {lone}, z);
    const PochhammerCache pd(paired - a, 60);
    const SquareMatrix rhs = series_sum(60, [&](int k) {
        const SquareMatrix coef = pd[k] * pochhammer_inverse(b, k) * pochhammer_inverse(c, k);
        return SquareMatrix(coef * pfq({a}, {b.shifted(k), c.shifted(k)}, z) * (std::pow(z, k) * inv_factorial(k)));
    });
    return rel(lhs, rhs);
}

double eq2_311(const SampleContext& ctx) {
    Draw d(ctx);
    const Complex z = d.z(1.5), t = d.z(0.4);
    const PochhammerCache pa(d.a, 90);
    const SquareMatrix lhs = series_sum(90, [&](int k) {
        return SquareMatrix(pa[k] * pfq({d.a.shifted(k)}, {d.b, d.c}, z) * (std::pow(t, k) * inv_factorial(k)));
    });
    const SquareMatrix rhs = matrix_power(1.0 - t, -d.a) * pfq({d.a}, {d.b, d.c}, z / (1.0 - t));
    return rel(lhs, rhs);
}

double eq2_3111(const SampleContext& ctx) {
    Draw d(ctx);
    const Complex z = d.z(1.5), t = d.z(1.0);
    const PochhammerCache pa(d.a, 40);
    const SquareMatrix lhs = series_sum(40, [&](int k) {
        const SquareMatrix coef = pa[k] * pochhammer_inverse(d.b, k) * pochhammer_inverse(d.c, k);
        return SquareMatrix(coef * pfq({d.a.shifted(k)}, {d.b.shifted(k), d.c.shifted(k)}, z) *
                            (std::pow(t, k) * inv_factorial(k)));
    });
    return rel(lhs, pfq({d.a}, {d.b, d.c}, z + t));
}

double eq2_32(const SampleContext& ctx, bool fixed) {
    Draw d(ctx);
    const SquareMatrix e = d.stable();
    const Complex z = d.z(0.9), t = d.z(0.5);
    const PochhammerCache pe(e, 40);
    const SquareMatrix lhs = series_sum(40, [&](int k) {
        const SquareMatrix coef = pe[k] * pochhammer_inverse(d.b, k) * pochhammer_inverse(d.c, k);
        return SquareMatrix(coef * pfq({d.a}, {d.b.shifted(k), d.c.shifted(k)}, z) *
                            (std::pow(z, k) * inv_factorial(k)));
    });
    SquareMatrix rhs = pfq({d.a + e}, {d.b, d.c}, z);
    if (!fixed) rhs = matrix_power(1.0 - t, -d.a) * rhs;
    return rel(lhs, rhs);
}

// ---- section 2 formal identities ------------------------------------------

MatrixPowerSeries f12_series(const SquareMatrix& a, const SquareMatrix& b, const SquareMatrix& c, int k) {
    return hyper_series(HyperParams({a}, {b, c}), k);
}

double eq2_19(const SampleContext& ctx) {
    Draw d(ctx);
    const int k = std::min(ctx.truncation, 30);
    const SquareMatrix ident = eye(d.n);
    const MatrixPowerSeries f = f12_series(d.a, d.b, d.c, k);
    const MatrixPowerSeries fa = f12_series(d.a + ident, d.b, d.c, k);
    const MatrixPowerSeries fb = f12_series(d.a, d.b - ident, d.c, k);
    const MatrixPowerSeries fc = f12_series(d.a, d.b, d.c - ident, k);
    double r = compare(apply_operator(f, theta_plus(d.a)), fa.left_multiplied(d.a)).residual;
    r = std::max(r, compare(apply_operator(f, theta_plus(d.b - ident)), fb.left_multiplied(d.b - ident)).residual);
    r = std::max(r, compare(apply_operator(f, theta_plus(d.c - ident)), fc.left_multiplied(d.c - ident)).residual);
    return r;
}

double eq2_19_diff(const SampleContext& ctx) {
    Draw d(ctx);
    const int k = std::min(ctx.truncation, 30);
    const SquareMatrix ident = eye(d.n);
    const MatrixPowerSeries f = f12_series(d.a, d.b, d.c, k);
    const MatrixPowerSeries fa = f12_series(d.a + ident, d.b, d.c, k).left_multiplied(d.a);
    const MatrixPowerSeries fb = f12_series(d.a, d.b - ident, d.c, k).left_multiplied(d.b - ident);
    const MatrixPowerSeries fc = f12_series(d.a, d.b, d.c - ident, k).left_multiplied(d.c - ident);
    double r = compare(f.left_multiplied(d.a - d.b + ident), fa - fb).residual;
    r = std::max(r, compare(f.left_multiplied(d.a - d.c + ident), fa - fc).residual);
    r = std::max(r, compare(f.left_multiplied(d.b - d.c), fb - fc).residual);
    return r;
}

SeriesOperator hyper_operator(const SquareMatrix& a, const SquareMatrix& b, const SquareMatrix& c) {
    const SquareMatrix ident = eye(a.dim());
    return SeriesOperator::theta() * theta_plus(b - ident) * theta_plus(c - ident) -
           SeriesOperator::z() * theta_plus(a);
}

double eq2_20(const SampleContext& ctx) {
    Draw d(ctx);
    const MatrixPowerSeries f = f12_series(d.a, d.b, d.c, ctx.truncation);
    return residual_of(apply_operator(f, hyper_operator(d.a, d.b, d.c))).residual;
}

double divided_form(const SampleContext& ctx) {
    Draw d(ctx);
    const SquareMatrix ident = eye(d.n);
    const MatrixPowerSeries f = f12_series(d.a, d.b, d.c, ctx.truncation);
    const SeriesOperator op = theta_plus(d.b) * theta_plus(d.c) * theta_plus(ident) * SeriesOperator::z(-1) -
                              theta_plus(d.a);
    return residual_of(apply_operator(f, op)).residual;
}

double ode3(const SampleContext& ctx) {
    Draw d(ctx);
    const SquareMatrix ident = eye(d.n);
    using Op = SeriesOperator;
    const Op dd = Op::d();
    const Op op = Op::z(2) * dd * dd * dd + Op::constant(d.b + d.c + ident) * Op::z() * dd * dd +
                  (Op::constant(d.b * d.c) - Op::z()) * dd - Op::constant(d.a);
    return residual_of(apply_operator(f12_series(d.a, d.b, d.c, ctx.truncation), op)).residual;
}

// Frobenius basis of Theorem 2.11 checked against the operator of 2.20.
double frobenius_basis(const SampleContext& ctx, bool fixed) {
    Draw d(ctx);
    const SquareMatrix ident = eye(d.n);
    const int k = ctx.truncation;
    const SeriesOperator op = hyper_operator(d.a, d.b, d.c);
    const SquareMatrix ob = ident - d.b, oc = ident - d.c;
    const MatrixPowerSeries y1 = f12_series(d.a, d.b, d.c, k);
    const MatrixPowerSeries y2 = f12_series(ob + d.a, ob + ident, fixed ? ident + d.c - d.b : ident - d.c + d.b, k)
                                     .with_offset(ob);
    const MatrixPowerSeries y3 = f12_series(oc + d.a, ident + d.b - d.c, oc + ident, k).with_offset(oc);
    double r = 0.0;
    for (const MatrixPowerSeries* y : {&y1, &y2, &y3}) r = std::max(r, residual_of(apply_operator(*y, op)).residual);
    return r;
}

// 2.23 applied to Psi for each of the three exponents alpha in {0, I-B, I-C}.
double eq2_23(const SampleContext& ctx, bool fixed) {
    Draw d(ctx);
    const SquareMatrix ident = eye(d.n);
    const int k = ctx.truncation;
    const SquareMatrix& b = d.b;
    const SquareMatrix& c = d.c;
    using Op = SeriesOperator;
    const Op dd = Op::d();
    struct Case {
        SquareMatrix alpha;
        MatrixPowerSeries psi;
    };
    const std::vector<Case> cases = {
        {SquareMatrix(d.n), f12_series(d.a, b, c, k)},
        {ident - b, f12_series(ident - b + d.a, ident * 2.0 - b, ident + c - b, k)},
        {ident - c, f12_series(ident - c + d.a, ident + b - c, ident * 2.0 - c, k)},
    };
    // al (al-I+B)(al-I+C) vanishes exactly for two of the exponents; keep the
    // rounding residue out of the commutation checks.
    auto product = [&](const SquareMatrix& x, const SquareMatrix& y, const SquareMatrix& w) {
        const SquareMatrix p = x * y * w;
        return p.norm() <= 1e-12 * std::max(x.norm() * y.norm() * w.norm(), 1.0) ? SquareMatrix(d.n) : p;
    };
    double r = 0.0;
    for (const Case& cs : cases) {
        const SquareMatrix& al = cs.alpha;
        Op op;
        if (fixed) {
            op = Op::z(2) * dd * dd * dd + Op::constant(al * 3.0 + b + c + ident) * Op::z() * dd * dd +
                 (Op::constant(al * 3.0 * (al - ident) + al * 2.0 * (b + c + ident) + b * c) - Op::z()) * dd +
                 Op::constant(product(al, al - ident + b, al - ident + c)) * Op::z(-1) - Op::constant(al + d.a);
        } else {
            op = Op::z(2) * dd * dd * dd + Op::constant(al * 3.0 - b - c + ident) * Op::z() * dd * dd +
                 (Op::constant(al * 3.0 * (al - ident) + al * 2.0 * (b + c + ident) + b * c) - Op::z()) * dd -
                 (Op::constant(al + d.a) -
                  Op::constant(product(al, al - ident - b, al - ident + c)) * Op::z(-1));
        }
        r = std::max(r, residual_of(apply_operator(cs.psi, op)).residual);
    }
    return r;
}

// ---- section 3 transforms --------------------------------------------------

double eq3_14(const SampleContext& ctx) {
    Draw d(ctx);
    const SquareMatrix p = d.stable(), q = d.stable();
    const Complex z = d.z(2.0);
    const CachedSeries f = d.f12(2.0);
    const SquareMatrix lhs = beta_transform([&](double t) { return f(z * t); }, p, q).value;
    return rel(lhs, gamma_product(p, q) * pfq({d.a, p}, {d.b, d.c, p + q}, z));
}

double eq3_15(const SampleContext& ctx) {
    Draw d(ctx);
    const SquareMatrix p = d.stable(0.5, 2.0);
    const double s = d.u(1.5, 3.0);
    const Complex z = d.z(2.0);
    auto g = [&](double t) { return pfq({d.a}, {d.b, d.c}, z * t); };
    LaplaceOptions opts;
    opts.growth_rate = 0.5 * s;
    opts.growth_constant = growth_constant(g, opts.growth_rate, 40.0);
    opts.tol = 1e-9;
    const CachedSeries f = d.f12(2.0 * 80.0);
    const SquareMatrix lhs = laplace_transform_weighted([&](double t) { return f(z * t); }, p, s, opts).value;
    const SquareMatrix rhs = matrix_gamma(p) * matrix_power(s, -p) * pfq({d.a, p}, {d.b, d.c}, z / s);
    return rel(lhs, rhs);
}

double eq3_16(const SampleContext& ctx, bool fixed) {
    Draw d(ctx);
    const double alpha = d.u(0.3, 2.0), eta = d.u(0.2, 2.0), x = d.u(0.2, 2.0);
    const CachedSeries f = d.f12(2.0);
    const SquareMatrix lhs = erdelyi_kober_left([&](double t) { return f(t); }, alpha, eta, x).value;
    const double h = fixed ? eta + 1.0 : eta;
    const SquareMatrix rhs = pfq({d.a, sc(d.n, h)}, {d.b, d.c, sc(d.n, alpha + h)}, x) *
                             (std::tgamma(h) / std::tgamma(alpha + h));
    return rel(lhs, rhs);
}

// Printed 3.17: the integral on [x, inf) of an entire 1F2 against a power
// weight. It diverges, which the quadrature reports.
double eq3_17_printed(const SampleContext& ctx) {
    Draw d(ctx);
    const double alpha = d.u(0.3, 2.0), eta = d.u(0.2, 2.0), x = d.u(0.2, 2.0);
    const SquareMatrix lhs =
        erdelyi_kober_right([&](double t) { return pfq({d.a}, {d.b, d.c}, t); }, alpha, eta, x).value;
    const SquareMatrix rhs =
        pfq({d.a, sc(d.n, eta)}, {d.b, d.c, sc(d.n, alpha + eta)}, x) * (std::tgamma(eta) / std::tgamma(alpha + eta));
    return rel(lhs, rhs);
}

// Termwise K: x^k -> Gamma(eta-k)/Gamma(alpha+eta-k) x^k.
double eq3_17_formal(const SampleContext& ctx) {
    Draw d(ctx);
    const double alpha = d.u(0.3, 2.0), eta = d.u(0.2, 0.8) + std::floor(d.u(0.0, 2.0));
    const int k = ctx.truncation;
    const MatrixPowerSeries f = f12_series(d.a, d.b, d.c, k);
    std::vector<SquareMatrix> coeffs;
    for (int j = 0; j <= k; ++j) {
        const Complex w = complex_gamma(eta - j) * complex_rgamma(alpha + eta - j);
        coeffs.push_back(f.coeff(j) * w);
    }
    const MatrixPowerSeries lhs = MatrixPowerSeries::from_coefficients(coeffs);
    MatrixPowerSeries rhs = hyper_series(
        HyperParams({d.a, sc(d.n, 1.0 - alpha - eta)}, {d.b, d.c, sc(d.n, 1.0 - eta)}), k);
    rhs *= std::tgamma(eta) / std::tgamma(alpha + eta);
    return compare(lhs, rhs).residual;
}

double eq3_20(const SampleContext& ctx) {
    Draw d(ctx);
    const double mu = d.u(0.3, 2.0), x = d.u(0.2, 2.0);
    const CachedSeries f = d.f12(2.0);
    const SquareMatrix lhs = rl_integral([&](double t) { return f(t); }, mu, x).value;
    const SquareMatrix rhs =
        pfq({d.a, eye(d.n)}, {d.b, d.c, sc(d.n, mu + 1.0)}, x) * (std::pow(x, mu) / std::tgamma(mu + 1.0));
    return rel(lhs, rhs);
}

double eq3_21(const SampleContext& ctx) {
    Draw d(ctx);
    const double alpha = d.u(0.3, 2.0), b = d.u(-1.0, 1.0), x = b + d.u(0.2, 2.0);
    const CachedSeries f = d.f12(2.0);
    const SquareMatrix lhs = rl_integral_left([&](double t) { return f(t - b); }, alpha, b, x).value;
    const SquareMatrix rhs = pfq({d.a, eye(d.n)}, {d.b, d.c, sc(d.n, alpha + 1.0)}, x - b) *
                             (std::pow(x - b, alpha) / std::tgamma(alpha + 1.0));
    return rel(lhs, rhs);
}

double eq3_22(const SampleContext& ctx) {
    Draw d(ctx);
    const double alpha = d.u(0.3, 2.0), x = d.u(-1.0, 1.0), a = x + d.u(0.2, 2.0);
    const CachedSeries f = d.f12(2.0);
    const SquareMatrix lhs = rl_integral_right([&](double t) { return f(a - t); }, alpha, x, a).value;
    const SquareMatrix rhs = pfq({d.a, eye(d.n)}, {d.b, d.c, sc(d.n, alpha + 1.0)}, a - x) *
                             (std::pow(a - x, alpha) / std::tgamma(alpha + 1.0));
    return rel(lhs, rhs);
}

double eq3_23(const SampleContext& ctx) {
    Draw d(ctx);
    const double alpha = d.u(0.3, 2.0);
    const int k = ctx.truncation;
    const MatrixPowerSeries lhs =
        fractional_derivative_formal(f12_series(d.a, d.b, d.c, k), alpha, FractionalVariant::WeylIntegral).series;
    const MatrixPowerSeries rhs =
        hyper_series(HyperParams({d.a}, {d.b, d.c, sc(d.n, alpha)}), k).with_offset(sc(d.n, alpha));
    return compare(lhs, rhs).residual;
}

// 3.28 to 3.31 share one right-hand side up to a phase.
double eq3_28_family(const SampleContext& ctx, FractionalVariant v) {
    Draw d(ctx);
    double alpha = d.u(0.1, 1.9);
    if (v == FractionalVariant::Classical) alpha = d.u(0.1, 0.9);
    if (std::abs(alpha - 1.0) < 0.05) alpha += 0.1;
    const int k = ctx.truncation;
    const FormalResult lhs = fractional_derivative_formal(f12_series(d.a, d.b, d.c, k), alpha, v);
    Complex pre = complex_rgamma(1.0 - alpha);
    if (v == FractionalVariant::Weyl) pre *= std::exp(Complex(0.0, M_PI * alpha));
    MatrixPowerSeries rhs =
        hyper_series(HyperParams({d.a, eye(d.n)}, {d.b, d.c, sc(d.n, 1.0 - alpha)}), k).with_offset(sc(d.n, -alpha));
    rhs *= pre;
    return compare(lhs.series, rhs).residual;
}

// ---- monomial rules ----------------------------------------------------------

// Largest relative error over k = 0..6 of a scalar quadrature against a rule.
template <class Q, class R>
double monomial_check(const Q& quad, const R& rule) {
    double worst = 0.0;
    for (int k = 0; k <= 6; ++k) {
        const Complex got = quad(k), want = rule(k);
        worst = std::max(worst, std::abs(got - want) / std::max(std::abs(want), 1e-300));
    }
    return worst;
}

MatrixFunction mono(double shift, double sign, int k) {
    return [=](double t) { return sc(1, std::pow(sign * (t - shift), k)); };
}

double mono_3_18(const SampleContext& ctx, bool fixed) {
    SpectralSampler s = ctx.sampler();
    const double alpha = s.uniform(0.3, 2.0), eta = s.uniform(0.2, 2.0), x = s.uniform(0.3, 2.0);
    const int off = fixed ? 1 : 0;
    return monomial_check(
        [&](int k) { return erdelyi_kober_left(mono(0.0, 1.0, k), alpha, eta, x).value(0, 0); },
        [&](int k) { return std::tgamma(eta + k + off) / std::tgamma(alpha + eta + k + off) * std::pow(x, k); });
}

double mono_k(const SampleContext& ctx, bool fixed) {
    SpectralSampler s = ctx.sampler();
    const double alpha = s.uniform(0.3, 2.0), eta = 6.0 + s.uniform(0.2, 0.8), x = s.uniform(0.3, 2.0);
    return monomial_check(
        [&](int k) { return erdelyi_kober_right(mono(0.0, 1.0, k), alpha, eta, x, k).value(0, 0); },
        [&](int k) {
            const double g = fixed ? std::tgamma(eta - k) / std::tgamma(alpha + eta - k)
                                   : std::tgamma(eta + k) / std::tgamma(alpha + eta + k);
            return g * std::pow(x, k);
        });
}

double mono_3_24(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const double mu = s.uniform(0.3, 2.0), x = s.uniform(0.3, 2.0);
    return monomial_check([&](int k) { return rl_integral(mono(0.0, 1.0, k), mu, x).value(0, 0); },
                          [&](int k) {
                              return std::pow(x, mu + k) * std::tgamma(k + 1.0) / std::tgamma(mu + k + 1.0);
                          });
}

double mono_3_25(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const double alpha = s.uniform(0.3, 2.0), b = s.uniform(-1.0, 1.0), x = b + s.uniform(0.3, 2.0);
    return monomial_check([&](int k) { return rl_integral_left(mono(b, 1.0, k), alpha, b, x).value(0, 0); },
                          [&](int k) {
                              return std::pow(x - b, alpha + k) * std::tgamma(k + 1.0) /
                                     std::tgamma(alpha + k + 1.0);
                          });
}

double mono_3_26(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const double alpha = s.uniform(0.3, 2.0), x = s.uniform(-1.0, 1.0), c = x + s.uniform(0.3, 2.0);
    return monomial_check([&](int k) { return rl_integral_right(mono(c, -1.0, k), alpha, x, c).value(0, 0); },
                          [&](int k) {
                              return std::pow(c - x, alpha + k) * std::tgamma(k + 1.0) /
                                     std::tgamma(alpha + k + 1.0);
                          });
}

// The integral part of the left derivative, order n - alpha.
double mono_3_32(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const double alpha = s.uniform(0.1, 1.9), b = s.uniform(-1.0, 1.0), x = b + s.uniform(0.3, 2.0);
    const int n = static_cast<int>(std::floor(alpha)) + 1;
    const double o = n - alpha;
    return monomial_check([&](int k) { return rl_integral_left(mono(b, 1.0, k), o, b, x).value(0, 0); },
                          [&](int k) {
                              return std::pow(x - b, k + o) * std::tgamma(k + 1.0) / std::tgamma(o + k + 1.0);
                          });
}

double mono_3_33(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const double alpha = s.uniform(0.1, 1.9), x = s.uniform(-1.0, 1.0), c = x + s.uniform(0.3, 2.0);
    const int n = static_cast<int>(std::floor(alpha)) + 1;
    const double o = n - alpha, sign = (n % 2) ? -1.0 : 1.0;
    return monomial_check(
        [&](int k) { return sign * rl_integral_right(mono(c, -1.0, k), o, x, c).value(0, 0); },
        [&](int k) { return sign * std::pow(c - x, o + k) * std::tgamma(k + 1.0) / std::tgamma(o + k + 1.0); });
}

// Classical derivative of negative order mu is an ordinary integral of order -mu.
double mono_3_35(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const double mu = -s.uniform(0.1, 0.9), x = s.uniform(0.3, 2.0);
    return monomial_check([&](int k) { return rl_integral(mono(0.0, 1.0, k), -mu, x).value(0, 0); },
                          [&](int k) {
                              return std::pow(x, k - mu) * std::tgamma(k + 1.0) / std::tgamma(k - mu + 1.0);
                          });
}

// Formal-only rules: the operator's termwise action against the stated map.
double mono_formal(const SampleContext& ctx, FractionalVariant v) {
    SpectralSampler s = ctx.sampler();
    const double alpha = s.uniform(0.1, 0.9) + (v == FractionalVariant::Weyl ? 0.0 : 1.0);
    double worst = 0.0;
    for (int k = 0; k <= 6; ++k) {
        std::vector<Complex> c(k + 1, 0.0);
        c[k] = 1.0;
        const FormalResult r =
            fractional_derivative_formal(MatrixPowerSeries::scalar_series(1, c), alpha, v);
        Complex want;
        if (v == FractionalVariant::WeylIntegral) {
            double poch = 1.0;
            for (int j = 0; j < k; ++j) poch *= alpha + j;
            want = 1.0 / poch;
        } else {
            want = std::exp(Complex(0.0, M_PI * alpha)) * std::tgamma(k + 1.0) * complex_rgamma(k - alpha + 1.0);
        }
        const MatrixPowerSeries expect =
            MatrixPowerSeries(std::vector<SquareMatrix>{sc(1, want)}, sc(1, v == FractionalVariant::WeylIntegral ? alpha : -alpha), k);
        worst = std::max(worst, compare(r.series, expect).residual);
    }
    return worst;
}

// ---- gamma calculus and estimators -------------------------------------------

double duplication(const SampleContext& ctx, bool fixed) {
    SpectralSampler s = ctx.sampler();
    const SquareMatrix a = draw(s);
    const SquareMatrix ident = eye(a.dim());
    const SquareMatrix lhs = matrix_gamma(a * 2.0);
    SquareMatrix rhs = matrix_power(2.0, a * 2.0 - (fixed ? ident : SquareMatrix(a.dim()))) * matrix_gamma(a) *
                       matrix_gamma(a.shifted(0.5));
    rhs *= 1.0 / std::sqrt(M_PI);
    return rel(lhs, rhs);
}

OrderTypeEstimate estimator_run(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const SquareMatrix a = draw(s), b = draw(s), c = draw(s);
    return order_type_estimate(HyperParams({a}, {b, c}), {100, 200, 300, 400, 500});
}

double order_check(const SampleContext& ctx) {
    const OrderTypeEstimate e = estimator_run(ctx);
    double r = std::abs(e.orderSamples.back().second - 0.5);
    for (std::size_t i = 1; i < e.orderSamples.size(); ++i)
        if (e.orderSamples[i].second >= e.orderSamples[i - 1].second) r = HUGE_VAL;
    return r;
}

double type_check(const SampleContext& ctx) {
    const OrderTypeEstimate e = estimator_run(ctx);
    return std::abs(e.typeSamples.back().second - 2.0);
}

}  // namespace

std::vector<IdentityEntry> transform_identity_catalog() {
    using M = CheckMode;
    std::vector<IdentityEntry> v;
    auto add = [&](IdentityEntry e) { v.push_back(std::move(e)); };

    add(entry("thm2.4-int-rep", "2.7", "1F2 as a beta integral of 0F1, both forms", M::Quadrature, int_rep));
    add(entry("eq2.9", "2.9", "beta integral of 1F2(zt) with exponents A1, B1-A1", M::Quadrature, eq2_9));
    add(typo(entry("eq2.10", "2.10", "beta integral of 1F2(zt) with exponents A1, B1", M::Quadrature,
                   [](const SampleContext& c) { return eq2_10(c, false); }),
             [](const SampleContext& c) { return eq2_10(c, true); }, "2F3(A,A1;B,A1+B1,C;z)"));
    add(typo(entry("eq2.11", "2.11", "two-sided power weight on [t,x]", M::Quadrature,
                   [](const SampleContext& c) { return eq2_11(c, false); }),
             [](const SampleContext& c) { return eq2_11(c, true); }, "2F3(A,Q;B,C,P+Q;z(x-t))"));
    add(entry("eq2.12", "2.12", "two-sided power weight, argument t-x", M::Quadrature,
              [](const SampleContext& c) { return eq2_12(c, 1.0, false); }));
    add(entry("eq2.12-scaled", "2.12", "as 2.12 with argument z(t-x) and z(y-x)", M::Quadrature,
              [](const SampleContext& c) { return eq2_12(c, 1.0, true); }));
    add(entry("eq2.13", "2.13", "two-sided power weight, argument x-t", M::Quadrature,
              [](const SampleContext& c) { return eq2_12(c, -1.0, false); }));
    {
        IdentityEntry e = typo(entry("eq2.16", "2.16", "Laplace integral of t^{2A1-I} 1F2(lambda^2 t^2)", M::Laplace,
                                     [](const SampleContext& c) { return eq2_16(c, false); }),
                               [](const SampleContext& c) { return eq2_16(c, true); },
                               "3F2(A,A1,A1+I/2;B,C;4 lambda^2/p^2)");
        e.maxSeeds = 5;
        add(std::move(e));
    }
    add(typo(entry("eq2.17", "2.17", "power weights s^{B1-I}(x-s)^{A1-I} on [0,x]", M::Quadrature,
                   [](const SampleContext& c) { return eq2_17(c, false); }),
             [](const SampleContext& c) { return eq2_17(c, true); },
             "x^{A1+B1-I} 2F3(A,A1;B,C,A1+B1;zx)"));
    add(entry("thm3.2-sec2", "Theorem 3.2 (section 2)", "t^{P-I}(x-t)^{Q-I} weight on [0,x]", M::Quadrature,
              thm3_2_sec2));
    add(entry("eq2.28", "2.28", "1F2 as a series of 0F1(C+kI)", M::Pointwise,
              [](const SampleContext& c) { return eq2_28(c, false); }));
    add(entry("eq2.29", "2.29", "1F2 as a series of 0F1(B+kI)", M::Pointwise,
              [](const SampleContext& c) { return eq2_28(c, true); }));
    add(entry("eq2.30", "2.30", "0F1(C) as a series of shifted 1F2", M::Pointwise,
              [](const SampleContext& c) { return eq2_30(c, false); }));
    add(entry("eq2.31", "2.31", "0F1(B) as a series of shifted 1F2", M::Pointwise,
              [](const SampleContext& c) { return eq2_30(c, true); }));
    add(entry("eq2.311", "2.311", "sum over numerator shifts", M::Pointwise, eq2_311));
    add(entry("eq2.3111", "2.3111", "sum over joint shifts equals 1F2(z+t)", M::Pointwise, eq2_3111));
    add(typo(entry("eq2.32", "2.32", "sum over denominator shifts", M::Pointwise,
                   [](const SampleContext& c) { return eq2_32(c, false); }),
             [](const SampleContext& c) { return eq2_32(c, true); }, "1F2(A+E;B,C;z) without (1-t)^{-A}"));

    add(entry("eq2.19", "2.19", "three Euler-operator contiguous relations", M::Formal, eq2_19));
    add(entry("eq2.19-diff", "2.19", "three difference relations", M::Formal, eq2_19_diff));
    add(entry("eq2.20", "2.20", "third-order theta equation", M::Formal, eq2_20));
    add(entry("thm2.9-divided", "Theorem 2.9", "theta equation acting on F/z", M::Formal, divided_form));
    add(entry("thm2.10-ode3", "Theorem 2.10", "d^3/dz^3 form of the equation", M::Formal, ode3));
    add(typo(entry("thm2.11-basis", "Theorem 2.11", "three Frobenius solutions of 2.20", M::Formal,
                   [](const SampleContext& c) { return frobenius_basis(c, false); }),
             [](const SampleContext& c) { return frobenius_basis(c, true); },
             "Y2 = z^{I-B} 1F2(I-B+A;2I-B,I+C-B;z)"));
    add(typo(entry("eq2.23", "2.23", "equation for Psi with 1F2 = z^alpha Psi", M::Formal,
                   [](const SampleContext& c) { return eq2_23(c, false); }),
             [](const SampleContext& c) { return eq2_23(c, true); },
             "z^2 Psi''' + (3a+B+C+I) z Psi'' + [3a(a-I)+2a(B+C+I)+BC-zI] Psi' + [a(a-I+B)(a-I+C)/z - (a+A)] Psi"));

    add(entry("eq3.14", "3.14", "beta transform of 1F2(zt)", M::Quadrature, eq3_14));
    {
        IdentityEntry e = entry("eq3.15", "3.15", "Laplace transform of t^{P-I} 1F2(zt)", M::Laplace, eq3_15);
        e.maxSeeds = 5;
        add(std::move(e));
    }
    add(typo(entry("eq3.16", "3.16", "left Erdelyi-Kober integral of 1F2", M::Quadrature,
                   [](const SampleContext& c) { return eq3_16(c, false); }),
             [](const SampleContext& c) { return eq3_16(c, true); },
             "Gamma(eta+1)/Gamma(alpha+eta+1) 2F3(A,(eta+1)I;B,C,(alpha+eta+1)I;x)"));
    {
        IdentityEntry e = typo(entry("eq3.17", "3.17", "right Erdelyi-Kober integral of 1F2", M::Quadrature,
                                     eq3_17_printed),
                               eq3_17_formal,
                               "termwise: Gamma(eta)/Gamma(alpha+eta) 2F3(A,(1-alpha-eta)I;B,C,(1-eta)I;x)");
        e.analysis = "the defining integral diverges for an entire integrand; only the termwise form is testable";
        add(std::move(e));
    }
    add(entry("eq3.20", "3.20", "Riemann-Liouville integral of 1F2", M::Quadrature, eq3_20));
    add(entry("eq3.21", "3.21", "left-sided integral of 1F2(x-b)", M::Quadrature, eq3_21));
    add(entry("eq3.22", "3.22", "right-sided integral of 1F2(a-x)", M::Quadrature, eq3_22));
    add(entry("eq3.23", "3.23", "Weyl integral, termwise", M::Formal, eq3_23));
    add(entry("eq3.28", "3.28", "left Riemann-Liouville derivative, termwise", M::Formal,
              [](const SampleContext& c) { return eq3_28_family(c, FractionalVariant::RiemannLiouvilleLeft); }));
    add(entry("eq3.29", "3.29", "right Riemann-Liouville derivative, termwise", M::Formal,
              [](const SampleContext& c) { return eq3_28_family(c, FractionalVariant::RiemannLiouvilleRight); }));
    add(entry("eq3.30", "3.30", "Weyl derivative, termwise, principal branch of (-1)^alpha", M::Formal,
              [](const SampleContext& c) { return eq3_28_family(c, FractionalVariant::Weyl); }));
    add(entry("eq3.31", "3.31", "classical Riemann-Liouville derivative, termwise", M::Formal,
              [](const SampleContext& c) { return eq3_28_family(c, FractionalVariant::Classical); }));

    auto scalar_only = [](IdentityEntry e) {
        e.dims = {1};
        return e;
    };
    add(scalar_only(typo(entry("mono3.18", "3.18", "left Erdelyi-Kober operator on x^k", M::Quadrature,
                               [](const SampleContext& c) { return mono_3_18(c, false); }),
                         [](const SampleContext& c) { return mono_3_18(c, true); },
                         "Gamma(eta+k+1)/Gamma(alpha+eta+k+1) x^k")));
    add(scalar_only(typo(entry("mono3.17-K", "3.17 (proof)", "right Erdelyi-Kober operator on x^k, k < eta",
                               M::Quadrature, [](const SampleContext& c) { return mono_k(c, false); }),
                         [](const SampleContext& c) { return mono_k(c, true); },
                         "Gamma(eta-k)/Gamma(alpha+eta-k) x^k")));
    add(scalar_only(entry("mono3.24", "3.24", "Riemann-Liouville integral of x^k", M::Quadrature, mono_3_24)));
    add(scalar_only(entry("mono3.25", "3.25", "left-sided integral of (x-b)^k", M::Quadrature, mono_3_25)));
    add(scalar_only(entry("mono3.26", "3.26", "right-sided integral of (c-x)^k", M::Quadrature, mono_3_26)));
    {
        IdentityEntry e = scalar_only(entry("mono3.27", "3.27", "Weyl integral of x^k (formal only)", M::Formal,
                                            [](const SampleContext& c) {
                                                return mono_formal(c, FractionalVariant::WeylIntegral);
                                            }));
        e.analysis = "the integral diverges for k >= 0; the stated map 1/(alpha)_k is used termwise";
        add(std::move(e));
    }
    add(scalar_only(entry("mono3.32", "3.32", "integral part of the left derivative on (x-b)^k", M::Quadrature,
                          mono_3_32)));
    add(scalar_only(entry("mono3.33", "3.33", "integral part of the right derivative on (c-x)^k", M::Quadrature,
                          mono_3_33)));
    {
        IdentityEntry e = scalar_only(entry("mono3.34", "3.34", "Weyl derivative of x^k (formal only)", M::Formal,
                                            [](const SampleContext& c) {
                                                return mono_formal(c, FractionalVariant::Weyl);
                                            }));
        e.analysis = "the integral diverges for k >= 0; the stated map is used termwise";
        add(std::move(e));
    }
    add(scalar_only(entry("mono3.35", "3.35", "classical derivative of negative order on x^k", M::Quadrature,
                          mono_3_35)));

    add(typo(entry("gamma-duplication", "Theorem 2.7 (proof)", "Legendre duplication for a matrix argument",
                   M::Pointwise, [](const SampleContext& c) { return duplication(c, false); }),
             [](const SampleContext& c) { return duplication(c, true); },
             "Gamma(2A) = 2^{2A-I} Gamma(A) Gamma(A+I/2) / sqrt(pi)"));
    {
        IdentityEntry e = entry("thm2.2-order", "Theorem 2.2", "|order estimate(500) - 1/2|, decreasing on [100,500]",
                                M::Pointwise, order_check);
        e.tolerance = 0.1;
        e.dims = {1, 2};
        e.maxSeeds = 5;
        add(std::move(e));
    }
    {
        IdentityEntry e = entry("thm2.3-type", "Theorem 2.3", "|type estimate(500) - 2|", M::Pointwise, type_check);
        e.tolerance = 0.5;
        e.dims = {1, 2};
        e.maxSeeds = 5;
        add(std::move(e));
    }
    return v;
}

}  // namespace matspec

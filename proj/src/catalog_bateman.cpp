#include <algorithm>
#include <cmath>

#include "catalog_support.hpp"
#include "matspec/bateman.hpp"
#include "matspec/transforms.hpp"

namespace matspec {

namespace {

using namespace detail;
using Op = SeriesOperator;

constexpr int kLowN = 3, kHighN = 12;

double factorial(int n) { return std::exp(std::lgamma(n + 1.0)); }
double binomial(int n, int k) { return std::round(factorial(n) / (factorial(k) * factorial(n - k))); }

BatemanParams pair(SpectralSampler& s, double lo = 0.2, double hi = 2.0) {
    const SquareMatrix a = draw(s, lo, hi), b = draw(s, lo, hi);
    return {a, b};
}

MatrixPowerSeries bs(int n, const BatemanParams& p) { return bateman_B_series(n, p); }

IdentityEntry entry(std::string id, std::string eq, std::string desc, CheckMode mode, ResidualFn printed) {
    IdentityEntry e;
    e.id = std::move(id);
    e.paperEq = std::move(eq);
    e.description = std::move(desc);
    e.mode = mode;
    e.printed = std::move(printed);
    return e;
}

IdentityEntry typo(IdentityEntry e, ResidualFn corrected, std::string form, std::string analysis = {}) {
    e.kind = EntryKind::SuspectedTypo;
    e.corrected = std::move(corrected);
    e.correctedForm = std::move(form);
    e.analysis = std::move(analysis);
    return e;
}

// ---- generating functions, by coefficient extraction in t -------------------

// max_n ||c_n - want_n|| / max(||want_n||, 1e-300) for n = 0..10
// Entire generators get a wide contour so that t^10 is not lost to rounding.
template <class Want>
double extraction_residual(const std::function<SquareMatrix(Complex, Complex)>& gen, Complex z0, const Want& want,
                           double radius) {
    const int order = 10;
    ExtractionOptions opts;
    opts.radius = radius;
    const std::vector<SquareMatrix> c = bivariate_coefficient(gen, z0, order, opts);
    double r = 0.0;
    for (int n = 0; n <= order; ++n) r = std::max(r, rel(c[static_cast<std::size_t>(n)], want(n)));
    return r;
}

double gf1(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    const Complex z0 = s.complex_in_disk(2.0);
    const HyperParams h({}, {p.a.shifted(1.0), p.b.shifted(1.0)});
    auto gen = [&](Complex z, Complex t) { return SquareMatrix(hyp(h, -z * t) * std::exp(t)); };
    return extraction_residual(
        gen, z0, [&](int n) { return SquareMatrix(bateman_B(n, p, z0) / factorial(n)); }, 2.5);
}

double gf2(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    const SquareMatrix c = draw(s, 0.2, 2.0);
    const Complex z0 = s.complex_in_disk(2.0);
    const HyperParams h({c}, {p.a.shifted(1.0), p.b.shifted(1.0)});
    auto gen = [&](Complex z, Complex t) { return matrix_power(1.0 - t, -c) * hyp(h, -z * t / (1.0 - t)); };
    return extraction_residual(gen, z0, [&](int n) {
        return SquareMatrix(pochhammer_value(c, n) * bateman_B(n, p, z0) / factorial(n));
    }, 0.5);
}

// e^t J_{A,B}(3 (zt)^{1/3}); any cube root gives the same value since only x^3 enters.
double gf3(const SampleContext& ctx, bool fixed) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    const Complex z0 = s.complex_in_disk(2.0);
    auto gen = [&](Complex z, Complex t) {
        return SquareMatrix(hyper_bessel(p, 3.0 * std::pow(z * t, 1.0 / 3.0)) * std::exp(t));
    };
    return extraction_residual(gen, z0, [&](int n) {
        return SquareMatrix(bateman_B(n, p, z0) / (fixed ? factorial(n) : 1.0));
    }, 2.5);
}

// ---- Theorem 4.2 relations, compared coefficientwise over n = 3..12 ----------

template <class F>
double over_n(const F& f) {
    double r = 0.0;
    for (int n = kLowN; n <= kHighN; ++n) r = std::max(r, f(n));
    return r;
}

double r1(const SampleContext& ctx, bool fixed) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    const SquareMatrix inv = p.a.shifted(1.0).inverse() * p.b.shifted(1.0).inverse();
    const double shift = fixed ? 1.0 : 2.0, sign = fixed ? -1.0 : 1.0;
    return over_n([&](int n) {
        const MatrixPowerSeries rhs = bs(n - 1, p.shifted(shift, shift)).left_multiplied(inv * (sign * n));
        return compare(derivative(bs(n, p)), rhs).residual;
    });
}

double r2(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    return over_n([&](int n) {
        MatrixPowerSeries rhs = bs(n, p) - bs(n - 1, p);
        rhs *= static_cast<double>(n);
        return compare(theta(bs(n, p)), rhs).residual;
    });
}

double r3(const SampleContext& ctx, bool fixed) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    const SquareMatrix ab = p.a.shifted(1.0) * p.b.shifted(1.0);
    return over_n([&](int n) {
        const MatrixPowerSeries lhs = bs(n, p.shifted(1.0, 1.0)).times_z(1);
        if (fixed) return compare(lhs, (bs(n, p) - bs(n + 1, p)).left_multiplied(ab)).residual;
        const SquareMatrix m = p.a.shifted(n + 1.0) * p.b.shifted(n + 1.0);
        return compare(lhs, bs(n + 1, p) + bs(n, p).left_multiplied(m)).residual;
    });
}

// R4 (shift in A) and R5 (shift in B)
double r45(const SampleContext& ctx, bool in_a, bool fixed) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    const BatemanParams q = in_a ? p.shifted(1.0, 0.0) : p.shifted(0.0, 1.0);
    const SquareMatrix& mine = in_a ? p.a : p.b;
    const SquareMatrix& other = in_a ? p.b : p.a;
    return over_n([&](int n) {
        if (fixed) {
            const MatrixPowerSeries lhs = bs(n + 1, p).left_multiplied(mine.shifted(1.0));
            MatrixPowerSeries tail = bs(n, q);
            tail *= static_cast<double>(n + 1);
            return compare(lhs, bs(n + 1, q).left_multiplied(mine.shifted(n + 2.0)) - tail).residual;
        }
        MatrixPowerSeries tail = bs(n, q).left_multiplied(other.shifted(n + 1.0));
        tail *= static_cast<double>(n + 1);
        return compare(bs(n + 1, p), bs(n + 1, q) + tail).residual;
    });
}

// ---- Theorems 4.3, 4.4 ---------------------------------------------------------

double m1(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    const Complex z = s.complex_in_disk(2.0);
    const double w = s.uniform(0.05, 0.95);
    double r = 0.0;
    for (int n = 0; n <= 8; ++n) {
        SquareMatrix rhs(p.dim());
        for (int k = 0; k <= n; ++k)
            rhs += bateman_B(k, p, z) * (binomial(n, k) * std::pow(w, k) * std::pow(1.0 - w, n - k));
        r = std::max(r, rel(bateman_B(n, p, z * w), rhs));
    }
    return r;
}

double m2(const SampleContext& ctx, bool fixed) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    const Complex z = s.complex_in_disk(2.0);
    const double w = s.uniform(0.05, 0.95);
    double r = 0.0;
    for (int n = 0; n <= 8; ++n) {
        SquareMatrix sum(p.dim());
        for (int k = 0; k <= n; ++k) {
            const SquareMatrix bracket = pochhammer_inverse(p.b.shifted(1.0), fixed ? k : n);
            sum += bracket * laguerre_L(n - k, p.a.shifted(k), w) * laguerre_L(k, p.b, z) * std::pow(w, k);
        }
        const SquareMatrix rhs = pochhammer_inverse(p.a.shifted(1.0), n) * sum * factorial(n);
        r = std::max(r, rel(bateman_B(n, p, z * w), rhs));
    }
    return r;
}

double inversion(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    double r = 0.0;
    for (int n = 0; n <= 8; ++n) {
        MatrixPowerSeries sum = MatrixPowerSeries::zero(p.dim(), 0, 0);
        for (int k = 0; k <= n; ++k) {
            MatrixPowerSeries term = bs(k, p);
            term *= binomial(n, k) * ((k % 2) ? -1.0 : 1.0);
            sum = sum + term;
        }
        const MatrixPowerSeries rhs =
            sum.left_multiplied(pochhammer_value(p.a.shifted(1.0), n) * pochhammer_value(p.b.shifted(1.0), n));
        std::vector<Complex> mono(static_cast<std::size_t>(n) + 1, 0.0);
        mono.back() = 1.0;
        r = std::max(r, compare(MatrixPowerSeries::scalar_series(p.dim(), mono), rhs).residual);
    }
    return r;
}

// ---- differential equations ----------------------------------------------------

// (theta - n)_k as an operator
Op falling(int n, int k, std::size_t dim) {
    Op out = Op::constant(eye(dim));
    for (int j = 0; j < k; ++j) out = out * (Op::theta() - Op::scalar(static_cast<double>(n - j)));
    return out;
}

double eq4_14(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    return over_n([&](int n) {
        const Op op = Op::z() * (Op::theta() - Op::scalar(static_cast<double>(n))) -
                      Op::theta() * theta_plus(p.a) * theta_plus(p.b);
        return residual_of(apply_operator(bs(n, p), op)).residual;
    });
}

double eq4_15(const SampleContext& ctx, bool fixed) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    const SquareMatrix ab = p.a.shifted(1.0) * p.b.shifted(1.0);
    return over_n([&](int n) {
        const MatrixPowerSeries y = bs(n, p);
        const MatrixPowerSeries y1 = derivative(y), y2 = derivative(y1), y3 = derivative(y2);
        const MatrixPowerSeries first = y3.times_z(2);
        const MatrixPowerSeries second = y2.times_z(1).left_multiplied(p.a + p.b + eye(p.dim()) * 3.0);
        const MatrixPowerSeries third = y1.left_multiplied(ab) - y1.times_z(1);
        MatrixPowerSeries last = y;
        last *= static_cast<double>(n);
        // without the '+', the second and third terms read as one product
        const MatrixPowerSeries total = fixed ? first + second + third + last : first + second * third + last;
        return residual_of(total).residual;
    });
}

double shift_relation(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    double r = 0.0;
    for (int n = 0; n <= 10; ++n) {
        MatrixPowerSeries top = bs(n, p);
        top *= 1.0 / factorial(n);
        for (int k = 0; k <= n; ++k) {
            MatrixPowerSeries rhs = apply_operator(top, falling(n, k, p.dim()));
            rhs *= (k % 2) ? -1.0 : 1.0;
            MatrixPowerSeries lhs = bs(n - k, p);
            lhs *= 1.0 / factorial(n - k);
            r = std::max(r, compare(lhs, rhs).residual);
        }
    }
    return r;
}

// theta, theta^2, theta^3 in the (theta - n)_k basis, applied to a random 1F2 series.
double eq4_18(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const SquareMatrix a = draw(s), b = draw(s), c = draw(s);
    const MatrixPowerSeries f = hyper_series(HyperParams({a}, {b, c}), ctx.truncation);
    const std::size_t dim = a.dim();
    double r = 0.0;
    for (int n = 0; n <= 12; ++n) {
        const double dn = n;
        const Op t1 = falling(n, 1, dim) + Op::scalar(dn);
        const Op t2 = falling(n, 2, dim) + Op::scalar(2 * dn - 1) * falling(n, 1, dim) + Op::scalar(dn * dn);
        const Op t3 = falling(n, 3, dim) + Op::scalar(3 * (dn - 1)) * falling(n, 2, dim) +
                      Op::scalar(3 * dn * dn - 3 * dn + 1) * falling(n, 1, dim) + Op::scalar(dn * dn * dn);
        const Op th = Op::theta();
        r = std::max(r, compare(apply_operator(f, th), apply_operator(f, t1)).residual);
        r = std::max(r, compare(apply_operator(f, th * th), apply_operator(f, t2)).residual);
        r = std::max(r, compare(apply_operator(f, th * th * th), apply_operator(f, t3)).residual);
    }
    return r;
}

double eq4_19(const SampleContext& ctx, bool fixed) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    const SquareMatrix ident = eye(p.dim());
    return over_n([&](int n) {
        const double dn = n;
        const SquareMatrix k0 = p.a.shifted(dn) * p.b.shifted(dn) * dn;
        const SquareMatrix k1 = ident * (3 * dn * dn - 3 * dn + 1) + (p.a + p.b) * (2 * dn - 1) + p.a * p.b;
        const Op second = (Op::constant(k1) - Op::z()) * falling(n, 1, p.dim());
        const Op rest = Op::constant(p.a + p.b + ident * (3 * dn - 3)) * falling(n, 2, p.dim()) +
                        falling(n, 3, p.dim());
        const Op op = fixed ? Op::constant(k0) + second + rest : Op::constant(k0) - second + rest;
        return residual_of(apply_operator(bs(n, p), op)).residual;
    });
}

double eq4_20(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    const SquareMatrix ident = eye(p.dim());
    return over_n([&](int n) {
        const double dn = n;
        const MatrixPowerSeries lhs = bs(n, p).left_multiplied(p.a.shifted(dn) * p.b.shifted(dn));
        const SquareMatrix k1 = ident * (3 * dn * dn) + (p.a * 2.0 + p.b * 2.0 - ident * 3.0) * dn +
                                (p.a - ident) * (p.b - ident);
        const MatrixPowerSeries b1 = bs(n - 1, p);
        const MatrixPowerSeries t1 = b1.left_multiplied(k1) - b1.times_z(1);
        const MatrixPowerSeries t2 = bs(n - 2, p).left_multiplied((p.a + p.b + ident * (3 * dn - 3)) * (dn - 1));
        MatrixPowerSeries t3 = bs(n - 3, p);
        t3 *= (dn - 1) * (dn - 2);
        return compare(lhs, t1 - t2 + t3).residual;
    });
}

// ---- J polynomials ---------------------------------------------------------------

Complex right_half_plane(SpectralSampler& s) {
    return Complex(s.uniform(0.3, 1.5), s.uniform(-0.5, 0.5));
}

double eq4_33(const SampleContext& ctx) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s);
    const Complex z = right_half_plane(s);
    double r = 0.0;
    for (int n = 0; n <= 6; ++n) {
        const SquareMatrix lhs = bateman_J(n, BatemanParams(p.a, p.b - p.a * 0.5), std::sqrt(z));
        const SquareMatrix rhs = pochhammer_value(p.b.shifted(1.0), n) * reciprocal_gamma(p.a.shifted(1.0)) *
                                 matrix_power(z, p.a * 0.5) * bateman_B(n, p, z) / factorial(n);
        r = std::max(r, rel(lhs, rhs));
    }
    return r;
}

template <class F>
double over_j(const SampleContext& ctx, const F& f) {
    SpectralSampler s = ctx.sampler();
    const BatemanParams p = pair(s, 0.6, 2.0);
    const Complex z = right_half_plane(s);
    double r = 0.0;
    for (int n = kLowN; n <= kHighN; ++n) r = std::max(r, f(p, z, n));
    return r;
}

SquareMatrix jn(int n, const SquareMatrix& a, const SquareMatrix& b, Complex z) {
    if (n < 0) return SquareMatrix(a.dim());
    return bateman_J(n, BatemanParams(a, b), z);
}

double eq4_34(const SampleContext& ctx) {
    return over_j(ctx, [](const BatemanParams& p, Complex z, int n) {
        return rel(jn(n, p.a, p.b, z), jn(n - 1, p.a, p.b, z) + jn(n, p.a, p.b.shifted(-1.0), z));
    });
}

double eq4_35(const SampleContext& ctx) {
    return over_j(ctx, [](const BatemanParams& p, Complex z, int n) {
        const SquareMatrix lhs = p.a * jn(n, p.a, p.b.shifted(-0.5), z);
        return rel(lhs, (jn(n, p.a.shifted(-1.0), p.b, z) + jn(n - 1, p.a.shifted(1.0), p.b, z)) * z);
    });
}

double eq4_36(const SampleContext& ctx) {
    return over_j(ctx, [](const BatemanParams& p, Complex z, int n) {
        const SquareMatrix lhs = p.a.shifted(n) * jn(n, p.a, p.b, z);
        const SquareMatrix rhs = (p.b + p.a * 0.5).shifted(n) * jn(n - 1, p.a, p.b, z) +
                                 jn(n, p.a.shifted(-1.0), p.b.shifted(0.5), z) * z;
        return rel(lhs, rhs);
    });
}

// Relative to the largest of the four terms.
double four_term(const SquareMatrix& t0, const SquareMatrix& t1, const SquareMatrix& t2, const SquareMatrix& t3) {
    const double scale = std::max({t0.norm(), t1.norm(), t2.norm(), t3.norm(), 1e-300});
    return (t0 - t1 - t2 - t3).norm() / scale;
}

double eq4_37_printed(const SampleContext& ctx) {
    return over_j(ctx, [](const BatemanParams& p, Complex z, int n) {
        const SquareMatrix ident = eye(p.dim());
        const double dn = n;
        const SquareMatrix h = p.a * 0.5, h3 = p.a * 1.5;
        const SquareMatrix t0 = p.b.shifted(dn) * jn(n, p.a, p.b, z) * dn;
        const SquareMatrix k1 = (p.b + h).shifted(dn) * p.a.shifted(dn) + (p.b + h3).shifted(2 * dn - 1) * (dn - 1) -
                                ident * (z * z);
        const SquareMatrix t1 = k1 * jn(n - 1, p.a, p.b, z);
        // "3n - 3I" read as (3n - 3)I
        const SquareMatrix t2 = (p.b + h).shifted(dn - 1) * (p.b + h3).shifted(3 * dn - 3) * jn(n - 2, p.a, p.b, z);
        const SquareMatrix t3 = (p.b + h).shifted(dn - 1) * (p.b + h).shifted(dn - 2) * jn(n - 3, p.a, p.b, z);
        // the operator before the second line is missing; try both signs
        return std::min(four_term(t0, t1, t2, t3), four_term(t0, t1, -t2, t3));
    });
}

double eq4_37_fixed(const SampleContext& ctx) {
    return over_j(ctx, [](const BatemanParams& p, Complex z, int n) {
        const SquareMatrix ident = eye(p.dim());
        const double dn = n;
        const SquareMatrix c = p.a * 0.5 + p.b;
        const SquareMatrix t0 = p.a.shifted(dn) * jn(n, p.a, p.b, z) * dn;
        const SquareMatrix k1 = c.shifted(dn) * p.a.shifted(dn) + (c + p.a).shifted(2 * dn - 1) * (dn - 1) -
                                ident * (z * z);
        const SquareMatrix t1 = k1 * jn(n - 1, p.a, p.b, z);
        const SquareMatrix t2 = -(c.shifted(dn - 1) * (c + p.a).shifted(3 * dn - 3) * jn(n - 2, p.a, p.b, z));
        const SquareMatrix t3 = c.shifted(dn - 1) * c.shifted(dn - 2) * jn(n - 3, p.a, p.b, z);
        return four_term(t0, t1, t2, t3);
    });
}

}  // namespace

std::vector<IdentityEntry> bateman_identity_catalog() {
    using M = CheckMode;
    std::vector<IdentityEntry> v;
    auto add = [&](IdentityEntry e) { v.push_back(std::move(e)); };

    add(entry("gf1", "Theorem 4.1", "sum t^n/n! B_n = e^t 0F2(-;A+I,B+I;-zt)", M::Extraction, gf1));
    add(entry("gf2", "Theorem 4.1", "sum t^n/n! (C)_n B_n = (1-t)^{-C} 1F2(C;A+I,B+I;-zt/(1-t))", M::Extraction, gf2));
    add(typo(entry("gf3-hyper-bessel", "Theorem 4.1", "sum t^n B_n = e^t J_{A,B}(3 (zt)^{1/3})", M::Extraction,
                   [](const SampleContext& c) { return gf3(c, false); }),
             [](const SampleContext& c) { return gf3(c, true); },
             "sum t^n/n! B_n = e^t J_{A,B}(3 (zt)^{1/3}) with J_{A,B}(x) = 0F2(-;A+I,B+I;-(x/3)^3)",
             "with any normalization of J_{A,B} the right side is e^t times a function of zt, so its t^n "
             "coefficient carries 1/n!; the printed left side has none"));

    add(typo(entry("r1-derivative", "Theorem 4.2", "d/dz B_n = n (A+I)^{-1}(B+I)^{-1} B_{n-1}^{A+2I,B+2I}",
                   M::Formal, [](const SampleContext& c) { return r1(c, false); }),
             [](const SampleContext& c) { return r1(c, true); },
             "d/dz B_n = -n (A+I)^{-1}(B+I)^{-1} B_{n-1}^{A+I,B+I}"));
    add(entry("r2-theta", "Theorem 4.2", "z d/dz B_n = n B_n - n B_{n-1}", M::Formal, r2));
    add(typo(entry("r3-shift-both", "Theorem 4.2", "z B_n^{A+I,B+I} = B_{n+1} + (A+(n+1)I)(B+(n+1)I) B_n",
                   M::Formal, [](const SampleContext& c) { return r3(c, false); }),
             [](const SampleContext& c) { return r3(c, true); }, "z B_n^{A+I,B+I} = (A+I)(B+I)[B_n - B_{n+1}]"));
    add(typo(entry("r4-shift-a", "Theorem 4.2", "B_{n+1} = B_{n+1}^{A+I,B} + (n+1)(B+(n+1)I) B_n^{A+I,B}",
                   M::Formal, [](const SampleContext& c) { return r45(c, true, false); }),
             [](const SampleContext& c) { return r45(c, true, true); },
             "(A+I) B_{n+1} = (A+(n+2)I) B_{n+1}^{A+I,B} - (n+1) B_n^{A+I,B}"));
    add(typo(entry("r5-shift-b", "Theorem 4.2", "B_{n+1} = B_{n+1}^{A,B+I} + (n+1)(A+(n+1)I) B_n^{A,B+I}",
                   M::Formal, [](const SampleContext& c) { return r45(c, false, false); }),
             [](const SampleContext& c) { return r45(c, false, true); },
             "(B+I) B_{n+1} = (B+(n+2)I) B_{n+1}^{A,B+I} - (n+1) B_n^{A,B+I}"));

    add(entry("m1-binomial", "Theorem 4.3", "B_n(zw) = sum binom(n,k) w^k (1-w)^{n-k} B_k(z)", M::Pointwise, m1));
    add(typo(entry("m2-laguerre", "Theorem 4.3", "B_n(zw) as a sum of Laguerre products, bracket [(B+I)_n]^{-1}",
                   M::Pointwise, [](const SampleContext& c) { return m2(c, false); }),
             [](const SampleContext& c) { return m2(c, true); },
             "n! [(A+I)_n]^{-1} sum_k [(B+I)_k]^{-1} w^k L_{n-k}^{A+kI}(w) L_k^B(z)"));
    add(entry("inversion", "Theorem 4.4", "z^n I = (A+I)_n (B+I)_n sum binom(n,k) (-1)^k B_k", M::Formal, inversion));

    add(entry("eq4.14", "4.14", "[z(theta-n) - theta(theta+A)(theta+B)] B_n = 0", M::Formal, eq4_14));
    add(typo(entry("eq4.15", "4.15", "third-order equation in d/dz", M::Formal,
                   [](const SampleContext& c) { return eq4_15(c, false); }),
             [](const SampleContext& c) { return eq4_15(c, true); },
             "z^2 y''' + (A+B+3I) z y'' + [(A+I)(B+I) - zI] y' + n y = 0"));
    add(entry("thm4.6-shift", "Theorem 4.6", "B_{n-k}/(n-k)! = (-1)^k (theta-n)_k B_n/n!", M::Formal, shift_relation));
    add(entry("eq4.18", "4.18", "powers of theta in the (theta-n)_k basis", M::Formal, eq4_18));
    add(typo(entry("eq4.19", "4.19", "differential recurrence in (theta-n)_k", M::Formal,
                   [](const SampleContext& c) { return eq4_19(c, false); }),
             [](const SampleContext& c) { return eq4_19(c, true); },
             "n(A+nI)(B+nI) + ((3n^2-3n+1)I + (2n-1)(A+B) + AB - zI)(theta-n) + ..."));
    add(entry("eq4.20", "4.20", "four-term recurrence, n = 3..12", M::Formal, eq4_20));

    add(entry("eq4.33", "4.33", "J_n^{A,B-A/2}(sqrt z) in terms of B_n(z)", M::Pointwise, eq4_33));
    add(entry("eq4.34", "4.34", "J_n = J_{n-1} + J_n^{A,B-I}", M::Pointwise, eq4_34));
    add(entry("eq4.35", "4.35", "A J_n^{A,B-I/2} = z J_n^{A-I,B} + z J_{n-1}^{A+I,B}", M::Pointwise, eq4_35));
    add(entry("eq4.36", "4.36", "(A+nI) J_n = (nI+B+A/2) J_{n-1} + z J_n^{A-I,B+I/2}", M::Pointwise, eq4_36));
    add(typo(entry("eq4.37", "4.37", "mixed four-term recurrence for J_n (both signs tried)", M::Pointwise,
                   eq4_37_printed),
             eq4_37_fixed,
             "n(A+nI) J_n = [(c+n)(A+n)+(n-1)(c+A+2n-1)-z^2] J_{n-1} - (c+n-1)(c+A+3n-3) J_{n-2} "
             "+ (c+n-1)(c+n-2) J_{n-3}, c = A/2+B"));
    return v;
}

}  // namespace matspec

#include "matspec/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

#include "matspec/scalar_gamma.hpp"

namespace matspec {

namespace {

// Golub-Welsch for the Jacobi weight (1-x)^alpha (1+x)^beta on [-1, 1].
void jacobi_golub_welsch(int n, double alpha, double beta, std::vector<double>& x, std::vector<double>& w) {
    const double ab = alpha + beta;
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + ab;
        j(k, k) = (k == 0) ? (beta - alpha) / (ab + 2.0) : (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        double b2;
        if (k == 1)
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else
            b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        j(k, k - 1) = j(k - 1, k) = std::sqrt(b2);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    const double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                           std::lgamma(ab + 2.0);
    const double mu0 = std::exp(log_mu0);
    x.resize(n);
    w.resize(n);
    for (int k = 0; k < n; ++k) {
        x[k] = es.eigenvalues()(k);
        const double v0 = es.eigenvectors()(0, k);
        w[k] = mu0 * v0 * v0;
    }
}

void validate(const QuadratureRule& rule, const std::function<double(int)>& exact_moment, const char* name) {
    const int degree = std::min<int>(20, 2 * static_cast<int>(rule.nodes.size()) - 1);
    for (int k = 0; k <= degree; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
        const double ex = exact_moment(k);
        if (std::abs(sum - ex) > 1e-12 * std::abs(ex))
            throw Error(ErrorCode::QuadratureError,
                        std::string(name) + " rule fails the moment check at degree " + std::to_string(k));
    }
}

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    Eigen::MatrixXcd value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel kronrod_panel(const MatrixFunction& g, double a, double b, std::size_t dim, int& evals) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Eigen::MatrixXcd k15 = Eigen::MatrixXcd::Zero(dim, dim), g7 = Eigen::MatrixXcd::Zero(dim, dim);
    const Eigen::MatrixXcd mid = g(c).eigen();
    k15 += kWgk[7] * mid;
    g7 += kWg[3] * mid;
    for (int i = 0; i < 7; ++i) {
        const Eigen::MatrixXcd s = g(c - h * kXgk[i]).eigen() + g(c + h * kXgk[i]).eigen();
        k15 += kWgk[i] * s;
        if (i % 2 == 1) g7 += kWg[i / 2] * s;
    }
    evals += 15;
    k15 *= h;
    g7 *= h;
    return Panel{a, b, k15, (k15 - g7).norm()};
}

bool scalar_real(const SquareMatrix& m, double& value) {
    const std::size_t n = m.dim();
    const Complex c = m.trace() / static_cast<double>(n);
    const double dev = (m.eigen() - c * Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (dev > 1e-14 * std::max(std::abs(c), 1.0) || std::abs(c.imag()) > 1e-14 * std::abs(c)) return false;
    value = c.real();
    return true;
}

}  // namespace

QuadratureRule gauss_legendre(int n, double lo, double hi) {
    if (n < 1) throw Error(ErrorCode::DomainError, "rule needs at least one node");
    QuadratureRule r;
    r.kind = RuleKind::GaussLegendre;
    r.lo = lo;
    r.hi = hi;
    std::vector<double> x, w;
    jacobi_golub_welsch(n, 0.0, 0.0, x, w);
    // Newton polish on P_n keeps the nodes at full precision for larger n.
    for (int k = 0; k < n; ++k) {
        double t = x[k], dp = 1.0;
        for (int it = 0; it < 3; ++it) {
            double p0 = 1.0, p1 = t;
            for (int m = 2; m <= n; ++m) {
                const double p2 = ((2.0 * m - 1.0) * t * p1 - (m - 1.0) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            t -= p1 / dp;
        }
        x[k] = t;
        w[k] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    for (int k = 0; k < n; ++k) {
        r.nodes.push_back(c + h * x[k]);
        r.weights.push_back(h * w[k]);
    }
    validate(
        r,
        [&](int k) {
            if (lo == -hi) return (k % 2 == 1) ? 0.0 : 2.0 * std::pow(hi, k + 1) / (k + 1);
            return (std::pow(hi, k + 1) - std::pow(lo, k + 1)) / (k + 1);
        },
        "Gauss-Legendre");
    return r;
}

QuadratureRule gauss_jacobi(int n, double a_exp, double b_exp) {
    if (n < 1) throw Error(ErrorCode::DomainError, "rule needs at least one node");
    if (!(a_exp > -1.0) || !(b_exp > -1.0))
        throw Error(ErrorCode::DomainError, "Jacobi exponents must exceed -1");
    QuadratureRule r;
    r.kind = RuleKind::GaussJacobi;
    r.lo = 0.0;
    r.hi = 1.0;
    r.a_exp = a_exp;
    r.b_exp = b_exp;
    std::vector<double> x, w;
    jacobi_golub_welsch(n, b_exp, a_exp, x, w);
    const double scale = std::pow(2.0, -(a_exp + b_exp + 1.0));
    for (int k = 0; k < n; ++k) {
        r.nodes.push_back(0.5 * (1.0 + x[k]));
        r.weights.push_back(scale * w[k]);
    }
    validate(
        r,
        [&](int k) {
            return std::exp(std::lgamma(a_exp + k + 1.0) + std::lgamma(b_exp + 1.0) -
                            std::lgamma(a_exp + b_exp + k + 2.0));
        },
        "Gauss-Jacobi");
    return r;
}

QuadratureRule truncated_exponential(double cutoff, int panels, int order) {
    if (!(cutoff > 0.0)) throw Error(ErrorCode::DomainError, "cutoff must be positive");
    if (panels <= 0) panels = std::max(1, static_cast<int>(std::ceil(cutoff)));
    QuadratureRule r;
    r.kind = RuleKind::TruncatedExponential;
    r.lo = 0.0;
    r.hi = cutoff;
    r.cutoff = cutoff;
    const double h = cutoff / panels;
    const QuadratureRule base = gauss_legendre(order, 0.0, h);
    for (int p = 0; p < panels; ++p)
        for (std::size_t i = 0; i < base.nodes.size(); ++i) {
            const double t = p * h + base.nodes[i];
            r.nodes.push_back(t);
            r.weights.push_back(base.weights[i] * std::exp(-t));
        }
    validate(
        r,
        [&](int k) {
            // k! (1 - e^{-c} sum_{j<=k} c^j / j!), summed from the tail end for c < k.
            double term = 1.0, partial = 1.0;
            for (int j = 1; j <= k; ++j) {
                term *= cutoff / j;
                partial += term;
            }
            return std::tgamma(k + 1.0) * (1.0 - std::exp(-cutoff) * partial);
        },
        "truncated-exponential");
    return r;
}

SquareMatrix apply_rule(const QuadratureRule& rule, const MatrixFunction& g, std::size_t dim) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * g(rule.nodes[i]).eigen();
    return SquareMatrix(std::move(acc));
}

QuadratureResult adaptive_integral(const MatrixFunction& g, double a, double b, std::size_t dim, double rel_tol,
                                   double abs_tol, int initial_panels, int max_intervals) {
    int evals = 0;
    std::priority_queue<Panel> heap;
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
    double err = 0.0;
    initial_panels = std::max(1, initial_panels);
    const double h = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double lo = a + i * h, hi = (i + 1 == initial_panels) ? b : a + (i + 1) * h;
        Panel p = kronrod_panel(g, lo, hi, dim, evals);
        total += p.value;
        err += p.error;
        heap.push(std::move(p));
    }
    while (static_cast<int>(heap.size()) < max_intervals) {
        if (err <= std::max(abs_tol, rel_tol * total.norm())) break;
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = kronrod_panel(g, worst.a, mid, dim, evals);
        Panel right = kronrod_panel(g, mid, worst.b, dim, evals);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(std::move(left));
        heap.push(std::move(right));
    }
    // Re-sum to shed the drift of the running updates.
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    err = 0.0;
    while (!heap.empty()) {
        sum += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return QuadratureResult{SquareMatrix(std::move(sum)), err, evals};
}

ExponentialFamily::ExponentialFamily(const SquareMatrix& m) : m_(m) {
    const std::size_t n = m.dim();
    if (m.is_diagonal()) {
        diagonal_ = true;
        d_ = m.eigen().diagonal();
        return;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m.eigen(), true);
    if (es.info() != Eigen::Success) return;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(es.eigenvectors());
    const auto& s = svd.singularValues();
    if (s(n - 1) <= 0.0 || s(0) / s(n - 1) > 1e6) return;
    spectral_ = true;
    v_ = es.eigenvectors();
    v_inv_ = v_.inverse();
    d_ = es.eigenvalues();
}

SquareMatrix ExponentialFamily::operator()(double s) const {
    if (diagonal_) {
        Eigen::VectorXcd e = (s * d_).array().exp();
        return SquareMatrix(Eigen::MatrixXcd(e.asDiagonal()));
    }
    if (spectral_) {
        Eigen::VectorXcd e = (s * d_).array().exp();
        return SquareMatrix(Eigen::MatrixXcd(v_ * e.asDiagonal() * v_inv_));
    }
    return matrix_exp(s * m_);
}

QuadratureResult beta_weighted_integral(const SquareMatrix& p, const SquareMatrix& q, const MatrixFunction& f,
                                        double tol) {
    const std::size_t n = p.dim();
    const Spectrum sp = spectrum(p), sq = spectrum(q);
    if (sp.minRe <= 0.0 || sq.minRe <= 0.0)
        throw Error(ErrorCode::NotPositiveStable, "endpoint exponents must be positive stable");

    double ps = 0.0, qs = 0.0;
    if (scalar_real(p, ps) && scalar_real(q, qs)) {
        const QuadratureRule coarse = gauss_jacobi(40, ps - 1.0, qs - 1.0);
        const QuadratureRule fine = gauss_jacobi(60, ps - 1.0, qs - 1.0);
        const SquareMatrix a = apply_rule(coarse, f, n), b = apply_rule(fine, f, n);
        const double err = (a - b).norm();
        if (err > tol * std::max(b.norm(), 1e-300))
            throw Error(ErrorCode::SingularityUnresolved, "Gauss-Jacobi resolutions disagree");
        return QuadratureResult{b, err, 100};
    }

    const SquareMatrix ident = SquareMatrix::identity(n);
    auto half = [&](const SquareMatrix& near, const SquareMatrix& far, bool mirrored, const Spectrum& s) {
        double radius = 0.0;
        for (Complex e : s.eigenvalues) radius = std::max(radius, std::abs(e));
        const double u0 = std::log(2.0);
        const double u1 = u0 + 45.0 / s.minRe;
        const double width = std::min(2.0, 2.0 / std::max(radius, 1e-3));
        const int panels = std::max(1, static_cast<int>(std::ceil((u1 - u0) / width)));
        const ExponentialFamily decay(-near);
        const ExponentialFamily other(far - ident);
        auto g = [&](double u) {
            const double e = std::exp(-u);
            const double t = mirrored ? -std::expm1(-u) : e;
            const SquareMatrix a = decay(u);
            const SquareMatrix b = other(std::log1p(-e));
            return mirrored ? SquareMatrix(b * a * f(t)) : SquareMatrix(a * b * f(t));
        };
        return adaptive_integral(g, u0, u1, n, 0.1 * tol, 0.0, panels);
    };
    QuadratureResult left = half(p, q, false, sp);
    QuadratureResult right = half(q, p, true, sq);
    QuadratureResult out{left.value + right.value, left.error_estimate + right.error_estimate,
                         left.evaluations + right.evaluations};
    if (out.error_estimate > tol * std::max(out.value.norm(), 1e-300))
        throw Error(ErrorCode::QuadratureError, "beta-weighted integral did not reach the requested tolerance");
    return out;
}

QuadratureResult endpoint_singular_integral(double lo, double hi, const SquareMatrix& l, const SquareMatrix& r,
                                            const MatrixFunction& f, double tol) {
    if (!(hi > lo)) throw Error(ErrorCode::DomainError, "interval must have hi > lo");
    const double len = hi - lo;
    QuadratureResult inner = beta_weighted_integral(l, r, [&](double u) { return f(lo + len * u); }, tol);
    const SquareMatrix scale = matrix_power(len, l + r - SquareMatrix::identity(l.dim()));
    inner.value = scale * inner.value;
    inner.error_estimate *= scale.norm();
    return inner;
}

}  // namespace matspec

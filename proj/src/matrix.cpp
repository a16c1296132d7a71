#include "matspec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <unsupported/Eigen/MatrixFunctions>

namespace matspec {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EigenFailure: return "EigenFailure";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::GenerationFailure: return "GenerationFailure";
        case ErrorCode::NotPositiveStable: return "NotPositiveStable";
        case ErrorCode::IllConditionedEigenbasis: return "IllConditionedEigenbasis";
        case ErrorCode::NonCommuting: return "NonCommuting";
        case ErrorCode::SingularDenominator: return "SingularDenominator";
        case ErrorCode::Nonconvergence: return "Nonconvergence";
        case ErrorCode::DegenerateSeries: return "DegenerateSeries";
        case ErrorCode::NonCommutingOperator: return "NonCommutingOperator";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::ExtractionUnstable: return "ExtractionUnstable";
        case ErrorCode::QuadratureError: return "QuadratureError";
        case ErrorCode::TailBoundViolation: return "TailBoundViolation";
        case ErrorCode::SingularityUnresolved: return "SingularityUnresolved";
        case ErrorCode::DivergentIntegral: return "DivergentIntegral";
        case ErrorCode::NonIntegerPowerAmbiguity: return "NonIntegerPowerAmbiguity";
        case ErrorCode::BranchCut: return "BranchCut";
        case ErrorCode::SingularShift: return "SingularShift";
        case ErrorCode::UnknownFunction: return "UnknownFunction";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Error";
}

SquareMatrix::SquareMatrix(std::size_t dim) : m_(Storage::Zero(dim, dim)) {
    if (dim == 0) throw Error(ErrorCode::ShapeMismatch, "matrix dimension must be at least 1");
}

SquareMatrix::SquareMatrix(Storage m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols())
        throw Error(ErrorCode::ShapeMismatch, "matrix must be square and non-empty");
}

SquareMatrix SquareMatrix::identity(std::size_t dim) { return SquareMatrix(Storage(Storage::Identity(dim, dim))); }

SquareMatrix SquareMatrix::scalar(std::size_t dim, Complex value) {
    return SquareMatrix(Storage(value * Storage::Identity(dim, dim)));
}

SquareMatrix SquareMatrix::diagonal(const std::vector<Complex>& values) {
    SquareMatrix out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out.m_(i, i) = values[i];
    return out;
}

SquareMatrix SquareMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    SquareMatrix out(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw Error(ErrorCode::ShapeMismatch, "rows must form a square");
        std::size_t j = 0;
        for (Complex v : row) out.m_(i, j++) = v;
        ++i;
    }
    return out;
}

double SquareMatrix::norm() const {
    if (m_.rows() == 1) return std::abs(m_(0, 0));
    Eigen::JacobiSVD<Storage> svd(m_);
    return svd.singularValues()(0);
}

double SquareMatrix::min_singular_value() const {
    if (m_.rows() == 1) return std::abs(m_(0, 0));
    Eigen::JacobiSVD<Storage> svd(m_);
    return svd.singularValues()(m_.rows() - 1);
}

bool SquareMatrix::is_diagonal() const {
    for (Eigen::Index i = 0; i < m_.rows(); ++i)
        for (Eigen::Index j = 0; j < m_.cols(); ++j)
            if (i != j && m_(i, j) != Complex(0.0)) return false;
    return true;
}

bool SquareMatrix::is_zero() const { return m_.isZero(0.0); }

bool SquareMatrix::is_invertible() const {
    if (m_.rows() == 1) return std::abs(m_(0, 0)) > 0.0;
    Eigen::JacobiSVD<Storage> svd(m_);
    const auto& s = svd.singularValues();
    return s(0) > 0.0 && s(m_.rows() - 1) > 1e-12 * s(0);
}

SquareMatrix SquareMatrix::inverse() const {
    if (!is_invertible()) throw Error(ErrorCode::SingularDenominator, "matrix is not invertible");
    return SquareMatrix(Storage(m_.partialPivLu().inverse()));
}

SquareMatrix SquareMatrix::solve(const SquareMatrix& rhs) const {
    if (!is_invertible()) throw Error(ErrorCode::SingularDenominator, "matrix is not invertible");
    return SquareMatrix(Storage(m_.partialPivLu().solve(rhs.m_)));
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& o) {
    if (o.dim() != dim()) throw Error(ErrorCode::ShapeMismatch, "dimension mismatch in +");
    m_ += o.m_;
    return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& o) {
    if (o.dim() != dim()) throw Error(ErrorCode::ShapeMismatch, "dimension mismatch in -");
    m_ -= o.m_;
    return *this;
}

SquareMatrix& SquareMatrix::operator*=(Complex c) {
    m_ *= c;
    return *this;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "dimension mismatch in *");
    return SquareMatrix(SquareMatrix::Storage(a.m_ * b.m_));
}

SquareMatrix SquareMatrix::shifted(Complex c) const {
    SquareMatrix out(*this);
    for (Eigen::Index i = 0; i < m_.rows(); ++i) out.m_(i, i) += c;
    return out;
}

bool approx_equal(const SquareMatrix& a, const SquareMatrix& b, double tol) {
    if (a.dim() != b.dim()) return false;
    return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff() <= tol;
}

double commutator_norm(const SquareMatrix& a, const SquareMatrix& b) { return (a * b - b * a).norm(); }

bool commutes(const SquareMatrix& a, const SquareMatrix& b, double rel_tol) {
    if (a.dim() != b.dim()) return false;
    return commutator_norm(a, b) <= rel_tol * std::max(a.norm() * b.norm(), 1e-300);
}

double relative_difference(const SquareMatrix& a, const SquareMatrix& b) {
    const double scale = std::max(a.norm(), b.norm());
    if (scale == 0.0) return 0.0;
    return (a - b).norm() / scale;
}

Spectrum spectrum(const SquareMatrix& m) {
    Spectrum s;
    if (!m.eigen().allFinite()) throw Error(ErrorCode::EigenFailure, "matrix has non-finite entries");
    if (m.is_diagonal()) {
        for (std::size_t i = 0; i < m.dim(); ++i) s.eigenvalues.push_back(m(i, i));
    } else {
        Eigen::ComplexEigenSolver<SquareMatrix::Storage> es(m.eigen(), false);
        if (es.info() != Eigen::Success) throw Error(ErrorCode::EigenFailure, "eigen-solver did not converge");
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) s.eigenvalues.push_back(es.eigenvalues()(i));
    }
    s.maxRe = -std::numeric_limits<double>::infinity();
    s.minRe = std::numeric_limits<double>::infinity();
    for (Complex e : s.eigenvalues) {
        s.maxRe = std::max(s.maxRe, e.real());
        s.minRe = std::min(s.minRe, e.real());
    }
    return s;
}

bool is_positive_stable(const SquareMatrix& m) { return spectrum(m).minRe > 0.0; }

namespace {

double condition_number(const Eigen::MatrixXcd& v) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v);
    const auto& s = svd.singularValues();
    const double lo = s(s.size() - 1);
    return lo > 0.0 ? s(0) / lo : std::numeric_limits<double>::infinity();
}

// Scalar multiples of I that picked up roundoff off the diagonal.
bool nearly_scalar(const SquareMatrix& m, Complex& value) {
    const std::size_t n = m.dim();
    value = m.trace() / static_cast<double>(n);
    const double scale = std::max(m.eigen().cwiseAbs().maxCoeff(), 1e-300);
    const double dev = (m.eigen() - value * Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    return dev <= 1e-14 * scale;
}

}  // namespace

SquareMatrix apply_spectral(const SquareMatrix& m, const std::function<Complex(Complex)>& f,
                            double max_condition) {
    const std::size_t n = m.dim();
    if (m.is_diagonal()) {
        SquareMatrix out(n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = f(m(i, i));
        return out;
    }
    Complex c;
    if (nearly_scalar(m, c)) return SquareMatrix::scalar(n, f(c));

    Eigen::ComplexEigenSolver<SquareMatrix::Storage> es(m.eigen(), true);
    if (es.info() != Eigen::Success) throw Error(ErrorCode::EigenFailure, "eigen-solver did not converge");
    const Eigen::MatrixXcd& v = es.eigenvectors();
    const double cond = condition_number(v);
    if (!(cond <= max_condition))
        throw Error(ErrorCode::IllConditionedEigenbasis,
                    "eigenvector condition " + std::to_string(cond) + " exceeds limit");
    Eigen::VectorXcd fd(n);
    for (std::size_t i = 0; i < n; ++i) fd(i) = f(es.eigenvalues()(i));
    Eigen::MatrixXcd vf = v * fd.asDiagonal();
    // (V f(D)) V^{-1} = (V^{-T} (V f(D))^T)^T
    Eigen::MatrixXcd out = v.transpose().partialPivLu().solve(vf.transpose()).transpose();
    return SquareMatrix(std::move(out));
}

SquareMatrix matrix_exp(const SquareMatrix& m) {
    const std::size_t n = m.dim();
    if (m.is_diagonal()) {
        SquareMatrix out(n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = std::exp(m(i, i));
        return out;
    }
    return SquareMatrix(SquareMatrix::Storage(m.eigen().exp()));
}

SquareMatrix matrix_power(double t, const SquareMatrix& a) {
    if (!(t > 0.0)) throw Error(ErrorCode::DomainError, "matrix_power needs t > 0");
    if (t == 1.0) return SquareMatrix::identity(a.dim());
    return matrix_exp(std::log(t) * a);
}

SquareMatrix matrix_power(Complex z, const SquareMatrix& a) {
    if (z.imag() == 0.0) {
        if (z.real() > 0.0) return matrix_power(z.real(), a);
        throw Error(ErrorCode::BranchCut, "z^A undefined on the closed negative real axis");
    }
    return matrix_exp(std::log(z) * a);
}

std::vector<Complex> add(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::vector<Complex> scale(const std::vector<Complex>& a, Complex c) {
    std::vector<Complex> out(a);
    for (auto& x : out) x *= c;
    return out;
}

std::vector<Complex> shift(const std::vector<Complex>& a, Complex c) {
    std::vector<Complex> out(a);
    for (auto& x : out) x += c;
    return out;
}

namespace {

Eigen::MatrixXcd random_basis(std::mt19937_64& rng, std::size_t dim) {
    if (dim == 1) return Eigen::MatrixXcd::Identity(1, 1);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Eigen::MatrixXcd v(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) v(i, j) = Complex(g(rng), g(rng));
        if (condition_number(v) < 100.0) return v;
    }
    throw Error(ErrorCode::GenerationFailure, "no eigenbasis with condition < 100 found");
}

}  // namespace

SpectralSampler::SpectralSampler(std::uint64_t seed, std::size_t dim) : dim_(dim), rng_(seed) {
    if (dim == 0) throw Error(ErrorCode::ShapeMismatch, "dimension must be at least 1");
    v_ = random_basis(rng_, dim);
    v_inv_ = v_.inverse();
}

double SpectralSampler::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Complex SpectralSampler::complex_in_disk(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    const double phi = uniform(0.0, 2.0 * M_PI);
    return std::polar(r, phi);
}

std::vector<Complex> SpectralSampler::eigenvalues(double lo, double hi, double imag) {
    std::vector<Complex> out(dim_);
    for (auto& e : out) e = Complex(uniform(lo, hi), imag > 0.0 ? uniform(-imag, imag) : 0.0);
    return out;
}

SquareMatrix SpectralSampler::matrix(const std::vector<Complex>& eig) const {
    if (eig.size() != dim_) throw Error(ErrorCode::ShapeMismatch, "eigenvalue count must equal dimension");
    Eigen::VectorXcd d(dim_);
    for (std::size_t i = 0; i < dim_; ++i) d(i) = eig[i];
    return SquareMatrix(Eigen::MatrixXcd(v_ * d.asDiagonal() * v_inv_));
}

CommutingFamily commuting_family(std::uint64_t seed, std::size_t dim, std::size_t count,
                                 const FamilyConstraints& constraints) {
    if (dim == 0 || count == 0) throw Error(ErrorCode::DomainError, "dim and count must be positive");
    SpectralSampler sampler(seed, dim);

    // Seed eigenvalues, pairwise separated so every polynomial image is a
    // genuine function of one diagonalizable matrix.
    std::vector<Complex> d;
    for (int attempt = 0; attempt < 100 && d.size() < dim; ++attempt) {
        const Complex cand(sampler.uniform(-1.0, 1.0),
                           constraints.real_spectrum ? 0.0 : sampler.uniform(-0.5, 0.5));
        bool ok = true;
        for (Complex e : d) ok = ok && std::abs(e - cand) > 0.1;
        if (ok) d.push_back(cand);
    }
    if (d.size() < dim) throw Error(ErrorCode::GenerationFailure, "could not separate seed eigenvalues");

    CommutingFamily fam{sampler.matrix(d), {}, {}};
    for (std::size_t j = 0; j < count; ++j) {
        const int degree = 1 + static_cast<int>(j % 2);
        std::vector<double> c(degree + 1);
        for (auto& x : c) x = sampler.uniform(-1.0, 1.0);
        if (std::abs(c[1]) < 0.2) c[1] = c[1] < 0 ? -0.2 : 0.2;

        std::vector<Complex> lam(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            Complex acc = 0.0;
            for (int k = degree; k >= 0; --k) acc = acc * d[i] + c[k];
            lam[i] = acc;
        }
        if (constraints.positive_stable) {
            double rmin = lam[0].real(), rmax = lam[0].real();
            for (Complex e : lam) {
                rmin = std::min(rmin, e.real());
                rmax = std::max(rmax, e.real());
            }
            const double width = constraints.re_hi - constraints.re_lo;
            double a = 1.0;
            if (rmax - rmin > 1e-12) a = sampler.uniform(0.4, 0.9) * width / (rmax - rmin);
            if (a * (rmax - rmin) > 0.9 * width) a = 0.9 * width / (rmax - rmin);
            const double slack = width - a * (rmax - rmin);
            const double b = constraints.re_lo + sampler.uniform(0.05, 0.95) * slack - a * rmin;
            for (auto& e : lam) e = a * e + b;
        }
        fam.members.push_back(sampler.matrix(lam));
        fam.eigenvalues.push_back(lam);
    }
    return fam;
}

}  // namespace matspec

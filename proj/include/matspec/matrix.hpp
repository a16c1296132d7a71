#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "matspec/error.hpp"

namespace matspec {

using Complex = std::complex<double>;

inline constexpr double kDefaultEqualityTol = 1e-10;

// Dense complex square matrix. Thin value wrapper over Eigen so that every
// module speaks the same type and dimension checks happen in one place.
class SquareMatrix {
public:
    using Storage = Eigen::MatrixXcd;

    explicit SquareMatrix(std::size_t dim = 1);
    explicit SquareMatrix(Storage m);

    static SquareMatrix identity(std::size_t dim);
    static SquareMatrix scalar(std::size_t dim, Complex value);
    static SquareMatrix diagonal(const std::vector<Complex>& values);
    static SquareMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    Complex& operator()(std::size_t i, std::size_t j) { return m_(i, j); }
    const Storage& eigen() const { return m_; }

    Complex trace() const { return m_.trace(); }
    double norm() const;           // spectral norm
    double frobenius() const { return m_.norm(); }
    double min_singular_value() const;
    bool is_diagonal() const;
    bool is_zero() const;

    // Smallest singular value above 1e-12 relative to the norm.
    bool is_invertible() const;
    SquareMatrix inverse() const;  // throws SingularDenominator
    // x = this^{-1} rhs, with the same invertibility test.
    SquareMatrix solve(const SquareMatrix& rhs) const;

    SquareMatrix& operator+=(const SquareMatrix& o);
    SquareMatrix& operator-=(const SquareMatrix& o);
    SquareMatrix& operator*=(Complex c);

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator-(const SquareMatrix& a) { return SquareMatrix(Storage(-a.m_)); }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
    friend SquareMatrix operator*(SquareMatrix a, Complex c) { return a *= c; }
    friend SquareMatrix operator*(Complex c, SquareMatrix a) { return a *= c; }
    friend SquareMatrix operator/(SquareMatrix a, Complex c) { return a *= (1.0 / c); }

    // A + cI, the shift used by every Pochhammer product.
    SquareMatrix shifted(Complex c) const;

private:
    Storage m_;
};

bool approx_equal(const SquareMatrix& a, const SquareMatrix& b, double tol = kDefaultEqualityTol);
double commutator_norm(const SquareMatrix& a, const SquareMatrix& b);
bool commutes(const SquareMatrix& a, const SquareMatrix& b, double rel_tol = 1e-10);
// ||a - b|| / max(||a||, ||b||), zero when both vanish.
double relative_difference(const SquareMatrix& a, const SquareMatrix& b);

struct Spectrum {
    std::vector<Complex> eigenvalues;
    double maxRe = 0.0;
    double minRe = 0.0;
};

Spectrum spectrum(const SquareMatrix& m);
bool is_positive_stable(const SquareMatrix& m);

// f(m) = V f(D) V^{-1}. Diagonal inputs are mapped entrywise.
SquareMatrix apply_spectral(const SquareMatrix& m, const std::function<Complex(Complex)>& f,
                            double max_condition = 1e6);

SquareMatrix matrix_exp(const SquareMatrix& m);
SquareMatrix matrix_power(double t, const SquareMatrix& a);
// Principal branch z^A = exp(A Log z); z on (-inf, 0] is rejected.
SquareMatrix matrix_power(Complex z, const SquareMatrix& a);

struct CommutingFamily {
    SquareMatrix basis;
    std::vector<SquareMatrix> members;
    std::vector<std::vector<Complex>> eigenvalues;
};

struct FamilyConstraints {
    bool positive_stable = true;
    double re_lo = 0.2;
    double re_hi = 3.0;
    bool real_spectrum = false;
};

CommutingFamily commuting_family(std::uint64_t seed, std::size_t dim, std::size_t count,
                                 const FamilyConstraints& constraints = {});

// Builds matrices V diag(lambda) V^{-1} over one shared random eigenbasis,
// so everything it hands out commutes. Used by identity samplers.
class SpectralSampler {
public:
    SpectralSampler(std::uint64_t seed, std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::mt19937_64& rng() { return rng_; }

    double uniform(double lo, double hi);
    Complex complex_in_disk(double radius);
    // Eigenvalues with real parts in [lo, hi] and imaginary parts in [-imag, imag].
    std::vector<Complex> eigenvalues(double lo, double hi, double imag = 0.3);
    SquareMatrix matrix(const std::vector<Complex>& eig) const;
    const Eigen::MatrixXcd& basis() const { return v_; }

private:
    std::size_t dim_;
    std::mt19937_64 rng_;
    Eigen::MatrixXcd v_;
    Eigen::MatrixXcd v_inv_;
};

std::vector<Complex> add(const std::vector<Complex>& a, const std::vector<Complex>& b);
std::vector<Complex> scale(const std::vector<Complex>& a, Complex c);
std::vector<Complex> shift(const std::vector<Complex>& a, Complex c);

}  // namespace matspec

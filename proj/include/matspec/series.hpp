#pragma once

#include <functional>
#include <vector>

#include "matspec/matrix.hpp"

namespace matspec {

// z^alpha * sum_{k=low}^{high} c_k z^k, every listed coefficient exact.
// alpha is a matrix commuting with the coefficients (zero for plain series).
//
// Each coefficient also carries a magnitude: the summed norms of everything
// that was added or multiplied into it. Residuals are measured against it,
// so cancellation inside an identity does not masquerade as an error.
class MatrixPowerSeries {
public:
    MatrixPowerSeries(std::vector<SquareMatrix> coeffs, SquareMatrix offset, int low = 0);
    MatrixPowerSeries(std::vector<SquareMatrix> coeffs, std::vector<double> magnitude, SquareMatrix offset, int low);

    static MatrixPowerSeries from_coefficients(std::vector<SquareMatrix> coeffs);
    static MatrixPowerSeries zero(std::size_t dim, int low, int high);
    // sum_k c_k z^k with scalar coefficients times the identity.
    static MatrixPowerSeries scalar_series(std::size_t dim, const std::vector<Complex>& coeffs);

    std::size_t dim() const { return offset_.dim(); }
    const SquareMatrix& offset() const { return offset_; }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    bool has_offset() const { return !offset_.is_zero(); }

    // Zero below low(); throws beyond high().
    SquareMatrix coeff(int power) const;
    double magnitude(int power) const;
    const std::vector<SquareMatrix>& coefficients() const { return coeffs_; }

    MatrixPowerSeries times_z(int m) const;
    // Multiplies by z^beta (beta commuting with the coefficients).
    MatrixPowerSeries with_offset(const SquareMatrix& beta) const;
    MatrixPowerSeries truncated(int high) const;
    MatrixPowerSeries left_multiplied(const SquareMatrix& m) const;
    // f(c z^p) for a plain series f; p >= 1.
    MatrixPowerSeries substitute(Complex c, int p) const;
    // Partial sum at x > 0 (z^alpha taken on the principal branch).
    SquareMatrix evaluate(double x) const;

    MatrixPowerSeries& operator*=(Complex c);
    friend MatrixPowerSeries operator*(Complex c, MatrixPowerSeries s) { return s *= c; }
    friend MatrixPowerSeries operator+(const MatrixPowerSeries& a, const MatrixPowerSeries& b);
    friend MatrixPowerSeries operator-(const MatrixPowerSeries& a, const MatrixPowerSeries& b);
    friend MatrixPowerSeries operator*(const MatrixPowerSeries& a, const MatrixPowerSeries& b);

private:
    std::vector<SquareMatrix> coeffs_;
    std::vector<double> mag_;
    SquareMatrix offset_;
    int low_;
};

MatrixPowerSeries theta(const MatrixPowerSeries& s);
MatrixPowerSeries derivative(const MatrixPowerSeries& s);

// Integer m with a - b = mI, or ShapeMismatch.
int offset_gap(const SquareMatrix& a, const SquareMatrix& b);

struct SeriesComparison {
    double residual = 0.0;
    int worst_power = 0;
    int compared_from = 0;
    int compared_through = 0;
    bool pass = true;
};

// max_k ||lhs_k - rhs_k|| / scale_k with scale_k the larger coefficient norm
// or accumulated magnitude. Coefficients below 1e-280 in scale are skipped.
SeriesComparison compare(const MatrixPowerSeries& lhs, const MatrixPowerSeries& rhs, double tol = 1e-10);
// The same measure for a series that should vanish identically.
SeriesComparison residual_of(const MatrixPowerSeries& s, double tol = 1e-10);

// Linear combination of words in theta, d/dz, z^m and constant matrices.
// Words apply right to left: (X * Y) f = X(Y f).
class SeriesOperator {
public:
    enum class Kind { Theta, Derivative, MulZ, Const };
    struct Factor {
        Kind kind;
        int power = 0;
        std::vector<SquareMatrix> matrix;  // one element for Const
    };
    struct Word {
        Complex coef = 1.0;
        std::vector<Factor> factors;
    };

    static SeriesOperator zero() { return SeriesOperator(); }
    static SeriesOperator identity();
    static SeriesOperator theta();
    static SeriesOperator d();
    static SeriesOperator z(int m = 1);
    static SeriesOperator constant(const SquareMatrix& m);
    static SeriesOperator scalar(Complex c);

    const std::vector<Word>& words() const { return words_; }

    friend SeriesOperator operator+(SeriesOperator a, const SeriesOperator& b);
    friend SeriesOperator operator-(SeriesOperator a, const SeriesOperator& b);
    friend SeriesOperator operator*(const SeriesOperator& a, const SeriesOperator& b);
    friend SeriesOperator operator*(Complex c, SeriesOperator a);

private:
    std::vector<Word> words_;
};

// theta + M, the building block of every hypergeometric operator.
SeriesOperator theta_plus(const SquareMatrix& m);

MatrixPowerSeries apply_operator(const MatrixPowerSeries& s, const SeriesOperator& op);

struct ExtractionOptions {
    double radius = 0.5;
    int nodes = 64;
};

// Taylor coefficients in t of genFn(z0, t), t^0..t^order, by the trapezoid
// rule on |t| = radius with N and 2N nodes; disagreement above 1e-8 raises.
std::vector<SquareMatrix> bivariate_coefficient(const std::function<SquareMatrix(Complex, Complex)>& gen, Complex z0,
                                                int order, const ExtractionOptions& opts = {});

}  // namespace matspec

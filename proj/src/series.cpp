#include "matspec/series.hpp"

#include <algorithm>
#include <cmath>

namespace matspec {

namespace {

double fnorm(const SquareMatrix& m) { return m.frobenius(); }

bool commute_f(const SquareMatrix& a, const SquareMatrix& b) {
    const double na = fnorm(a), nb = fnorm(b);
    if (na == 0.0 || nb == 0.0) return true;
    return fnorm(a * b - b * a) <= 1e-9 * na * nb;
}

void require_commuting(const SquareMatrix& m, const std::vector<SquareMatrix>& coeffs, const SquareMatrix& offset,
                       ErrorCode code) {
    if (!commute_f(m, offset)) throw Error(code, "matrix does not commute with the exponent offset");
    for (const auto& c : coeffs)
        if (!commute_f(m, c)) throw Error(code, "matrix does not commute with the series coefficients");
}

}  // namespace

MatrixPowerSeries::MatrixPowerSeries(std::vector<SquareMatrix> coeffs, SquareMatrix offset, int low)
    : coeffs_(std::move(coeffs)), offset_(std::move(offset)), low_(low) {
    if (coeffs_.empty()) throw Error(ErrorCode::ShapeMismatch, "series needs at least one coefficient");
    mag_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (c.dim() != offset_.dim()) throw Error(ErrorCode::ShapeMismatch, "coefficient dimensions differ");
        mag_.push_back(fnorm(c));
    }
}

MatrixPowerSeries::MatrixPowerSeries(std::vector<SquareMatrix> coeffs, std::vector<double> magnitude,
                                     SquareMatrix offset, int low)
    : coeffs_(std::move(coeffs)), mag_(std::move(magnitude)), offset_(std::move(offset)), low_(low) {
    if (coeffs_.empty() || mag_.size() != coeffs_.size())
        throw Error(ErrorCode::ShapeMismatch, "coefficients and magnitudes must match and be non-empty");
}

MatrixPowerSeries MatrixPowerSeries::from_coefficients(std::vector<SquareMatrix> coeffs) {
    if (coeffs.empty()) throw Error(ErrorCode::ShapeMismatch, "series needs at least one coefficient");
    const std::size_t n = coeffs.front().dim();
    return MatrixPowerSeries(std::move(coeffs), SquareMatrix(n), 0);
}

MatrixPowerSeries MatrixPowerSeries::zero(std::size_t dim, int low, int high) {
    std::vector<SquareMatrix> c(static_cast<std::size_t>(high - low + 1), SquareMatrix(dim));
    return MatrixPowerSeries(std::move(c), SquareMatrix(dim), low);
}

MatrixPowerSeries MatrixPowerSeries::scalar_series(std::size_t dim, const std::vector<Complex>& coeffs) {
    std::vector<SquareMatrix> c;
    for (Complex v : coeffs) c.push_back(SquareMatrix::scalar(dim, v));
    return from_coefficients(std::move(c));
}

SquareMatrix MatrixPowerSeries::coeff(int power) const {
    if (power > high()) throw Error(ErrorCode::ShapeMismatch, "coefficient beyond the exact range requested");
    if (power < low_) return SquareMatrix(dim());
    return coeffs_[static_cast<std::size_t>(power - low_)];
}

double MatrixPowerSeries::magnitude(int power) const {
    if (power < low_ || power > high()) return 0.0;
    return mag_[static_cast<std::size_t>(power - low_)];
}

MatrixPowerSeries MatrixPowerSeries::times_z(int m) const {
    MatrixPowerSeries out(*this);
    out.low_ += m;
    return out;
}

MatrixPowerSeries MatrixPowerSeries::with_offset(const SquareMatrix& beta) const {
    require_commuting(beta, coeffs_, offset_, ErrorCode::ShapeMismatch);
    MatrixPowerSeries out(*this);
    out.offset_ = offset_ + beta;
    return out;
}

MatrixPowerSeries MatrixPowerSeries::truncated(int h) const {
    if (h >= high()) return *this;
    if (h < low_) throw Error(ErrorCode::ShapeMismatch, "truncation below the lowest power");
    const std::size_t keep = static_cast<std::size_t>(h - low_ + 1);
    return MatrixPowerSeries(std::vector<SquareMatrix>(coeffs_.begin(), coeffs_.begin() + keep),
                             std::vector<double>(mag_.begin(), mag_.begin() + keep), offset_, low_);
}

MatrixPowerSeries MatrixPowerSeries::left_multiplied(const SquareMatrix& m) const {
    require_commuting(m, coeffs_, offset_, ErrorCode::NonCommutingOperator);
    const double nm = fnorm(m);
    MatrixPowerSeries out(*this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out.coeffs_[i] = m * coeffs_[i];
        out.mag_[i] = nm * mag_[i];
    }
    return out;
}

MatrixPowerSeries MatrixPowerSeries::substitute(Complex c, int p) const {
    if (has_offset() || p < 1) throw Error(ErrorCode::ShapeMismatch, "substitution needs a plain series and p >= 1");
    const int lo = p * low_, hi = p * (high() + 1) - 1;
    std::vector<SquareMatrix> out(static_cast<std::size_t>(hi - lo + 1), SquareMatrix(dim()));
    std::vector<double> mag(out.size(), 0.0);
    for (int k = low_; k <= high(); ++k) {
        const Complex f = std::pow(c, k);
        const std::size_t idx = static_cast<std::size_t>(p * k - lo);
        out[idx] = f * coeffs_[static_cast<std::size_t>(k - low_)];
        mag[idx] = std::abs(f) * mag_[static_cast<std::size_t>(k - low_)];
    }
    return MatrixPowerSeries(std::move(out), std::move(mag), offset_, lo);
}

SquareMatrix MatrixPowerSeries::evaluate(double x) const {
    SquareMatrix acc(dim());
    for (int k = high(); k >= low_; --k) acc = x * acc + coeffs_[static_cast<std::size_t>(k - low_)];
    acc = std::pow(x, low_) * acc;
    if (has_offset()) acc = matrix_power(x, offset_) * acc;
    return acc;
}

MatrixPowerSeries& MatrixPowerSeries::operator*=(Complex c) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] *= c;
        mag_[i] *= std::abs(c);
    }
    return *this;
}

int offset_gap(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "series dimensions differ");
    const SquareMatrix d = a - b;
    const double m = std::round(d.trace().real() / static_cast<double>(a.dim()));
    const double dev = fnorm(d.shifted(-m));
    if (dev > 1e-9 * std::max({1.0, fnorm(a), fnorm(b)}))
        throw Error(ErrorCode::ShapeMismatch, "exponent offsets do not differ by an integer multiple of I");
    return static_cast<int>(m);
}

namespace {

MatrixPowerSeries combine(const MatrixPowerSeries& a, const MatrixPowerSeries& b, double sign) {
    const int m = offset_gap(b.offset(), a.offset());
    const int lo = std::min(a.low(), b.low() + m);
    const int hi = std::min(a.high(), b.high() + m);
    if (hi < lo) throw Error(ErrorCode::ShapeMismatch, "series have no common exact range");
    std::vector<SquareMatrix> out;
    std::vector<double> mag;
    for (int p = lo; p <= hi; ++p) {
        out.push_back(a.coeff(p) + sign * b.coeff(p - m));
        mag.push_back(a.magnitude(p) + b.magnitude(p - m));
    }
    return MatrixPowerSeries(std::move(out), std::move(mag), a.offset(), lo);
}

}  // namespace

MatrixPowerSeries operator+(const MatrixPowerSeries& a, const MatrixPowerSeries& b) { return combine(a, b, 1.0); }
MatrixPowerSeries operator-(const MatrixPowerSeries& a, const MatrixPowerSeries& b) { return combine(a, b, -1.0); }

MatrixPowerSeries operator*(const MatrixPowerSeries& a, const MatrixPowerSeries& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "series dimensions differ");
    const int lo = a.low() + b.low();
    const int hi = std::min(a.low() + b.high(), b.low() + a.high());
    std::vector<SquareMatrix> out;
    std::vector<double> mag;
    for (int p = lo; p <= hi; ++p) {
        SquareMatrix acc(a.dim());
        double m = 0.0;
        for (int i = a.low(); i <= a.high(); ++i) {
            const int j = p - i;
            if (j < b.low() || j > b.high()) continue;
            acc += a.coeff(i) * b.coeff(j);
            m += a.magnitude(i) * b.magnitude(j);
        }
        out.push_back(acc);
        mag.push_back(m);
    }
    return MatrixPowerSeries(std::move(out), std::move(mag), a.offset() + b.offset(), lo);
}

MatrixPowerSeries theta(const MatrixPowerSeries& s) {
    std::vector<SquareMatrix> out;
    std::vector<double> mag;
    for (int k = s.low(); k <= s.high(); ++k) {
        const SquareMatrix f = s.offset().shifted(static_cast<double>(k));
        out.push_back(f * s.coeff(k));
        mag.push_back(fnorm(f) * s.magnitude(k));
    }
    return MatrixPowerSeries(std::move(out), std::move(mag), s.offset(), s.low());
}

MatrixPowerSeries derivative(const MatrixPowerSeries& s) {
    // z^a sum c_k z^k  ->  z^a sum (a + kI) c_k z^{k-1}
    MatrixPowerSeries t = theta(s);
    int lo = s.low();
    if (!s.has_offset() && lo == 0) {
        // The constant term differentiates to nothing; keep the plain power range.
        if (t.high() == 0) return MatrixPowerSeries::zero(s.dim(), 0, 0);
        std::vector<SquareMatrix> c(t.coefficients().begin() + 1, t.coefficients().end());
        std::vector<double> mag;
        for (int k = 1; k <= t.high(); ++k) mag.push_back(t.magnitude(k));
        return MatrixPowerSeries(std::move(c), std::move(mag), s.offset(), 0);
    }
    return t.times_z(-1);
}

SeriesComparison compare(const MatrixPowerSeries& lhs, const MatrixPowerSeries& rhs, double tol) {
    const int m = offset_gap(rhs.offset(), lhs.offset());
    SeriesComparison out;
    out.compared_from = std::min(lhs.low(), rhs.low() + m);
    out.compared_through = std::min(lhs.high(), rhs.high() + m);
    if (out.compared_through < out.compared_from) throw Error(ErrorCode::ShapeMismatch, "no common exact range");
    int last_used = out.compared_from - 1;
    for (int p = out.compared_from; p <= out.compared_through; ++p) {
        const SquareMatrix l = lhs.coeff(p), r = rhs.coeff(p - m);
        const double diff = fnorm(l - r);
        const double scale = std::max({fnorm(l), fnorm(r), lhs.magnitude(p), rhs.magnitude(p - m)});
        if (scale < 1e-280) continue;
        last_used = p;
        const double res = diff / scale;
        if (res > out.residual) {
            out.residual = res;
            out.worst_power = p;
        }
    }
    if (last_used >= out.compared_from) out.compared_through = last_used;
    out.pass = out.residual <= tol;
    return out;
}

SeriesComparison residual_of(const MatrixPowerSeries& s, double tol) {
    SeriesComparison out;
    out.compared_from = s.low();
    out.compared_through = s.high();
    int last_used = s.low() - 1;
    for (int p = s.low(); p <= s.high(); ++p) {
        const double scale = std::max(s.magnitude(p), fnorm(s.coeff(p)));
        if (scale < 1e-280) continue;
        last_used = p;
        const double res = fnorm(s.coeff(p)) / scale;
        if (res > out.residual) {
            out.residual = res;
            out.worst_power = p;
        }
    }
    if (last_used >= s.low()) out.compared_through = last_used;
    out.pass = out.residual <= tol;
    return out;
}

SeriesOperator SeriesOperator::identity() {
    SeriesOperator op;
    op.words_.push_back(Word{});
    return op;
}

SeriesOperator SeriesOperator::theta() {
    SeriesOperator op;
    op.words_.push_back(Word{1.0, {Factor{Kind::Theta, 0, {}}}});
    return op;
}

SeriesOperator SeriesOperator::d() {
    SeriesOperator op;
    op.words_.push_back(Word{1.0, {Factor{Kind::Derivative, 0, {}}}});
    return op;
}

SeriesOperator SeriesOperator::z(int m) {
    SeriesOperator op;
    op.words_.push_back(Word{1.0, {Factor{Kind::MulZ, m, {}}}});
    return op;
}

SeriesOperator SeriesOperator::constant(const SquareMatrix& m) {
    SeriesOperator op;
    op.words_.push_back(Word{1.0, {Factor{Kind::Const, 0, {m}}}});
    return op;
}

SeriesOperator SeriesOperator::scalar(Complex c) {
    SeriesOperator op = identity();
    op.words_.front().coef = c;
    return op;
}

SeriesOperator operator+(SeriesOperator a, const SeriesOperator& b) {
    a.words_.insert(a.words_.end(), b.words_.begin(), b.words_.end());
    return a;
}

SeriesOperator operator-(SeriesOperator a, const SeriesOperator& b) { return a + Complex(-1.0) * b; }

SeriesOperator operator*(Complex c, SeriesOperator a) {
    for (auto& w : a.words_) w.coef *= c;
    return a;
}

SeriesOperator operator*(const SeriesOperator& a, const SeriesOperator& b) {
    SeriesOperator out;
    for (const auto& wa : a.words_)
        for (const auto& wb : b.words_) {
            SeriesOperator::Word w{wa.coef * wb.coef, wa.factors};
            w.factors.insert(w.factors.end(), wb.factors.begin(), wb.factors.end());
            out.words_.push_back(std::move(w));
        }
    return out;
}

SeriesOperator theta_plus(const SquareMatrix& m) { return SeriesOperator::theta() + SeriesOperator::constant(m); }

MatrixPowerSeries apply_operator(const MatrixPowerSeries& s, const SeriesOperator& op) {
    if (op.words().empty()) return MatrixPowerSeries::zero(s.dim(), s.low(), s.high()).with_offset(s.offset());
    std::vector<MatrixPowerSeries> parts;
    for (const auto& w : op.words()) {
        MatrixPowerSeries cur = s;
        for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
            switch (it->kind) {
                case SeriesOperator::Kind::Theta: cur = theta(cur); break;
                case SeriesOperator::Kind::Derivative: cur = derivative(cur); break;
                case SeriesOperator::Kind::MulZ: cur = cur.times_z(it->power); break;
                case SeriesOperator::Kind::Const: cur = cur.left_multiplied(it->matrix.front()); break;
            }
        }
        if (w.coef != Complex(1.0)) cur *= w.coef;
        parts.push_back(std::move(cur));
    }
    MatrixPowerSeries total = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) total = total + parts[i];
    return total;
}

std::vector<SquareMatrix> bivariate_coefficient(const std::function<SquareMatrix(Complex, Complex)>& gen, Complex z0,
                                                int order, const ExtractionOptions& opts) {
    const int n = std::max(opts.nodes, 2 * (order + 1));
    const double r = opts.radius;
    std::vector<SquareMatrix> samples;
    samples.reserve(static_cast<std::size_t>(2 * n));
    for (int j = 0; j < 2 * n; ++j) samples.push_back(gen(z0, std::polar(r, M_PI * j / n)));
    const std::size_t dim = samples.front().dim();

    auto extract = [&](int nodes, int stride) {
        std::vector<SquareMatrix> c;
        for (int k = 0; k <= order; ++k) {
            SquareMatrix acc(dim);
            for (int j = 0; j < nodes; ++j)
                acc += std::polar(1.0, -2.0 * M_PI * j * k / nodes) * samples[static_cast<std::size_t>(j * stride)];
            c.push_back(acc / (static_cast<double>(nodes) * std::pow(r, k)));
        }
        return c;
    };
    const std::vector<SquareMatrix> coarse = extract(n, 2);
    std::vector<SquareMatrix> fine = extract(2 * n, 1);
    double top = 0.0;
    for (const auto& c : fine) top = std::max(top, fnorm(c));
    for (int k = 0; k <= order; ++k) {
        const double scale = std::max(fnorm(fine[k]), 1e-12 * top);
        if (scale > 0.0 && fnorm(coarse[k] - fine[k]) > 1e-8 * scale)
            throw Error(ErrorCode::ExtractionUnstable,
                        "contour estimates disagree at t^" + std::to_string(k) + "; adjust the radius");
    }
    return fine;
}

}  // namespace matspec

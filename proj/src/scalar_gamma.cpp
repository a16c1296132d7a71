#include "matspec/scalar_gamma.hpp"

#include <array>
#include <cmath>

#include "matspec/error.hpp"

namespace matspec {

namespace {

using C = std::complex<double>;

constexpr double kG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// log Gamma(z) for Re z >= 1/2.
C lanczos_lgamma(C z) {
    z -= 1.0;
    C sum = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) sum += kLanczos[k] / (z + static_cast<double>(k));
    const C t = z + kG + 0.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

C lanczos_gamma(C z) {
    z -= 1.0;
    C sum = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) sum += kLanczos[k] / (z + static_cast<double>(k));
    const C t = z + kG + 0.5;
    return std::sqrt(2.0 * M_PI) * std::exp((z + 0.5) * std::log(t) - t) * sum;
}

C sin_pi(C z) {
    // Reduce the real part first so large arguments keep their accuracy.
    const double n = std::round(z.real());
    const C r(z.real() - n, z.imag());
    C s = std::sin(M_PI * r);
    if (std::fmod(std::abs(n), 2.0) == 1.0) s = -s;
    return s;
}

}  // namespace

bool is_nonpositive_integer(C z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

C complex_gamma(C z) {
    if (is_nonpositive_integer(z)) throw Error(ErrorCode::DomainError, "gamma has a pole at a non-positive integer");
    if (z.real() < 0.5) return M_PI / (sin_pi(z) * lanczos_gamma(1.0 - z));
    if (z.real() > 60.0) return std::exp(lanczos_lgamma(z));
    return lanczos_gamma(z);
}

C complex_lgamma(C z) {
    if (is_nonpositive_integer(z)) throw Error(ErrorCode::DomainError, "log-gamma has a pole at a non-positive integer");
    if (z.real() < 0.5) return std::log(M_PI) - std::log(sin_pi(z)) - lanczos_lgamma(1.0 - z);
    return lanczos_lgamma(z);
}

C complex_rgamma(C z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() < 0.5) return sin_pi(z) * lanczos_gamma(1.0 - z) / M_PI;
    if (z.real() > 60.0) return std::exp(-lanczos_lgamma(z));
    return 1.0 / lanczos_gamma(z);
}

}  // namespace matspec

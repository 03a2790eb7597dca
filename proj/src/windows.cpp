#include "wqpe/windows.hpp"

#include <cmath>
#include <stdexcept>

#include "wqpe/errors.hpp"

namespace wqpe {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Ascending power series sum_k (x/2)^{2k} / (k!)^2; every term positive, so
// no cancellation at any argument. Stops on relative term size 1e-16.
double i0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return sum;
}

// Asymptotic expansion of exp(-x) I0(x) for large x:
//   (2 pi x)^{-1/2} sum_k a_k / x^k, a_k = prod_{j=1..k} (2j-1)^2 / (8 j).
// Truncated at the smallest term; below the 1e-14 target for x >= 30.
double i0e_asymptotic(double x) {
    double term = 1.0, sum = 1.0;
    double prev = term;
    for (int k = 1; k < 40; ++k) {
        const double f = (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
        term *= f;
        if (term > prev) break;  // divergent tail reached
        sum += term;
        prev = term;
        if (term < 1e-17 * sum) break;
    }
    return sum / std::sqrt(2.0 * kPi * x);
}

// Series is exact-to-rounding everywhere; the asymptotic branch is a speed
// path whose truncation error clears 1e-14 only for x above ~30.
constexpr double kSeam = 30.0;

}  // namespace

double bessel_i0(double x) {
    if (!std::isfinite(x)) throw ConfigError("bessel_i0: non-finite argument");
    x = std::fabs(x);
    if (x <= kSeam) return i0_series(x);
    return std::exp(x) * i0e_asymptotic(x);
}

double bessel_i0_scaled(double x) {
    if (!std::isfinite(x)) throw ConfigError("bessel_i0_scaled: non-finite argument");
    x = std::fabs(x);
    if (x <= kSeam) return std::exp(-x) * i0_series(x);
    return i0e_asymptotic(x);
}

WindowVector make_window(const WindowSpec& spec, int n) {
    if (n < 1) throw ConfigError("make_window: n must be >= 1");
    if (spec.beta < 0.0 || !std::isfinite(spec.beta))
        throw ConfigError("make_window: beta must be finite and >= 0");

    const std::size_t N = std::size_t{1} << n;
    WindowVector w;
    w.n = n;
    w.amplitudes.assign(N, 0.0);

    const bool uniform = spec.kind == WindowKind::Rectangular || spec.beta == 0.0;
    if (uniform) {
        const double a = 1.0 / std::sqrt(static_cast<double>(N));
        for (auto& v : w.amplitudes) v = a;
        return w;
    }

    const double beta = spec.beta;
    // Taper argument xb = (2x - (N-1)) / (N-1) on [-1, 1]; evaluate through
    // the exponent-scaled Bessel so beta may exceed the exp() overflow range:
    //   I0(b s)/I0(b s*) = i0e(b s) exp(b (s - s*)) / i0e(b s*),
    // referenced to the largest grid value s* so the peak amplitude is exactly
    // 1 before normalization and small tails may underflow harmlessly.
    const std::size_t half = (N + 1) / 2;
    std::vector<double> s_grid(half);
    double s_hi = 0.0;
    for (std::size_t x = 0; x < half; ++x) {
        const double xb = (2.0 * static_cast<double>(x) - (N - 1.0)) / (N - 1.0);
        s_grid[x] = std::sqrt(std::fmax(0.0, 1.0 - xb * xb));
        s_hi = std::fmax(s_hi, s_grid[x]);
    }
    const double i0e_hi = bessel_i0_scaled(beta * s_hi);
    double norm_sq = 0.0;
    for (std::size_t x = 0; x < half; ++x) {
        const double s = s_grid[x];
        const double v = bessel_i0_scaled(beta * s) * std::exp(beta * (s - s_hi)) / i0e_hi;
        w.amplitudes[x] = v;
        w.amplitudes[N - 1 - x] = v;  // enforce symmetry exactly
    }
    for (double v : w.amplitudes) norm_sq += v * v;
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& v : w.amplitudes) v *= inv;
    return w;
}

double optimal_beta(int m) {
    if (m < 0) throw ConfigError("optimal_beta: m must be >= 0");
    // pi sqrt(2^{2m} - 1), computed as pi 2^m sqrt(1 - 4^{-m}) to stay
    // accurate for large m.
    const double pm = std::ldexp(1.0, m);
    return kPi * pm * std::sqrt(1.0 - 1.0 / (pm * pm));
}

double capped_beta(int m, double beta_max) {
    if (beta_max <= 0.0) throw ConfigError("capped_beta: beta_max must be > 0");
    return std::fmin(optimal_beta(m), beta_max);
}

}  // namespace wqpe

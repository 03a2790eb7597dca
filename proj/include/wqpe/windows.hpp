#pragma once

#include <cstddef>
#include <vector>

namespace wqpe {

enum class WindowKind { Rectangular, Kaiser };

// Phase-register preparation policy: rectangular (uniform) or Kaiser taper
// with bandwidth beta. Rectangular behaves identically to Kaiser beta = 0.
struct WindowSpec {
    WindowKind kind = WindowKind::Rectangular;
    double beta = 0.0;

    static WindowSpec rectangular() { return {WindowKind::Rectangular, 0.0}; }
    static WindowSpec kaiser(double beta) { return {WindowKind::Kaiser, beta}; }
};

// Normalized, nonnegative, symmetric amplitude vector of length 2^n over
// x in [0, 2^n - 1]; the first column of the preparation unitary.
struct WindowVector {
    int n = 0;
    std::vector<double> amplitudes;

    std::size_t size() const { return amplitudes.size(); }
};

// Modified Bessel function of the first kind, order zero, relative error
// <= 1e-14 over the full double range (even in x).
double bessel_i0(double x);

// exp(-|x|) * I0(x); usable where I0 alone would overflow (x > ~709).
double bessel_i0_scaled(double x);

WindowVector make_window(const WindowSpec& spec, int n);

// Contamination-minimizing Kaiser bandwidth for m surplus register qubits:
// pi * sqrt(2^{2m} - 1).
double optimal_beta(int m);

// min(optimal_beta(m), beta_max); preparation cost grows with beta, so a
// cap is applied everywhere a bandwidth is chosen automatically.
double capped_beta(int m, double beta_max);

inline constexpr double kDefaultBetaMax = 40.0;

}  // namespace wqpe

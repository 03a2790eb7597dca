#include "wqpe/bounds.hpp"

#include <cmath>

#include "wqpe/errors.hpp"

namespace wqpe {
namespace {

constexpr double kPi = 3.14159265358979323846;

void validate(const BoundInputs& in) {
    if (!(in.p > 0.0) || in.p > 1.0 + 1e-12)
        throw ConfigError("bounds: p must lie in (0, 1]");
    if (in.max_contam < 0.0 || in.max_contam > 1.0 + 1e-12)
        throw ConfigError("bounds: max_contam must lie in [0, 1]");
    if (in.n_o < 1) throw ConfigError("bounds: n_o must be >= 1");
    if (in.c < 0.0) throw ConfigError("bounds: c must be >= 0");
}

}  // namespace

double default_c(double p, double max_contam) {
    return std::sqrt(p) * max_contam;
}

double error_bound(const BoundInputs& in) {
    validate(in);
    const double oqpe = 3.0 * kPi * std::ldexp(1.0, -in.n_o);
    return (oqpe + 8.0 * std::sqrt(in.p) * in.max_contam + in.c) / in.p;
}

double success_bound(const BoundInputs& in) {
    validate(in);
    if (in.c == 0.0)
        throw ConfigError(
            "success_bound: degenerate at c = 0 (the eigenvector-perturbation "
            "bound gives no success guarantee without a positive eigengap slack)");
    const double v = in.p * (1.0 - 32.0 * in.max_contam * in.max_contam / in.c);
    return v < 0.0 ? 0.0 : v;
}

double nu(double p, double max_contam) {
    return 2.0 * std::sqrt(p) * max_contam;
}

ErrorDecomposition error_decomposition(double p, double max_contam, int n_o,
                                       double omega_sq) {
    if (omega_sq < 0.0 || omega_sq > 1.0)
        throw ConfigError("error_decomposition: omega_sq must lie in [0, 1]");
    BoundInputs chk{p, max_contam, n_o, 0.0};
    validate(chk);

    const double half_bit = std::ldexp(1.0, -(n_o + 1));  // worst phase rounding
    ErrorDecomposition out;
    out.reflection = 4.0 * nu(p, max_contam) / p;
    // p-hat offset of pi 2^{-(n_o+1)} through the 2 lambda' inversion
    out.prelearning = 2.0 * kPi * half_bit / p;
    // theta rounding through d(omega^2)/d(theta) = 2 pi sqrt(w^2 (1 - w^2))
    out.oqpe = (4.0 / p) * 2.0 * kPi *
               std::sqrt(omega_sq * (1.0 - omega_sq)) * half_bit;
    out.total = out.reflection + out.prelearning + out.oqpe;
    return out;
}

}  // namespace wqpe

#pragma once

namespace wqpe {

struct BoundInputs {
    double p = 1.0;          // |<rho_0^+|0>|^2
    double max_contam = 0.0; // largest contamination overlap
    int n_o = 1;             // outer phase-register size
    double c = 0.0;          // free nonnegative trade-off constant
};

// Default trade-off constant sqrt(p) * max_contam (the worked substitution
// that balances the error and success bounds).
double default_c(double p, double max_contam);

// (3 pi 2^{-n_o} + 8 sqrt(p) max_contam + c) / p
double error_bound(const BoundInputs& in);

// p (1 - 32 max_contam^2 / c), floored at 0; degenerate at c = 0.
double success_bound(const BoundInputs& in);

// Perturbation radius 2 sqrt(p) max_contam of the projector-product
// eigenvalue around its decoupled value.
double nu(double p, double max_contam);

struct ErrorDecomposition {
    double reflection = 0.0;   // 4 eps_1 / p with eps_1 = nu
    double prelearning = 0.0;  // pi 2^{-n_o} / p
    double oqpe = 0.0;         // 4 pi sqrt(w^2 (1 - w^2)) 2^{-n_o} / p
    double total = 0.0;
};

ErrorDecomposition error_decomposition(double p, double max_contam, int n_o,
                                       double omega_sq);

}  // namespace wqpe

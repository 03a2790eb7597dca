#pragma once

#include <cstdint>
#include <vector>

#include "wqpe/walk.hpp"
#include "wqpe/windows.hpp"

namespace wqpe {

struct EmulationReport {
    double estimate = 0.0;
    double truth = 0.0;           // <sigma_0|F|sigma_0> from dense eig
    double realized_error = 0.0;  // |estimate - truth|
    double p_learned = 0.0;
    double p_true = 0.0;
    double theta_measured = 0.0;  // n_o-bit rounded walk eigenphase
    double bound = 0.0;
    bool success_flag = false;
};

// Pre-learning run: the observable reflection replaced by 1 - 2|00><00| on
// the ancillas. Returns the learned p-hat from the n_o-bit rounded
// eigenphase of the variant walk.
double prelearn_overlap(const WindowVector& window, const HermitianSystem& H,
                        double phi_tilde, int n_o);

// Full emulation: pre-learn p, extract the walk eigenphase on the prepared
// branch, round to n_o bits, invert |w|^2 = (p/4)(1 - <F>). c < 0 selects
// the default trade-off constant.
EmulationReport run_algorithm(const WindowVector& window, const HermitianSystem& H,
                              const HermitianSystem& F, int n_o, double c = -1.0);

struct ErrorCurvePoint {
    int m = 0;
    double beta = 0.0;
    std::uint64_t queries = 0;   // 2^{l+m-1}
    double relative_error = 0.0; // 8 max_contam / sqrt(p)
};

// Relative reflection-error trace versus surplus qubits m for a window
// family; the query count is the per-reflection block-encoding call count.
std::vector<ErrorCurvePoint> reflection_error_curve(int l, const std::vector<int>& m_range,
                                                    const WindowSpec& family,
                                                    double beta_max = kDefaultBetaMax);

// Comparison trace from a configurable exponential-decay model (stand-in
// for polynomial-transformation reflections; decay is config, not derived).
struct QspModel {
    double prefactor = 1.0;
    double decay_rate = 0.05;  // per block-encoding query
};

std::vector<ErrorCurvePoint> qsp_error_trace(int l, const std::vector<int>& m_range,
                                             const QspModel& model);

}  // namespace wqpe

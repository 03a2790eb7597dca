#pragma once

#include <utility>
#include <vector>

#include "wqpe/windows.hpp"

namespace wqpe {

// Exact phase-register measurement statistics for a true phase phi.
struct PhaseDistribution {
    int n = 0;
    double phi = 0.0;
    std::vector<double> mass;  // mass[k] = P_k
};

struct OverlapProfile {
    WindowVector window;
    std::vector<std::pair<double, double>> samples;  // (y, |<0|rho(y)>|)
};

// mass[k] = |sum_x W0(x) exp(2 pi i (phi - k/2^n) x)|^2; masses sum to 1.
PhaseDistribution phase_distribution(const WindowVector& window, double phi);

// |sum_x W0(x) exp(-2 pi i y x)| for a phase offset y in cycles.
double overlap(const WindowVector& window, double y);

// Max over true phases (dense grid, >= 64 offsets per bin, plus the exact
// half-bin point) of the probability mass falling outside the bins within
// circular distance `band` of 2^n * phi.
double worst_case_failure(const WindowVector& window, int band);

// max_{y in [2^-l, 1 - 2^-l]} overlap(window, y): the largest contamination
// amplitude compatible with a spectral-gap promise of one part in 2^l.
double max_contamination_overlap(const WindowVector& window, int l);

// Same quantity computed from the spec without materializing large windows:
// closed-form Dirichlet kernel for rectangular, band-edge scan for Kaiser.
double max_contamination_overlap(const WindowSpec& spec, int n, int l);

// overlap at the worst-case half-bin offset y = 2^-(n+1); its square is the
// success-probability floor (4/pi^2 in the rectangular limit).
double half_bin_overlap(const WindowSpec& spec, int n);

// Uniform sampling of overlap() over y in [0, 1).
OverlapProfile overlap_scan(const WindowVector& window, int grid);

}  // namespace wqpe

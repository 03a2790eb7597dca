#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wqpe/windows.hpp"

namespace wqpe {

enum class Observable { Kinetic, Dipole, Eri };

const char* observable_name(Observable o);
Observable parse_observable(const std::string& name);

// Block-encoding metadata for one molecular system and observable.
struct SystemCase {
    std::string name;
    double lambda_H = 0.0;  // Hamiltonian one-norm (Hartree)
    double gap = 0.0;       // spectral gap estimate (Hartree)
    double lambda_F = 0.0;  // observable one-norm (observable units)
    int thc_rank_H = 0;
    int thc_rank_F = 0;
    int bits_keep_H = 0;
    int bits_rot_H = 0;
    int bits_keep_F = 0;
    int bits_rot_F = 0;
    int n_orbitals = 0;
    double epsilon_target = 0.0;  // same units as lambda_F
};

// Per-call Toffoli costs. t_qft_fixed >= 0 charges that amount per QFT
// call; otherwise QFT_k costs k(k-1)/2 * t_rot.
struct CostModel {
    double t_asp = 1.0;
    double t_window = 1.0;
    double t_qh = 1.0;
    double t_bf = 1.0;
    double t_rot = 30.0;
    double t_qft_fixed = -1.0;

    static CostModel unit();  // every per-call cost 1, including QFT
    double qft_cost(int k) const;
};

struct ErrorBudget {
    double target = 0.0;
    double inner = 0.0;
    double outer = 0.0;
    double data = 0.0;

    static ErrorBudget thirds(double target);
    static ErrorBudget split(double target, double a, double b, double c);
    void validate() const;
};

// Affine logical-qubit model: a*N + b*log2(rank_H) + c*bits_H + d + n + n_o.
struct QubitCoefficients {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
};

struct ResourceCase {
    SystemCase sys;
    Observable observable = Observable::Kinetic;
    WindowSpec policy;
    ErrorBudget budget;

    int l = 0, m = 0, n = 0;
    double beta = 0.0;
    int n_o = 0;
    double p_floor = 0.0;
    std::uint64_t total_toffoli = 0;
    double qubit_estimate = 0.0;
};

// l = ceil(log2(2 pi lambda_H / gap))
int baseline_qubits(double lambda_H, double gap);

// n_o = ceil(log2(3 pi lambda_F / (p_floor * eps_outer)))
int outer_qubits(double lambda_F, double p_floor, double eps_outer);

struct InnerChoice {
    int m = 0;
    double beta = 0.0;
    int n = 0;
    double p_floor = 0.0;
    double rel_error = 0.0;  // achieved 8 max_contam / sqrt(p)
};

// Smallest m (m >= 1 for Kaiser) whose reflection error meets the relative
// budget eps_inner / lambda_F; throws InfeasibleError past m = 16.
InnerChoice choose_inner_register(double lambda_F, double eps_inner, int l,
                                  const WindowSpec& policy,
                                  double beta_max = kDefaultBetaMax);

// T(ASP) + 2^{n_o} T(W) + 2^{n_o+n-1} T(Q[H]) + 2^{n_o+1} T(QFT_n)
//   + max(2^{n_o-1}, 1) T(B[F]) + T(QFT_{n_o})
std::uint64_t total_toffoli(int n, int n_o, const CostModel& costs);

ResourceCase estimate_case(const SystemCase& sys, Observable obs,
                           const ErrorBudget& budget, const WindowSpec& policy,
                           const CostModel& costs,
                           double beta_max = kDefaultBetaMax,
                           const std::optional<QubitCoefficients>& coeffs = std::nullopt);

double qubit_highwater(const SystemCase& sys, int n, int n_o,
                       const QubitCoefficients& coeffs);

// ---- embedded reference data -------------------------------------------

struct ReferenceEntry {
    SystemCase sys;
    // reference logical-qubit highwater per window column
    std::map<std::string, int> qubit_reference;
};

struct ReferenceTables {
    int version = 0;
    // entries keyed by (system, observable)
    std::vector<std::pair<Observable, ReferenceEntry>> entries;

    const SystemCase* find(const std::string& system, Observable obs) const;
    std::vector<std::string> system_names() const;
};

// Embedded tables, overridable through the WQPE_TABLES env variable.
const ReferenceTables& reference_tables();
ReferenceTables parse_tables(const std::string& json_text);
const char* embedded_tables_json();

struct QubitFit {
    QubitCoefficients coeffs;
    std::vector<double> residuals;  // per embedded reference row
};

// Least-squares fit of the affine qubit model against the embedded
// reference column for the given window policy.
QubitFit fit_qubit_coefficients(const WindowSpec& policy,
                                const CostModel& costs = CostModel::unit());

}  // namespace wqpe

#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "wqpe/windows.hpp"

namespace wqpe {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using cplx = std::complex<double>;

// Dense Hermitian operator with sub-normalization metadata. op_norm and
// relative_gap are checked against the actual spectrum on construction.
struct HermitianSystem {
    Eigen::Index dim = 0;
    Mat matrix;
    double op_norm = 0.0;       // spectral norm, must be <= 1
    double relative_gap = 0.0;  // lower bound on the ground-state gap

    RVec eigenvalues;  // ascending
    Mat eigenvectors;  // columns match eigenvalues

    static HermitianSystem make(Mat m, double gap_hint = -1.0);
};

// Hermitian-unitary dilation [[F, S],[S, -F]] with S = sqrt(1 - F^2);
// register order: flag (outer) x system (inner).
struct SelfInverseEncoding {
    Eigen::Index system_dim = 0;
    Mat unitary;  // 2 dim x 2 dim
};

// Qubitised encoding Q = (2|0><0| - 1) x 1 . B[H] on ancilla x system,
// with eigenphases +-arccos(lambda_i)/2pi in (-1/2, 1/2].
struct QubitisedEncoding {
    Eigen::Index system_dim = 0;
    Mat unitary;  // 2 dim x 2 dim

    RVec lambdas;   // Hamiltonian eigenvalues, ascending
    Mat sys_vecs;   // corresponding |sigma_i>
    // psi[i][s] for s in {0 -> '+', 1 -> '-'}: eigenvector with phase
    // +-arccos(lambda_i)/2pi, on ancilla x system.
    std::vector<std::array<Vec, 2>> psi;
    std::vector<std::array<double, 2>> phases;

    double relative_gap = 0.0;  // inherited from the Hamiltonian
    double phase_gap = 0.0;     // min distance of excited phases to phi_0+
    double phase0 = 0.0;        // ground eigenphase arccos(lambda_0)/2pi

    double phase(Eigen::Index i, int sign) const { return phases[i][sign]; }
};

// Label for columns of the reduced basis: (level, branch) with branch
// 0 = '+', 1 = '-'.
struct BranchLabel {
    Eigen::Index level = 0;
    int branch = 0;
};

// Walk operator (c-B[F]) . (c-R) with the reflection controlled on the flag
// register of B[F] and B[F] controlled on |0>_iph |0>_BH. Spectral analysis
// is done on the invariant reduced space spanned by
// u_{i,+-} = |rho_i^{+-}> x |psi_{i,+-}> (iph x BH x sys); the B[F] flag is
// handled analytically.
struct WalkModel {
    WindowVector window;
    int n = 0;
    double phi_tilde = 0.0;

    HermitianSystem H;
    HermitianSystem F;
    QubitisedEncoding qenc;

    Mat u_basis;                      // (2^n * 2d) x 2d, orthonormal columns
    std::vector<BranchLabel> labels;  // per column
    std::vector<cplx> rho_zero;       // <0|rho_i^{+-}> per column
    Eigen::Index prep_col = 0;        // column index of (0, '+')

    double p = 0.0;           // |<rho_0^+|0>|^2
    double max_contam = 0.0;  // max over all other columns of |<0|rho>|
    double F00 = 0.0;         // (1/4) <sigma_0|1 - F|sigma_0>
    double nu = 0.0;          // 2 sqrt(p) max_contam

    Mat projector_product;  // P'Q'P' restricted to the u-basis (2d x 2d)
    Mat decoupled;          // arrowhead-free part M~ in the u-basis
    Mat perturbation;       // Delta = projector_product - decoupled

    RVec pp_eigenvalues;  // of projector_product (u-basis), ascending
    Mat pp_eigenvectors;

    double omega_sq = 0.0;        // eigenvalue on the prepared-state branch
    double theta = 0.0;           // walk eigenphase (1/2pi) arccos(2w^2 - 1)
    std::vector<double> eigenphases;  // nontrivial walk eigenphases

    Mat walk_unitary;  // assembled only when the full dimension is small
};

SelfInverseEncoding self_inverse_encode(const HermitianSystem& F);

QubitisedEncoding qubitise(const HermitianSystem& H);

// Deterministic Householder completion with first column equal to +W0.
Mat complete_window_unitary(const WindowVector& window);

// Phase-register QFT, |x> -> (1/sqrt(N)) sum_k exp(2 pi i k x / N) |k>.
Mat fourier_matrix(Eigen::Index N);

// rho(y) = W^dagger applied to the phase vector (1/sqrt(N)) e^{-2 pi i y x};
// full amplitude vector over all completion columns.
Vec rho_state(const Mat& completion, double y);

// QPE-based reflection about the window-smeared ground eigenstate, dense on
// iph x BH x sys. Closed form: 1 - 2 sum_{i,+-} |rho_i^{+-}><rho_i^{+-}|
// x |psi_{i,+-}><psi_{i,+-}| with rho offsets measured from phi_tilde.
Mat build_reflection(const WindowVector& window, const QubitisedEncoding& q,
                     double phi_tilde);

// Same operator assembled as QFT^dagger . controlled-powers . window
// preparation circuit composition; kept as an independent cross-check.
Mat build_reflection_via_qpe(const WindowVector& window, const QubitisedEncoding& q,
                             double phi_tilde);

struct TwoReflectionMode {
    double omega = 0.0;        // singular value of PiA PiB
    double theta_plus = 0.0;   // -(1/2pi) arccos(2 omega^2 - 1)
    double theta_minus = 0.0;
};

// Jordan principal angles of a projector pair, cross-validated against the
// dense eigenphases of (1-2 PiB)(1-2 PiA).
std::vector<TwoReflectionMode> two_reflection_spectrum(const Mat& PiA, const Mat& PiB);

struct WalkOptions {
    // Assemble the full walk unitary when 4 * d * 2^n does not exceed this.
    Eigen::Index assemble_limit = 512;
    // Replace B[F] by the ancilla-only reflection of the pre-learning run.
    bool prelearn_variant = false;
    // Nearest n-bit phase to the ground eigenphase when negative.
    double phi_tilde = -1.0;
};

WalkModel build_walk(const WindowVector& window, const HermitianSystem& H,
                     const HermitianSystem& F, const WalkOptions& opts = {});

// Nontrivial eigenvalues +-sqrt(sum x_i^2) of the hollow arrowhead matrix
// with first row/column x and zero elsewhere.
std::pair<double, double> x_matrix_eigenvalues(const RVec& x);

struct PerturbationNorm {
    double exact = 0.0;         // ||Delta||_op via the arrowhead eigenvalue
    double closed_bound = 0.0;  // 2 |<rho_0^+|0>| max{...} upper bound
};

PerturbationNorm perturbation_norm(const WalkModel& model);

// Nearest n-bit phase to arccos of the ground eigenvalue, ties broken down.
double select_phi_tilde(const QubitisedEncoding& q, int n);

}  // namespace wqpe

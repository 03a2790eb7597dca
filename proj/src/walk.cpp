#include "wqpe/walk.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wqpe/errors.hpp"

namespace wqpe {
namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);

double herm_defect(const Mat& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Principal square root of 1 - F^2 via the eigenbasis, with tiny negative
// eigenvalues of 1 - lambda^2 clamped to zero.
Mat sqrt_one_minus_sq(const HermitianSystem& F) {
    RVec vals = F.eigenvalues;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        double q = 1.0 - vals[i] * vals[i];
        if (q < 0.0) {
            if (q < -1e-12) throw ConfigError("operator norm exceeds 1");
            q = 0.0;
        }
        vals[i] = std::sqrt(q);
    }
    return F.eigenvectors * vals.asDiagonal() * F.eigenvectors.adjoint();
}

double circ_dist(double a, double b) {
    double d = std::fabs(a - b);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

}  // namespace

HermitianSystem HermitianSystem::make(Mat m, double gap_hint) {
    HermitianSystem sys;
    sys.dim = m.rows();
    if (m.rows() != m.cols() || sys.dim < 1)
        throw ConfigError("HermitianSystem: matrix must be square and nonempty");
    if (herm_defect(m) > 1e-12)
        throw ConfigError("HermitianSystem: matrix is not Hermitian (defect > 1e-12)");
    sys.matrix = 0.5 * (m + m.adjoint().eval());

    Eigen::SelfAdjointEigenSolver<Mat> es(sys.matrix);
    sys.eigenvalues = es.eigenvalues();
    sys.eigenvectors = es.eigenvectors();
    sys.op_norm = std::max(std::fabs(sys.eigenvalues.minCoeff()),
                           std::fabs(sys.eigenvalues.maxCoeff()));
    if (sys.op_norm > 1.0 + 1e-10)
        throw ConfigError("HermitianSystem: operator norm exceeds 1 after sub-normalization");

    const double actual_gap =
        sys.dim > 1 ? sys.eigenvalues[1] - sys.eigenvalues[0] : 2.0;
    if (gap_hint >= 0.0) {
        if (actual_gap + 1e-12 < gap_hint)
            throw ConfigError("HermitianSystem: spectral gap metadata inconsistent with spectrum");
        sys.relative_gap = gap_hint;
    } else {
        sys.relative_gap = actual_gap;
    }
    return sys;
}

SelfInverseEncoding self_inverse_encode(const HermitianSystem& F) {
    if (F.op_norm > 1.0 + 1e-10)
        throw ConfigError("self_inverse_encode: operator norm exceeds 1");
    const Eigen::Index d = F.dim;
    const Mat S = sqrt_one_minus_sq(F);
    SelfInverseEncoding enc;
    enc.system_dim = d;
    enc.unitary = Mat::Zero(2 * d, 2 * d);
    enc.unitary.topLeftCorner(d, d) = F.matrix;
    enc.unitary.topRightCorner(d, d) = S;
    enc.unitary.bottomLeftCorner(d, d) = S;
    enc.unitary.bottomRightCorner(d, d) = -F.matrix;
    return enc;
}

QubitisedEncoding qubitise(const HermitianSystem& H) {
    const Eigen::Index d = H.dim;
    const SelfInverseEncoding b = self_inverse_encode(H);

    QubitisedEncoding q;
    q.system_dim = d;
    // (2|0><0| - 1) on the flag, flag register outermost.
    q.unitary = b.unitary;
    q.unitary.bottomRows(d) *= -1.0;

    q.lambdas = H.eigenvalues;
    q.sys_vecs = H.eigenvectors;
    q.relative_gap = H.relative_gap;
    q.psi.resize(d);
    q.phases.resize(d);

    for (Eigen::Index i = 0; i < d; ++i) {
        const double lam = std::clamp(q.lambdas[i], -1.0, 1.0);
        const double phase = std::acos(lam) / (2.0 * kPi);  // in [0, 1/2]
        const double s = std::sqrt(std::fmax(0.0, 1.0 - lam * lam));
        Vec base = Vec::Zero(2 * d);
        base.head(d) = q.sys_vecs.col(i);
        for (int sign = 0; sign < 2; ++sign) {
            const double sgn = sign == 0 ? 1.0 : -1.0;
            Vec psi;
            if (s < 1e-12) {
                psi = base;  // lambda = +-1: the pair degenerates
            } else {
                psi = (base + sgn * kI / s * (lam * base - q.unitary * base)) / std::sqrt(2.0);
            }
            q.psi[i][sign] = psi;
            double ph = sgn * phase;
            if (ph <= -0.5) ph += 1.0;  // branch convention (-1/2, 1/2]
            q.phases[i][sign] = ph;
        }
    }

    q.phase0 = q.phases[0][0];
    q.phase_gap = 1.0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (int sign = 0; sign < 2; ++sign) {
            if (i == 0 && sign == 0) continue;
            q.phase_gap = std::min(q.phase_gap, circ_dist(q.phases[i][sign], q.phase0));
        }
    return q;
}

Mat complete_window_unitary(const WindowVector& window) {
    const Eigen::Index N = static_cast<Eigen::Index>(window.size());
    Vec w(N);
    for (Eigen::Index x = 0; x < N; ++x) w[x] = window.amplitudes[x];
    Vec v = w;
    v[0] -= 1.0;
    const double vs = v.squaredNorm();
    if (vs < 1e-28) return Mat::Identity(N, N);
    return Mat::Identity(N, N) - (2.0 / vs) * (v * v.adjoint());
}

Mat fourier_matrix(Eigen::Index N) {
    Mat F(N, N);
    const double inv = 1.0 / std::sqrt(static_cast<double>(N));
    for (Eigen::Index k = 0; k < N; ++k)
        for (Eigen::Index x = 0; x < N; ++x)
            F(k, x) = inv * std::exp(2.0 * kPi * kI *
                                     (static_cast<double>(k) * static_cast<double>(x) /
                                      static_cast<double>(N)));
    return F;
}

Vec rho_state(const Mat& completion, double y) {
    const Eigen::Index N = completion.rows();
    Vec phase(N);
    const double inv = 1.0 / std::sqrt(static_cast<double>(N));
    for (Eigen::Index x = 0; x < N; ++x)
        phase[x] = inv * std::exp(-2.0 * kPi * kI * (y * static_cast<double>(x)));
    return completion.adjoint() * phase;
}

double select_phi_tilde(const QubitisedEncoding& q, int n) {
    const double scale = std::ldexp(1.0, n);
    const double t = q.phase0 * scale;
    // nearest multiple, exact ties broken downward
    double k = std::ceil(t - 0.5);
    double pt = k / scale;
    if (pt >= 1.0) pt -= 1.0;
    if (pt < 0.0) pt += 1.0;
    return pt;
}

namespace {

void require_nbit(double phi_tilde, int n) {
    const double t = phi_tilde * std::ldexp(1.0, n);
    if (std::fabs(t - std::round(t)) > 1e-9)
        throw ConfigError("phi_tilde is not representable on n bits");
}

}  // namespace

Mat build_reflection(const WindowVector& window, const QubitisedEncoding& q,
                     double phi_tilde) {
    require_nbit(phi_tilde, window.n);
    const Eigen::Index N = static_cast<Eigen::Index>(window.size());
    const Eigen::Index d = q.system_dim;
    const Eigen::Index D = N * 2 * d;
    const Mat Wc = complete_window_unitary(window);

    Mat R = Mat::Identity(D, D);
    for (Eigen::Index i = 0; i < d; ++i)
        for (int sign = 0; sign < 2; ++sign) {
            const Vec rho = rho_state(Wc, q.phases[i][sign] - phi_tilde);
            Vec u(D);
            for (Eigen::Index x = 0; x < N; ++x)
                u.segment(x * 2 * d, 2 * d) = rho[x] * q.psi[i][sign];
            R.noalias() -= 2.0 * (u * u.adjoint());
        }
    return R;
}

Mat build_reflection_via_qpe(const WindowVector& window, const QubitisedEncoding& q,
                             double phi_tilde) {
    require_nbit(phi_tilde, window.n);
    const Eigen::Index N = static_cast<Eigen::Index>(window.size());
    const Eigen::Index d = q.system_dim;
    const Eigen::Index D = N * 2 * d;
    const int n = window.n;

    // controlled powers: sum_x |x><x| (x) Q^x, via the binary expansion of x
    std::vector<Mat> pow2(n);  // Q^{2^r}
    pow2[0] = q.unitary;
    for (int r = 1; r < n; ++r) pow2[r] = pow2[r - 1] * pow2[r - 1];

    Mat cp = Mat::Zero(D, D);
    for (Eigen::Index x = 0; x < N; ++x) {
        Mat qx = Mat::Identity(2 * d, 2 * d);
        for (int r = 0; r < n; ++r)
            if ((x >> r) & 1) qx = pow2[r] * qx;
        cp.block(x * 2 * d, x * 2 * d, 2 * d, 2 * d) = qx;
    }

    const Mat Wc = complete_window_unitary(window);
    const Mat Fm = fourier_matrix(N);
    auto lift = [&](const Mat& a) {  // iph operator (x) identity on BH x sys
        Mat out = Mat::Zero(D, D);
        for (Eigen::Index r = 0; r < N; ++r)
            for (Eigen::Index c = 0; c < N; ++c)
                if (std::abs(a(r, c)) > 0.0)
                    out.block(r * 2 * d, c * 2 * d, 2 * d, 2 * d) =
                        a(r, c) * Mat::Identity(2 * d, 2 * d);
        return out;
    };

    const Mat qpe = lift(Fm.adjoint()) * cp * lift(Wc);
    const Eigen::Index bin =
        static_cast<Eigen::Index>(std::llround(phi_tilde * static_cast<double>(N))) % N;
    Mat refl = Mat::Identity(D, D);
    refl.block(bin * 2 * d, bin * 2 * d, 2 * d, 2 * d) = -Mat::Identity(2 * d, 2 * d);
    return qpe.adjoint() * refl * qpe;
}

std::vector<TwoReflectionMode> two_reflection_spectrum(const Mat& PiA, const Mat& PiB) {
    auto check = [](const Mat& P, const char* name) {
        if (herm_defect(P) > 1e-10 || (P * P - P).cwiseAbs().maxCoeff() > 1e-10) {
            std::ostringstream ss;
            ss << "two_reflection_spectrum: " << name << " is not an orthogonal projector";
            throw ConfigError(ss.str());
        }
    };
    check(PiA, "PiA");
    check(PiB, "PiB");
    if (PiA.rows() != PiB.rows()) throw ConfigError("two_reflection_spectrum: dimension mismatch");

    const Eigen::Index rA = static_cast<Eigen::Index>(std::llround(PiA.trace().real()));
    const Eigen::Index rB = static_cast<Eigen::Index>(std::llround(PiB.trace().real()));
    const Eigen::Index r = std::min(rA, rB);

    Eigen::JacobiSVD<Mat> svd(PiA * PiB);
    std::vector<TwoReflectionMode> modes;
    for (Eigen::Index k = 0; k < r; ++k) {
        TwoReflectionMode mode;
        mode.omega = std::min(1.0, svd.singularValues()[k]);
        const double th = std::acos(std::clamp(2.0 * mode.omega * mode.omega - 1.0, -1.0, 1.0)) /
                          (2.0 * kPi);
        mode.theta_minus = th;   // branch labelled '-' carries +theta
        mode.theta_plus = -th;
        modes.push_back(mode);
    }

    // Cross-validate the nondegenerate Jordan angles against the dense
    // eigenphases of the reflection product.
    const Eigen::Index D = PiA.rows();
    const Mat U = (Mat::Identity(D, D) - 2.0 * PiB) * (Mat::Identity(D, D) - 2.0 * PiA);
    Eigen::ComplexEigenSolver<Mat> es(U);
    for (const auto& mode : modes) {
        if (mode.omega < 1e-8 || mode.omega > 1.0 - 1e-8) continue;
        for (double target : {mode.theta_plus, mode.theta_minus}) {
            double best = 1.0;
            for (Eigen::Index j = 0; j < D; ++j) {
                const double ph = std::arg(es.eigenvalues()[j]) / (2.0 * kPi);
                best = std::min(best, circ_dist(ph, target));
            }
            if (best > 1e-9)
                throw std::runtime_error(
                    "two_reflection_spectrum: arccos phase missing from dense spectrum");
        }
    }
    return modes;
}

WalkModel build_walk(const WindowVector& window, const HermitianSystem& H,
                     const HermitianSystem& F, const WalkOptions& opts) {
    if (H.dim != F.dim) throw ConfigError("build_walk: system dimension mismatch");
    if (H.dim > 1 && H.eigenvalues[1] - H.eigenvalues[0] < 1e-10)
        throw GapError("build_walk: degenerate ground state (gap promise violated)");

    WalkModel model;
    model.window = window;
    model.n = window.n;
    model.H = H;
    model.F = F;
    model.qenc = qubitise(H);

    model.phi_tilde = opts.phi_tilde < 0.0 ? select_phi_tilde(model.qenc, model.n)
                                           : opts.phi_tilde;
    require_nbit(model.phi_tilde, model.n);

    const Eigen::Index N = static_cast<Eigen::Index>(window.size());
    const Eigen::Index d = H.dim;
    const Eigen::Index Du = N * 2 * d;
    const Eigen::Index T = 2 * d;
    const Mat Wc = complete_window_unitary(window);

    model.u_basis.resize(Du, T);
    model.labels.resize(T);
    model.rho_zero.resize(T);

    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (int sign = 0; sign < 2; ++sign, ++col) {
            const Vec rho = rho_state(Wc, model.qenc.phases[i][sign] - model.phi_tilde);
            for (Eigen::Index x = 0; x < N; ++x)
                model.u_basis.col(col).segment(x * 2 * d, 2 * d) =
                    rho[x] * model.qenc.psi[i][sign];
            model.labels[col] = {i, sign};
            model.rho_zero[col] = rho[0];
            if (i == 0 && sign == 0) model.prep_col = col;
        }

    model.p = std::norm(model.rho_zero[model.prep_col]);
    model.max_contam = 0.0;
    for (Eigen::Index a = 0; a < T; ++a)
        if (a != model.prep_col)
            model.max_contam = std::max(model.max_contam, std::abs(model.rho_zero[a]));

    const Vec sigma0 = model.qenc.sys_vecs.col(0);
    model.F00 = 0.25 * (sigma0.dot(sigma0) - sigma0.dot(F.matrix * sigma0)).real();
    model.nu = 2.0 * std::sqrt(model.p) * model.max_contam;

    // Projector product in the invariant u-basis: with psi top components
    // sigma_i / sqrt(2), alpha_ab = conj(rho_a(0)) rho_b(0) S_ab where
    // S_ab = <sigma_a| K |sigma_b> / 2 and K = (1 - F)/2 (or 1 for the
    // pre-learning variant).
    Mat Ksys;
    if (opts.prelearn_variant)
        Ksys = Mat::Identity(d, d);
    else
        Ksys = 0.5 * (Mat::Identity(d, d) - F.matrix);

    Mat S(T, T);
    for (Eigen::Index a = 0; a < T; ++a)
        for (Eigen::Index b = 0; b < T; ++b)
            S(a, b) = 0.5 * model.qenc.sys_vecs.col(model.labels[a].level)
                                .dot(Ksys * model.qenc.sys_vecs.col(model.labels[b].level));

    model.projector_product.resize(T, T);
    for (Eigen::Index a = 0; a < T; ++a)
        for (Eigen::Index b = 0; b < T; ++b)
            model.projector_product(a, b) =
                std::conj(model.rho_zero[a]) * model.rho_zero[b] * S(a, b);
    model.projector_product = 0.5 * (model.projector_product +
                                     model.projector_product.adjoint().eval());

    model.decoupled = model.projector_product;
    for (Eigen::Index a = 0; a < T; ++a)
        if (a != model.prep_col) {
            model.decoupled(model.prep_col, a) = 0.0;
            model.decoupled(a, model.prep_col) = 0.0;
        }
    model.perturbation = model.projector_product - model.decoupled;

    Eigen::SelfAdjointEigenSolver<Mat> es(model.projector_product);
    model.pp_eigenvalues = es.eigenvalues();
    model.pp_eigenvectors = es.eigenvectors();

    // The prepared state projects onto the u-basis as e_prep, so the target
    // branch is the eigenvector with the largest weight there.
    Eigen::Index best = 0;
    double best_w = -1.0;
    for (Eigen::Index j = 0; j < T; ++j) {
        const double w = std::norm(model.pp_eigenvectors(model.prep_col, j));
        if (w > best_w) { best_w = w; best = j; }
    }
    model.omega_sq = std::clamp(model.pp_eigenvalues[best], 0.0, 1.0);
    model.theta = std::acos(std::clamp(2.0 * model.omega_sq - 1.0, -1.0, 1.0)) / (2.0 * kPi);

    model.eigenphases.clear();
    for (Eigen::Index j = 0; j < T; ++j) {
        const double lam = std::clamp(model.pp_eigenvalues[j], 0.0, 1.0);
        model.eigenphases.push_back(std::acos(std::clamp(2.0 * lam - 1.0, -1.0, 1.0)) /
                                    (2.0 * kPi));
    }

    // Full walk unitary on BF (x) iph (x) BH (x) sys for small instances:
    // (c-B[F]) . (c-R) with R controlled on |0>_BF and B[F] on |00>.
    const Eigen::Index Dfull = 2 * Du;
    if (Dfull <= opts.assemble_limit) {
        const Mat R = build_reflection(window, model.qenc, model.phi_tilde);
        Mat cR = Mat::Identity(Dfull, Dfull);
        cR.topLeftCorner(Du, Du) = R;

        Mat bf;
        if (opts.prelearn_variant) {
            // 1 - 2|00><00| on the ancillas acts as -1 on the controlled
            // block of BF = 0 (iph = 0, BH = 0 control already applied) and
            // +1 on BF = 1: i.e. Z on BF within the controlled subspace.
            bf = Mat::Zero(2 * d, 2 * d);
            bf.topLeftCorner(d, d) = -Mat::Identity(d, d);
            bf.bottomRightCorner(d, d) = Mat::Identity(d, d);
        } else {
            bf = self_inverse_encode(F).unitary;  // on BF (x) sys
        }

        Mat cBF = Mat::Identity(Dfull, Dfull);
        // basis index = ((b * N + x) * 2 + h) * d + s
        for (Eigen::Index b1 = 0; b1 < 2; ++b1)
            for (Eigen::Index b2 = 0; b2 < 2; ++b2)
                for (Eigen::Index s1 = 0; s1 < d; ++s1)
                    for (Eigen::Index s2 = 0; s2 < d; ++s2) {
                        const Eigen::Index r = ((b1 * N + 0) * 2 + 0) * d + s1;
                        const Eigen::Index c = ((b2 * N + 0) * 2 + 0) * d + s2;
                        cBF(r, c) = bf(b1 * d + s1, b2 * d + s2);
                    }
        model.walk_unitary = cBF * cR;
    }

    return model;
}

std::pair<double, double> x_matrix_eigenvalues(const RVec& x) {
    if (x.size() < 1) throw ConfigError("x_matrix_eigenvalues: need at least one entry");
    const double v = x.norm();
    return {v, -v};
}

PerturbationNorm perturbation_norm(const WalkModel& model) {
    const Eigen::Index T = model.projector_product.rows();
    RVec x(T - 1);
    Eigen::Index j = 0;
    for (Eigen::Index a = 0; a < T; ++a) {
        if (a == model.prep_col) continue;
        x[j++] = std::abs(model.projector_product(model.prep_col, a));
    }
    PerturbationNorm out;
    out.exact = x_matrix_eigenvalues(x).first;
    out.closed_bound = model.nu;
    if (out.exact > out.closed_bound + 1e-12)
        throw std::runtime_error("perturbation_norm: arrowhead value exceeds its closed bound");
    return out;
}

}  // namespace wqpe

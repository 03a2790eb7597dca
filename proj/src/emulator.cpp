#include "wqpe/emulator.hpp"

#include <cmath>
#include <sstream>

#include "wqpe/bounds.hpp"
#include "wqpe/errors.hpp"
#include "wqpe/qpe.hpp"

namespace wqpe {
namespace {

constexpr double kPi = 3.14159265358979323846;

double round_phase(double theta, int n_o) {
    const double scale = std::ldexp(1.0, n_o);
    return std::round(theta * scale) / scale;
}

// theta -> projector-product eigenvalue lambda = (1 + cos(2 pi theta)) / 2
double lambda_from_phase(double theta) {
    return 0.5 * (1.0 + std::cos(2.0 * kPi * theta));
}

void check_gap_promise(const WalkModel& model) {
    const double dphi = model.qenc.phase_gap;
    const double need = std::ldexp(2.0, -model.n);  // (1 + 2^m)/2^n at m = 0
    if (!(dphi > need)) {
        std::ostringstream ss;
        ss << "gap promise violated: phase gap " << dphi << " <= (1 + 2^m)/2^n = "
           << need << " at m = 0, n = " << model.n;
        throw GapError(ss.str());
    }
}

}  // namespace

double prelearn_overlap(const WindowVector& window, const HermitianSystem& H,
                        double phi_tilde, int n_o) {
    if (n_o < 1) throw ConfigError("prelearn_overlap: n_o must be >= 1");
    // The ancilla-only reflection ignores F; a placeholder keeps the walk
    // builder's interface uniform.
    const HermitianSystem F =
        HermitianSystem::make(-Mat::Identity(H.dim, H.dim));
    WalkOptions opts;
    opts.prelearn_variant = true;
    opts.phi_tilde = phi_tilde;
    opts.assemble_limit = 0;
    const WalkModel model = build_walk(window, H, F, opts);

    Eigen::Index best = 0;
    double best_w = -1.0;
    for (Eigen::Index j = 0; j < model.pp_eigenvalues.size(); ++j) {
        const double w = std::norm(model.pp_eigenvectors(model.prep_col, j));
        if (w > best_w) { best_w = w; best = j; }
    }
    if (best_w < 1e-8)
        throw std::runtime_error(
            "prelearn_overlap: prepared state has negligible weight on the target eigenpair");

    const double lam = std::clamp(model.pp_eigenvalues[best], 0.0, 1.0);
    const double theta = std::acos(std::clamp(2.0 * lam - 1.0, -1.0, 1.0)) / (2.0 * kPi);
    const double theta_hat = round_phase(theta, n_o);
    // The variant's projector-product eigenvalue is (p + q^2)/2 with q the
    // negative-branch contamination, so 2 lambda recovers p up to
    // contamination-sized error.
    return std::min(1.0, 2.0 * lambda_from_phase(theta_hat));
}

EmulationReport run_algorithm(const WindowVector& window, const HermitianSystem& H,
                              const HermitianSystem& F, int n_o, double c) {
    if (n_o < 1) throw ConfigError("run_algorithm: n_o must be >= 1");
    WalkOptions opts;
    opts.assemble_limit = 0;  // spectral analysis stays in the reduced space
    const WalkModel model = build_walk(window, H, F, opts);
    check_gap_promise(model);

    const double p_hat = prelearn_overlap(window, H, model.phi_tilde, n_o);

    const double theta_hat = round_phase(model.theta, n_o);
    const double lam_hat = lambda_from_phase(theta_hat);

    EmulationReport rep;
    rep.p_true = model.p;
    rep.p_learned = p_hat;
    rep.theta_measured = theta_hat;
    rep.truth = model.qenc.sys_vecs.col(0).dot(F.matrix * model.qenc.sys_vecs.col(0)).real();
    // invert |w|^2 = (p/4)(1 - <F>)
    rep.estimate = 1.0 - 4.0 * lam_hat / p_hat;

    const double cc = c < 0.0 ? default_c(model.p, model.max_contam) : c;
    rep.bound = error_bound({model.p, model.max_contam, n_o, cc});
    rep.realized_error = std::fabs(rep.estimate - rep.truth);
    rep.success_flag = rep.realized_error <= rep.bound;
    return rep;
}

std::vector<ErrorCurvePoint> reflection_error_curve(int l, const std::vector<int>& m_range,
                                                    const WindowSpec& family,
                                                    double beta_max) {
    if (m_range.empty()) throw ConfigError("reflection_error_curve: empty m range");
    if (l < 1) throw ConfigError("reflection_error_curve: l must be >= 1");
    std::vector<ErrorCurvePoint> curve;
    for (int m : m_range) {
        if (m < 0 || (family.kind == WindowKind::Kaiser && m < 1))
            throw ConfigError("reflection_error_curve: invalid m for the window family");
        ErrorCurvePoint pt;
        pt.m = m;
        WindowSpec spec = family;
        if (family.kind == WindowKind::Kaiser) {
            pt.beta = family.beta > 0.0 ? std::min(family.beta, beta_max)
                                        : capped_beta(m, beta_max);
            spec.beta = pt.beta;
        }
        const int n = l + m;
        const double mc = max_contamination_overlap(spec, n, l);
        const double p = family.kind == WindowKind::Kaiser
                             ? std::pow(half_bin_overlap(spec, n), 2)
                             : 4.0 / (kPi * kPi);
        pt.relative_error = 8.0 * mc / std::sqrt(p);
        pt.queries = std::uint64_t{1} << (l + m - 1);
        curve.push_back(pt);
    }
    return curve;
}

std::vector<ErrorCurvePoint> qsp_error_trace(int l, const std::vector<int>& m_range,
                                             const QspModel& model) {
    std::vector<ErrorCurvePoint> curve;
    for (int m : m_range) {
        ErrorCurvePoint pt;
        pt.m = m;
        pt.queries = std::uint64_t{1} << (l + m - 1);
        pt.relative_error =
            model.prefactor * std::exp(-model.decay_rate * static_cast<double>(pt.queries));
        curve.push_back(pt);
    }
    return curve;
}

}  // namespace wqpe

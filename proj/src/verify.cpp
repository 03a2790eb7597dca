#include "wqpe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wqpe/bounds.hpp"
#include "wqpe/emulator.hpp"
#include "wqpe/errors.hpp"
#include "wqpe/io.hpp"
#include "wqpe/qpe.hpp"

namespace wqpe {
namespace {

constexpr double kPi = 3.14159265358979323846;

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Mat random_unitary(std::mt19937_64& rng, Eigen::Index dim) {
    std::normal_distribution<double> g;
    Mat a(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c) a(r, c) = cplx(g(rng), g(rng));
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    // fix the phase freedom so the result is a deterministic function of a
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index c = 0; c < dim; ++c) {
        const cplx d = r(c, c);
        if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
    }
    return q;
}

}  // namespace

Mat random_hermitian(std::mt19937_64& rng, Eigen::Index dim, double max_norm) {
    std::normal_distribution<double> g;
    Mat a(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c) a(r, c) = cplx(g(rng), g(rng));
    Mat h = 0.5 * (a + a.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    const double norm = std::max(std::fabs(es.eigenvalues().minCoeff()),
                                 std::fabs(es.eigenvalues().maxCoeff()));
    if (norm > 0.0) h *= max_norm / norm;
    return h;
}

RandomInstance make_instance(std::mt19937_64& rng, const InstanceOptions& opts) {
    RandomInstance inst;
    int d = uniform_int(rng, opts.min_dim, opts.max_dim);

    const bool kaiser = opts.family < 0 ? uniform_int(rng, 0, 1) == 1 : opts.family == 1;
    inst.m = uniform_int(rng, kaiser ? 1 : 0, 2);
    // Registers small enough to assemble but large enough that the gap
    // promise leaves room: the exact-phase branch needs d bins separated by
    // strictly more than the promise, and the random-phase branch needs a
    // non-empty placement interval (1.5 * delta + 0.06 < 0.5).
    int min_l = opts.exact_phase ? 5 - inst.m : 2;
    for (;; ++min_l) {
        const int n = min_l + inst.m;
        const double pr = (1.0 + std::ldexp(1.0, inst.m)) * std::ldexp(1.0, -n);
        if (opts.exact_phase) {
            const int sep = (1 << inst.m) + 2;
            const int need = (1 << inst.m) + 1 + 2 * (opts.max_dim - 1) * sep;
            if (((1 << n) - (1 << inst.m) - 2) / 2 >= need) break;
        } else if (1.3 * pr < 0.28) {
            break;
        }
    }
    inst.l = uniform_int(rng, min_l, std::max(min_l, opts.max_n - inst.m));
    inst.n = inst.l + inst.m;
    const double promise = (1.0 + std::ldexp(1.0, inst.m)) * std::ldexp(1.0, -inst.n);

    // Eigenphases of the qubitised encoding: the targeted state carries the
    // largest phase (lowest Hamiltonian eigenvalue); every contaminant phase
    // (+-phi_i and -phi_0) keeps circular distance >= delta from it.
    std::vector<double> phases(d);
    if (opts.exact_phase) {
        const double scale = std::ldexp(1.0, inst.n);
        std::vector<int> bins;
        // Keep every pair of bins (and every bin against any reflection,
        // including its own: distance min(2b, 2^n - 2b)) separated by strictly
        // more than 1 + 2^m, so the promise holds with a full bin to spare.
        const int sep = (1 << inst.m) + 2;
        const int lo_bin = (1 << inst.m) + 1;
        const int hi = (static_cast<int>(scale) - (1 << inst.m) - 2) / 2;
        int stale = 0;
        while (static_cast<int>(bins.size()) < d) {
            const int b = uniform_int(rng, lo_bin, hi);
            bool ok = true;
            for (int prev : bins)
                if (std::abs(prev - b) < sep) { ok = false; break; }
            if (ok) {
                bins.push_back(b);
                stale = 0;
            } else if (++stale > 256) {
                bins.clear();  // rare fragmented draw; restart the packing
                stale = 0;
            }
        }
        std::sort(bins.begin(), bins.end());
        for (int i = 0; i < d; ++i) phases[i] = bins[static_cast<std::size_t>(i)] / scale;
        std::reverse(phases.begin(), phases.end());  // phases[0] largest
    } else {
        const double delta = 1.3 * promise;
        const double phi0 = uniform(rng, delta + 0.04, 0.5 - 0.5 * delta - 0.02);
        phases[0] = phi0;
        const double hi = std::min(phi0 - delta, 1.0 - delta - phi0);
        for (int i = 1; i < d; ++i) {
            double ph;
            bool ok = false;
            do {
                ph = uniform(rng, 0.02, hi);
                ok = true;
                for (int j = 1; j < i; ++j)
                    if (std::fabs(ph - phases[j]) < 1e-3) { ok = false; break; }
            } while (!ok);
            phases[static_cast<std::size_t>(i)] = ph;
        }
    }

    RVec lam(d);
    for (int i = 0; i < d; ++i) lam[i] = std::cos(2.0 * kPi * phases[static_cast<std::size_t>(i)]);
    const Mat v = random_unitary(rng, d);
    const Mat h = v * lam.asDiagonal() * v.adjoint();
    inst.H = HermitianSystem::make(0.5 * (h + h.adjoint().eval()));

    inst.F = HermitianSystem::make(random_hermitian(rng, d, uniform(rng, 0.3, 1.0)));

    inst.spec = kaiser ? WindowSpec::kaiser(capped_beta(inst.m, kDefaultBetaMax))
                       : WindowSpec::rectangular();
    inst.window = make_window(inst.spec, inst.n);
    return inst;
}

namespace {

void record_violation(SuiteResult& res, double margin, const RandomInstance* inst) {
    ++res.violations;
    res.worst = std::max(res.worst, margin);
    if (res.detail.empty() && inst) {
        std::ostringstream ss;
        ss << "{ \"n\": " << inst->n << ", \"l\": " << inst->l << ", \"m\": " << inst->m
           << ", \"beta\": " << fmt_full(inst->spec.beta)
           << ", \"H\": " << dump_hermitian_json(inst->H)
           << ", \"F\": " << dump_hermitian_json(inst->F) << " }";
        res.detail = ss.str();
    }
}

}  // namespace

SuiteResult verify_lemma1(std::uint64_t seed, int count) {
    SuiteResult res{"lemma1"};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < count; ++t) {
        ++res.count;
        const Eigen::Index dim = uniform_int(rng, 2, 8);
        const Eigen::Index rA = uniform_int(rng, 1, std::min<Eigen::Index>(3, dim - 1));
        const Eigen::Index rB = uniform_int(rng, 1, std::min<Eigen::Index>(3, dim - 1));
        const Mat qa = random_unitary(rng, dim).leftCols(rA);
        const Mat qb = random_unitary(rng, dim).leftCols(rB);
        try {
            (void)two_reflection_spectrum(qa * qa.adjoint(), qb * qb.adjoint());
        } catch (const std::exception&) {
            record_violation(res, 1.0, nullptr);
        }
    }
    return res;
}

SuiteResult verify_theorem1(std::uint64_t seed, int count) {
    SuiteResult res{"theorem1"};
    std::mt19937_64 rng(seed);
    InstanceOptions opts;
    opts.exact_phase = true;
    opts.family = 0;  // the exact-phase limit uses the rectangular window
    for (int t = 0; t < count; ++t) {
        ++res.count;
        const RandomInstance inst = make_instance(rng, opts);
        WalkOptions wopts;
        wopts.assemble_limit = 0;
        const WalkModel model = build_walk(inst.window, inst.H, inst.F, wopts);
        const double lam = 0.5 * (1.0 + std::cos(2.0 * kPi * model.theta));
        const double estimate = 1.0 - 4.0 * lam / model.p;
        const double truth =
            model.qenc.sys_vecs.col(0).dot(inst.F.matrix * model.qenc.sys_vecs.col(0)).real();
        const double err = std::fabs(estimate - truth);
        res.worst = std::max(res.worst, err);
        if (err > 1e-8) record_violation(res, err, &inst);
    }
    return res;
}

SuiteResult verify_lemma2(std::uint64_t seed, int count) {
    SuiteResult res{"lemma2"};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < count; ++t) {
        ++res.count;
        const RandomInstance inst = make_instance(rng, {});
        WalkOptions wopts;
        wopts.assemble_limit = 0;
        const WalkModel model = build_walk(inst.window, inst.H, inst.F, wopts);
        const double center = model.F00 * model.p;
        const double margin =
            std::fabs(model.omega_sq - center) - model.nu;
        res.worst = std::max(res.worst, margin);
        if (margin > 1e-12) record_violation(res, margin, &inst);
    }
    return res;
}

SuiteResult verify_davis_kahan(std::uint64_t seed, int count) {
    SuiteResult res{"davis_kahan"};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < count; ++t) {
        ++res.count;
        const RandomInstance inst = make_instance(rng, {});
        WalkOptions wopts;
        wopts.assemble_limit = 0;
        const WalkModel model = build_walk(inst.window, inst.H, inst.F, wopts);
        const PerturbationNorm pn = perturbation_norm(model);
        const double center = model.F00 * model.p;

        // Weyl: some projector-product eigenvalue within ||Delta|| of the
        // decoupled value.
        double closest = 1e300;
        for (Eigen::Index j = 0; j < model.pp_eigenvalues.size(); ++j)
            closest = std::min(closest, std::fabs(model.pp_eigenvalues[j] - center));
        if (closest > pn.exact + 1e-12) record_violation(res, closest - pn.exact, &inst);

        // Davis-Kahan sin-theta: sin(theta) <= ||Delta|| / delta with delta
        // the separation of the perturbed eigenvalue from the rest of the
        // decoupled spectrum, so delta >= gap - ||Delta|| by Weyl.  The
        // phase-minimized vector distance obeys 2 (1 - cos) <= 2 sin^2, hence
        // dist^2 <= 2 ||Delta||^2 / (gap - ||Delta||)^2.  Skip near-degenerate
        // decoupled spectra and gaps not clear of the perturbation.
        Eigen::SelfAdjointEigenSolver<Mat> es(model.decoupled);
        double gap = 1e300;
        for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
            const double dist = std::fabs(es.eigenvalues()[j] - center);
            if (dist > 1e-12) gap = std::min(gap, dist);
        }
        if (gap < 1e-6 || gap > 1e200 || gap < 2.0 * pn.exact) {
            ++res.skipped;
            continue;
        }
        Eigen::Index best = 0;
        double best_w = -1.0;
        for (Eigen::Index j = 0; j < model.pp_eigenvalues.size(); ++j) {
            const double w = std::norm(model.pp_eigenvectors(model.prep_col, j));
            if (w > best_w) { best_w = w; best = j; }
        }
        // min over phases s of || e_prep - s v ||^2 = 2 (1 - |v[prep]|)
        const double dist_sq =
            2.0 * (1.0 - std::abs(model.pp_eigenvectors(model.prep_col, best)));
        const double delta = gap - pn.exact;
        const double dk_bound = 2.0 * pn.exact * pn.exact / (delta * delta);
        const double margin = dist_sq - dk_bound;
        res.worst = std::max(res.worst, margin);
        if (margin > 1e-12) record_violation(res, margin, &inst);
    }
    return res;
}

SuiteResult verify_bounds(std::uint64_t seed, int count) {
    SuiteResult res{"bounds"};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < count; ++t) {
        ++res.count;
        const RandomInstance inst = make_instance(rng, {});
        const int n_o = uniform_int(rng, 16, 26);
        const EmulationReport rep = run_algorithm(inst.window, inst.H, inst.F, n_o);
        res.worst = std::max(res.worst, rep.realized_error - rep.bound);
        if (rep.realized_error > rep.bound) record_violation(res, rep.realized_error - rep.bound, &inst);

        WalkOptions wopts;
        wopts.assemble_limit = 0;
        const WalkModel model = build_walk(inst.window, inst.H, inst.F, wopts);
        const double sb = success_bound(
            {model.p, model.max_contam, n_o, default_c(model.p, model.max_contam) + 1e-30});
        if (sb > std::min(1.0, model.p) + 1e-12)
            record_violation(res, sb - std::min(1.0, model.p), &inst);
    }
    return res;
}

SuiteResult verify_rho_orthonormality(std::uint64_t seed, int count) {
    SuiteResult res{"rho"};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < count; ++t) {
        ++res.count;
        const int n = uniform_int(rng, 2, 6);
        const bool kaiser = uniform_int(rng, 0, 1) == 1;
        const WindowSpec spec =
            kaiser ? WindowSpec::kaiser(uniform(rng, 0.5, 12.0)) : WindowSpec::rectangular();
        const WindowVector w = make_window(spec, n);
        const Mat comp = complete_window_unitary(w);
        const double phi = uniform(rng, 0.0, 1.0);
        const Eigen::Index N = static_cast<Eigen::Index>(w.size());
        Mat gram(N, N);
        std::vector<Vec> rhos;
        for (Eigen::Index mm = 0; mm < N; ++mm)
            rhos.push_back(rho_state(comp, phi - static_cast<double>(mm) / static_cast<double>(N)));
        for (Eigen::Index a = 0; a < N; ++a)
            for (Eigen::Index b = 0; b < N; ++b)
                gram(a, b) = rhos[static_cast<std::size_t>(a)].dot(rhos[static_cast<std::size_t>(b)]);
        const double defect = (gram - Mat::Identity(N, N)).cwiseAbs().maxCoeff();
        res.worst = std::max(res.worst, defect);
        if (defect > 1e-10) record_violation(res, defect, nullptr);
    }
    return res;
}

std::vector<std::string> suite_names() {
    return {"lemma1", "theorem1", "lemma2", "davis_kahan", "bounds", "rho"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count) {
    if (name == "lemma1") return verify_lemma1(seed, count);
    if (name == "theorem1") return verify_theorem1(seed, count);
    if (name == "lemma2") return verify_lemma2(seed, count);
    if (name == "davis_kahan") return verify_davis_kahan(seed, count);
    if (name == "bounds") return verify_bounds(seed, count);
    if (name == "rho") return verify_rho_orthonormality(seed, count);
    throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace wqpe

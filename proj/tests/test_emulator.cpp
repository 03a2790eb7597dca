#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wqpe/emulator.hpp"
#include "wqpe/errors.hpp"
#include "wqpe/verify.hpp"

using namespace wqpe;

namespace {

// Random instance with a comfortable phase-gap margin for end-to-end runs.
RandomInstance good_instance(std::uint64_t seed, bool exact = false) {
    std::mt19937_64 rng(seed);
    InstanceOptions opts;
    opts.min_dim = 2;
    opts.max_dim = 4;
    opts.max_n = 6;
    opts.exact_phase = exact;
    if (exact) opts.family = 0;  // exact bins decouple only without a taper
    return make_instance(rng, opts);
}

}  // namespace

TEST_CASE("extremal observables produce extremal estimates") {
    const RandomInstance inst = good_instance(13, true);
    const Eigen::Index d = inst.H.dim;
    const HermitianSystem plus = HermitianSystem::make(Mat::Identity(d, d));
    const HermitianSystem minus = HermitianSystem::make(-Mat::Identity(d, d));

    const EmulationReport up = run_algorithm(inst.window, inst.H, plus, 20);
    CHECK(up.truth == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(up.estimate - 1.0) <= 1e-5);

    const EmulationReport dn = run_algorithm(inst.window, inst.H, minus, 20);
    CHECK(dn.truth == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::fabs(dn.estimate + 1.0) <= 1e-5);
}

TEST_CASE("exact-phase instances recover the expectation to rounding accuracy") {
    for (std::uint64_t seed : {17ULL, 29ULL, 43ULL}) {
        const RandomInstance inst = good_instance(seed, true);
        const EmulationReport rep = run_algorithm(inst.window, inst.H, inst.F, 30);
        CHECK(rep.p_true == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(rep.p_learned == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(rep.realized_error <= 1e-6);
        CHECK(rep.success_flag);
    }
}

TEST_CASE("reports stay within the analytic bound on random instances") {
    for (std::uint64_t seed : {3ULL, 5ULL, 7ULL, 11ULL}) {
        const RandomInstance inst = good_instance(seed);
        const EmulationReport rep = run_algorithm(inst.window, inst.H, inst.F, 16);
        CHECK(rep.realized_error == doctest::Approx(std::fabs(rep.estimate - rep.truth)));
        CHECK(rep.realized_error <= rep.bound + 1e-12);
        CHECK(rep.success_flag);
        CHECK(rep.p_learned > 0.0);
        CHECK(rep.p_learned <= 1.0);
    }
}

TEST_CASE("emulation is deterministic") {
    const RandomInstance inst = good_instance(23);
    const EmulationReport a = run_algorithm(inst.window, inst.H, inst.F, 14);
    const EmulationReport b = run_algorithm(inst.window, inst.H, inst.F, 14);
    CHECK(a.estimate == b.estimate);
    CHECK(a.theta_measured == b.theta_measured);
    CHECK(a.p_learned == b.p_learned);
    CHECK(a.bound == b.bound);
}

TEST_CASE("pre-learning tracks the true preparation overlap") {
    const RandomInstance inst = good_instance(37);
    WalkOptions opts;
    opts.assemble_limit = 0;
    const WalkModel model = build_walk(inst.window, inst.H, inst.F, opts);
    const double p_hat = prelearn_overlap(inst.window, inst.H, model.phi_tilde, 30);
    // the variant eigenvalue is (p + q^2)/2 with contamination-sized q
    const double slack = model.max_contam * model.max_contam + 1e-6;
    CHECK(std::fabs(p_hat - model.p) <= 2.0 * slack);
    CHECK_THROWS_AS(prelearn_overlap(inst.window, inst.H, model.phi_tilde, 0), ConfigError);
}

TEST_CASE("violated phase-gap promise raises GapError") {
    // two phases 0.03 cycles apart on a 3-bit register (needs > 0.25)
    std::vector<double> lam = {std::cos(2.0 * 3.14159265358979323846 * 0.40),
                               std::cos(2.0 * 3.14159265358979323846 * 0.37)};
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = lam[0];
    m(1, 1) = lam[1];
    const HermitianSystem H = HermitianSystem::make(m);
    const HermitianSystem F = HermitianSystem::make(0.5 * Mat::Identity(2, 2));
    CHECK_THROWS_AS(run_algorithm(make_window(WindowSpec::rectangular(), 3), H, F, 10),
                    GapError);
}

TEST_CASE("reflection error curve: decay, window ordering, query doubling") {
    const int l = 8;
    const std::vector<int> ms = {1, 2, 3, 4};
    const auto rect = reflection_error_curve(l, ms, WindowSpec::rectangular());
    const auto kais = reflection_error_curve(l, ms, WindowSpec::kaiser(0.0));  // auto beta
    REQUIRE(rect.size() == ms.size());
    REQUIRE(kais.size() == ms.size());

    for (std::size_t i = 0; i < ms.size(); ++i) {
        CHECK(rect[i].queries == (std::uint64_t{1} << (l + ms[i] - 1)));
        CHECK(kais[i].queries == rect[i].queries);
        CHECK(kais[i].beta == doctest::Approx(capped_beta(ms[i], kDefaultBetaMax)));
        if (i > 0) {
            CHECK(rect[i].relative_error < rect[i - 1].relative_error);
            CHECK(kais[i].relative_error < kais[i - 1].relative_error);
            CHECK(rect[i].queries == 2 * rect[i - 1].queries);
        }
        if (ms[i] >= 2) CHECK(kais[i].relative_error < rect[i].relative_error);
    }

    CHECK_THROWS_AS(reflection_error_curve(l, {}, WindowSpec::rectangular()), ConfigError);
    CHECK_THROWS_AS(reflection_error_curve(l, {0}, WindowSpec::kaiser(0.0)), ConfigError);
}

TEST_CASE("comparison trace follows the configured exponential model") {
    const QspModel model{.prefactor = 0.5, .decay_rate = 0.01};
    const auto trace = qsp_error_trace(4, {1, 2, 3}, model);
    REQUIRE(trace.size() == 3);
    for (const auto& pt : trace) {
        CHECK(pt.relative_error ==
              doctest::Approx(0.5 * std::exp(-0.01 * static_cast<double>(pt.queries)))
                  .epsilon(1e-15));
    }
}

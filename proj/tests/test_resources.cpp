#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "wqpe/errors.hpp"
#include "wqpe/io.hpp"
#include "wqpe/resources.hpp"

using namespace wqpe;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

TEST_CASE("observable names round-trip") {
    for (Observable o : {Observable::Kinetic, Observable::Dipole, Observable::Eri})
        CHECK(parse_observable(observable_name(o)) == o);
    CHECK_THROWS_AS(parse_observable("magnetic"), ConfigError);
}

TEST_CASE("baseline register size on reference inputs") {
    CHECK(baseline_qubits(107.49, 0.302) == 12);
    CHECK(baseline_qubits(87.34, 0.0069) == 17);
    CHECK_THROWS_AS(baseline_qubits(0.0, 0.1), ConfigError);
    CHECK_THROWS_AS(baseline_qubits(1.0, 0.0), ConfigError);
}

TEST_CASE("outer register size on reference inputs") {
    CHECK(outer_qubits(69.16, 4.0 / (kPi * kPi), 0.0016 / 3.0) == 22);
    CHECK_THROWS_AS(outer_qubits(1.0, 0.0, 0.1), ConfigError);
}

TEST_CASE("toffoli total: unit costs and the explicit sum") {
    CHECK(total_toffoli(1, 1, CostModel::unit()) == 11);

    const CostModel costs{.t_asp = 3.0, .t_window = 5.0, .t_qh = 7.0,
                          .t_bf = 11.0, .t_rot = 30.0, .t_qft_fixed = -1.0};
    const int n = 6, n_o = 10;
    const long double expect = 3.0L + std::ldexp(1.0L, n_o) * 5.0L +
                               std::ldexp(1.0L, n_o + n - 1) * 7.0L +
                               std::ldexp(1.0L, n_o + 1) * (0.5 * n * (n - 1) * 30.0) +
                               std::ldexp(1.0L, n_o - 1) * 11.0L +
                               0.5 * n_o * (n_o - 1) * 30.0;
    CHECK(total_toffoli(n, n_o, costs) == static_cast<std::uint64_t>(expect));

    // n_o = 0 keeps one observable reflection
    const std::uint64_t base = total_toffoli(3, 0, CostModel::unit());
    CHECK(base == 1 + 1 + 4 + 2 + 1 + 1);

    CHECK_THROWS_AS(total_toffoli(-1, 4, CostModel::unit()), ConfigError);
    CHECK_THROWS_AS(total_toffoli(30, 60, CostModel::unit()), std::overflow_error);
}

TEST_CASE("qft cost model") {
    CostModel pairs;
    CHECK(pairs.qft_cost(5) == doctest::Approx(10.0 * 30.0));
    CHECK(pairs.qft_cost(1) == 0.0);
    CHECK(CostModel::unit().qft_cost(5) == 1.0);
}

TEST_CASE("error budget splitting") {
    const ErrorBudget b = ErrorBudget::thirds(0.0016);
    CHECK(b.inner == doctest::Approx(0.0016 / 3.0).epsilon(1e-15));
    CHECK(b.inner + b.outer + b.data == doctest::Approx(0.0016).epsilon(1e-15));
    b.validate();

    const ErrorBudget s = ErrorBudget::split(1.0, 1.0, 2.0, 5.0);
    CHECK(s.inner == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(s.outer == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(s.data == doctest::Approx(0.625).epsilon(1e-15));

    CHECK_THROWS_AS(ErrorBudget::split(0.0, 1.0, 1.0, 1.0), ConfigError);
    CHECK_THROWS_AS(ErrorBudget::split(1.0, 1.0, -1.0, 1.0), ConfigError);
    ErrorBudget broken = b;
    broken.outer = 0.0;
    CHECK_THROWS_AS(broken.validate(), ConfigError);
}

TEST_CASE("embedded reference data integrity") {
    const std::string embedded = embedded_tables_json();
    CHECK(fnv1a64(embedded) == 0x37c4e46f0e4a3831ULL);
    CHECK(embedded == read_file(std::string(WQPE_SOURCE_DIR) + "/data/paper_tables.json"));
}

TEST_CASE("reference table parsing and lookup") {
    const ReferenceTables& tables = reference_tables();
    CHECK(tables.version == 1);
    CHECK(tables.entries.size() == 12);
    CHECK(tables.system_names().size() == 4);

    const SystemCase* water = tables.find("water", Observable::Kinetic);
    REQUIRE(water != nullptr);
    CHECK(water->lambda_H == doctest::Approx(107.49));
    CHECK(water->gap == doctest::Approx(0.302));
    CHECK(water->lambda_F == doctest::Approx(69.16));
    CHECK(water->n_orbitals == 24);
    CHECK(water->epsilon_target == doctest::Approx(0.0016));

    const SystemCase* dip = tables.find("p_benzyne", Observable::Dipole);
    REQUIRE(dip != nullptr);
    // 10 mDebye in atomic units
    CHECK(dip->epsilon_target == doctest::Approx(0.010 / 2.5417464519).epsilon(1e-6));

    CHECK(tables.find("helium", Observable::Kinetic) == nullptr);
    CHECK_THROWS_AS(parse_tables("{broken"), ConfigError);
}

TEST_CASE("reference qubit columns favor the tapered policy") {
    const ReferenceTables tables = parse_tables(embedded_tables_json());
    int rows = 0;
    for (const auto& [obs, entry] : tables.entries) {
        const auto rect = entry.qubit_reference.find("rectangular");
        const auto kais = entry.qubit_reference.find("kaiser");
        REQUIRE(rect != entry.qubit_reference.end());
        REQUIRE(kais != entry.qubit_reference.end());
        CHECK(kais->second < rect->second);
        ++rows;
    }
    CHECK(rows == 12);
}

TEST_CASE("inner register choice meets its budget and is monotone") {
    const double lambda_F = 69.16;
    const int l = 4;
    int prev_m = 0;
    for (double eps : {1.0, 0.1, 0.01}) {
        const InnerChoice c = choose_inner_register(lambda_F, eps * lambda_F, l,
                                                    WindowSpec::rectangular());
        CHECK(c.rel_error <= eps);
        CHECK(c.n == l + c.m);
        CHECK(c.m >= prev_m);  // tighter budgets never need fewer qubits
        prev_m = c.m;
    }
    const InnerChoice k = choose_inner_register(lambda_F, 0.01 * lambda_F, l,
                                                WindowSpec::kaiser(0.0));
    const InnerChoice r = choose_inner_register(lambda_F, 0.01 * lambda_F, l,
                                                WindowSpec::rectangular());
    CHECK(k.m >= 1);
    CHECK(k.m <= r.m);
    CHECK(k.beta == doctest::Approx(capped_beta(k.m, kDefaultBetaMax)));

    CHECK_THROWS_AS(choose_inner_register(lambda_F, 0.0, l, WindowSpec::rectangular()),
                    ConfigError);
}

TEST_CASE("uniform window cannot reach the reference inner budget") {
    // 8 mc / sqrt(p) decays only linearly in 2^-m for the uniform window, so
    // the embedded per-case targets sit past the m = 16 cap.
    const ReferenceTables& tables = reference_tables();
    const SystemCase* water = tables.find("water", Observable::Kinetic);
    REQUIRE(water != nullptr);
    const ErrorBudget budget = ErrorBudget::thirds(water->epsilon_target);
    const int l = baseline_qubits(water->lambda_H, water->gap);
    CHECK_THROWS_AS(
        choose_inner_register(water->lambda_F, budget.inner, l, WindowSpec::rectangular()),
        InfeasibleError);
    CHECK_THROWS_AS(estimate_case(*water, Observable::Kinetic, budget,
                                  WindowSpec::rectangular(), CostModel::unit()),
                    InfeasibleError);
}

TEST_CASE("end-to-end case assembly for the tapered policy") {
    const ReferenceTables& tables = reference_tables();
    const SystemCase* water = tables.find("water", Observable::Kinetic);
    REQUIRE(water != nullptr);
    const ErrorBudget budget = ErrorBudget::thirds(water->epsilon_target);
    const ResourceCase rc = estimate_case(*water, Observable::Kinetic, budget,
                                          WindowSpec::kaiser(0.0), CostModel::unit());
    CHECK(rc.l == 12);
    CHECK(rc.n == rc.l + rc.m);
    CHECK(rc.m >= 1);
    CHECK(rc.beta == doctest::Approx(capped_beta(rc.m, kDefaultBetaMax)));
    // the phase-gap condition holds at the returned m
    const double delta_phi = water->gap / (2.0 * kPi * water->lambda_H);
    CHECK(delta_phi > (1.0 + std::ldexp(1.0, rc.m)) * std::ldexp(1.0, -rc.n));
    CHECK(rc.p_floor > 0.0);
    CHECK(rc.p_floor <= 1.0);
    CHECK(rc.n_o == outer_qubits(water->lambda_F, rc.p_floor, budget.outer));
    CHECK(rc.total_toffoli == total_toffoli(rc.n, rc.n_o, CostModel::unit()));
    CHECK(std::isfinite(rc.qubit_estimate));
    CHECK(rc.qubit_estimate > 0.0);
}

TEST_CASE("paired cases: taper beats uniform under a loose budget") {
    const ReferenceTables& tables = reference_tables();
    const SystemCase* water = tables.find("water", Observable::Kinetic);
    REQUIRE(water != nullptr);
    const ErrorBudget budget = ErrorBudget::thirds(1.0);  // loose: both feasible
    const ResourceCase rect = estimate_case(*water, Observable::Kinetic, budget,
                                            WindowSpec::rectangular(), CostModel::unit());
    const ResourceCase kais = estimate_case(*water, Observable::Kinetic, budget,
                                            WindowSpec::kaiser(0.0), CostModel::unit());
    CHECK(kais.m <= rect.m);
    CHECK(kais.total_toffoli < rect.total_toffoli);
}

TEST_CASE("near-power-of-two phase gaps exhaust the register bump") {
    SystemCase sys;
    sys.name = "synthetic";
    sys.lambda_H = 1.0;
    sys.gap = 2.0 * kPi * (1.0 + 1e-9) / 4096.0;  // delta_phi a hair over 2^-12
    sys.lambda_F = 1.0;
    sys.n_orbitals = 10;
    sys.epsilon_target = 1.0;
    CHECK_THROWS_AS(estimate_case(sys, Observable::Kinetic, ErrorBudget::thirds(3.0),
                                  WindowSpec::rectangular(), CostModel::unit(),
                                  kDefaultBetaMax, QubitCoefficients{1, 1, 1, 1}),
                    GapError);
}

TEST_CASE("qubit highwater model and fit") {
    SystemCase sys;
    sys.n_orbitals = 24;
    sys.thc_rank_H = 80;
    sys.bits_keep_H = 13;
    const QubitCoefficients c{2.0, 3.0, 4.0, 5.0};
    CHECK(qubit_highwater(sys, 6, 10, c) ==
          doctest::Approx(2.0 * 24 + 3.0 * std::log2(80.0) + 4.0 * 13 + 5.0 + 6 + 10)
              .epsilon(1e-12));

    const QubitFit fit = fit_qubit_coefficients(WindowSpec::kaiser(0.0));
    CHECK(fit.residuals.size() == 12);
    for (double r : fit.residuals) CHECK(std::isfinite(r));
    // the dominant scaling is per-orbital and positive
    CHECK(fit.coeffs.a > 0.0);
    // repeated calls return the cached fit
    const QubitFit again = fit_qubit_coefficients(WindowSpec::kaiser(0.0));
    CHECK(again.coeffs.a == fit.coeffs.a);
    CHECK(again.coeffs.d == fit.coeffs.d);
}

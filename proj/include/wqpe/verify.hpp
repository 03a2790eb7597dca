#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wqpe/walk.hpp"
#include "wqpe/windows.hpp"

namespace wqpe {

// Randomized problem instance satisfying the spectral-gap promise.
struct RandomInstance {
    HermitianSystem H;
    HermitianSystem F;
    WindowVector window;
    WindowSpec spec;
    int n = 0, l = 0, m = 0;
};

struct InstanceOptions {
    int min_dim = 2, max_dim = 8;
    int max_n = 7;
    bool exact_phase = false;  // all eigenphases n-bit representable
    // -1: random window family; 0: rectangular; 1: Kaiser
    int family = -1;
};

RandomInstance make_instance(std::mt19937_64& rng, const InstanceOptions& opts = {});

// Random Hermitian matrix with spectral norm <= max_norm.
Mat random_hermitian(std::mt19937_64& rng, Eigen::Index dim, double max_norm);

struct SuiteResult {
    std::string suite;
    int count = 0;
    int violations = 0;
    int skipped = 0;
    double worst = 0.0;        // largest violation margin (<= 0 when clean)
    std::string detail;        // serialized offending instance, if any

    bool ok() const { return violations == 0; }
};

// Jordan-angle phases versus dense eigenphases of the reflection product.
SuiteResult verify_lemma1(std::uint64_t seed, int count);
// Exact-phase expectation recovery through cos(2 pi theta) inversion.
SuiteResult verify_theorem1(std::uint64_t seed, int count);
// |w|^2 containment in [F00 p - nu, F00 p + nu] on random instances.
SuiteResult verify_lemma2(std::uint64_t seed, int count);
// Weyl and Davis-Kahan inequalities on the decoupled/perturbation split.
SuiteResult verify_davis_kahan(std::uint64_t seed, int count);
// End-to-end emulations against the analytic error/success bounds.
SuiteResult verify_bounds(std::uint64_t seed, int count);
// Gram matrix of the shifted rho states under Householder completions.
SuiteResult verify_rho_orthonormality(std::uint64_t seed, int count);

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count);
std::vector<std::string> suite_names();

}  // namespace wqpe

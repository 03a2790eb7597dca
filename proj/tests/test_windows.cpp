#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wqpe/errors.hpp"
#include "wqpe/windows.hpp"

using namespace wqpe;

namespace {

// Independent long-double power-series oracle, summed to convergence.
long double i0_oracle(long double x) {
    const long double q = 0.25L * x * x;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 2000; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        sum += term;
        if (term < 1e-21L * sum) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("bessel_i0 basics") {
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i0(-3.7) == bessel_i0(3.7));
    CHECK(bessel_i0(1.0) == doctest::Approx(1.26606587775200834).epsilon(1e-14));
    CHECK_THROWS_AS(bessel_i0(std::nan("")), ConfigError);
    CHECK_THROWS_AS(bessel_i0(INFINITY), ConfigError);
}

TEST_CASE("bessel_i0 against reference values") {
    // high-precision references for both evaluation branches
    CHECK(bessel_i0(3.7) == doctest::Approx(8.73861752416939558).epsilon(1e-14));
    CHECK(bessel_i0(15.0) == doctest::Approx(339649.373297913880).epsilon(1e-14));
    CHECK(bessel_i0(50.0) == doctest::Approx(2.93255378384933633e20).epsilon(1e-14));
    CHECK(bessel_i0(200.0) == doctest::Approx(2.03968717340972462e85).epsilon(1e-14));
    CHECK(bessel_i0(700.0) == doctest::Approx(1.52959334767187374e302).epsilon(1e-14));
    CHECK(bessel_i0_scaled(800.0) == doctest::Approx(0.0141069450058691840).epsilon(1e-14));
    CHECK(bessel_i0_scaled(2000.0) == doctest::Approx(0.00892117827643967027).epsilon(1e-14));
}

TEST_CASE("bessel_i0 branch seam is smooth") {
    for (double x = 29.0; x <= 31.0; x += 0.05) {
        const double ref = static_cast<double>(i0_oracle(x));
        CHECK(bessel_i0(x) == doctest::Approx(ref).epsilon(1e-14));
    }
    CHECK(bessel_i0(29.9) == doctest::Approx(7.08478330489015516e11).epsilon(1e-14));
    CHECK(bessel_i0(30.1) == doctest::Approx(8.62432920031778007e11).epsilon(1e-14));
}

TEST_CASE("rectangular window is uniform") {
    const WindowVector w = make_window(WindowSpec::rectangular(), 3);
    REQUIRE(w.size() == 8);
    for (double a : w.amplitudes) CHECK(a == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-15));
}

TEST_CASE("kaiser beta=0 degenerates to rectangular") {
    for (int n = 1; n <= 12; ++n) {
        const WindowVector r = make_window(WindowSpec::rectangular(), n);
        const WindowVector k = make_window(WindowSpec::kaiser(0.0), n);
        for (std::size_t i = 0; i < r.size(); ++i)
            CHECK(std::fabs(r.amplitudes[i] - k.amplitudes[i]) <= 1e-14);
    }
}

TEST_CASE("kaiser window matches direct taper evaluation") {
    const double beta = 5.4414;
    const int n = 5;
    const WindowVector w = make_window(WindowSpec::kaiser(beta), n);
    const std::size_t N = w.size();
    std::vector<long double> ref(N);
    long double norm = 0.0L;
    for (std::size_t x = 0; x < N; ++x) {
        const long double xb = (2.0L * x - (N - 1.0L)) / (N - 1.0L);
        ref[x] = i0_oracle(beta * std::sqrt(static_cast<double>(1.0L - xb * xb))) /
                 i0_oracle(beta);
        norm += ref[x] * ref[x];
    }
    for (std::size_t x = 0; x < N; ++x)
        CHECK(w.amplitudes[x] ==
              doctest::Approx(static_cast<double>(ref[x] / std::sqrt(static_cast<double>(norm))))
                  .epsilon(1e-12));
}

TEST_CASE("window invariants: norm, symmetry, positivity") {
    for (double beta : {0.0, 2.0, 6.0, 14.0, 60.0, 300.0, 1500.0}) {
        for (int n : {1, 3, 6, 9}) {
            const WindowVector w = make_window(WindowSpec::kaiser(beta), n);
            double s = 0.0;
            for (double a : w.amplitudes) {
                CHECK(a >= 0.0);
                s += a * a;
            }
            CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
            const std::size_t N = w.size();
            for (std::size_t x = 0; x < N; ++x)
                CHECK(std::fabs(w.amplitudes[x] - w.amplitudes[N - 1 - x]) <= 1e-12);
        }
    }
}

TEST_CASE("beta-monotone concentration") {
    const int n = 6;
    double prev_center = 0.0, prev_edge = 2.0;
    for (double beta = 0.0; beta <= 20.0; beta += 2.0) {
        const WindowVector w = make_window(WindowSpec::kaiser(beta), n);
        const double center = w.amplitudes[w.size() / 2];
        const double edge = w.amplitudes[0];
        if (beta > 0.0) {
            CHECK(center > prev_center);
            CHECK(edge < prev_edge);
        }
        prev_center = center;
        prev_edge = edge;
    }
}

TEST_CASE("optimal_beta values and scaling") {
    CHECK(optimal_beta(0) == 0.0);
    CHECK(optimal_beta(1) == doctest::Approx(5.44139809270265355).epsilon(1e-14));
    CHECK(optimal_beta(2) == doctest::Approx(12.1673360279208357).epsilon(1e-14));
    double prev = -1.0;
    for (int m = 0; m <= 12; ++m) {
        CHECK(optimal_beta(m) > prev);
        prev = optimal_beta(m);
    }
    const double pi = 3.14159265358979323846;
    CHECK(std::fabs(optimal_beta(10) / 1024.0 - pi) / pi < 0.01);
}

TEST_CASE("capped_beta") {
    CHECK(capped_beta(1, 100.0) == doctest::Approx(5.44139809270265355).epsilon(1e-14));
    CHECK(capped_beta(5, 10.0) == 10.0);
    CHECK(capped_beta(0, 10.0) == 0.0);
    CHECK_THROWS_AS(capped_beta(1, 0.0), ConfigError);
}

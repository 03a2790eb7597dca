#include "wqpe/qpe.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "wqpe/errors.hpp"

namespace wqpe {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGolden = 0.6180339887498949;

void require_normalized(const WindowVector& w) {
    double s = 0.0;
    for (double v : w.amplitudes) s += v * v;
    if (std::fabs(s - 1.0) > 1e-9)
        throw ConfigError("window is not normalized (sum of squares deviates from 1)");
    if (w.amplitudes.size() != (std::size_t{1} << w.n))
        throw ConfigError("window length does not match 2^n");
}

// |(1/sqrt(N)) sum_x w[x] exp(-2 pi i y x)| with compensated summation; the
// phase is reduced modulo 1 in extended precision so large x*y keeps full
// accuracy.  The 1/sqrt(N) factor is the inverse-transform normalization, so
// the squared values over one bin grid sum to 1 by Parseval.
double overlap_direct(const std::vector<double>& w, double y) {
    double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;
    const long double ly = y;
    for (std::size_t x = 0; x < w.size(); ++x) {
        const long double frac = ly * static_cast<long double>(x);
        const double ang = -2.0 * kPi * static_cast<double>(frac - std::floor(frac));
        const double tr = w[x] * std::cos(ang) - cre;
        const double sr = re + tr;
        cre = (sr - re) - tr;
        re = sr;
        const double ti = w[x] * std::sin(ang) - cim;
        const double si = im + ti;
        cim = (si - im) - ti;
        im = si;
    }
    return std::hypot(re, im) / std::sqrt(static_cast<double>(w.size()));
}

// Dirichlet-kernel magnitude of the uniform window: |sin(pi N y)| / (N |sin(pi y)|).
double rect_overlap(std::size_t N, double y) {
    const double s = std::sin(kPi * y);
    if (std::fabs(s) < 1e-300) return 1.0;
    return std::fabs(std::sin(kPi * static_cast<double>(N) * y)) / (static_cast<double>(N) * std::fabs(s));
}

template <class F>
double golden_max(F f, double a, double b, double tol, double* arg = nullptr) {
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + kGolden * (b - a); f2 = f(x2);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - kGolden * (b - a); f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b), fm = f(xm);
    double best = fm, bx = xm;
    if (f1 > best) { best = f1; bx = x1; }
    if (f2 > best) { best = f2; bx = x2; }
    if (arg) *arg = bx;
    return best;
}

// Grid magnitudes |DFT(w zero-padded to M)| at y = j/M via FFTW.
std::vector<double> padded_dft_magnitudes(const std::vector<double>& w, std::size_t M) {
    std::vector<std::complex<double>> in(M, 0.0), out(M);
    for (std::size_t x = 0; x < w.size(); ++x) in[x] = w[x];
    fftw_plan plan = fftw_plan_dft_1d(
        static_cast<int>(M), reinterpret_cast<fftw_complex*>(in.data()),
        reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    std::vector<double> mag(M);
    for (std::size_t j = 0; j < M; ++j) mag[j] = std::abs(out[j]);
    return mag;
}

double refine_around(const std::vector<double>& w, double y_lo, double y_hi,
                     double y_best, double step) {
    const double a = std::max(y_lo, y_best - step);
    const double b = std::min(y_hi, y_best + step);
    auto f = [&](double y) { return overlap_direct(w, y); };
    double peak = golden_max(f, a, b, 1e-13);
    peak = std::max(peak, f(y_lo));  // band edge is a frequent maximizer
    return peak;
}

// Continuous-taper transform proxy used only to locate candidate sidelobes
// for large Kaiser registers; the returned ranking is refined with exact
// direct evaluations.
double kaiser_dtft_proxy(double beta, std::size_t N, double y) {
    const double u = kPi * y * static_cast<double>(N - 1);
    const double q = beta * beta - u * u;
    if (q > 0.0) {
        const double r = std::sqrt(q);
        return r < 1e-12 ? 1.0 : std::sinh(r) / r;
    }
    const double r = std::sqrt(-q);
    return r < 1e-12 ? 1.0 : std::fabs(std::sin(r)) / r;
}

}  // namespace

double overlap(const WindowVector& window, double y) {
    require_normalized(window);
    return std::min(1.0, overlap_direct(window.amplitudes, y));
}

PhaseDistribution phase_distribution(const WindowVector& window, double phi) {
    require_normalized(window);
    if (phi < 0.0 || phi >= 1.0) throw ConfigError("phase_distribution: phi must be in [0,1)");
    const std::size_t N = window.size();
    PhaseDistribution dist;
    dist.n = window.n;
    dist.phi = phi;
    dist.mass.resize(N);
    for (std::size_t k = 0; k < N; ++k) {
        const double v = overlap_direct(window.amplitudes, phi - static_cast<double>(k) / static_cast<double>(N));
        dist.mass[k] = v * v;
    }
    return dist;
}

double worst_case_failure(const WindowVector& window, int band) {
    require_normalized(window);
    if (band < 1) throw ConfigError("worst_case_failure: band must be >= 1");
    const std::size_t N = window.size();
    const double dN = static_cast<double>(N);

    // Bin-shift covariance makes the scan over one bin exhaustive.  The
    // accepted bin set changes discontinuously at the bin edges (a bin at
    // circular distance exactly `band` drops out as t leaves the integer), so
    // the supremum can sit arbitrarily close to t = 0 or t = 1; sample both
    // one-sided limits explicitly.
    std::vector<double> offsets;
    for (int j = 0; j < 64; ++j) offsets.push_back(j / 64.0);
    offsets.push_back(0.5);  // exact half-bin point
    offsets.push_back(1e-9);
    offsets.push_back(1.0 - 1e-9);

    double worst = 0.0;
    for (double t : offsets) {
        const double phi = t / dN;
        double success = 0.0;
        const long lo = static_cast<long>(std::floor(t)) - band;
        const long hi = static_cast<long>(std::ceil(t)) + band;
        for (long k = lo; k <= hi; ++k) {
            double dist = std::fabs(static_cast<double>(k) - t);
            dist = std::min(dist, dN - dist);  // circular bin distance
            if (dist > static_cast<double>(band) + 1e-12) continue;
            const long kk = ((k % static_cast<long>(N)) + static_cast<long>(N)) % static_cast<long>(N);
            const double v = overlap_direct(window.amplitudes, phi - static_cast<double>(kk) / dN);
            success += v * v;
        }
        worst = std::max(worst, 1.0 - success);
    }
    return std::max(0.0, worst);
}

double max_contamination_overlap(const WindowVector& window, int l) {
    require_normalized(window);
    const int n = window.n;
    if (l < 1 || l > n) throw ConfigError("max_contamination_overlap: need 1 <= l <= n");
    if (n > 20)
        throw ConfigError("max_contamination_overlap: vector path limited to n <= 20; "
                          "use the WindowSpec overload for larger registers");

    const double y0 = std::ldexp(1.0, -l);
    // |G(1-y)| = |G(y)| for a real window, so the scan covers [y0, 1/2].
    const std::size_t M = std::size_t{1} << std::min(n + 6, 22);
    const std::vector<double> mag = padded_dft_magnitudes(window.amplitudes, M);
    const std::size_t j_lo = M >> l;  // exact: 2^l divides M
    std::size_t j_best = j_lo;
    for (std::size_t j = j_lo; j <= M / 2; ++j)
        if (mag[j] > mag[j_best]) j_best = j;
    return refine_around(window.amplitudes, y0, 0.5,
                         static_cast<double>(j_best) / static_cast<double>(M),
                         2.0 / static_cast<double>(M));
}

double max_contamination_overlap(const WindowSpec& spec, int n, int l) {
    if (l < 1 || l > n) throw ConfigError("max_contamination_overlap: need 1 <= l <= n");
    const std::size_t N = std::size_t{1} << n;
    const double y0 = std::ldexp(1.0, -l);

    if (spec.kind == WindowKind::Rectangular || spec.beta == 0.0) {
        // Dirichlet magnitude: sidelobe envelope decreases over (0, 1/2], so
        // the band maximum sits at the edge or in the first few lobes.
        auto f = [&](double y) { return rect_overlap(N, y); };
        double best = f(y0);
        const std::size_t k0 = std::size_t{1} << (n - l);
        for (std::size_t k = k0; k < std::min(k0 + 8, N / 2 + 1); ++k) {
            const double a = std::max(y0, static_cast<double>(k) / static_cast<double>(N));
            const double b = std::min(0.5, static_cast<double>(k + 1) / static_cast<double>(N));
            if (a >= b) continue;
            best = std::max(best, golden_max(f, a, b, 1e-13));
        }
        return std::min(1.0, best);
    }

    if (n > 24) throw ConfigError("max_contamination_overlap: Kaiser path limited to n <= 24");
    const WindowVector w = make_window(spec, n);
    if (n <= 20) return max_contamination_overlap(w, l);

    // Large registers: rank candidate lobes with the continuous-transform
    // proxy, then refine the leaders with exact direct evaluation.
    auto proxy = [&](double y) { return kaiser_dtft_proxy(spec.beta, N, y); };
    const double lobe = 1.0 / static_cast<double>(N);
    const std::size_t lobes = 4096;
    double best_proxy = -1.0;
    double y_best = y0;
    for (std::size_t k = 0; k < lobes; ++k) {
        for (int s = 0; s < 8; ++s) {
            const double y = y0 + (static_cast<double>(k) + s / 8.0) * lobe;
            if (y > 0.5) break;
            const double v = proxy(y);
            if (v > best_proxy) { best_proxy = v; y_best = y; }
        }
    }
    return std::min(1.0, refine_around(w.amplitudes, y0, 0.5, y_best, 2.0 * lobe));
}

double half_bin_overlap(const WindowSpec& spec, int n) {
    if (n < 1) throw ConfigError("half_bin_overlap: n must be >= 1");
    const std::size_t N = std::size_t{1} << n;
    const double y = std::ldexp(1.0, -(n + 1));
    if (spec.kind == WindowKind::Rectangular || spec.beta == 0.0)
        return 1.0 / (static_cast<double>(N) * std::sin(kPi * y));
    if (n > 24) throw ConfigError("half_bin_overlap: Kaiser path limited to n <= 24");
    const WindowVector w = make_window(spec, n);
    return overlap_direct(w.amplitudes, y);
}

OverlapProfile overlap_scan(const WindowVector& window, int grid) {
    require_normalized(window);
    if (grid < 2) throw ConfigError("overlap_scan: grid must be >= 2");
    OverlapProfile prof;
    prof.window = window;
    prof.samples.reserve(grid);
    for (int j = 0; j < grid; ++j) {
        const double y = static_cast<double>(j) / grid;
        prof.samples.emplace_back(y, std::min(1.0, overlap_direct(window.amplitudes, y)));
    }
    return prof;
}

}  // namespace wqpe

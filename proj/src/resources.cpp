#include "wqpe/resources.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "wqpe/errors.hpp"
#include "wqpe/qpe.hpp"

namespace wqpe {
namespace detail {
extern const char* kEmbeddedTablesJson;
}

namespace {

constexpr double kPi = 3.14159265358979323846;
using nlohmann::json;

double p_floor_of(const WindowSpec& spec, int n) {
    if (spec.kind == WindowKind::Rectangular || spec.beta == 0.0)
        return 4.0 / (kPi * kPi);
    const double v = half_bin_overlap(spec, n);
    return v * v;
}

// Register sizes for the reference fit rows. The reference column may need
// registers past the m = 16 policy cap (the uniform window only gains one
// bit of reflection accuracy per surplus qubit), so this scan is uncapped
// for the rectangular closed form instead of reusing choose_inner_register.
InnerChoice inner_for_fit(double lambda_F, double eps_inner, int l,
                          const WindowSpec& policy) {
    const bool kaiser = policy.kind == WindowKind::Kaiser;
    const double target = eps_inner / lambda_F;
    InnerChoice last;
    for (int m = kaiser ? 1 : 0; m <= (kaiser ? 24 - l : 40); ++m) {
        const int n = l + m;
        WindowSpec spec = policy;
        if (kaiser) spec.beta = capped_beta(m, kDefaultBetaMax);
        const double mc = max_contamination_overlap(spec, n, l);
        const double p = p_floor_of(spec, n);
        last = {m, spec.beta, n, p, 8.0 * mc / std::sqrt(p)};
        if (last.rel_error <= target) return last;
    }
    return last;  // best effort: the affine fit only needs register sizes
}

}  // namespace

const char* observable_name(Observable o) {
    switch (o) {
        case Observable::Kinetic: return "kinetic";
        case Observable::Dipole: return "dipole";
        case Observable::Eri: return "eri";
    }
    return "?";
}

Observable parse_observable(const std::string& name) {
    if (name == "kinetic") return Observable::Kinetic;
    if (name == "dipole") return Observable::Dipole;
    if (name == "eri") return Observable::Eri;
    throw ConfigError("unknown observable '" + name + "' (expected kinetic|dipole|eri)");
}

CostModel CostModel::unit() {
    CostModel c;
    c.t_asp = c.t_window = c.t_qh = c.t_bf = 1.0;
    c.t_qft_fixed = 1.0;
    return c;
}

double CostModel::qft_cost(int k) const {
    if (t_qft_fixed >= 0.0) return t_qft_fixed;
    return 0.5 * static_cast<double>(k) * (k - 1) * t_rot;
}

ErrorBudget ErrorBudget::thirds(double target) {
    return split(target, 1.0, 1.0, 1.0);
}

ErrorBudget ErrorBudget::split(double target, double a, double b, double c) {
    if (!(target > 0.0)) throw ConfigError("error budget: target must be > 0");
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw ConfigError("error budget: split weights must be > 0");
    const double s = a + b + c;
    ErrorBudget out;
    out.target = target;
    out.inner = target * a / s;
    out.outer = target * b / s;
    out.data = target * c / s;
    return out;
}

void ErrorBudget::validate() const {
    if (!(inner > 0.0) || !(outer > 0.0) || !(data > 0.0))
        throw ConfigError("error budget: all components must be > 0");
    if (std::fabs(inner + outer + data - target) > 1e-12 * std::fmax(1.0, target))
        throw ConfigError("error budget: components do not sum to the target");
}

int baseline_qubits(double lambda_H, double gap) {
    if (!(lambda_H > 0.0) || !(gap > 0.0))
        throw ConfigError("baseline_qubits: inputs must be > 0");
    return static_cast<int>(std::ceil(std::log2(2.0 * kPi * lambda_H / gap)));
}

int outer_qubits(double lambda_F, double p_floor, double eps_outer) {
    if (!(lambda_F > 0.0) || !(p_floor > 0.0) || !(eps_outer > 0.0))
        throw ConfigError("outer_qubits: inputs must be > 0");
    return static_cast<int>(std::ceil(std::log2(3.0 * kPi * lambda_F / (p_floor * eps_outer))));
}

InnerChoice choose_inner_register(double lambda_F, double eps_inner, int l,
                                  const WindowSpec& policy, double beta_max) {
    if (!(eps_inner > 0.0)) throw ConfigError("choose_inner_register: eps_inner must be > 0");
    if (!(lambda_F > 0.0)) throw ConfigError("choose_inner_register: lambda_F must be > 0");
    if (l < 1) throw ConfigError("choose_inner_register: l must be >= 1");

    const bool kaiser = policy.kind == WindowKind::Kaiser;
    const double target = eps_inner / lambda_F;
    InnerChoice best;
    double best_err = -1.0;
    for (int m = kaiser ? 1 : 0; m <= 16; ++m) {
        const int n = l + m;
        WindowSpec spec = policy;
        double beta = 0.0;
        if (kaiser) {
            beta = policy.beta > 0.0 ? std::min(policy.beta, beta_max)
                                     : capped_beta(m, beta_max);
            spec.beta = beta;
        }
        if (kaiser && n > 24) break;  // register ceiling of the Kaiser scan
        const double mc = max_contamination_overlap(spec, n, l);
        const double p = p_floor_of(spec, n);
        const double rel = 8.0 * mc / std::sqrt(p);
        if (best_err < 0.0 || rel < best_err) {
            best_err = rel;
            best = {m, beta, n, p, rel};
        }
        if (rel <= target) return {m, beta, n, p, rel};
    }
    std::ostringstream ss;
    ss << "inner error budget unreachable within the register cap: best relative error "
       << best_err << " at m = " << best.m << ", target " << target;
    throw InfeasibleError(ss.str());
}

std::uint64_t total_toffoli(int n, int n_o, const CostModel& costs) {
    if (n < 0 || n_o < 0) throw ConfigError("total_toffoli: registers must be >= 0");
    if (costs.t_asp < 0 || costs.t_window < 0 || costs.t_qh < 0 || costs.t_bf < 0 ||
        costs.t_rot < 0)
        throw ConfigError("total_toffoli: costs must be >= 0");

    const long double p_no = std::ldexp(1.0L, n_o);
    long double total = costs.t_asp;
    total += p_no * costs.t_window;
    total += std::ldexp(1.0L, n_o + n - 1) * costs.t_qh;
    total += std::ldexp(1.0L, n_o + 1) * costs.qft_cost(n);
    total += std::fmax(std::ldexp(1.0L, n_o - 1), 1.0L) * costs.t_bf;
    total += costs.qft_cost(n_o);

    if (!(total < 9.2e18))  // wide-count guard: stay within 64-bit range
        throw std::overflow_error("total_toffoli: count exceeds the 64-bit range");
    return static_cast<std::uint64_t>(std::llroundl(total));
}

ResourceCase estimate_case(const SystemCase& sys, Observable obs,
                           const ErrorBudget& budget, const WindowSpec& policy,
                           const CostModel& costs, double beta_max,
                           const std::optional<QubitCoefficients>& coeffs) {
    budget.validate();
    if (!(sys.gap > 0.0) || !(sys.lambda_H >= sys.gap))
        throw ConfigError("estimate_case: need gap > 0 and lambda_H >= gap");

    ResourceCase rc;
    rc.sys = sys;
    rc.observable = obs;
    rc.policy = policy;
    rc.budget = budget;

    rc.l = baseline_qubits(sys.lambda_H, sys.gap);
    const double delta_phi = sys.gap / (2.0 * kPi * sys.lambda_H);

    InnerChoice inner = choose_inner_register(sys.lambda_F, budget.inner, rc.l, policy, beta_max);
    // Raise m until the phase-gap condition delta_phi > (1 + 2^m)/2^{l+m}
    // holds; larger m only reduces the reflection error.
    while (!(delta_phi > (1.0 + std::ldexp(1.0, inner.m)) * std::ldexp(1.0, -(rc.l + inner.m)))) {
        if (inner.m >= 16) {
            std::ostringstream ss;
            ss << "phase-gap condition unsatisfiable: delta_phi = " << delta_phi
               << " <= (1 + 2^m)/2^{l+m} for all m <= 16 with l = " << rc.l;
            throw GapError(ss.str());
        }
        ++inner.m;
        inner.n = rc.l + inner.m;
        WindowSpec spec = policy;
        if (policy.kind == WindowKind::Kaiser) {
            inner.beta = policy.beta > 0.0 ? std::min(policy.beta, beta_max)
                                           : capped_beta(inner.m, beta_max);
            spec.beta = inner.beta;
        }
        inner.p_floor = p_floor_of(spec, inner.n);
    }

    rc.m = inner.m;
    rc.n = inner.n;
    rc.beta = inner.beta;
    rc.p_floor = inner.p_floor;
    rc.n_o = outer_qubits(sys.lambda_F, rc.p_floor, budget.outer);
    rc.total_toffoli = total_toffoli(rc.n, rc.n_o, costs);

    if (coeffs) {
        rc.qubit_estimate = qubit_highwater(sys, rc.n, rc.n_o, *coeffs);
    } else {
        const QubitFit fit = fit_qubit_coefficients(policy);
        rc.qubit_estimate = qubit_highwater(sys, rc.n, rc.n_o, fit.coeffs);
    }
    return rc;
}

double qubit_highwater(const SystemCase& sys, int n, int n_o,
                       const QubitCoefficients& coeffs) {
    const double rank = std::fmax(1.0, static_cast<double>(sys.thc_rank_H));
    return coeffs.a * sys.n_orbitals + coeffs.b * std::log2(rank) +
           coeffs.c * sys.bits_keep_H + coeffs.d + n + n_o;
}

// ---- embedded reference data -------------------------------------------

const char* embedded_tables_json() { return detail::kEmbeddedTablesJson; }

ReferenceTables parse_tables(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("reference tables: JSON parse failure: ") + e.what());
    }
    ReferenceTables tables;
    tables.version = j.at("version").get<int>();
    for (const auto& sysj : j.at("systems")) {
        const std::string name = sysj.at("name").get<std::string>();
        const int n_orb = sysj.at("n_orbitals").get<int>();
        const double gap = sysj.at("gap").get<double>();
        for (const auto& [obs_name, oj] : sysj.at("observables").items()) {
            ReferenceEntry entry;
            entry.sys.name = name;
            entry.sys.n_orbitals = n_orb;
            entry.sys.gap = gap;
            entry.sys.lambda_H = oj.at("lambda_H").get<double>();
            entry.sys.lambda_F = oj.at("lambda_F").get<double>();
            entry.sys.thc_rank_H = oj.at("thc_rank_H").get<int>();
            entry.sys.thc_rank_F = oj.at("thc_rank_F").get<int>();
            entry.sys.bits_keep_H = oj.at("bits_keep_H").get<int>();
            entry.sys.bits_rot_H = oj.at("bits_rot_H").get<int>();
            entry.sys.bits_keep_F = oj.at("bits_keep_F").get<int>();
            entry.sys.bits_rot_F = oj.at("bits_rot_F").get<int>();
            entry.sys.epsilon_target = oj.at("epsilon_target").get<double>();
            if (oj.contains("qubit_reference"))
                for (const auto& [col, v] : oj.at("qubit_reference").items())
                    entry.qubit_reference[col] = v.get<int>();
            tables.entries.emplace_back(parse_observable(obs_name), entry);
        }
    }
    return tables;
}

const SystemCase* ReferenceTables::find(const std::string& system, Observable obs) const {
    for (const auto& [o, entry] : entries)
        if (o == obs && entry.sys.name == system) return &entry.sys;
    return nullptr;
}

std::vector<std::string> ReferenceTables::system_names() const {
    std::vector<std::string> names;
    for (const auto& [o, entry] : entries)
        if (std::find(names.begin(), names.end(), entry.sys.name) == names.end())
            names.push_back(entry.sys.name);
    return names;
}

const ReferenceTables& reference_tables() {
    static ReferenceTables tables = [] {
        if (const char* path = std::getenv("WQPE_TABLES")) {
            std::ifstream in(path);
            if (!in) throw ConfigError(std::string("WQPE_TABLES: cannot open ") + path);
            std::stringstream ss;
            ss << in.rdbuf();
            return parse_tables(ss.str());
        }
        return parse_tables(detail::kEmbeddedTablesJson);
    }();
    return tables;
}

QubitFit fit_qubit_coefficients(const WindowSpec& policy, const CostModel& costs) {
    const std::string column =
        policy.kind == WindowKind::Kaiser ? "kaiser" : "rectangular";

    static std::mutex mu;
    static std::map<std::string, QubitFit> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(column);
        if (it != cache.end()) return it->second;
    }

    const ReferenceTables& tables = reference_tables();
    std::vector<double> rhs;
    std::vector<std::array<double, 4>> rows;
    for (const auto& [obs, entry] : tables.entries) {
        auto it = entry.qubit_reference.find(column);
        if (it == entry.qubit_reference.end()) continue;
        // registers for this row under the policy, reference model excluded
        const ErrorBudget budget = ErrorBudget::thirds(entry.sys.epsilon_target);
        const int l = baseline_qubits(entry.sys.lambda_H, entry.sys.gap);
        InnerChoice inner = inner_for_fit(entry.sys.lambda_F, budget.inner, l, policy);
        const double delta_phi = entry.sys.gap / (2.0 * kPi * entry.sys.lambda_H);
        while (!(delta_phi >
                 (1.0 + std::ldexp(1.0, inner.m)) * std::ldexp(1.0, -(l + inner.m)))) {
            ++inner.m;
            inner.n = l + inner.m;
            WindowSpec spec = policy;
            if (policy.kind == WindowKind::Kaiser) spec.beta = capped_beta(inner.m, kDefaultBetaMax);
            inner.p_floor = p_floor_of(spec, inner.n);
        }
        const int n_o = outer_qubits(entry.sys.lambda_F, inner.p_floor, budget.outer);
        (void)costs;

        const double y = it->second - inner.n - n_o;
        rows.push_back({static_cast<double>(entry.sys.n_orbitals),
                        std::log2(std::fmax(1.0, entry.sys.thc_rank_H)),
                        static_cast<double>(entry.sys.bits_keep_H), 1.0});
        rhs.push_back(y);
    }
    if (rows.size() < 4) throw ConfigError("fit_qubit_coefficients: too few reference rows");

    Eigen::MatrixXd A(rows.size(), 4);
    Eigen::VectorXd b(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int c = 0; c < 4; ++c) A(static_cast<Eigen::Index>(r), c) = rows[r][c];
        b[static_cast<Eigen::Index>(r)] = rhs[r];
    }
    const Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);

    QubitFit fit;
    fit.coeffs = {x[0], x[1], x[2], x[3]};
    const Eigen::VectorXd res = A * x - b;
    fit.residuals.assign(res.data(), res.data() + res.size());

    std::lock_guard<std::mutex> lock(mu);
    cache[column] = fit;
    return fit;
}

}  // namespace wqpe

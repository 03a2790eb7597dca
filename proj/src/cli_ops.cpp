#include "wqpe/cli_ops.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wqpe/emulator.hpp"
#include "wqpe/errors.hpp"
#include "wqpe/io.hpp"
#include "wqpe/qpe.hpp"
#include "wqpe/verify.hpp"

namespace wqpe {
namespace {

using nlohmann::json;

void emit(const std::string& out, const std::string& content) {
    if (out.empty() || out == "-")
        std::cout << content;
    else
        atomic_write(out, content);
}

int default_suite_count(const std::string& suite) {
    if (suite == "lemma1") return 50;
    if (suite == "theorem1") return 25;
    if (suite == "lemma2") return 100;
    if (suite == "davis_kahan") return 100;
    if (suite == "bounds") return 200;
    if (suite == "rho") return 20;
    return 50;
}

}  // namespace

WindowArg parse_window_arg(const std::string& text) {
    WindowArg arg;
    if (text == "rect" || text == "rectangular") {
        arg.spec = WindowSpec::rectangular();
        return arg;
    }
    if (text.rfind("kaiser", 0) == 0) {
        arg.spec.kind = WindowKind::Kaiser;
        const auto colon = text.find(':');
        if (colon == std::string::npos)
            throw ConfigError("--window kaiser requires ':<beta>' or ':auto'");
        const std::string val = text.substr(colon + 1);
        if (val == "auto") {
            arg.auto_beta = true;
            arg.spec.beta = 0.0;
            return arg;
        }
        try {
            arg.spec.beta = std::stod(val);
        } catch (const std::exception&) {
            throw ConfigError("--window kaiser: cannot parse beta '" + val + "'");
        }
        if (arg.spec.beta < 0.0) throw ConfigError("--window kaiser: beta must be >= 0");
        return arg;
    }
    throw ConfigError("--window must be rect, kaiser:<beta> or kaiser:auto");
}

CostModel parse_costs_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("--costs: JSON parse failure: ") + e.what());
    }
    CostModel c;
    c.t_asp = j.value("t_asp", c.t_asp);
    c.t_window = j.value("t_window", c.t_window);
    c.t_qh = j.value("t_qh", c.t_qh);
    c.t_bf = j.value("t_bf", c.t_bf);
    c.t_rot = j.value("t_rot", c.t_rot);
    c.t_qft_fixed = j.value("t_qft", c.t_qft_fixed);
    return c;
}

int cmd_window(int n, const WindowArg& window, int grid,
               const std::string& out, const std::string& format) {
    if (window.auto_beta)
        throw ConfigError("window command: kaiser:auto needs an m context; give an explicit beta");
    const WindowVector w = make_window(window.spec, n);
    const OverlapProfile prof = overlap_scan(w, grid);

    std::ostringstream ss;
    if (format == "json") {
        json j;
        j["n"] = n;
        j["beta"] = window.spec.beta;
        j["amplitudes"] = w.amplitudes;
        json ys = json::array(), vs = json::array();
        for (const auto& [y, v] : prof.samples) {
            ys.push_back(y);
            vs.push_back(v);
        }
        j["overlap_y"] = ys;
        j["overlap_value"] = vs;
        ss << j.dump(2) << '\n';
    } else {
        ss << "x,amplitude\n";
        for (std::size_t x = 0; x < w.size(); ++x)
            ss << x << ',' << fmt_full(w.amplitudes[x]) << '\n';
        ss << "\ny,overlap\n";
        for (const auto& [y, v] : prof.samples)
            ss << fmt_full(y) << ',' << fmt_full(v) << '\n';
    }
    emit(out, ss.str());
    return kExitOk;
}

int cmd_overlap(int l, int m, const WindowArg& window, int grid,
                const std::string& out, const std::string& format) {
    if (l < 1 || m < 0) throw ConfigError("overlap command: need l >= 1 and m >= 0");
    WindowSpec spec = window.spec;
    if (window.auto_beta) spec.beta = capped_beta(std::max(1, m), kDefaultBetaMax);
    const int n = l + m;
    const WindowVector w = make_window(spec, n);
    const OverlapProfile prof = overlap_scan(w, grid);
    const double cutoff = std::ldexp(1.0, -l);
    const double mc = max_contamination_overlap(w, l);

    std::ostringstream ss;
    if (format == "json") {
        json j;
        j["l"] = l;
        j["m"] = m;
        j["n"] = n;
        j["beta"] = spec.beta;
        j["band_cutoff"] = cutoff;
        j["max_contamination"] = mc;
        json ys = json::array(), vs = json::array(), band = json::array();
        for (const auto& [y, v] : prof.samples) {
            ys.push_back(y);
            vs.push_back(v);
            band.push_back(y >= cutoff && y <= 1.0 - cutoff);
        }
        j["y"] = ys;
        j["value"] = vs;
        j["in_band"] = band;
        ss << j.dump(2) << '\n';
    } else {
        ss << "# band_cutoff=" << fmt_full(cutoff) << " max_contamination=" << fmt_full(mc)
           << '\n';
        ss << "y,overlap,in_band\n";
        for (const auto& [y, v] : prof.samples)
            ss << fmt_full(y) << ',' << fmt_full(v) << ','
               << ((y >= cutoff && y <= 1.0 - cutoff) ? 1 : 0) << '\n';
    }
    emit(out, ss.str());
    return kExitOk;
}

int cmd_emulate(const std::string& matrix_path_H, const std::string& matrix_path_F,
                int n, int n_outer, const WindowArg& window, double c,
                std::uint64_t seed, int dim, const std::string& out) {
    HermitianSystem H, F;
    int n_use = n;
    WindowSpec spec = window.spec;

    if (!matrix_path_H.empty()) {
        if (matrix_path_F.empty())
            throw ConfigError("emulate: both Hamiltonian and observable files are required");
        H = load_hermitian_file(matrix_path_H);
        F = load_hermitian_file(matrix_path_F);
        if (n_use < 1) throw ConfigError("emulate: --n is required with matrix files");
        if (window.auto_beta) {
            const double dphi = qubitise(H).phase_gap;
            const int l = static_cast<int>(std::ceil(std::log2(1.0 / dphi)));
            spec.beta = capped_beta(std::max(1, n_use - l), kDefaultBetaMax);
        }
    } else {
        std::mt19937_64 rng(seed);
        InstanceOptions opts;
        opts.family = window.spec.kind == WindowKind::Kaiser ? 1 : 0;
        if (n_use > 0) opts.max_n = n_use;
        if (dim > 0) { opts.min_dim = dim; opts.max_dim = dim; }
        const RandomInstance inst = make_instance(rng, opts);
        H = inst.H;
        F = inst.F;
        if (n_use < 1) n_use = inst.n;
        if (window.auto_beta) spec.beta = capped_beta(std::max(1, inst.m), kDefaultBetaMax);
    }

    const WindowVector w = make_window(spec, n_use);
    const EmulationReport rep = run_algorithm(w, H, F, n_outer, c);
    emit(out, dump_emulation_report(rep));
    return kExitOk;
}

int cmd_estimate(const std::string& system, const std::string& observable,
                 const WindowArg& window, double epsilon,
                 const std::vector<double>& split, const CostModel& costs,
                 const std::string& out, const std::string& format) {
    const ReferenceTables& tables = reference_tables();

    std::vector<std::string> systems;
    if (system == "all")
        systems = tables.system_names();
    else
        systems.push_back(system);
    std::vector<Observable> observables;
    if (observable == "all")
        observables = {Observable::Kinetic, Observable::Dipole, Observable::Eri};
    else
        observables.push_back(parse_observable(observable));

    std::vector<ResourceCase> cases;
    for (const auto& name : systems)
        for (Observable obs : observables) {
            const SystemCase* sys = tables.find(name, obs);
            if (!sys) {
                std::ostringstream ss;
                ss << "unknown system '" << name << "'; embedded systems:";
                for (const auto& s : tables.system_names()) ss << ' ' << s;
                throw ConfigError(ss.str());
            }
            const double target = epsilon > 0.0 ? epsilon : sys->epsilon_target;
            ErrorBudget budget;
            if (split.size() == 3)
                budget = ErrorBudget::split(target, split[0], split[1], split[2]);
            else if (split.empty())
                budget = ErrorBudget::thirds(target);
            else
                throw ConfigError("--split requires exactly three weights a,b,c");
            cases.push_back(estimate_case(*sys, obs, budget, window.spec, costs));
        }

    std::ostringstream ss;
    if (format == "json") {
        ss << "[\n";
        for (std::size_t i = 0; i < cases.size(); ++i)
            ss << dump_resource_case(cases[i]) << (i + 1 < cases.size() ? ",\n" : "\n");
        ss << "]\n";
    } else {
        ss << resource_csv_header() << '\n';
        for (const auto& rc : cases) ss << resource_csv_row(rc) << '\n';
    }
    emit(out, ss.str());
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int count) {
    std::vector<std::string> suites;
    if (suite == "all")
        suites = suite_names();
    else
        suites.push_back(suite);

    bool ok = true;
    for (const auto& name : suites) {
        const int c = count > 0 ? count : default_suite_count(name);
        const SuiteResult res = run_suite(name, seed, c);
        std::cout << res.suite << ": " << res.count << " instances, " << res.violations
                  << " violations";
        if (res.skipped > 0) std::cout << ", " << res.skipped << " skipped";
        std::cout << " (worst margin " << fmt_full(res.worst) << ")\n";
        if (!res.ok()) {
            ok = false;
            if (!res.detail.empty())
                std::cout << "offending instance: " << res.detail << '\n';
        }
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int cli_main(int argc, char** argv) {
    CLI::App app{"window-assisted coherent phase-estimation laboratory"};
    app.require_subcommand(1);

    std::string window_text = "rect";
    std::string out, format = "csv";
    std::uint64_t seed = 1;
    int n = 0, l = 4, m = 0, n_outer = 24, grid = 1024, count = 0, dim = 0;
    double epsilon = 0.0, c = -1.0;
    std::string costs_text, split_text, matrix_H, matrix_F;
    std::string system = "all", observable = "all", suite = "all";

    auto* w_cmd = app.add_subcommand("window", "emit window amplitudes and overlap profile");
    w_cmd->add_option("--n", n, "phase-register qubits")->required();
    w_cmd->add_option("--window", window_text);
    w_cmd->add_option("--grid", grid);
    w_cmd->add_option("--out", out);
    w_cmd->add_option("--format", format);

    auto* o_cmd = app.add_subcommand("overlap", "emit the contamination overlap curve");
    o_cmd->add_option("--l", l)->required();
    o_cmd->add_option("--m", m);
    o_cmd->add_option("--window", window_text);
    o_cmd->add_option("--grid", grid);
    o_cmd->add_option("--out", out);
    o_cmd->add_option("--format", format);

    auto* e_cmd = app.add_subcommand("emulate", "run the expectation-value emulation");
    e_cmd->add_option("--hamiltonian", matrix_H, "Hermitian matrix JSON file");
    e_cmd->add_option("--observable-matrix", matrix_F, "Hermitian matrix JSON file");
    e_cmd->add_option("--n", n);
    e_cmd->add_option("--n-outer", n_outer);
    e_cmd->add_option("--window", window_text);
    e_cmd->add_option("--c", c, "trade-off constant (default sqrt(p) max_contam)");
    e_cmd->add_option("--seed", seed);
    e_cmd->add_option("--dim", dim, "system dimension for seeded random instances");
    e_cmd->add_option("--out", out);

    auto* r_cmd = app.add_subcommand("estimate", "fault-tolerant resource estimation");
    r_cmd->add_option("--system", system);
    r_cmd->add_option("--observable", observable);
    r_cmd->add_option("--window", window_text);
    r_cmd->add_option("--epsilon", epsilon, "error target (default: embedded per-case value)");
    r_cmd->add_option("--split", split_text, "budget weights a,b,c (default 1,1,1)");
    r_cmd->add_option("--costs", costs_text, "per-call Toffoli costs as JSON");
    r_cmd->add_option("--out", out);
    r_cmd->add_option("--format", format);

    auto* v_cmd = app.add_subcommand("verify", "randomized verification suites");
    v_cmd->add_option("--suite", suite);
    v_cmd->add_option("--seed", seed);
    v_cmd->add_option("--count", count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        const WindowArg warg = parse_window_arg(window_text);
        if (w_cmd->parsed()) return cmd_window(n, warg, grid, out, format);
        if (o_cmd->parsed()) return cmd_overlap(l, m, warg, grid, out, format);
        if (e_cmd->parsed())
            return cmd_emulate(matrix_H, matrix_F, n, n_outer, warg, c, seed, dim, out);
        if (r_cmd->parsed()) {
            std::vector<double> split;
            if (!split_text.empty()) {
                std::stringstream ss(split_text);
                std::string tok;
                while (std::getline(ss, tok, ',')) split.push_back(std::stod(tok));
            }
            const CostModel costs =
                costs_text.empty() ? CostModel{} : parse_costs_json(costs_text);
            return cmd_estimate(system, observable, warg, epsilon, split, costs, out, format);
        }
        if (v_cmd->parsed()) return cmd_verify(suite, seed, count);
        return kExitConfig;
    } catch (const GapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGap;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
}

}  // namespace wqpe

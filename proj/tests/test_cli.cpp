#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wqpe/cli_ops.hpp"
#include "wqpe/errors.hpp"
#include "wqpe/io.hpp"
#include "wqpe/verify.hpp"

using namespace wqpe;

namespace {

int run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "wqpe");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("window argument parsing") {
    CHECK(parse_window_arg("rect").spec.kind == WindowKind::Rectangular);
    CHECK(parse_window_arg("rectangular").spec.kind == WindowKind::Rectangular);

    const WindowArg k = parse_window_arg("kaiser:5.5");
    CHECK(k.spec.kind == WindowKind::Kaiser);
    CHECK(k.spec.beta == doctest::Approx(5.5));
    CHECK_FALSE(k.auto_beta);

    const WindowArg a = parse_window_arg("kaiser:auto");
    CHECK(a.auto_beta);
    CHECK(a.spec.beta == 0.0);

    CHECK_THROWS_AS(parse_window_arg("hann"), ConfigError);
    CHECK_THROWS_AS(parse_window_arg("kaiser"), ConfigError);
    CHECK_THROWS_AS(parse_window_arg("kaiser:x"), ConfigError);
    CHECK_THROWS_AS(parse_window_arg("kaiser:-2"), ConfigError);
}

TEST_CASE("cost model JSON parsing") {
    const CostModel d = parse_costs_json("{}");
    CHECK(d.t_asp == 1.0);
    CHECK(d.t_rot == 30.0);
    CHECK(d.t_qft_fixed == -1.0);

    const CostModel c = parse_costs_json(R"({"t_asp": 7, "t_qft": 2.5, "t_rot": 4})");
    CHECK(c.t_asp == 7.0);
    CHECK(c.t_qft_fixed == 2.5);
    CHECK(c.t_rot == 4.0);
    CHECK(c.t_window == 1.0);

    CHECK_THROWS_AS(parse_costs_json("{oops"), ConfigError);
}

TEST_CASE("window command emits the amplitude table") {
    TempFile out("cli_window_out.csv");
    CHECK(cmd_window(3, parse_window_arg("rect"), 16, out.path, "csv") == kExitOk);
    const std::string text = read_file(out.path);
    CHECK(text.rfind("x,amplitude\n", 0) == 0);
    const std::string amp = fmt_full(1.0 / std::sqrt(8.0));
    CHECK(text.find("0," + amp) != std::string::npos);
    CHECK(text.find("7," + amp) != std::string::npos);
    CHECK(text.find("y,overlap") != std::string::npos);

    // beta = 0 and rect produce byte-identical output
    TempFile out2("cli_window_out2.csv");
    CHECK(cmd_window(3, parse_window_arg("kaiser:0"), 16, out2.path, "csv") == kExitOk);
    CHECK(read_file(out2.path) == text);

    CHECK_THROWS_AS(cmd_window(3, parse_window_arg("kaiser:auto"), 16, out.path, "csv"),
                    ConfigError);
}

TEST_CASE("overlap command reports the contamination band") {
    TempFile out("cli_overlap_out.csv");
    CHECK(cmd_overlap(3, 2, parse_window_arg("kaiser:auto"), 64, out.path, "csv") == kExitOk);
    const std::string text = read_file(out.path);
    CHECK(text.find("band_cutoff=0.125") != std::string::npos);
    CHECK(text.find("max_contamination=") != std::string::npos);
    CHECK(text.find("y,overlap,in_band") != std::string::npos);
    CHECK_THROWS_AS(cmd_overlap(0, 2, parse_window_arg("rect"), 64, out.path, "csv"),
                    ConfigError);
}

TEST_CASE("emulate command is deterministic for a fixed seed") {
    TempFile a("cli_emulate_a.json"), b("cli_emulate_b.json");
    CHECK(cmd_emulate("", "", 0, 18, parse_window_arg("rect"), -1.0, 42, 3, a.path) == kExitOk);
    CHECK(cmd_emulate("", "", 0, 18, parse_window_arg("rect"), -1.0, 42, 3, b.path) == kExitOk);
    const std::string ta = read_file(a.path);
    CHECK(ta == read_file(b.path));
    CHECK(ta.find("\"estimate\":") != std::string::npos);
    CHECK(ta.find("\"success_flag\": true") != std::string::npos);

    TempFile c("cli_emulate_c.json");
    CHECK(cmd_emulate("", "", 0, 18, parse_window_arg("rect"), -1.0, 43, 3, c.path) == kExitOk);
    CHECK(read_file(c.path) != ta);  // a different seed draws a different instance
}

TEST_CASE("estimate command emits fixed-schema CSV") {
    TempFile out("cli_estimate_out.csv");
    CHECK(run_cli({"estimate", "--system", "water", "--observable", "kinetic", "--window",
                   "kaiser:auto", "--out", out.path}) == kExitOk);
    const std::string text = read_file(out.path);
    CHECK(text.rfind("system,observable,window,l,m,beta,n_o,total_toffoli,qubit_estimate\n",
                     0) == 0);
    CHECK(text.find("water,kinetic,kaiser,") != std::string::npos);
}

TEST_CASE("hermitian matrix JSON round-trip with sub-normalization") {
    const std::string text = R"({
      "dim": 2,
      "matrix_re": [[0.5, 0.1], [0.1, -0.3]],
      "matrix_im": [[0.0, 0.2], [-0.2, 0.0]],
      "one_norm": 2.0
    })";
    const HermitianSystem sys = load_hermitian_json(text);
    CHECK(sys.dim == 2);
    CHECK(sys.matrix(0, 0).real() == doctest::Approx(0.25));
    CHECK(sys.matrix(0, 1).imag() == doctest::Approx(0.1));
    const HermitianSystem back = load_hermitian_json(dump_hermitian_json(sys));
    CHECK((back.matrix - sys.matrix).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK_THROWS_AS(load_hermitian_json("{\"dim\": 0, \"matrix_re\": []}"), ConfigError);
}

TEST_CASE("exit codes per failure class") {
    // config error: malformed window flag
    CHECK(run_cli({"window", "--n", "3", "--window", "hann"}) == kExitConfig);
    // infeasible: uniform window cannot meet the embedded inner budget
    CHECK(run_cli({"estimate", "--system", "water", "--observable", "kinetic", "--window",
                   "rect"}) == kExitInfeasible);
    // config error: unknown system
    CHECK(run_cli({"estimate", "--system", "helium", "--window", "kaiser:auto"}) ==
          kExitConfig);
    // config error: unknown subcommand flag soup
    CHECK(run_cli({"nonsense"}) == kExitConfig);

    // gap violation through matrix files on a small register
    const std::string h_text = R"({
      "dim": 2,
      "matrix_re": [[-0.80901699437494745, 0.0], [0.0, -0.72896862742141155]]
    })";
    const std::string f_text = R"({
      "dim": 2,
      "matrix_re": [[0.5, 0.0], [0.0, 0.5]]
    })";
    TempFile hf("cli_gap_H.json"), ff("cli_gap_F.json");
    atomic_write(hf.path, h_text);
    atomic_write(ff.path, f_text);
    CHECK(run_cli({"emulate", "--hamiltonian", hf.path, "--observable-matrix", ff.path,
                   "--n", "3"}) == kExitGap);
}

TEST_CASE("verify dispatch rejects unknown suites") {
    CHECK_THROWS_AS(run_suite("nonsense", 1, 5), ConfigError);
    const SuiteResult res = run_suite("rho", 7, 5);
    CHECK(res.count == 5);
    CHECK(res.ok());
}

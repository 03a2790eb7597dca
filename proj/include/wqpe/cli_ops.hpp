#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wqpe/resources.hpp"
#include "wqpe/windows.hpp"

namespace wqpe {

enum ExitCode {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitConfig = 2,
    kExitGap = 3,
    kExitInfeasible = 4,
};

// "rect" | "kaiser:<beta>" | "kaiser:auto" (auto resolves to capped
// optimal_beta(m) where an m is in scope).
struct WindowArg {
    WindowSpec spec;
    bool auto_beta = false;
};
WindowArg parse_window_arg(const std::string& text);

CostModel parse_costs_json(const std::string& text);

int cmd_window(int n, const WindowArg& window, int grid,
               const std::string& out, const std::string& format);
int cmd_overlap(int l, int m, const WindowArg& window, int grid,
                const std::string& out, const std::string& format);
int cmd_emulate(const std::string& matrix_path_H, const std::string& matrix_path_F,
                int n, int n_outer, const WindowArg& window, double c,
                std::uint64_t seed, int dim, const std::string& out);
int cmd_estimate(const std::string& system, const std::string& observable,
                 const WindowArg& window, double epsilon,
                 const std::vector<double>& split, const CostModel& costs,
                 const std::string& out, const std::string& format);
int cmd_verify(const std::string& suite, std::uint64_t seed, int count);

int cli_main(int argc, char** argv);

}  // namespace wqpe

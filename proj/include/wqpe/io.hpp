#pragma once

#include <string>

#include "wqpe/emulator.hpp"
#include "wqpe/resources.hpp"
#include "wqpe/walk.hpp"

namespace wqpe {

// {"dim": d, "matrix_re": [[...]], "matrix_im": [[...]],
//  "one_norm": lambda, "gap": Delta}
HermitianSystem load_hermitian_json(const std::string& text);
std::string dump_hermitian_json(const HermitianSystem& sys);
HermitianSystem load_hermitian_file(const std::string& path);

std::string dump_emulation_report(const EmulationReport& report);

std::string resource_csv_header();
std::string resource_csv_row(const ResourceCase& rc);
std::string dump_resource_case(const ResourceCase& rc);

// Full-precision decimal formatting (17 significant digits).
std::string fmt_full(double v);

// Write via a temp file in the destination directory, then rename.
void atomic_write(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace wqpe

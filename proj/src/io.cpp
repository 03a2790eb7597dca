#include "wqpe/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wqpe/errors.hpp"

namespace wqpe {
namespace {

using nlohmann::json;

}  // namespace

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

HermitianSystem load_hermitian_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("matrix JSON parse failure: ") + e.what());
    }
    const auto dim = j.at("dim").get<Eigen::Index>();
    if (dim < 1) throw ConfigError("matrix JSON: dim must be >= 1");
    const auto& re = j.at("matrix_re");
    Mat m = Mat::Zero(dim, dim);
    if (static_cast<Eigen::Index>(re.size()) != dim)
        throw ConfigError("matrix JSON: matrix_re has wrong row count");
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c)
            m(r, c) = re.at(r).at(c).get<double>();
    if (j.contains("matrix_im")) {
        const auto& im = j.at("matrix_im");
        for (Eigen::Index r = 0; r < dim; ++r)
            for (Eigen::Index c = 0; c < dim; ++c)
                m(r, c) += cplx(0.0, im.at(r).at(c).get<double>());
    }
    const double one_norm = j.value("one_norm", 1.0);
    if (!(one_norm > 0.0)) throw ConfigError("matrix JSON: one_norm must be > 0");
    // stored operator is the sub-normalized one when a one-norm is given
    if (one_norm != 1.0) m /= one_norm;
    const double gap = j.value("gap", -1.0);
    return HermitianSystem::make(m, gap > 0.0 ? gap / one_norm : -1.0);
}

HermitianSystem load_hermitian_file(const std::string& path) {
    try {
        return load_hermitian_json(read_file(path));
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::string dump_hermitian_json(const HermitianSystem& sys) {
    json j;
    j["dim"] = sys.dim;
    json re = json::array(), im = json::array();
    for (Eigen::Index r = 0; r < sys.dim; ++r) {
        json row_re = json::array(), row_im = json::array();
        for (Eigen::Index c = 0; c < sys.dim; ++c) {
            row_re.push_back(sys.matrix(r, c).real());
            row_im.push_back(sys.matrix(r, c).imag());
        }
        re.push_back(row_re);
        im.push_back(row_im);
    }
    j["matrix_re"] = re;
    j["matrix_im"] = im;
    j["one_norm"] = 1.0;
    j["gap"] = sys.relative_gap;
    return j.dump(2);
}

std::string dump_emulation_report(const EmulationReport& rep) {
    // flat object, full-precision values, field names fixed by the type
    std::ostringstream ss;
    ss << "{\n"
       << "  \"estimate\": " << fmt_full(rep.estimate) << ",\n"
       << "  \"truth\": " << fmt_full(rep.truth) << ",\n"
       << "  \"realized_error\": " << fmt_full(rep.realized_error) << ",\n"
       << "  \"p_learned\": " << fmt_full(rep.p_learned) << ",\n"
       << "  \"p_true\": " << fmt_full(rep.p_true) << ",\n"
       << "  \"theta_measured\": " << fmt_full(rep.theta_measured) << ",\n"
       << "  \"bound\": " << fmt_full(rep.bound) << ",\n"
       << "  \"success_flag\": " << (rep.success_flag ? "true" : "false") << "\n"
       << "}\n";
    return ss.str();
}

std::string resource_csv_header() {
    return "system,observable,window,l,m,beta,n_o,total_toffoli,qubit_estimate";
}

std::string resource_csv_row(const ResourceCase& rc) {
    std::ostringstream ss;
    ss << rc.sys.name << ',' << observable_name(rc.observable) << ','
       << (rc.policy.kind == WindowKind::Kaiser ? "kaiser" : "rect") << ',' << rc.l << ','
       << rc.m << ',' << fmt_full(rc.beta) << ',' << rc.n_o << ',' << rc.total_toffoli
       << ',' << fmt_full(rc.qubit_estimate);
    return ss.str();
}

std::string dump_resource_case(const ResourceCase& rc) {
    json j;
    j["system"] = rc.sys.name;
    j["observable"] = observable_name(rc.observable);
    j["window"] = rc.policy.kind == WindowKind::Kaiser ? "kaiser" : "rect";
    j["l"] = rc.l;
    j["m"] = rc.m;
    j["n"] = rc.n;
    j["beta"] = rc.beta;
    j["n_o"] = rc.n_o;
    j["p_floor"] = rc.p_floor;
    j["total_toffoli"] = rc.total_toffoli;
    j["qubit_estimate"] = rc.qubit_estimate;
    j["epsilon_target"] = rc.budget.target;
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot open " + tmp + " for writing");
        out << content;
        if (!out) throw ConfigError("write failure on " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw ConfigError("cannot rename " + tmp + " to " + path);
}

}  // namespace wqpe

#include "hermite/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hermite {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::ofstream open_out(const std::string& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot open for writing: " + file);
    return out;
}

}  // namespace

void write_path_csv(const SamplePath& path, const std::string& file) {
    auto out = open_out(file);
    out << "t,value\n";
    for (std::size_t i = 0; i <= path.n; ++i)
        out << fmt(path.time(i)) << ',' << fmt(path.values[i]) << '\n';
}

SamplePath read_path_csv(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open for reading: " + file);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty path file: " + file);
    SamplePath p;
    std::vector<double> ts;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("malformed CSV line: " + line);
        ts.push_back(std::stod(line.substr(0, comma)));
        p.values.push_back(std::stod(line.substr(comma + 1)));
    }
    if (ts.size() < 2) throw std::runtime_error("path file too short: " + file);
    p.n = ts.size() - 1;
    p.t_end = ts.back();
    return p;
}

void write_field_csv(const FieldSample& field, const std::string& file) {
    auto out = open_out(file);
    out << "t1,t2,value\n";
    for (std::size_t i = 0; i <= field.dims[0]; ++i)
        for (std::size_t j = 0; j <= field.dims[1]; ++j) {
            double t1 = field.extents[0] * static_cast<double>(i) / field.dims[0];
            double t2 = field.extents[1] * static_cast<double>(j) / field.dims[1];
            out << fmt(t1) << ',' << fmt(t2) << ',' << fmt(field.values(i, j)) << '\n';
        }
}

nlohmann::json path_to_json(const SamplePath& path) {
    nlohmann::json j;
    j["t_end"] = path.t_end;
    j["n"] = path.n;
    j["q"] = path.q;
    j["H"] = path.hurst;
    j["values"] = path.values;
    return j;
}

void write_kernel_csv(const KernelMatrix& k, const std::string& file) {
    auto out = open_out(file);
    for (Eigen::Index i = 0; i < k.a.rows(); ++i) {
        for (Eigen::Index j = 0; j < k.a.cols(); ++j) {
            if (j) out << ',';
            out << fmt(k.a(i, j));
        }
        out << '\n';
    }
    nlohmann::json header;
    header["grid"] = k.grid;
    header["delta"] = k.delta;
    write_text_file(file + ".json", header.dump(2) + "\n");
}

nlohmann::json mcreport_to_json(const McReport& rep) {
    nlohmann::json j;
    j["n_replicates"] = rep.n_replicates;
    j["mean"] = rep.mean;
    j["variance"] = rep.variance_defined ? nlohmann::json(rep.variance) : nlohmann::json();
    j["std_error"] = rep.variance_defined ? nlohmann::json(rep.std_error) : nlohmann::json();
    j["ci95"] = {rep.ci95.first, rep.ci95.second};
    j["master_seed"] = rep.master_seed;
    j["per_replicate"] = rep.per_replicate;
    j["partial"] = rep.partial;
    if (rep.partial) {
        nlohmann::json f = nlohmann::json::array();
        for (const auto& [r, msg] : rep.failures) f.push_back({{"replicate", r}, {"error", msg}});
        j["failures"] = f;
    }
    return j;
}

void write_mcreport_csv(const McReport& rep, const std::string& file) {
    auto out = open_out(file);
    out << "replicate,value\n";
    for (std::size_t r = 0; r < rep.per_replicate.size(); ++r)
        out << r << ',' << fmt(rep.per_replicate[r]) << '\n';
}

void write_text_file(const std::string& file, const std::string& content) {
    auto out = open_out(file);
    out << content;
}

}  // namespace hermite

#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "hermite/chaos.hpp"
#include "hermite/mc.hpp"
#include "hermite/paths.hpp"

namespace hermite {

/// CSV with header "t,value".
void write_path_csv(const SamplePath& path, const std::string& file);
SamplePath read_path_csv(const std::string& file);

/// CSV with header "t1,t2,value".
void write_field_csv(const FieldSample& field, const std::string& file);

/// JSON envelope: parameters plus the data arrays.
nlohmann::json path_to_json(const SamplePath& path);

/// Dense CSV rows; the JSON header (grid, delta) goes to `file` + ".json".
void write_kernel_csv(const KernelMatrix& k, const std::string& file);

nlohmann::json mcreport_to_json(const McReport& rep);
void write_mcreport_csv(const McReport& rep, const std::string& file);

void write_text_file(const std::string& file, const std::string& content);

}  // namespace hermite

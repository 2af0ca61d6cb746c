#include "heng/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "heng/errors.hpp"

namespace heng {

std::string format_double(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  // '.' decimal separator even if the host process changed LC_NUMERIC.
  for (char* c = buf; *c; ++c)
    if (*c == ',') *c = '.';
  return buf;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void CsvBuilder::comment(const std::string& line) {
  out_ += "# " + line + "\n";
}

void CsvBuilder::header(const std::vector<std::string>& names) {
  begin_row();
  for (const auto& n : names) add(n);
  end_row();
}

void CsvBuilder::begin_row() {
  row_open_ = true;
  first_field_ = true;
}

void CsvBuilder::add(const std::string& field) {
  if (!first_field_) out_ += ',';
  out_ += csv_quote(field);
  first_field_ = false;
}

void CsvBuilder::add(double v) { add(format_double(v, precision_)); }
void CsvBuilder::add(long v) { add(std::to_string(v)); }
void CsvBuilder::add(bool v) { add(std::string(v ? "1" : "0")); }

void CsvBuilder::end_row() {
  out_ += '\n';
  row_open_ = false;
}

EmittedFile write_output_file(const std::string& directory, const std::string& name,
                              const std::string& content) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  const fs::path path = fs::path(directory) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NumericError("cannot write output file '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw NumericError("short write to '" + path.string() + "'");
  return EmittedFile{name, content.size(), fnv1a64_hex(content)};
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["tool"] = tool;
  j["version"] = version;
  j["command"] = command;
  j["wall_time_s"] = wall_time_s;
  j["exit_code"] = exit_code;
  j["config"] = config_echo;
  j["files"] = nlohmann::json::array();
  for (const auto& f : files)
    j["files"].push_back({{"name", f.name},
                          {"bytes", f.bytes},
                          {"fnv1a64", f.checksum_fnv1a64}});
  j["failures"] = failures;
  j["warnings"] = warnings;
  j["first_law_residual"] = {{"count", residual_count},
                             {"max", residual_max},
                             {"median", residual_median}};
  j["positivity_violations"] = positivity_violations;
  return j;
}

void record_residuals(RunManifest& manifest, std::vector<double>& residuals,
                      std::size_t positivity_violations) {
  manifest.positivity_violations = positivity_violations;
  manifest.residual_count = residuals.size();
  if (residuals.empty()) return;
  std::sort(residuals.begin(), residuals.end());
  manifest.residual_max = residuals.back();
  manifest.residual_median = residuals[residuals.size() / 2];
}

} // namespace heng

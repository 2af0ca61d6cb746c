#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace heng {

// Deterministic numeric formatting: C locale '.' separator, configurable
// significant digits, "nan"/"inf" spelled out.
std::string format_double(double v, int precision);

std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

// RFC-4180-compatible quoting.
std::string csv_quote(const std::string& field);

class CsvBuilder {
 public:
  explicit CsvBuilder(int precision) : precision_(precision) {}
  void comment(const std::string& line); // "# ..." schema/header comments
  void header(const std::vector<std::string>& names);
  void begin_row();
  void add(const std::string& field);
  void add(double v);
  void add(long v);
  void add(bool v);
  void end_row();
  const std::string& str() const { return out_; }

 private:
  int precision_;
  std::string out_;
  bool row_open_ = false;
  bool first_field_ = true;
};

struct EmittedFile {
  std::string name;
  std::size_t bytes = 0;
  std::string checksum_fnv1a64;
};

// Writes `content` under `directory` (created if needed) and records size and
// checksum for the manifest.
EmittedFile write_output_file(const std::string& directory, const std::string& name,
                              const std::string& content);

struct RunManifest {
  std::string tool = "heng";
  std::string version;
  std::string command;
  double wall_time_s = 0.0;
  int exit_code = 0;
  nlohmann::json config_echo;
  std::vector<EmittedFile> files;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  // First-law residual statistics over every steady state evaluated.
  std::size_t residual_count = 0;
  double residual_max = 0.0;
  double residual_median = 0.0;
  std::size_t positivity_violations = 0;

  nlohmann::json to_json() const;
};

void record_residuals(RunManifest& manifest, std::vector<double>& residuals,
                      std::size_t positivity_violations);

} // namespace heng

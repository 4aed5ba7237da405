#ifndef PLATJONES_REPORT_HPP
#define PLATJONES_REPORT_HPP

#include <complex>
#include <filesystem>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "platjones/experiments.hpp"
#include "platjones/jones_quantum.hpp"
#include "platjones/laurent.hpp"

namespace platjones {

using json = nlohmann::ordered_json;

/// {"exponent": coefficient}; coefficients outside int64 become decimal strings.
json to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const json& j);

json to_json(std::complex<double> z);
json to_json(const JonesComparison& c);
json to_json(const ExperimentConfig& cfg);
json to_json(const MomentReport& r);
json to_json(const LambdaCalibration& c);
json to_json(const AntiConcentrationReport& r);
json to_json(const PaleyZygmundReport& r);

/// Provenance written next to every result file.
struct RunManifest {
  std::string command;
  json parameters;
  std::uint64_t seed = 0;
  std::string tool_version = PLATJONES_VERSION;
  std::string started_at;
  std::string finished_at;
  std::vector<std::string> outputs;
};

json to_json(const RunManifest& m);

/// ISO-8601 UTC timestamp of now.
std::string utc_timestamp();

/// "<result>.manifest.json"
std::filesystem::path manifest_path_for(const std::filesystem::path& result);

/// Write via a temporary sibling and rename, so readers never see partial files.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

// CSV tables

void write_comparison_csv_header(std::ostream& out);
void write_comparison_csv_row(std::ostream& out, const JonesComparison& c);
std::string anticoncentration_csv(const AntiConcentrationReport& r);

}  // namespace platjones

#endif  // PLATJONES_REPORT_HPP

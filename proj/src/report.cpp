#include "platjones/report.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace platjones {

json to_json(const LaurentPolynomial& p) {
  json out = json::object();
  for (const auto& [exponent, c] : p.terms()) {
    const std::string key = std::to_string(exponent);
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      out[key] = c.convert_to<std::int64_t>();
    } else {
      out[key] = c.str();
    }
  }
  return out;
}

LaurentPolynomial laurent_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("Laurent polynomial JSON must be an object");
  LaurentPolynomial p;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    const int exponent = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad exponent key '" + key + "'");
    LaurentPolynomial::Coefficient c;
    if (value.is_number_integer()) {
      c = value.get<std::int64_t>();
    } else if (value.is_string()) {
      c = LaurentPolynomial::Coefficient(value.get<std::string>());
    } else {
      throw std::invalid_argument("coefficient for exponent " + key + " is not an integer");
    }
    p.add_term(exponent, c);
  }
  return p;
}

json to_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const JonesComparison& c) {
  return json{{"braid", format_braid_word(c.braid)},
              {"strands", c.braid.strands()},
              {"k", c.k},
              {"writhe", c.writhe},
              {"components", c.components},
              {"oracle_polynomial", to_json(c.oracle_polynomial)},
              {"via_oracle", to_json(c.via_oracle)},
              {"via_path_model", to_json(c.via_path_model)},
              {"abs_error", c.abs_error},
              {"rel_error", c.rel_error},
              {"flagged", c.flagged}};
}

json to_json(const ExperimentConfig& cfg) {
  json out{{"n", cfg.n},
           {"k", cfg.k},
           {"t", cfg.t},
           {"epsilon", cfg.epsilon},
           {"gamma", cfg.gamma},
           {"lambda", cfg.lambda},
           {"samples", cfg.samples},
           {"seed", cfg.seed},
           {"beta", cfg.beta == BetaMode::cap ? "cap" : "random"}};
  out["length"] = cfg.length ? json(*cfg.length) : json(nullptr);
  return out;
}

json to_json(const MomentReport& r) {
  json out{{"k_moment", r.k_moment},   {"empirical", r.empirical}, {"haar_value", r.haar_value},
           {"ratio", r.ratio},         {"stderr", r.standard_error}, {"samples", r.samples},
           {"seed", r.seed},           {"length", r.length},       {"dim", r.dim}};
  out["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  return out;
}

json to_json(const LambdaCalibration& c) {
  return json{{"n", c.n},
              {"k", c.k},
              {"dim", c.dim},
              {"epsilon", c.epsilon},
              {"lambda_step", c.lambda_step},
              {"subleading_modulus", c.subleading_modulus},
              {"operator_gap",
               {{"min_length", c.min_length},
                {"lambda", c.lambda},
                {"design_length", c.design_length},
                {"gap_at_length", c.gap_at_length}}},
              {"relative_moments",
               {{"min_length", c.relative_min_length},
                {"lambda", c.relative_lambda},
                {"design_length", c.relative_design_length},
                {"accuracy_at_length", c.relative_accuracy_at_length}}}};
}

json to_json(const AntiConcentrationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"gamma", row.gamma},
                        {"threshold", row.threshold},
                        {"bound", row.bound},
                        {"empirical", row.empirical},
                        {"stderr", row.standard_error},
                        {"applicable", row.applicable},
                        {"passes", row.passes}});
  }
  return json{{"dim", r.dim},
              {"length", r.length},
              {"epsilon_used", r.epsilon_used},
              {"epsilon_source", r.epsilon_source},
              {"rows", rows}};
}

json to_json(const PaleyZygmundReport& r) {
  return json{{"theta", r.theta},   {"samples", r.samples},      {"probability", r.probability},
              {"mean", r.mean},     {"second_moment", r.second_moment}, {"bound", r.bound},
              {"slack", r.slack},   {"stderr", r.standard_error},  {"passes", r.passes}};
}

json to_json(const RunManifest& m) {
  return json{{"command", m.command},       {"parameters", m.parameters}, {"seed", m.seed},
              {"tool_version", m.tool_version}, {"started_at", m.started_at},
              {"finished_at", m.finished_at}, {"outputs", m.outputs}};
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::filesystem::path manifest_path_for(const std::filesystem::path& result) {
  return std::filesystem::path(result.string() + ".manifest.json");
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

std::string format_double(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

}  // namespace

void write_comparison_csv_header(std::ostream& out) {
  out << "braid,strands,k,writhe,components,oracle_re,oracle_im,path_re,path_im,abs_error,rel_error\n";
}

void write_comparison_csv_row(std::ostream& out, const JonesComparison& c) {
  out << '"' << format_braid_word(c.braid) << "\"," << c.braid.strands() << ',' << c.k << ',' << c.writhe << ','
      << c.components << ',' << format_double(c.via_oracle.real()) << ',' << format_double(c.via_oracle.imag())
      << ',' << format_double(c.via_path_model.real()) << ',' << format_double(c.via_path_model.imag()) << ','
      << format_double(c.abs_error) << ',' << format_double(c.rel_error) << '\n';
}

std::string anticoncentration_csv(const AntiConcentrationReport& r) {
  std::ostringstream out;
  out << "gamma,threshold,bound,empirical,stderr,applicable,passes\n";
  for (const auto& row : r.rows) {
    out << format_double(row.gamma) << ',' << format_double(row.threshold) << ',' << format_double(row.bound)
        << ',' << format_double(row.empirical) << ',' << format_double(row.standard_error) << ','
        << (row.applicable ? 1 : 0) << ',' << (row.passes ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace platjones

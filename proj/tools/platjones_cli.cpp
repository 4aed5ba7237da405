// platjones: Jones polynomials of plat closures and random-braid experiments.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "platjones/braid.hpp"
#include "platjones/errors.hpp"
#include "platjones/experiments.hpp"
#include "platjones/jones_quantum.hpp"
#include "platjones/parallel.hpp"
#include "platjones/report.hpp"
#include "platjones/rng.hpp"
#include "platjones/skein.hpp"

namespace pj = platjones;
namespace fs = std::filesystem;

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kBudget = 3,
  kContract = 4,
  kIo = 5,
};

/// Raised when an operation completed but one of its contracts did not hold.
struct ContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int report_error(const std::string& category, const std::string& message, int code) {
  pj::json err{{"error", {{"category", category}, {"message", message}}}};
  std::cerr << err.dump() << '\n';
  return code;
}

/// Writes `result` (and its manifest) when an output path is given, and always
/// echoes it on stdout.
void emit(const pj::json& result, const std::optional<fs::path>& out, pj::RunManifest manifest,
          std::vector<std::pair<fs::path, std::string>> extra_files = {}) {
  pj::json body = result;
  if (out) {
    const fs::path manifest_path = pj::manifest_path_for(*out);
    body["manifest"] = manifest_path.filename().string();
    pj::write_file_atomically(*out, body.dump(2) + "\n");
    manifest.outputs.push_back(out->string());
    for (const auto& [path, contents] : extra_files) {
      pj::write_file_atomically(path, contents);
      manifest.outputs.push_back(path.string());
    }
    manifest.finished_at = pj::utc_timestamp();
    pj::write_file_atomically(manifest_path, pj::to_json(manifest).dump(2) + "\n");
  }
  std::cout << body.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

struct JonesArgs {
  std::string braid;
  int strands = 2;
  int k = 5;
  std::string method = "both";
  std::optional<int> budget;
  std::optional<fs::path> out;
};

int run_jones(const JonesArgs& args) {
  pj::RunManifest manifest{"jones", {}, 0};
  manifest.started_at = pj::utc_timestamp();
  manifest.parameters = {{"braid", args.braid}, {"strands", args.strands}, {"k", args.k}, {"method", args.method}};

  const pj::BraidWord b = pj::parse_braid_word(args.braid, args.strands);
  const int budget = args.budget.value_or(pj::default_oracle_budget());
  const pj::PlatDiagram diagram(b);
  const pj::RootOfUnity<double> root(args.k);

  pj::json result{{"braid", pj::format_braid_word(b)},
                  {"strands", b.strands()},
                  {"k", args.k},
                  {"omega", pj::to_json(root.omega)},
                  {"writhe", diagram.writhe()},
                  {"components", diagram.component_count()}};
  if (!root.universal()) {
    result["note"] = "k = " + std::to_string(args.k) +
                     " is outside the universal regime (k = 5 or k >= 7); value computed for testing only";
  }

  bool flagged = false;
  if (args.method == "oracle") {
    const auto poly = pj::jones_oracle(b, budget);
    result["polynomial"] = pj::to_json(poly);
    result["polynomial_text"] = poly.to_string();
    result["value"] = pj::to_json(pj::evaluate_at(poly, args.k));
  } else if (args.method == "path") {
    const pj::PathRepresentation<double> rep(b.half_strands(), args.k);
    result["plat_amplitude"] = pj::to_json(pj::plat_amplitude(rep, b));
    result["value"] = pj::to_json(pj::jones_via_path_model(rep, b));
  } else {
    const pj::PathRepresentation<double> rep(b.half_strands(), args.k);
    const auto cmp = pj::cross_check(rep, b, budget);
    result["polynomial"] = pj::to_json(cmp.oracle_polynomial);
    result["polynomial_text"] = cmp.oracle_polynomial.to_string();
    result["value"] = pj::to_json(cmp.via_oracle);
    result["comparison"] = pj::to_json(cmp);
    flagged = cmp.flagged;
  }
  emit(result, args.out, manifest);
  if (flagged) throw ContractViolation("oracle and path-model values differ beyond the relative tolerance");
  return kOk;
}

// ---------------------------------------------------------------------------

struct SampleArgs {
  int strands = 4;
  std::string length = "auto";
  double epsilon = 0.1;
  double lambda = 1.0;
  std::uint64_t count = 1;
  std::uint64_t seed = 1;
  fs::path out;
  std::optional<int> k;
  std::optional<fs::path> probabilities;
  unsigned workers = 1;
};

int run_sample(const SampleArgs& args) {
  pj::RunManifest manifest{"sample", {}, args.seed};
  manifest.started_at = pj::utc_timestamp();
  if (args.strands < 2 || args.strands % 2 != 0) throw pj::BraidError("--strands must be even and at least 2");
  const int n = args.strands / 2;

  std::int64_t length = 0;
  if (args.length == "auto") {
    length = pj::design_length(n, args.epsilon, 2, args.lambda);
  } else {
    std::size_t used = 0;
    try {
      length = std::stoll(args.length, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != args.length.size() || length < 0) {
      throw pj::ConfigError("--length must be 'auto' or a non-negative integer");
    }
  }
  manifest.parameters = {{"strands", args.strands}, {"length", length},    {"length_mode", args.length},
                         {"epsilon", args.epsilon}, {"lambda", args.lambda}, {"count", args.count},
                         {"seed", args.seed}};
  if (args.k) manifest.parameters["k"] = *args.k;

  std::vector<pj::BraidWord> words(args.count, pj::BraidWord(args.strands));
  pj::parallel_for(words.size(), args.workers, [&](std::size_t i) {
    words[i] = pj::random_braid(args.strands, static_cast<std::size_t>(length), pj::derive_seed(args.seed, i));
  });
  std::string word_text;
  for (const auto& w : words) word_text += pj::format_braid_word(w) + "\n";

  pj::json summary{{"strands", args.strands}, {"length", length}, {"count", args.count}, {"seed", args.seed},
                   {"words", args.out.string()}};
  std::vector<std::pair<fs::path, std::string>> files{{args.out, word_text}};

  if (args.k) {
    const pj::PathRepresentation<double> rep(n, *args.k);
    std::vector<double> cap_probability(words.size());
    std::vector<double> totals(words.size());
    pj::parallel_for(words.size(), args.workers, [&](std::size_t i) {
      const auto dist = pj::output_distribution(rep, words[i]);
      cap_probability[i] = dist.probabilities[dist.cap_index()];
      totals[i] = dist.total();
    });
    double mean = 0.0;
    double worst_total = 0.0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      mean += cap_probability[i];
      worst_total = std::max(worst_total, std::abs(totals[i] - 1.0));
    }
    if (!words.empty()) mean /= static_cast<double>(words.size());
    summary["k"] = *args.k;
    summary["dim"] = rep.dim();
    summary["mean_cap_probability"] = mean;
    summary["haar_cap_probability"] = 1.0 / static_cast<double>(rep.dim());
    summary["max_normalization_error"] = worst_total;
    if (args.probabilities) {
      std::ostringstream csv;
      csv << "index,braid,cap_probability\n";
      csv.precision(17);
      for (std::size_t i = 0; i < words.size(); ++i) {
        csv << i << ",\"" << pj::format_braid_word(words[i]) << "\"," << cap_probability[i] << '\n';
      }
      files.emplace_back(*args.probabilities, csv.str());
      summary["probabilities"] = args.probabilities->string();
    }
    if (worst_total > 1e-9) {
      throw ContractViolation("an output distribution does not sum to 1 within 1e-9");
    }
  }

  for (const auto& [path, contents] : files) {
    pj::write_file_atomically(path, contents);
    manifest.outputs.push_back(path.string());
  }
  manifest.finished_at = pj::utc_timestamp();
  pj::write_file_atomically(pj::manifest_path_for(args.out), pj::to_json(manifest).dump(2) + "\n");
  summary["manifest"] = pj::manifest_path_for(args.out).filename().string();
  std::cout << summary.dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

struct ExperimentArgs {
  pj::ExperimentConfig cfg;
  std::string beta = "cap";
  std::vector<double> gammas;
  std::vector<double> thetas{0.25, 0.5, 0.75};
  std::vector<std::int64_t> gap_lengths;
  double lambda_step = 0.01;
  bool calibrated = false;
  std::optional<fs::path> out;
};

pj::ExperimentConfig resolved_config(const ExperimentArgs& args) {
  pj::ExperimentConfig cfg = args.cfg;
  if (args.beta == "cap") {
    cfg.beta = pj::BetaMode::cap;
  } else if (args.beta == "random") {
    cfg.beta = pj::BetaMode::random;
  } else {
    throw pj::ConfigError("--beta must be 'cap' or 'random'");
  }
  if (args.calibrated) {
    cfg.lambda = pj::calibrate_lambda(cfg.n, cfg.k, cfg.epsilon, args.lambda_step).relative_lambda;
  }
  cfg.validate();
  return cfg;
}

int run_experiment(const std::string& kind, const ExperimentArgs& args) {
  pj::RunManifest manifest{"experiment " + kind, {}, args.cfg.seed};
  manifest.started_at = pj::utc_timestamp();
  const pj::ExperimentConfig cfg = resolved_config(args);
  manifest.parameters = pj::to_json(cfg);
  pj::json result{{"experiment", kind}, {"config", pj::to_json(cfg)}};
  std::vector<std::pair<fs::path, std::string>> extra;
  bool violated = false;

  if (kind == "gap") {
    const pj::PathRepresentation<double> rep(cfg.n, cfg.k);
    const pj::MomentOperator op(rep);
    std::vector<std::int64_t> lengths = args.gap_lengths;
    if (lengths.empty()) lengths.push_back(cfg.braid_length());
    pj::json rows = pj::json::array();
    for (auto L : lengths) {
      if (L < 0) throw pj::ConfigError("--L must be non-negative");
      rows.push_back({{"L", L}, {"gap", op.gap(L)}, {"relative_accuracy", op.relative_accuracy(L)}});
    }
    result["dim"] = rep.dim();
    result["subleading_modulus"] = op.subleading_modulus();
    result["gaps"] = rows;
    result["calibration"] = pj::to_json(pj::calibrate_lambda(op, cfg.n, cfg.k, cfg.epsilon, args.lambda_step));
  } else if (kind == "calibrate") {
    result["calibration"] = pj::to_json(pj::calibrate_lambda(cfg.n, cfg.k, cfg.epsilon, args.lambda_step));
  } else if (kind == "moments") {
    pj::json rows = pj::json::array();
    for (const auto& r : pj::estimate_design_moments(cfg)) rows.push_back(pj::to_json(r));
    result["length"] = cfg.braid_length();
    result["moments"] = rows;
  } else if (kind == "anticoncentration") {
    std::vector<double> gammas = args.gammas;
    if (gammas.empty()) gammas.push_back(cfg.gamma);
    const auto report = pj::anticoncentration_fraction(cfg, gammas);
    result["anticoncentration"] = pj::to_json(report);
    for (const auto& row : report.rows) violated = violated || !row.passes;
    if (args.out) {
      const fs::path csv = fs::path(args.out->string() + ".csv");
      extra.emplace_back(csv, pj::anticoncentration_csv(report));
      result["table"] = csv.filename().string();
    }
  } else if (kind == "pz") {
    const pj::PathRepresentation<double> rep(cfg.n, cfg.k);
    const auto ensemble = pj::amplitude_ensemble(rep, cfg);
    pj::json rows = pj::json::array();
    for (double theta : args.thetas) {
      const auto r = pj::paley_zygmund_check(ensemble, theta);
      violated = violated || !r.passes;
      rows.push_back(pj::to_json(r));
    }
    result["length"] = cfg.braid_length();
    result["paley_zygmund"] = rows;
  } else {
    throw pj::ConfigError("unknown experiment kind '" + kind + "'");
  }
  emit(result, args.out, manifest, extra);
  if (violated) throw ContractViolation("an empirical bound check failed beyond 3 standard errors");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jones polynomials of plat-closed braids via a skein oracle and the path-model representation"};
  app.set_version_flag("--version", std::string(PLATJONES_VERSION));
  app.require_subcommand(1);

  JonesArgs jones;
  auto* jones_cmd = app.add_subcommand("jones", "Evaluate the Jones polynomial of a plat closure at exp(2 pi i/k)");
  jones_cmd->add_option("--braid", jones.braid, "Braid word, e.g. \"1 -2 1\"")->required();
  jones_cmd->add_option("--strands", jones.strands, "Number of strands (even)")->required();
  jones_cmd->add_option("--k", jones.k, "Root-of-unity order")->check(CLI::PositiveNumber);
  jones_cmd->add_option("--method", jones.method, "oracle | path | both")
      ->check(CLI::IsMember({"oracle", "path", "both"}));
  jones_cmd->add_option("--budget", jones.budget, "Oracle crossing budget (default: $PLATJONES_ORACLE_BUDGET or 24)");
  jones_cmd->add_option("--out", jones.out, "Write the JSON result here");

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Draw random braids and optional cap-outcome probabilities");
  sample_cmd->add_option("--strands", sample.strands, "Number of strands (even)")->required();
  sample_cmd->add_option("--length", sample.length, "Braid length or 'auto' for the 2-design length");
  sample_cmd->add_option("--epsilon", sample.epsilon, "Design accuracy used by --length auto");
  sample_cmd->add_option("--lambda", sample.lambda, "Length constant used by --length auto");
  sample_cmd->add_option("--count", sample.count, "Number of braids");
  sample_cmd->add_option("--seed", sample.seed, "Random seed");
  sample_cmd->add_option("--out", sample.out, "Braid word file (one word per line)")->required();
  sample_cmd->add_option("--k", sample.k, "Also compute cap-outcome probabilities at this k");
  sample_cmd->add_option("--probabilities", sample.probabilities, "CSV of per-braid cap probabilities (needs --k)");
  sample_cmd->add_option("--workers", sample.workers, "Worker threads")->check(CLI::PositiveNumber);

  ExperimentArgs exp;
  std::string kind;
  auto* exp_cmd = app.add_subcommand("experiment", "Design, moment, anti-concentration and Paley-Zygmund experiments");
  exp_cmd->add_option("kind", kind, "moments | anticoncentration | gap | pz | calibrate")
      ->required()
      ->check(CLI::IsMember({"moments", "anticoncentration", "gap", "pz", "calibrate"}));
  exp_cmd->add_option("--n", exp.cfg.n, "Half the strand count");
  exp_cmd->add_option("--k", exp.cfg.k, "Root-of-unity order");
  exp_cmd->add_option("--t", exp.cfg.t, "Design order");
  exp_cmd->add_option("--epsilon", exp.cfg.epsilon, "Design accuracy target");
  exp_cmd->add_option("--gamma", exp.cfg.gamma, "Anti-concentration threshold parameter");
  exp_cmd->add_option("--gammas", exp.gammas, "Sweep of gamma values")->delimiter(',');
  exp_cmd->add_option("--theta", exp.thetas, "Paley-Zygmund theta values")->delimiter(',');
  exp_cmd->add_option("--lambda", exp.cfg.lambda, "Length constant");
  exp_cmd->add_flag("--calibrated", exp.calibrated, "Use the calibrated lambda instead of --lambda");
  exp_cmd->add_option("--lambda-step", exp.lambda_step, "Grid step for lambda calibration");
  exp_cmd->add_option("--samples", exp.cfg.samples, "Number of random braids");
  exp_cmd->add_option("--seed", exp.cfg.seed, "Random seed");
  exp_cmd->add_option("--length", exp.cfg.length, "Braid length (overrides the design length)");
  exp_cmd->add_option("--L", exp.gap_lengths, "Lengths at which to report the moment gap")->delimiter(',');
  exp_cmd->add_option("--beta", exp.beta, "cap | random");
  exp_cmd->add_option("--workers", exp.cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  exp_cmd->add_option("--out", exp.out, "Write the JSON result here (CSV tables alongside)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (jones_cmd->parsed()) return run_jones(jones);
    if (sample_cmd->parsed()) return run_sample(sample);
    if (exp_cmd->parsed()) return run_experiment(kind, exp);
  } catch (const pj::BraidError& e) {
    return report_error("parse", e.what(), kUsage);
  } catch (const pj::ConfigError& e) {
    return report_error("config", e.what(), kUsage);
  } catch (const pj::OracleBudgetError& e) {
    return report_error("budget", e.what(), kBudget);
  } catch (const pj::DimensionError& e) {
    return report_error("dimension", e.what(), kBudget);
  } catch (const ContractViolation& e) {
    return report_error("contract", e.what(), kContract);
  } catch (const fs::filesystem_error& e) {
    return report_error("io", e.what(), kIo);
  } catch (const std::exception& e) {
    return report_error("runtime", e.what(), kIo);
  }
  return kUsage;
}

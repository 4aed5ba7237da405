#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

#include "platjones/braid.hpp"
#include "platjones/laurent.hpp"
#include "platjones/report.hpp"

namespace fs = std::filesystem;
namespace pj = platjones;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PLATJONES_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Run run_stderr(const std::string& args) {
  const std::string cmd = std::string(PLATJONES_CLI_PATH) + " " + args + " 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("platjones_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, JonesUnknot) {
  const auto r = run("jones --braid \"\" --strands 2 --k 5 --method both");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["value"]["re"].get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(j["value"]["im"].get<double>(), 0.0, 1e-15);
  EXPECT_EQ(j["comparison"]["rel_error"].get<double>(), 0.0);
}

TEST_F(Cli, JonesTrefoil) {
  const auto r = run("jones --braid \"2 2 2\" --strands 4 --k 7 --method both");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_LE(j["comparison"]["rel_error"].get<double>(), 1e-9);
  EXPECT_EQ(j["writhe"].get<int>(), 3);
  EXPECT_EQ(j["components"].get<int>(), 1);
}

TEST_F(Cli, JonesAtKThreeCarriesNote) {
  const auto r = run("jones --braid \"1\" --strands 4 --k 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out).contains("note"));
}

TEST_F(Cli, ErrorsAreMachineReadable) {
  auto r = run_stderr("jones --braid \"3\" --strands 2");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out)["error"]["category"], "parse");

  r = run_stderr("jones --braid \"" + pj::format_braid_word(pj::random_braid(4, 30, 1)) +
                 "\" --strands 4 --method oracle --budget 10");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json::parse(r.out)["error"]["category"], "budget");

  r = run_stderr("experiment anticoncentration --epsilon 0.1 --gamma 0.95");
  EXPECT_EQ(r.code, 2);
  const auto e = json::parse(r.out);
  EXPECT_EQ(e["error"]["category"], "config");
  EXPECT_NE(e["error"]["message"].get<std::string>().find("1 - epsilon"), std::string::npos);

  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, BudgetFromEnvironment) {
  const std::string word = pj::format_braid_word(pj::random_braid(4, 14, 3));
  EXPECT_EQ(run("jones --braid \"" + word + "\" --strands 4 --method oracle").code, 0);
  const std::string cmd = "PLATJONES_ORACLE_BUDGET=8 " + std::string(PLATJONES_CLI_PATH) + " jones --braid \"" +
                          word + "\" --strands 4 --method oracle >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 3);
}

TEST_F(Cli, SampleEmptyAndAutoLength) {
  const auto empty = dir_ / "empty.txt";
  ASSERT_EQ(run("sample --strands 4 --count 0 --out " + empty.string()).code, 0);
  EXPECT_TRUE(fs::exists(empty));
  EXPECT_EQ(fs::file_size(empty), 0U);
  EXPECT_TRUE(fs::exists(pj::manifest_path_for(empty)));

  const auto words = dir_ / "auto.txt";
  const auto r = run("sample --strands 6 --length auto --epsilon 0.1 --lambda 1 --count 3 --seed 5 --out " +
                     words.string());
  ASSERT_EQ(r.code, 0);
  const auto expected = pj::design_length(3, 0.1, 2, 1.0);
  EXPECT_EQ(json::parse(r.out)["length"].get<std::int64_t>(), expected);
  std::istringstream lines(slurp(words));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(pj::parse_braid_word(line, 6).length(), static_cast<std::size_t>(expected));
    ++count;
  }
  EXPECT_EQ(count, 3);
}

TEST_F(Cli, SampleIsByteIdenticalAcrossRunsAndWorkers) {
  const std::string common = "sample --strands 8 --length 40 --count 200 --seed 99 --k 5 ";
  std::string reference_words;
  std::string reference_probs;
  for (int i = 0; i < 3; ++i) {
    const auto words = dir_ / ("w" + std::to_string(i) + ".txt");
    const auto probs = dir_ / ("p" + std::to_string(i) + ".csv");
    const std::string workers = i == 2 ? "4" : "1";
    ASSERT_EQ(run(common + "--workers " + workers + " --out " + words.string() + " --probabilities " +
                  probs.string())
                  .code,
              0);
    if (i == 0) {
      reference_words = slurp(words);
      reference_probs = slurp(probs);
    } else {
      EXPECT_EQ(slurp(words), reference_words);
      EXPECT_EQ(slurp(probs), reference_probs);
    }
  }
}

TEST_F(Cli, ExperimentGapAtZeroLength) {
  const auto r = run("experiment gap --n 2 --k 5 --L 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_GT(json::parse(r.out)["gaps"][0]["gap"].get<double>(), 0.0);
}

TEST_F(Cli, ExperimentAnticoncentrationWritesJsonAndCsv) {
  const auto out = dir_ / "ac.json";
  const auto r = run("experiment anticoncentration --n 2 --k 5 --epsilon 0.1 --gamma 0.5 --samples 2000 --out " +
                     out.string());
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(slurp(out));
  EXPECT_NEAR(j["anticoncentration"]["rows"][0]["bound"].get<double>(),
              (1.0 - j["anticoncentration"]["epsilon_used"].get<double>() - 0.5) *
                  (1.0 - j["anticoncentration"]["epsilon_used"].get<double>() - 0.5) /
                  (2.0 * (1.0 + j["anticoncentration"]["epsilon_used"].get<double>())),
              1e-12);
  EXPECT_TRUE(fs::exists(dir_ / "ac.json.csv"));
  const auto manifest = json::parse(slurp(pj::manifest_path_for(out)));
  EXPECT_EQ(manifest["command"], "experiment anticoncentration");
  EXPECT_EQ(manifest["outputs"].size(), 2U);
}

TEST_F(Cli, ExperimentMomentsHaarValues) {
  const auto r = run("experiment moments --n 2 --k 5 --samples 1000 --seed 4");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["moments"][0]["haar_value"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(j["moments"][1]["haar_value"].get<double>(), 1.0 / 3.0);
}

TEST_F(Cli, ExperimentResultsAreDeterministic) {
  const std::string args = "experiment pz --n 3 --k 5 --samples 3000 --length 30 --seed 8 --beta random";
  const auto a = run(args + " --workers 1");
  const auto b = run(args + " --workers 4");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Report, LaurentJsonRoundTrip) {
  pj::LaurentPolynomial p;
  p.add_term(-4, 3);
  p.add_term(7, -2);
  p.add_term(2, pj::LaurentPolynomial::Coefficient("123456789012345678901234567890"));
  EXPECT_EQ(pj::laurent_from_json(pj::to_json(p)), p);
  EXPECT_THROW(pj::laurent_from_json(json::array()), std::invalid_argument);
}

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "bqha_harness/commands.hpp"
#include "bqha_harness/csv.hpp"

namespace fs = std::filesystem;
using namespace bqha;
using namespace bqha::harness;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("bqha_harness_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(item);
    rows.push_back(f);
  }
  return rows;
}

void expect_config_error(const json& j) { EXPECT_THROW(parse_config(j), ConfigError) << j.dump(); }

}  // namespace

TEST(HarnessConfig, DefaultsAreFilledAndEchoed) {
  const Config c = parse_config(json::object());
  EXPECT_EQ(c.n, 1);
  EXPECT_EQ(c.D, 40);
  EXPECT_EQ(c.alpha_grid.size(), 13u);
  EXPECT_EQ(c.criterion_alphas.size(), 9u);
  EXPECT_EQ(c.symbols.size(), 10u);
  EXPECT_EQ(c.operators.size(), 7u);
  EXPECT_EQ(c.depth(), 2000);
  EXPECT_TRUE(c.norm.op);
  const json e = c.echo();
  for (const char* key : {"n", "D", "quadrature", "r_max", "alpha_grid", "norm", "symbols", "operators", "wiener", "seed"})
    EXPECT_TRUE(e.contains(key)) << key;
  EXPECT_EQ(e["quadrature"]["radial_nodes"], QuadratureGrid::default_radial_nodes(40));
}

TEST(HarnessConfig, EchoRoundTrips) {
  const json e = parse_config(json{{"n", 2}, {"D", 6}}).echo();
  EXPECT_EQ(parse_config(e).echo(), e);
}

TEST(HarnessConfig, DefaultsAdaptToSmallD) {
  const Config c = parse_config(json{{"D", 0}});
  EXPECT_EQ(c.alpha_grid, std::vector<double>{0.0});
  for (const OperatorSpec& op : c.operators) {
    if (op.kind == "rank_one") EXPECT_EQ(op.v, 0);
    if (op.kind == "composite") EXPECT_EQ(op.beta, 0.0);
  }
}

TEST(HarnessConfig, RejectsInvalidInput) {
  expect_config_error({{"n", 3}});
  expect_config_error({{"D", -1}});
  expect_config_error({{"r_max", 1.0}});
  expect_config_error({{"colour", "blue"}});
  expect_config_error({{"D", "forty"}});
  expect_config_error({{"alpha_grid", {-1.0, 0.0}}});
  expect_config_error({{"D", 4}, {"alpha_grid", {0, 5}}});
  expect_config_error({{"D", 4}, {"alpha_grid", {0.5}}, {"criterion_alphas", {6}}});
  expect_config_error({{"norm", "frobenius"}});
  expect_config_error({{"norm", "schatten-0.5"}});
  expect_config_error({{"symbols", {{{"family", "gaussian"}}}}});
  expect_config_error({{"symbols", {{{"family", "step"}, {"r0", 1.5}}}}});
  expect_config_error({{"operators", {{{"kind", "rank_one"}, {"u", 0}, {"v", 41}}}}});
  expect_config_error({{"operators", {{{"kind", "composite"}, {"symbol", {{"family", "constant"}}}, {"beta", 1.5}}}}});
  expect_config_error({{"operators", {{{"kind", "file"}, {"path", "/nonexistent/op.bin"}}}}});
  expect_config_error({{"operators", {{{"kind", "mystery"}}}}});
  expect_config_error({{"extended_depth", 10}});
  expect_config_error({{"wiener", {{"target", "levels"}, {"D", 2}, {"levels", {1, 2}}}}});
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(HarnessConfig, FileOperatorsMustMatchTheSpace) {
  const fs::path dir = scratch("file_op");
  write_operator(OperatorMatrix::identity(BasisSpec(1, 3)), dir / "id.bin");
  EXPECT_NO_THROW(parse_config(json{{"D", 3}, {"operators", {{{"kind", "file"}, {"path", "id.bin"}}}}}, dir));
  EXPECT_THROW(parse_config(json{{"D", 4}, {"operators", {{{"kind", "file"}, {"path", "id.bin"}}}}}, dir), ConfigError);
}

TEST(HarnessConfig, NormParsing) {
  EXPECT_TRUE(parse_norm("op").op);
  const NormSpec s = parse_norm("schatten-2");
  EXPECT_FALSE(s.op);
  EXPECT_EQ(s.p, 2.0);
  EXPECT_EQ(s.label(), "schatten-2");
  EXPECT_THROW(parse_norm("schatten-2x"), ConfigError);
  // ||diag(levels)||_1 counts each level with its multiplicity.
  CVector lv(3);
  lv << 1.0, -0.5, 0.25;
  EXPECT_NEAR(parse_norm("schatten-1").of_levels(2, lv), 1.0 + 2 * 0.5 + 3 * 0.25, 1e-15);
  EXPECT_EQ(parse_norm("op").of_levels(2, lv), 1.0);
}

TEST(HarnessCsv, FormatsNumbersAndQuotes) {
  const fs::path dir = scratch("csv");
  {
    CsvWriter w(dir / "t.csv", {"a", "b", "re", "im"});
    w << "x,y" << 0.1 << cplx(1.0 / 3.0, -2.0);
    w.end_row();
    w << std::string("plain") << 7 << 1e-300 << 0.0;
    w.end_row();
  }
  EXPECT_EQ(slurp(dir / "t.csv"),
            "a,b,re,im\n\"x,y\",0.10000000000000001,0.33333333333333331,-2\nplain,7,1e-300,0\n");
}

TEST(HarnessReport, JsonShape) {
  RunReport rep{"verify", json{{"n", 1}}, 5, {}};
  rep.add(error_record("a", "x = y", 1e-3, 1e-2));
  rep.add(bound_record("b", "x <= 1", std::nan(""), 1.0, 0.0));
  const json j = rep.to_json();
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["config_echo"]["n"], 1);
  EXPECT_EQ(j["records"].size(), 2u);
  EXPECT_TRUE(j["records"][1]["measured"].is_null());
  EXPECT_EQ(j["summary"]["pass"], 1);
  EXPECT_EQ(j["summary"]["fail"], 1);
  EXPECT_EQ(j["environment"]["seed"], 5);
}

TEST(HarnessReport, Fnv1aReferenceValues) {
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(HarnessCommands, TailCheckLooksAtLastFivePoints) {
  EXPECT_TRUE(tail_non_increasing({9, 1, 5, 4, 3, 2, 1}));
  EXPECT_FALSE(tail_non_increasing({5, 4, 3, 3.1, 2}));
  EXPECT_TRUE(tail_non_increasing({5, 4, 3, 3 + 1e-10, 2}));
  EXPECT_TRUE(tail_non_increasing({}));
  // A rise covered by the reported remainders is not a rise.
  EXPECT_TRUE(tail_non_increasing({3, 2, 2.5}, {0, 0.2, 0.3}));
  EXPECT_FALSE(tail_non_increasing({3, 2, 2.6}, {0, 0.2, 0.3}));
  EXPECT_NEAR(largest_increase({3, 2, 2.6}, {0, 0.2, 0.3}), 0.1, 1e-15);
}

TEST(HarnessCommands, TabulateRows) {
  const fs::path dir = scratch("tabulate");
  const Config c = parse_config(json{{"D", 4}, {"alpha_grid", {0, 1, 2}}});
  const RunReport rep = cmd_tabulate(c, dir);
  EXPECT_EQ(rep.failed(), 0);
  const auto lv = read_csv(dir / "phi_alpha_levels.csv");
  ASSERT_EQ(lv.size(), 1u + 3 * 5);
  EXPECT_EQ(lv[0], (std::vector<std::string>{"alpha", "k", "re", "im"}));
  // alpha = 1: (2, -1, 0, 0, 0)
  EXPECT_EQ(std::stod(lv[6][2]), 2.0);
  EXPECT_EQ(std::stod(lv[7][2]), -1.0);
  EXPECT_EQ(std::stod(lv[8][2]), 0.0);
  const auto mom = read_csv(dir / "moments.csv");
  for (const auto& row : mom)
    if (row[0] == "power(p=1)") EXPECT_NEAR(std::stod(row[2]), (std::stod(row[1]) + 1) / (std::stod(row[1]) + 2), 1e-14);
  const auto prof = read_csv(dir / "phi_alpha_profiles.csv");
  EXPECT_EQ(prof[1][1], "0");
  EXPECT_NEAR(std::stod(prof[1][2]), 1.0, 1e-15);  // C_0 = 1 for n = 1
}

TEST(HarnessCommands, IdentityDoesNotMoveAndRunsRepeat) {
  const Config c = parse_config(json{{"D", 6}, {"extended_depth", 300}});
  OperatorSpec id;
  id.kind = "identity";
  const ConvergenceCurve curve = convergence_curve(c, id);
  for (double e : curve.errors) EXPECT_LT(e, 1e-12);

  const fs::path a = scratch("repeat_a");
  const fs::path b = scratch("repeat_b");
  cmd_criterion(c, a);
  cmd_criterion(c, b);
  EXPECT_EQ(slurp(a / "criterion.csv"), slurp(b / "criterion.csv"));
}

TEST(HarnessCommands, WienerOnesRecoversTheConstant) {
  const fs::path dir = scratch("wiener");
  const Config c = parse_config(json{{"wiener", {{"target", "ones"}, {"D", 6}, {"conditioning_max_degree", 8}}}});
  const RunReport rep = cmd_wiener(c, dir);
  EXPECT_EQ(rep.failed(), 0);
  const auto rows = read_csv(dir / "wiener_recovery.csv");
  EXPECT_NEAR(std::stod(rows[1][1]), 1.0, 1e-8);
}

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"

namespace bqha {
namespace {

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bqha_test_" + name);
}

TEST(Serialize, OperatorRoundTrip) {
  std::mt19937_64 rng(61);
  const OperatorMatrix s = testing::random_operator(BasisSpec(2, 3), rng);
  for (const char* name : {"op.bin", "op.csv"}) {
    const auto p = scratch(name);
    write_operator(s, p);
    const OperatorMatrix back = read_operator(p);
    EXPECT_TRUE(back.basis() == s.basis());
    EXPECT_EQ(testing::max_abs(back.entries() - s.entries()), 0.0) << name;
    std::filesystem::remove(p);
  }
}

TEST(Serialize, LevelsRoundTrip) {
  CVector lv(3);
  lv << 0.1, cplx(-2.5, 1e-300), 1.0 / 3.0;
  const auto p = scratch("levels.csv");
  write_radial_operator(RadialOperator(BasisSpec(1, 2), lv), p);
  const RadialOperator r = read_radial_operator(p, 1);
  EXPECT_EQ(r.basis().max_degree(), 2);
  EXPECT_EQ((r.levels() - lv).cwiseAbs().maxCoeff(), 0.0);
  std::filesystem::remove(p);
}

TEST(Serialize, RejectsMalformedFiles) {
  const auto p = scratch("bad.bin");
  {
    std::ofstream out(p);
    out << "bqha-operator 1 3 grlex\n" << "short";
  }
  EXPECT_THROW(read_operator(p), std::runtime_error);
  {
    std::ofstream out(p);
    out << "not an operator\n";
  }
  EXPECT_THROW(read_operator(p), std::runtime_error);
  std::filesystem::remove(p);
  EXPECT_THROW(read_operator(scratch("missing.bin")), std::runtime_error);
}

TEST(Serialize, FormatDouble) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(format_double(-1.5e-300), "-1.5000000000000001e-300");
}

}  // namespace
}  // namespace bqha

#pragma once

#include <filesystem>
#include <vector>

#include "bqha_harness/config.hpp"
#include "bqha_harness/report.hpp"

namespace bqha::harness {

// Each command writes its CSV tables into `out` and returns the report;
// the caller writes report.json.
RunReport cmd_verify(const Config& cfg, const std::filesystem::path& out);
RunReport cmd_convergence(const Config& cfg, const std::filesystem::path& out);
RunReport cmd_criterion(const Config& cfg, const std::filesystem::path& out);
RunReport cmd_wiener(const Config& cfg, const std::filesystem::path& out);
RunReport cmd_tabulate(const Config& cfg, const std::filesystem::path& out);

// Building blocks shared with the acceptance binary.

struct ConvergenceCurve {
  std::string id;
  std::string norm;
  bool asserted = false;
  std::vector<double> alphas;
  std::vector<double> errors;
  std::vector<double> tails;       // largest truncation tail that entered
  std::vector<double> remainders;        // a-posteriori extrapolation estimate plus Phi_alpha series tail
  std::vector<double> remainder_bounds;  // a-priori bound
};

ConvergenceCurve convergence_curve(const Config& cfg, const OperatorSpec& op);
// Over the last five grid points, the largest step up of e[i] - r[i] above e[i-1] + r[i-1].
double largest_increase(const std::vector<double>& e, const std::vector<double>& remainders = {});
bool tail_non_increasing(const std::vector<double>& e, const std::vector<double>& remainders = {},
                         double slack = 1e-9);

struct CriterionRow {
  double alpha;
  double max_abs;
  double remainder;
  double tail;
};
std::vector<CriterionRow> criterion_rows(const Config& cfg, const OperatorSpec& op);

}  // namespace bqha::harness

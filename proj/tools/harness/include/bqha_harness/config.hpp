#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bqha/bqha.hpp"

namespace bqha::harness {

using nlohmann::json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operator norm or Schatten-p.
struct NormSpec {
  bool op = true;
  double p = 1.0;
  std::string label() const;
  double of(const OperatorMatrix& s) const;
  // Radial difference given as levels.
  double of_levels(int n, const CVector& levels) const;
};

NormSpec parse_norm(const std::string& s);

struct SymbolSpec {
  std::string family;  // constant | power | step | oscillatory | weight
  double value = 1.0;
  double p = 1.0;
  double r0 = 0.5;
  double height = 1.0;
  double omega = 1.0;
  double beta = 1.0;

  std::string id() const;
  SymbolFunction make() const;
  double sup_norm() const;
  json to_json() const;
};

struct OperatorSpec {
  // toeplitz | identity | composite | rank_one | sign_diagonal | file
  std::string kind;
  SymbolSpec symbol;
  double beta = 0.0;  // composite: a *_pi Phi_beta
  int u = 0;          // rank_one: f -> <f, e_v> e_u, basis positions
  int v = 1;
  std::string path;
  std::optional<NormSpec> norm;

  std::string id() const;
  bool radial() const { return kind != "rank_one" && kind != "file"; }
  // Classes for which convergence is asserted; the rest is exploratory.
  bool asserted_convergence() const { return kind != "sign_diagonal" && kind != "file"; }
  // Toeplitz operators, for which the alpha-Berezin bound is asserted.
  bool toeplitz() const { return kind == "toeplitz" || kind == "identity"; }
  json to_json() const;
};

struct WienerSpec {
  std::string target = "phi";    // phi | ones | symbol | levels
  std::optional<SymbolSpec> symbol;
  std::vector<double> levels;
  int D = 8;
  int conditioning_max_degree = 20;
  json to_json() const;
};

struct Config {
  int n = 1;
  int D = 40;
  int radial_nodes = 0;   // 0: sized from D
  int angular_nodes = 0;
  double r_max = 0.8;
  int extended_depth = 0;  // 0: 2000 for n = 1, 120 for n = 2
  std::vector<double> alpha_grid;
  std::vector<double> criterion_alphas;
  NormSpec norm;
  std::vector<SymbolSpec> symbols;
  std::vector<OperatorSpec> operators;
  WienerSpec wiener;
  std::string out = "out";
  std::uint64_t seed = 1;

  BasisSpec basis() const { return {n, D}; }
  QuadratureGrid grid() const;
  int depth() const;
  // Canonical form with every default filled in.
  json echo() const;
};

// Defaults for a given (n, D); grids and operator positions adapt to D.
json default_config_json(int n = 1, int D = 40);
// Relative operator file paths are taken relative to base.
Config parse_config(const json& j, const std::filesystem::path& base = {});
Config load_config(const std::filesystem::path& path);

}  // namespace bqha::harness

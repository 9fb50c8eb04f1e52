#include "bqha_harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>

namespace bqha::harness {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ConfigError("unknown key '" + k + "' in " + where);
}

template <class T>
T get(const json& j, const std::string& key, T fallback, const std::string& where) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + "." + key + " has the wrong type");
  }
}

std::vector<double> alpha_list(const json& j, const std::string& key, std::vector<double> fallback) {
  std::vector<double> a = get(j, key, fallback, "config");
  for (double x : a)
    if (!(x > -1.0) || !std::isfinite(x)) throw ConfigError(key + " values must exceed -1 (got " + num(x) + ")");
  return a;
}

SymbolSpec parse_symbol(const json& j, const std::string& where) {
  only_keys(j, {"family", "value", "p", "r0", "height", "omega", "beta"}, where);
  SymbolSpec s;
  s.family = get<std::string>(j, "family", "", where);
  s.value = get(j, "value", 1.0, where);
  s.p = get(j, "p", 1.0, where);
  s.r0 = get(j, "r0", 0.5, where);
  s.height = get(j, "height", 1.0, where);
  s.omega = get(j, "omega", 1.0, where);
  s.beta = get(j, "beta", 1.0, where);
  static const std::set<std::string> families{"constant", "power", "step", "oscillatory", "weight"};
  if (!families.count(s.family)) throw ConfigError(where + ": unknown symbol family '" + s.family + "'");
  if (s.family == "power" && !(s.p > 0.0)) throw ConfigError(where + ": power needs p > 0");
  if (s.family == "step" && !(s.r0 > 0.0 && s.r0 < 1.0)) throw ConfigError(where + ": step needs 0 < r0 < 1");
  if (s.family == "weight" && !(s.beta >= 0.0)) throw ConfigError(where + ": weight needs beta >= 0");
  return s;
}

}  // namespace

std::string NormSpec::label() const { return op ? "op" : "schatten-" + num(p); }

double NormSpec::of(const OperatorMatrix& s) const { return op ? op_norm(s) : schatten_norm(s, p); }

double NormSpec::of_levels(int n, const CVector& levels) const {
  if (op) return levels.size() ? levels.cwiseAbs().maxCoeff() : 0.0;
  double s = 0.0;
  for (Eigen::Index k = 0; k < levels.size(); ++k)
    s += level_multiplicity(n, static_cast<int>(k)) * std::pow(std::abs(levels(k)), p);
  return std::pow(s, 1.0 / p);
}

NormSpec parse_norm(const std::string& s) {
  if (s == "op" || s == "schatten-inf") return {};
  const std::string pre = "schatten-";
  if (s.rfind(pre, 0) == 0) {
    try {
      std::size_t used = 0;
      const double p = std::stod(s.substr(pre.size()), &used);
      if (used == s.size() - pre.size() && p >= 1.0) return {false, p};
    } catch (const std::exception&) {
    }
  }
  throw ConfigError("norm must be 'op' or 'schatten-<p>' with p >= 1 (got '" + s + "')");
}

std::string SymbolSpec::id() const {
  if (family == "constant") return "constant(" + num(value) + ")";
  if (family == "power") return "power(p=" + num(p) + ")";
  if (family == "step") return "step(r0=" + num(r0) + ";h=" + num(height) + ")";
  if (family == "oscillatory") return "oscillatory(omega=" + num(omega) + ")";
  return "weight(beta=" + num(beta) + ")";
}

SymbolFunction SymbolSpec::make() const {
  if (family == "constant") return symbols::constant(value);
  if (family == "power") return symbols::power(p);
  if (family == "step") return symbols::step(r0, height);
  if (family == "oscillatory") return symbols::oscillatory(omega);
  return symbols::weight(beta);
}

double SymbolSpec::sup_norm() const { return make().sup_norm().value_or(std::numeric_limits<double>::infinity()); }

json SymbolSpec::to_json() const {
  json j{{"family", family}};
  if (family == "constant") j["value"] = value;
  if (family == "power") j["p"] = p;
  if (family == "step") j["r0"] = r0, j["height"] = height;
  if (family == "oscillatory") j["omega"] = omega;
  if (family == "weight") j["beta"] = beta;
  return j;
}

std::string OperatorSpec::id() const {
  if (kind == "toeplitz") return "T[" + symbol.id() + "]";
  if (kind == "composite") return symbol.id() + "*Phi_" + num(beta);
  if (kind == "rank_one") return "rank_one[" + std::to_string(u) + "," + std::to_string(v) + "]";
  if (kind == "file") return "file[" + std::filesystem::path(path).filename().string() + "]";
  return kind;
}

json OperatorSpec::to_json() const {
  json j{{"kind", kind}};
  if (kind == "toeplitz" || kind == "composite") j["symbol"] = symbol.to_json();
  if (kind == "composite") j["beta"] = beta;
  if (kind == "rank_one") j["u"] = u, j["v"] = v;
  if (kind == "file") j["path"] = path;
  if (norm) j["norm"] = norm->label();
  return j;
}

json WienerSpec::to_json() const {
  json j{{"target", target}, {"D", D}, {"conditioning_max_degree", conditioning_max_degree}};
  if (symbol) j["symbol"] = symbol->to_json();
  if (target == "levels") j["levels"] = levels;
  return j;
}

QuadratureGrid Config::grid() const {
  const int nr = radial_nodes > 0 ? radial_nodes : QuadratureGrid::default_radial_nodes(D);
  const int na = angular_nodes > 0 ? angular_nodes : QuadratureGrid::default_angular_nodes(D);
  return QuadratureGrid::polar(n, nr, na);
}

int Config::depth() const {
  if (extended_depth > 0) return extended_depth;
  return std::max(D, n == 1 ? 2000 : 120);
}

json Config::echo() const {
  json ops = json::array();
  for (const auto& o : operators) ops.push_back(o.to_json());
  json syms = json::array();
  for (const auto& s : symbols) syms.push_back(s.to_json());
  return {{"n", n},
          {"D", D},
          {"quadrature", {{"radial_nodes", grid().radial_nodes()}, {"angular_nodes", grid().angular_nodes()}}},
          {"r_max", r_max},
          {"extended_depth", depth()},
          {"alpha_grid", alpha_grid},
          {"criterion_alphas", criterion_alphas},
          {"norm", norm.label()},
          {"symbols", syms},
          {"operators", ops},
          {"wiener", wiener.to_json()},
          {"out", out},
          {"seed", seed}};
}

json default_config_json(int n, int D) {
  json j = json::parse(R"({
    "quadrature": {"radial_nodes": 0, "angular_nodes": 0},
    "r_max": 0.8,
    "extended_depth": 0,
    "norm": "op",
    "symbols": [
      {"family": "constant", "value": 1},
      {"family": "constant", "value": -0.5},
      {"family": "power", "p": 1},
      {"family": "power", "p": 3},
      {"family": "step", "r0": 0.5, "height": 1},
      {"family": "step", "r0": 0.8, "height": -2},
      {"family": "oscillatory", "omega": 6},
      {"family": "oscillatory", "omega": 15},
      {"family": "weight", "beta": 1},
      {"family": "weight", "beta": 2.5}
    ],
    "wiener": {"target": "phi", "D": 8, "conditioning_max_degree": 20},
    "out": "out",
    "seed": 1
  })");
  j["n"] = n;
  j["D"] = D;
  // Integer grids stop at D so that every Phi_alpha is exact.
  auto upto = [D](int top) {
    json a = json::array();
    for (int k = 0; k <= std::min(top, D); ++k) a.push_back(k);
    return a;
  };
  j["alpha_grid"] = upto(12);
  j["criterion_alphas"] = upto(8);
  const int last = BasisSpec::dimension(n, D) - 1;
  j["operators"] = json::array({
      {{"kind", "toeplitz"}, {"symbol", {{"family", "power"}, {"p", 1}}}},
      {{"kind", "toeplitz"}, {"symbol", {{"family", "step"}, {"r0", 0.5}, {"height", 1}}}},
      {{"kind", "toeplitz"}, {"symbol", {{"family", "oscillatory"}, {"omega", 6}}}},
      {{"kind", "identity"}},
      {{"kind", "composite"}, {"symbol", {{"family", "oscillatory"}, {"omega", 4}}}, {"beta", std::min(2, D)}},
      {{"kind", "rank_one"}, {"u", 0}, {"v", std::min(1, last)}, {"norm", "schatten-1"}},
      {{"kind", "sign_diagonal"}},
  });
  return j;
}

Config parse_config(const json& user, const std::filesystem::path& base) {
  only_keys(user, {"n", "D", "quadrature", "r_max", "extended_depth", "alpha_grid", "criterion_alphas", "norm",
                   "symbols", "operators", "wiener", "out", "seed"},
            "config");
  Config c;
  c.n = get(user, "n", 1, "config");
  c.D = get(user, "D", 40, "config");
  if (c.n != 1 && c.n != 2) throw ConfigError("n must be 1 or 2");
  if (c.D < 0 || c.D > 400) throw ConfigError("D must lie in [0, 400]");
  json j = default_config_json(c.n, c.D);
  for (const auto& [k, v] : user.items()) j[k] = v;
  const json& q = j.at("quadrature");
  only_keys(q, {"radial_nodes", "angular_nodes"}, "quadrature");
  c.radial_nodes = get(q, "radial_nodes", 0, "quadrature");
  c.angular_nodes = get(q, "angular_nodes", 0, "quadrature");
  if (c.radial_nodes < 0 || c.angular_nodes < 0) throw ConfigError("quadrature sizes must be non-negative");
  if (c.radial_nodes > 0 && c.radial_nodes < c.D + 1) throw ConfigError("quadrature.radial_nodes must be at least D + 1");
  if (c.angular_nodes > 0 && c.angular_nodes < 2 * c.D + 1)
    throw ConfigError("quadrature.angular_nodes must be at least 2D + 1");
  c.r_max = get(j, "r_max", 0.8, "config");
  if (!(c.r_max > 0.0 && c.r_max < 1.0)) throw ConfigError("r_max must lie in (0, 1)");
  c.extended_depth = get(j, "extended_depth", 0, "config");
  if (c.extended_depth < 0 || (c.extended_depth > 0 && c.extended_depth < c.D))
    throw ConfigError("extended_depth must be 0 (automatic) or at least D");
  c.alpha_grid = alpha_list(j, "alpha_grid", {});
  c.criterion_alphas = alpha_list(j, "criterion_alphas", {});
  for (const auto* grid : {&c.alpha_grid, &c.criterion_alphas})
    for (double a : *grid)
      if (is_integer(a) && a > c.D)
        throw ConfigError("D must be at least every integer alpha in the grids (alpha " + num(a) + ")");
  c.norm = parse_norm(get<std::string>(j, "norm", "op", "config"));

  if (!j.at("symbols").is_array()) throw ConfigError("symbols must be an array");
  for (std::size_t i = 0; i < j.at("symbols").size(); ++i)
    c.symbols.push_back(parse_symbol(j.at("symbols")[i], "symbols[" + std::to_string(i) + "]"));

  if (!j.at("operators").is_array()) throw ConfigError("operators must be an array");
  const int dim = BasisSpec::dimension(c.n, c.D);
  for (std::size_t i = 0; i < j.at("operators").size(); ++i) {
    const std::string where = "operators[" + std::to_string(i) + "]";
    const json& o = j.at("operators")[i];
    only_keys(o, {"kind", "symbol", "beta", "u", "v", "path", "norm"}, where);
    OperatorSpec s;
    s.kind = get<std::string>(o, "kind", "", where);
    if (s.kind == "toeplitz" || s.kind == "composite") {
      if (!o.contains("symbol")) throw ConfigError(where + " needs a symbol");
      s.symbol = parse_symbol(o.at("symbol"), where + ".symbol");
    }
    if (s.kind == "composite") {
      s.beta = get(o, "beta", 0.0, where);
      if (!is_integer(s.beta) || s.beta < 0 || s.beta > c.D)
        throw ConfigError(where + ": composite needs an integer beta in [0, D]");
    } else if (s.kind == "rank_one") {
      s.u = get(o, "u", 0, where);
      s.v = get(o, "v", 1, where);
      if (s.u < 0 || s.v < 0 || s.u >= dim || s.v >= dim)
        throw ConfigError(where + ": rank_one positions must lie in [0, dim)");
    } else if (s.kind == "file") {
      s.path = get<std::string>(o, "path", "", where);
      if (std::filesystem::path(s.path).is_relative() && !base.empty()) s.path = (base / s.path).lexically_normal().string();
      try {
        const OperatorMatrix m = read_operator(s.path);
        if (!(m.basis() == c.basis())) throw ConfigError(where + ": operator file has a different (n, D)");
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        throw ConfigError(where + ": " + e.what());
      }
    } else if (s.kind != "toeplitz" && s.kind != "identity" && s.kind != "sign_diagonal") {
      throw ConfigError(where + ": unknown operator kind '" + s.kind + "'");
    }
    if (o.contains("norm")) s.norm = parse_norm(get<std::string>(o, "norm", "op", where));
    c.operators.push_back(s);
  }

  const json& w = j.at("wiener");
  only_keys(w, {"target", "symbol", "levels", "D", "conditioning_max_degree"}, "wiener");
  c.wiener.target = get<std::string>(w, "target", "phi", "wiener");
  c.wiener.D = get(w, "D", 8, "wiener");
  c.wiener.conditioning_max_degree = get(w, "conditioning_max_degree", 20, "wiener");
  if (c.wiener.D < 0 || c.wiener.D > 60) throw ConfigError("wiener.D must lie in [0, 60]");
  if (c.wiener.conditioning_max_degree < 0 || c.wiener.conditioning_max_degree > 60)
    throw ConfigError("wiener.conditioning_max_degree must lie in [0, 60]");
  if (c.wiener.target == "symbol") {
    if (!w.contains("symbol")) throw ConfigError("wiener target 'symbol' needs a symbol");
    c.wiener.symbol = parse_symbol(w.at("symbol"), "wiener.symbol");
  } else if (c.wiener.target == "levels") {
    c.wiener.levels = get(w, "levels", std::vector<double>{}, "wiener");
    if (c.wiener.levels.size() != static_cast<std::size_t>(c.wiener.D + 1))
      throw ConfigError("wiener.levels must hold D + 1 values");
  } else if (c.wiener.target != "phi" && c.wiener.target != "ones") {
    throw ConfigError("wiener.target must be phi, ones, symbol or levels");
  }

  c.out = get<std::string>(j, "out", "out", "config");
  c.seed = get<std::uint64_t>(j, "seed", 1, "config");
  return c;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }
  return parse_config(j, path.parent_path());
}

}  // namespace bqha::harness

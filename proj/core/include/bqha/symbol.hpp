#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bqha/geometry.hpp"
#include "bqha/radialcalc.hpp"
#include "bqha/types.hpp"

namespace bqha {

// A function on the ball together with the facts convolutions need:
// radial or not, bounded or not, integrable against the invariant measure.
class SymbolFunction {
 public:
  using Eval = std::function<cplx(const BallPoint&)>;

  struct Traits {
    bool bounded = true;
    bool integrable = false;  // in L^1(dlambda)
    std::optional<double> sup_norm;
  };

  static SymbolFunction general(std::string name, Eval f, Traits traits);
  static SymbolFunction radial(std::string name, RadialProfile profile, Traits traits);

  cplx operator()(const BallPoint& z) const;

  const std::string& name() const { return name_; }
  bool is_radial() const { return profile_.has_value(); }
  bool is_bounded() const { return traits_.bounded; }
  bool is_integrable() const { return traits_.integrable; }
  std::optional<double> sup_norm() const { return traits_.sup_norm; }
  const Traits& traits() const { return traits_; }
  // Present iff the symbol is radial.
  const std::optional<RadialProfile>& profile() const { return profile_; }
  // Radial jump locations in t = |z|^2 (empty for general symbols).
  std::vector<double> t_breaks() const;

 private:
  SymbolFunction() = default;
  std::string name_;
  Eval eval_;
  std::optional<RadialProfile> profile_;
  Traits traits_;
};

// Checks the radial flag: |f(Uz) - f(z)| <= tol on random rotations.
bool spot_check_radial(const SymbolFunction& f, int n, std::mt19937_64& rng, int trials = 20, double tol = 1e-10);

namespace symbols {

SymbolFunction constant(cplx c);
// r^{2p}
SymbolFunction power(double p);
// height inside |z| < r0, zero outside
SymbolFunction step(double r0, double height = 1.0);
// cos(omega r^2)
SymbolFunction oscillatory(double omega);
// (1 - r^2)^beta
SymbolFunction weight(double beta);
// phi_alpha = C_alpha (1 - r^2)^{n+1+alpha}
SymbolFunction phi_alpha(double alpha, int n);
// indicator of |z| < r0; integrable, with finite invariant mass
SymbolFunction ball_indicator(double r0);

}  // namespace symbols

}  // namespace bqha

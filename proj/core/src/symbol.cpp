#include "bqha/symbol.hpp"

#include <cmath>
#include <numbers>

#include "bqha/special.hpp"

namespace bqha {

SymbolFunction SymbolFunction::general(std::string name, Eval f, Traits traits) {
  SymbolFunction s;
  s.name_ = std::move(name);
  s.eval_ = std::move(f);
  s.traits_ = traits;
  return s;
}

SymbolFunction SymbolFunction::radial(std::string name, RadialProfile profile, Traits traits) {
  SymbolFunction s;
  s.name_ = std::move(name);
  s.profile_ = std::move(profile);
  s.traits_ = traits;
  return s;
}

cplx SymbolFunction::operator()(const BallPoint& z) const {
  if (profile_) return profile_->f(z.norm());
  return eval_(z);
}

std::vector<double> SymbolFunction::t_breaks() const {
  return profile_ ? profile_->t_breaks() : std::vector<double>{};
}

bool spot_check_radial(const SymbolFunction& f, int n, std::mt19937_64& rng, int trials, double tol) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 0.95);
  for (int t = 0; t < trials; ++t) {
    CVector z(n);
    for (int c = 0; c < n; ++c) z(c) = cplx(gauss(rng), gauss(rng));
    z *= unif(rng) / z.norm();
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = cplx(gauss(rng), gauss(rng));
    const CMatrix u = m.householderQr().householderQ();
    const BallPoint p(z);
    const BallPoint q(CVector(u * z));
    if (std::abs(f(p) - f(q)) > tol) return false;
  }
  return true;
}

namespace symbols {

SymbolFunction constant(cplx c) {
  return SymbolFunction::radial("constant", {[c](double) { return c; }, {}}, {true, false, std::abs(c)});
}

SymbolFunction power(double p) {
  return SymbolFunction::radial("power", {[p](double r) { return cplx(std::pow(r * r, p)); }, {}},
                                {true, false, 1.0});
}

SymbolFunction step(double r0, double height) {
  if (!(r0 > 0.0 && r0 < 1.0)) throw DomainError("step radius must lie in (0, 1)");
  return SymbolFunction::radial("step", {[r0, height](double r) { return cplx(r < r0 ? height : 0.0); }, {r0}},
                                {true, false, std::abs(height)});
}

SymbolFunction oscillatory(double omega) {
  return SymbolFunction::radial("oscillatory", {[omega](double r) { return cplx(std::cos(omega * r * r)); }, {}},
                                {true, false, 1.0});
}

SymbolFunction weight(double beta) {
  if (beta < 0.0) throw DomainError("weight exponent must be non-negative");
  return SymbolFunction::radial("weight", {[beta](double r) { return cplx(std::pow(1.0 - r * r, beta)); }, {}},
                                {true, false, 1.0});
}

SymbolFunction phi_alpha(double alpha, int n) {
  const double c = weight_constant(n, alpha);
  const double e = n + 1.0 + alpha;
  return SymbolFunction::radial("phi_alpha", {[c, e](double r) { return cplx(c * std::pow(1.0 - r * r, e)); }, {}},
                                {true, true, c});
}

SymbolFunction ball_indicator(double r0) {
  if (!(r0 > 0.0 && r0 < 1.0)) throw DomainError("indicator radius must lie in (0, 1)");
  return SymbolFunction::radial("ball_indicator", {[r0](double r) { return cplx(r < r0 ? 1.0 : 0.0); }, {r0}},
                                {true, true, 1.0});
}

}  // namespace symbols

}  // namespace bqha

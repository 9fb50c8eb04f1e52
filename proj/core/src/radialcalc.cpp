#include "bqha/radialcalc.hpp"

#include <algorithm>
#include <cmath>

#include "bqha/special.hpp"

namespace bqha {

std::vector<double> RadialProfile::t_breaks() const {
  std::vector<double> t;
  for (double b : breaks)
    if (b > 0.0 && b < 1.0) t.push_back(b * b);
  return t;
}

cplx LevelSequence::trace() const {
  cplx s = 0.0;
  for (int k = 0; k < values.size(); ++k) s += level_multiplicity(n, k) * values(k);
  return s;
}

namespace {

LevelSequence moments_on_rule(const RadialProfile& a, int n, int depth, const Rule1D& rule) {
  std::vector<cplx> av(rule.size());
  std::vector<double> pw(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) {
    av[j] = a(std::sqrt(rule.nodes[j])) * rule.weights[j];
    pw[j] = std::pow(rule.nodes[j], n - 1);
  }
  LevelSequence out{n, CVector(depth + 1)};
  for (int k = 0; k <= depth; ++k) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j) {
      s += av[j] * pw[j];
      pw[j] *= rule.nodes[j];
    }
    out.values(k) = static_cast<double>(n + k) * s;
  }
  return out;
}

}  // namespace

LevelSequence moment_levels(const RadialProfile& a, int n, int max_degree) {
  if (max_degree < 0) throw DomainError("negative truncation degree");
  const std::vector<double> tb = a.t_breaks();
  return moments_on_rule(a, n, max_degree, composite_gauss_legendre(kMomentNodes, 0.0, 1.0, tb));
}

LevelSequence moment_levels_deep(const RadialProfile& a, int n, int depth) {
  if (depth < 0) throw DomainError("negative depth");
  const int panels = std::max(64, depth / 8);
  std::vector<double> cuts = a.t_breaks();
  for (int p = 1; p < panels; ++p) cuts.push_back(static_cast<double>(p) / panels);
  return moments_on_rule(a, n, depth, composite_gauss_legendre(32, 0.0, 1.0, cuts));
}

LevelSequence phi_alpha_levels(double alpha, int n, int max_degree) {
  const double c = weight_constant(n, alpha);
  LevelSequence out{n, CVector::Zero(max_degree + 1)};
  double b = 1.0;  // (-1)^k binom(alpha, k)
  for (int k = 0; k <= max_degree; ++k) {
    out.values(k) = c * b / binomial(n + k, n);
    b *= (k - alpha) / (k + 1.0);
  }
  return out;
}

double phi_alpha_trace_tail(double alpha, int n, int max_degree) {
  const double c = weight_constant(n, alpha);
  if (is_integer(alpha) && alpha <= max_degree) return 0.0;
  double b = 1.0;
  for (int k = 0; k <= max_degree; ++k) b *= (k - alpha) / (k + 1.0);
  // b = (-1)^{D+1} binom(alpha, D+1); terms are C_alpha b_k n/(n+k).
  // Terms decay like k^{-(alpha+2)} (1 + O(1/k)). A pure-power tail past the
  // cutoff K is wrong by O(K^{-(alpha+2)}); one Richardson step over K and 2K
  // removes that leading error.
  const double s = alpha + 2.0;
  const int half = 100000;
  double sum = 0.0;
  double at_half = 0.0;
  int k = max_degree + 1;
  for (int i = 1; i <= 2 * half; ++i, ++k) {
    const double term = c * b * n / (n + k);
    sum += term;
    if (b == 0.0) return sum;
    b *= (k - alpha) / (k + 1.0);
    if (i == half || i == 2 * half) {
      const double est = sum + term * (k / (s - 1.0) - 0.5);
      if (i == half) at_half = est;
      else sum = est;
    }
  }
  const double f = std::pow(2.0, s);
  return (f * sum - at_half) / (f - 1.0);
}

cplx berezin_radial(const LevelSequence& levels, double r) {
  const int n = levels.n;
  const double t = r * r;
  cplx s = 0.0;
  double tk = 1.0;
  for (int k = 0; k < levels.values.size(); ++k) {
    s += levels.values(k) * binomial(n + k, n) * tk;
    tk *= t;
  }
  return std::pow(1.0 - t, n + 1.0) * s;
}

cplx balpha_radial_symbol(const RadialProfile& a, double alpha, double r, const QuadratureGrid& grid) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0, 1)");
  const QuadratureGrid g = grid.with_breaks(a.t_breaks());
  const int n = g.n();
  const double c = n + 1.0 + alpha;
  cplx s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const CVector w = g.node_coords(i);
    const double t = w.squaredNorm();
    const double den = std::norm(1.0 - r * std::conj(w(0)));
    s += g.weight(i) * a(std::sqrt(t)) * std::pow(1.0 - t, alpha) * std::pow(den, -c);
  }
  return weight_constant(n, alpha) * std::pow(1.0 - r * r, c) * s;
}

RMatrix moment_matrix(int n, int levels, int coeffs) {
  RMatrix a(levels, coeffs);
  for (int k = 0; k < levels; ++k)
    for (int j = 0; j < coeffs; ++j) a(k, j) = static_cast<double>(n + k) / (n + k + j);
  return a;
}

namespace {

double condition_number(const RMatrix& a) {
  Eigen::JacobiSVD<RMatrix> svd(a);
  const RVector s = svd.singularValues();
  return s(s.size() - 1) > 0.0 ? s(0) / s(s.size() - 1) : INFINITY;
}

}  // namespace

MomentFit fit_polynomial_profile(const LevelSequence& target, int coeffs, bool scale_columns) {
  const int levels = static_cast<int>(target.values.size());
  if (coeffs < 1 || coeffs > levels) throw DomainError("coefficient count must lie in [1, D+1]");
  const RMatrix a = moment_matrix(target.n, levels, coeffs);
  RVector scale = RVector::Ones(coeffs);
  if (scale_columns)
    for (int j = 0; j < coeffs; ++j) scale(j) = 1.0 / a.col(j).norm();
  const RMatrix as = a * scale.asDiagonal();
  const auto qr = as.colPivHouseholderQr();
  const RVector re = qr.solve(RVector(target.values.real()));
  const RVector im = qr.solve(RVector(target.values.imag()));
  MomentFit fit;
  fit.coeffs = CVector(coeffs);
  for (int j = 0; j < coeffs; ++j) fit.coeffs(j) = cplx(re(j), im(j)) * scale(j);
  const CVector resid = a.cast<cplx>() * fit.coeffs - target.values;
  fit.residual = resid.norm() / std::max(1.0, target.values.norm());
  fit.cond_raw = condition_number(a);
  fit.cond_scaled = condition_number(as);
  return fit;
}

}  // namespace bqha

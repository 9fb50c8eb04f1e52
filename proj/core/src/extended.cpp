#include "bqha/extended.hpp"

#include <cmath>

#include "bqha/special.hpp"
#include "bqha/translation.hpp"

namespace bqha {

namespace {

CVector axis_point(int n, double r) {
  CVector z = CVector::Zero(n);
  z(0) = r;
  return z;
}

}  // namespace

ExtendedRadialOperator::ExtendedRadialOperator(int n, CVector levels, cplx limit)
    : rows_(n, static_cast<int>(levels.size()) - 1), levels_(std::move(levels)), limit_(limit) {}

ExtendedRadialOperator ExtendedRadialOperator::toeplitz(const RadialProfile& a, int n, int depth) {
  return {n, moment_levels_deep(a, n, depth).values, a(1.0)};
}

ExtendedRadialOperator ExtendedRadialOperator::from_radial(const RadialOperator& s, int depth) {
  const int d = s.basis().max_degree();
  if (depth < d) throw DomainError("depth must not be below the operator's degree");
  CVector lv = CVector::Zero(depth + 1);
  lv.head(d + 1) = s.levels();
  return {s.basis().n(), lv, 0.0};
}

ExtendedRadialOperator ExtendedRadialOperator::composite(const RadialProfile& a, const RadialOperator& s, int depth) {
  const int n = s.basis().n();
  const BasisSpec rows(n, depth);
  const int top = s.support_degree();
  if (top > depth) throw DomainError("depth must cover the operator's support");
  CVector lv = CVector::Zero(depth + 1);
  if (top < 0) return {n, lv, 0.0};
  const int cols = rows.degree_end(top);
  CVector lam(cols);
  for (int c = 0; c < cols; ++c) lam(c) = s.level(rows.degree(c));

  // level_k = (1/d_k) int a(z) Tr(E_k pi~(z) A) dlambda(z); the integrand is radial,
  // dlambda = n t^{n-1} (1-t)^{-(n+1)} dt for radial functions.
  const int panels = std::max(64, depth / 8);
  std::vector<double> cuts = a.t_breaks();
  for (int p = 1; p < panels; ++p) cuts.push_back(static_cast<double>(p) / panels);
  const Rule1D rule = composite_gauss_legendre(32, 0.0, 1.0, cuts);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double t = rule.nodes[q];
    const double r = std::sqrt(t);
    const CMatrix m = series_columns(rows, cols, translation_series(axis_point(n, r)));
    const cplx w = rule.weights[q] * n * std::pow(t, n - 1) * std::pow(1.0 - t, -(n + 1.0)) * a(r);
    for (int i = 0; i < rows.dim(); ++i) {
      cplx acc = 0.0;
      for (int c = 0; c < cols; ++c) acc += lam(c) * std::norm(m(i, c));
      lv(rows.degree(i)) += w * acc;
    }
  }
  for (int k = 0; k <= depth; ++k) lv(k) /= level_multiplicity(n, k);
  return {n, lv, a(1.0) * s.trace()};
}

RadialOperator ExtendedRadialOperator::truncate(const BasisSpec& basis) const {
  if (basis.n() != n() || basis.max_degree() > depth()) throw DimensionMismatch("basis exceeds the known levels");
  return {basis, levels_.head(basis.max_degree() + 1)};
}

ColumnExpectations column_expectations(const ExtendedRadialOperator& s, double r, int max_degree) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0, 1)");
  const BasisSpec& rows = s.rows();
  if (max_degree > rows.max_degree()) throw DomainError("column degree exceeds depth");
  const int cols = rows.degree_end(max_degree);
  const CMatrix m = series_columns(rows, cols, translation_series(axis_point(s.n(), r)));
  ColumnExpectations e{CVector(cols), RVector(cols), std::abs(s.levels()(s.depth()) - s.limit())};
  for (int c = 0; c < cols; ++c) {
    cplx acc = 0.0;
    double mass = 0.0;
    for (int i = 0; i < rows.dim(); ++i) {
      const double p = std::norm(m(i, c));
      acc += s.levels()(rows.degree(i)) * p;
      mass += p;
    }
    const double lost = std::max(0.0, 1.0 - mass);
    e.values(c) = acc + s.limit() * lost;
    e.lost_mass(c) = lost;
  }
  return e;
}

Evaluation alpha_berezin(const ColumnExpectations& e, const ExtendedRadialOperator& s, double alpha,
                         int phi_degree) {
  const LevelSequence pl = phi_alpha_levels(alpha, s.n(), phi_degree);
  const BasisSpec& rows = s.rows();
  int top = phi_degree;
  if (is_integer(alpha) && alpha < phi_degree) top = static_cast<int>(std::round(alpha));
  const int cols = rows.degree_end(top);
  if (cols > e.values.size()) throw DomainError("expectations do not cover the Phi_alpha support");
  cplx v = 0.0;
  double rem = 0.0;
  double tail = 0.0;
  for (int c = 0; c < cols; ++c) {
    const cplx lam = pl.values(rows.degree(c));
    v += lam * e.values(c);
    rem += std::abs(lam) * e.lost_mass(c) * e.level_gap;
    tail = std::max(tail, std::sqrt(e.lost_mass(c)));
  }
  const double tt = phi_alpha_trace_tail(alpha, s.n(), phi_degree);
  if (tt != 0.0) rem += std::abs(tt) * std::max(s.levels().cwiseAbs().maxCoeff(), std::abs(s.limit()));
  return {v, tail, rem};
}

Evaluation alpha_berezin(const ExtendedRadialOperator& s, double r, double alpha, int phi_degree) {
  int top = phi_degree;
  if (is_integer(alpha) && alpha < phi_degree) top = static_cast<int>(std::round(alpha));
  return alpha_berezin(column_expectations(s, r, top), s, alpha, phi_degree);
}

}  // namespace bqha

#include "bqha/convolution.hpp"

#include <cmath>

#include "bqha/space.hpp"
#include "bqha/translation.hpp"
#include "ring_ops.hpp"

namespace bqha {

OperatorMatrix fun_conv_op(const CVector& psi, const RadialOperator& a, const QuadratureGrid& grid) {
  const BasisSpec& basis = a.basis();
  if (static_cast<std::size_t>(psi.size()) != grid.size()) throw DimensionMismatch("sample count does not match the grid");
  if (grid.n() != basis.n()) throw DimensionMismatch("grid and basis have different dimension");
  const int n = basis.n();
  const int kmax = basis.max_degree();
  const int cols = a.support_degree() < 0 ? 0 : basis.degree_end(a.support_degree());
  const AngularSpectrum layout(n, kmax);
  const detail::FrequencyTable freq(basis, layout);
  CMatrix acc = CMatrix::Zero(basis.dim(), basis.dim());
  if (cols == 0) return {basis, acc};
  CVector lam(cols);
  for (int c = 0; c < cols; ++c) lam(c) = a.level(basis.degree(c));
  for (int r = 0; r < grid.ring_count(); ++r) {
    const std::span<const cplx> ring(psi.data() + static_cast<std::size_t>(r) * grid.ring_size(), grid.ring_size());
    const AngularSpectrum spec = ring_spectrum(grid, ring, kmax);
    // Rows beyond the top level of A still matter: pi(z) spreads e_c over all degrees.
    const CMatrix m = series_columns(basis, cols, translation_series(detail::ring_point(grid, r)));
    const CMatrix x = m * lam.asDiagonal() * m.adjoint();
    const double w = grid.ring_weight(r) * std::pow(1.0 - grid.ring_t(r), -(n + 1.0));
    detail::accumulate_ring(acc, x, spec, w, freq);
  }
  return {basis, acc};
}

ConvolutionResult fun_conv_op(const SymbolFunction& psi, const OperatorMatrix& s, const QuadratureGrid& grid,
                              double r_max) {
  if (!(r_max > 0.0 && r_max <= 1.0)) throw DomainError("integration radius must lie in (0, 1]");
  const RadialOperator a = radial_part(s);
  const auto eval = [&psi](const BallPoint& z) { return psi(z); };
  const double t_max = r_max * r_max;
  const QuadratureGrid inner = grid.restricted(0.0, t_max).with_breaks(psi.t_breaks());
  OperatorMatrix value = fun_conv_op(sample(inner, eval), a, inner);
  double rem = 0.0;
  if (t_max < 1.0) {
    const QuadratureGrid shell = grid.restricted(t_max, 1.0).with_breaks(psi.t_breaks());
    rem = op_norm(fun_conv_op(sample(shell, eval), a, shell));
  }
  return {std::move(value), rem};
}

cplx op_conv_op(const OperatorMatrix& s, const OperatorMatrix& a, const BallPoint& z) {
  return trace(OperatorMatrix(s.basis(), s.entries() * translate_operator(a, z).value.entries()));
}

cplx op_conv_op(const OperatorMatrix& s, const OperatorMatrix& a, const GroupElement& g) {
  return trace(OperatorMatrix(s.basis(), s.entries() * translate_operator(a, g).value.entries()));
}

namespace {

cplx sphere_average(const SymbolFunction& g, double rho, const QuadratureGrid& grid) {
  if (g.is_radial()) return (*g.profile())(rho);
  cplx s = 0.0;
  const auto& pts = grid.sphere_points();
  const auto& wts = grid.sphere_weights();
  for (std::size_t i = 0; i < pts.size(); ++i) s += wts[i] * g(BallPoint(CVector(rho * pts[i])));
  return s;
}

}  // namespace

FunctionConvolution fun_conv_fun(const SymbolFunction& f, const SymbolFunction& g, const BallPoint& w,
                                 const QuadratureGrid& grid) {
  if (!(f.is_integrable() && g.is_bounded()) && !(g.is_integrable() && f.is_bounded()))
    throw DomainError("convolution needs one integrable and one bounded factor");
  const int n = grid.n();
  const auto integrand = [&](const QuadratureGrid& q, bool absolute) {
    const QuadratureGrid gq = q.with_breaks(f.t_breaks());
    cplx s = 0.0;
    for (std::size_t i = 0; i < gq.size(); ++i) {
      const BallPoint z = gq.node(i);
      const double rho = involution_map(z, w).norm();
      const cplx v = f(z) * sphere_average(g, rho, grid) * std::pow(1.0 - z.norm2(), -(n + 1.0));
      s += gq.weight(i) * (absolute ? cplx(std::abs(v)) : v);
    }
    return s;
  };
  const cplx value = integrand(grid, false);
  double rem = 0.0;
  if (!grid.covers_ball()) {
    if (grid.t_lo() > 0.0) rem += integrand(grid.restricted(0.0, grid.t_lo()), true).real();
    if (grid.t_hi() < 1.0) rem += integrand(grid.restricted(grid.t_hi(), 1.0), true).real();
  }
  return {value, rem};
}

cplx fun_conv_fun(const CVector& f, const SymbolFunction& g, const BallPoint& w, const QuadratureGrid& grid) {
  if (static_cast<std::size_t>(f.size()) != grid.size()) throw DimensionMismatch("sample count does not match the grid");
  if (!grid.covers_ball()) throw DomainError("sampled convolution needs a grid over the whole ball");
  const int n = grid.n();
  cplx s = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const BallPoint z = grid.node(i);
    const double rho = involution_map(z, w).norm();
    s += grid.weight(i) * f(static_cast<Eigen::Index>(i)) * sphere_average(g, rho, grid) *
         std::pow(1.0 - z.norm2(), -(n + 1.0));
  }
  return s;
}

SymbolFunction radialize_fun(const SymbolFunction& f, const QuadratureGrid& grid) {
  if (f.is_radial()) return f;
  const QuadratureGrid g = grid;
  auto avg = [f, g](double r) { return sphere_average(f, r, g); };
  return SymbolFunction::radial(f.name() + "#", {avg, {}}, f.traits());
}

}  // namespace bqha

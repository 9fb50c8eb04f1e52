#include "bqha/space.hpp"

#include <cmath>

#include "bqha/special.hpp"

namespace bqha {

namespace {

void check_samples(const CVector& samples, const QuadratureGrid& grid) {
  if (static_cast<std::size_t>(samples.size()) != grid.size())
    throw DimensionMismatch("sample count does not match the grid");
}

}  // namespace

KernelParams::KernelParams(double a) : alpha(a) {
  if (alpha <= -1.0) throw DomainError("weight parameter must exceed -1");
}

double KernelParams::weight_constant(int n) const { return bqha::weight_constant(n, alpha); }

cplx kernel(const KernelParams& params, const BallPoint& z, const BallPoint& w) {
  if (z.dim() != w.dim()) throw DimensionMismatch("points of different dimension");
  const double e = z.dim() + 1.0 + params.alpha;
  const cplx base = 1.0 - inner(w.coords(), z.coords());
  if (is_integer(e)) {
    cplx p = 1.0;
    for (int k = 0; k < static_cast<int>(std::round(e)); ++k) p *= base;
    return 1.0 / p;
  }
  return std::pow(base, -e);
}

CoeffVector normalized_kernel(const KernelParams& params, const BasisSpec& basis, const BallPoint& z) {
  if (z.dim() != basis.n()) throw DimensionMismatch("point has wrong dimension");
  const int n = basis.n();
  const double c = n + 1.0 + params.alpha;
  CVector v = basis_values(basis, z.coords());
  for (int i = 0; i < basis.dim(); ++i) {
    double scale = 1.0;
    if (params.alpha != 0.0) {
      // Ratio between the alpha-weighted and unweighted normalizations.
      const int k = basis.degree(i);
      const double lw = std::lgamma(n + k + params.alpha + 1.0) - std::lgamma(n + params.alpha + 1.0);
      const double lu = log_factorial(n + k) - log_factorial(n);
      scale = std::exp(0.5 * (lw - lu));
    }
    v(i) = scale * std::conj(v(i));
  }
  v *= std::pow(1.0 - z.norm2(), 0.5 * c);
  return {basis, v};
}

CVector sample(const QuadratureGrid& grid, const std::function<cplx(const BallPoint&)>& f) {
  CVector s(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) s(i) = f(grid.node(i));
  return s;
}

CoeffVector project(const BasisSpec& basis, const CVector& samples, const QuadratureGrid& grid) {
  check_samples(samples, grid);
  if (grid.n() != basis.n()) throw DimensionMismatch("grid and basis have different dimension");
  const int kmax = basis.max_degree();
  CVector c = CVector::Zero(basis.dim());
  std::vector<int> freq(basis.n());
  for (int r = 0; r < grid.ring_count(); ++r) {
    const std::span<const cplx> ring(samples.data() + static_cast<std::size_t>(r) * grid.ring_size(),
                                     grid.ring_size());
    const AngularSpectrum spec = ring_spectrum(grid, ring, kmax);
    const RVector x = grid.ring_base(r);
    const CVector v = basis_values(basis, x.cast<cplx>());
    for (int i = 0; i < basis.dim(); ++i) {
      const MultiIndex& m = basis.index(i);
      for (int d = 0; d < basis.n(); ++d) freq[d] = m[d];
      c(i) += grid.ring_weight(r) * v(i).real() * spec[spec.offset(freq)];
    }
  }
  return {basis, c};
}

cplx integrate(const CVector& samples, const QuadratureGrid& grid) {
  check_samples(samples, grid);
  cplx s = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) s += grid.weight(i) * samples(i);
  return s;
}

cplx integrate_invariant(const CVector& samples, const QuadratureGrid& grid) {
  check_samples(samples, grid);
  cplx s = 0.0;
  for (int r = 0; r < grid.ring_count(); ++r) {
    const double dens = std::pow(1.0 - grid.ring_t(r), -(grid.n() + 1.0));
    cplx ring = 0.0;
    for (int a = 0; a < grid.ring_size(); ++a) ring += samples(static_cast<std::size_t>(r) * grid.ring_size() + a);
    s += grid.ring_weight(r) / grid.ring_size() * dens * ring;
  }
  return s;
}

}  // namespace bqha

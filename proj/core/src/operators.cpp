#include "bqha/operators.hpp"

#include <cmath>
#include <limits>

#include "bqha/space.hpp"
#include "bqha/special.hpp"
#include "bqha/translation.hpp"
#include "ring_ops.hpp"

namespace bqha {

namespace detail {

FrequencyTable::FrequencyTable(const BasisSpec& basis, const AngularSpectrum& layout) : dim_(basis.dim()) {
  off_.resize(static_cast<std::size_t>(dim_) * dim_);
  std::vector<int> k(basis.n());
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int c = 0; c < basis.n(); ++c) k[c] = basis.index(i)[c] - basis.index(j)[c];
      off_[static_cast<std::size_t>(i) * dim_ + j] = layout.offset(k);
    }
  }
}

void accumulate_ring(CMatrix& acc, const CMatrix& y, const AngularSpectrum& spec, double weight,
                     const FrequencyTable& freq) {
  for (int j = 0; j < acc.cols(); ++j)
    for (int i = 0; i < acc.rows(); ++i) acc(i, j) += weight * y(i, j) * spec[freq(i, j)];
}

}  // namespace detail

namespace {

void require_same(const BasisSpec& a, const BasisSpec& b) {
  if (!(a == b)) throw DimensionMismatch("operators live on different truncated spaces");
}

// Number of leading basis elements carrying the nonzero levels.
int support_columns(const BasisSpec& basis, const CVector& levels) {
  int top = -1;
  for (int k = 0; k < levels.size(); ++k)
    if (levels(k) != 0.0) top = k;
  return top < 0 ? 0 : basis.degree_end(top);
}

}  // namespace

OperatorMatrix::OperatorMatrix(BasisSpec basis, CMatrix entries) : basis_(std::move(basis)), m_(std::move(entries)) {
  if (m_.rows() != basis_.dim() || m_.cols() != basis_.dim())
    throw DimensionMismatch("operator matrix size does not match the basis");
}

OperatorMatrix OperatorMatrix::identity(const BasisSpec& basis) {
  return {basis, CMatrix::Identity(basis.dim(), basis.dim())};
}

OperatorMatrix OperatorMatrix::zero(const BasisSpec& basis) { return {basis, CMatrix::Zero(basis.dim(), basis.dim())}; }

OperatorMatrix OperatorMatrix::rank_one(const CoeffVector& u, const CoeffVector& v) {
  require_same(u.basis, v.basis);
  return {u.basis, u.coeffs * v.coeffs.adjoint()};
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same(a.basis(), b.basis());
  return {a.basis(), a.entries() + b.entries()};
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same(a.basis(), b.basis());
  return {a.basis(), a.entries() - b.entries()};
}

OperatorMatrix operator*(cplx s, const OperatorMatrix& a) { return {a.basis(), s * a.entries()}; }

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same(a.basis(), b.basis());
  return {a.basis(), a.entries() * b.entries()};
}

RadialOperator::RadialOperator(BasisSpec basis, CVector levels) : basis_(std::move(basis)), levels_(std::move(levels)) {
  if (levels_.size() != basis_.max_degree() + 1) throw DimensionMismatch("level count must be D + 1");
}

OperatorMatrix RadialOperator::to_matrix() const {
  CMatrix m = CMatrix::Zero(basis_.dim(), basis_.dim());
  for (int i = 0; i < basis_.dim(); ++i) m(i, i) = levels_(basis_.degree(i));
  return {basis_, m};
}

cplx RadialOperator::trace() const { return level_sequence().trace(); }

int RadialOperator::support_degree() const {
  for (int k = static_cast<int>(levels_.size()) - 1; k >= 0; --k)
    if (levels_(k) != 0.0) return k;
  return -1;
}

OperatorMatrix toeplitz(const CVector& samples, const QuadratureGrid& grid, const BasisSpec& basis) {
  if (static_cast<std::size_t>(samples.size()) != grid.size())
    throw DimensionMismatch("sample count does not match the grid");
  if (grid.n() != basis.n()) throw DimensionMismatch("grid and basis have different dimension");
  const int kmax = basis.max_degree();
  const AngularSpectrum layout(basis.n(), kmax);
  const detail::FrequencyTable freq(basis, layout);
  CMatrix acc = CMatrix::Zero(basis.dim(), basis.dim());
  for (int r = 0; r < grid.ring_count(); ++r) {
    const std::span<const cplx> ring(samples.data() + static_cast<std::size_t>(r) * grid.ring_size(),
                                     grid.ring_size());
    const AngularSpectrum spec = ring_spectrum(grid, ring, kmax);
    const CVector v = basis_values(basis, detail::ring_point(grid, r));
    const RVector vr = v.real();
    detail::accumulate_ring(acc, (vr * vr.transpose()).cast<cplx>(), spec, grid.ring_weight(r), freq);
  }
  return {basis, acc};
}

OperatorMatrix toeplitz(const SymbolFunction& a, const QuadratureGrid& grid, const BasisSpec& basis) {
  const QuadratureGrid g = grid.with_breaks(a.t_breaks());
  return toeplitz(sample(g, [&a](const BallPoint& z) { return a(z); }), g, basis);
}

RadialOperator toeplitz_radial(const RadialProfile& a, const BasisSpec& basis) {
  return {basis, moment_levels(a, basis.n(), basis.max_degree()).values};
}

OperatorMatrix phi(const BasisSpec& basis) {
  CMatrix m = CMatrix::Zero(basis.dim(), basis.dim());
  m(0, 0) = 1.0;
  return {basis, m};
}

PhiAlpha phi_alpha(double alpha, const BasisSpec& basis) {
  if (alpha <= -1.0) throw DomainError("weight parameter must exceed -1");
  const LevelSequence l = phi_alpha_levels(alpha, basis.n(), basis.max_degree());
  return {RadialOperator(basis, l.values), phi_alpha_trace_tail(alpha, basis.n(), basis.max_degree())};
}

Evaluation berezin(const OperatorMatrix& s, const BallPoint& z) {
  const CoeffVector k = normalized_kernel(KernelParams(0.0), s.basis(), z);
  const cplx v = k.coeffs.dot(s.entries() * k.coeffs);
  return {v, std::sqrt(std::max(0.0, 1.0 - k.coeffs.squaredNorm())), 0.0};
}

TranslationMatrix pi_matrix(const BasisSpec& basis, const BallPoint& z) {
  if (z.dim() != basis.n()) throw DimensionMismatch("point has wrong dimension");
  CMatrix m = series_columns(basis, basis.dim(), translation_series(z.coords()));
  RVector t = column_tails(m);
  return {OperatorMatrix(basis, std::move(m)), std::move(t)};
}

TranslationMatrix representation_matrix(const BasisSpec& basis, const GroupElement& g) {
  if (g.dim() != basis.n()) throw DimensionMismatch("group element has wrong dimension");
  CMatrix m = series_columns(basis, basis.dim(), representation_series(g));
  RVector t = column_tails(m);
  return {OperatorMatrix(basis, std::move(m)), std::move(t)};
}

TranslatedVector translate_vector(const CoeffVector& f, const BallPoint& z) {
  const TranslationMatrix p = pi_matrix(f.basis, z);
  CVector out = p.matrix.entries() * f.coeffs;
  const double tail = std::sqrt(std::max(0.0, f.coeffs.squaredNorm() - out.squaredNorm()));
  return {{f.basis, std::move(out)}, tail};
}

TranslatedVector translate_vector_quadrature(const CoeffVector& f, const BallPoint& z, const QuadratureGrid& grid) {
  const int n = f.basis.n();
  const double pref = std::pow(1.0 - z.norm2(), 0.5 * (n + 1));
  const KernelParams k0(0.0);
  const CVector samples = sample(grid, [&](const BallPoint& w) {
    return pref * kernel(k0, z, w) * evaluate(f, involution_map(z, w));
  });
  CoeffVector out = project(f.basis, samples, grid);
  const double tail = std::sqrt(std::max(0.0, f.coeffs.squaredNorm() - out.coeffs.squaredNorm()));
  return {std::move(out), tail};
}

TranslatedOperator translate_operator(const OperatorMatrix& s, const BallPoint& z) {
  const TranslationMatrix p = pi_matrix(s.basis(), z);
  const CMatrix& m = p.matrix.entries();
  return {OperatorMatrix(s.basis(), m * s.entries() * m), p.max_tail()};
}

TranslatedOperator translate_operator(const OperatorMatrix& s, const GroupElement& g) {
  const TranslationMatrix p = representation_matrix(s.basis(), g);
  const CMatrix& m = p.matrix.entries();
  // The compression of pi(g)^{-1} = pi(g)* is the adjoint of the compression of pi(g).
  return {OperatorMatrix(s.basis(), m * s.entries() * m.adjoint()), p.max_tail()};
}

Evaluation alpha_berezin(const OperatorMatrix& s, const BallPoint& z, double alpha) {
  const BasisSpec& basis = s.basis();
  if (z.dim() != basis.n()) throw DimensionMismatch("point has wrong dimension");
  const PhiAlpha pa = phi_alpha(alpha, basis);
  const int cols = support_columns(basis, pa.op.levels());
  const CMatrix m = series_columns(basis, cols, translation_series(z.coords()));
  const RVector tails = column_tails(m);
  const CMatrix sm = s.entries() * m;
  cplx v = 0.0;
  for (int c = 0; c < cols; ++c) v += pa.op.level(basis.degree(c)) * m.col(c).dot(sm.col(c));
  const double rem = pa.trace_tail == 0.0 ? 0.0 : std::abs(pa.trace_tail) * op_norm(s);
  return {v, cols ? tails.maxCoeff() : 0.0, rem};
}

CVector translated_trace_samples(const OperatorMatrix& s, const RadialOperator& a, const QuadratureGrid& grid) {
  const BasisSpec& basis = s.basis();
  require_same(basis, a.basis());
  if (grid.n() != basis.n()) throw DimensionMismatch("grid and basis have different dimension");
  const int cols = support_columns(basis, a.levels());
  const AngularSpectrum layout(basis.n(), basis.max_degree());
  const detail::FrequencyTable freq(basis, layout);
  CVector out = CVector::Zero(grid.size());
  if (cols == 0) return out;
  CVector lam(cols);
  for (int c = 0; c < cols; ++c) lam(c) = a.level(basis.degree(c));
  const CMatrix& sm = s.entries();
  std::vector<cplx> ring(grid.ring_size());
  for (int r = 0; r < grid.ring_count(); ++r) {
    const CMatrix m = series_columns(basis, cols, translation_series(detail::ring_point(grid, r)));
    const CMatrix x = m * lam.asDiagonal() * m.adjoint();
    // Tr(S U X U*) = sum_{i,j} S(j,i) X(i,j) e^{i (m_j - m_i) theta}.
    AngularSpectrum spec(basis.n(), basis.max_degree());
    for (int j = 0; j < basis.dim(); ++j)
      for (int i = 0; i < basis.dim(); ++i) spec[freq(j, i)] += sm(j, i) * x(i, j);
    ring_synthesize(grid, spec, ring);
    for (int q = 0; q < grid.ring_size(); ++q) out(static_cast<std::size_t>(r) * grid.ring_size() + q) = ring[q];
  }
  return out;
}

CVector alpha_berezin_samples(const OperatorMatrix& s, double alpha, const QuadratureGrid& grid) {
  return translated_trace_samples(s, phi_alpha(alpha, s.basis()).op, grid);
}

RadialOperator radial_part(const OperatorMatrix& s) {
  const BasisSpec& basis = s.basis();
  CVector lv(basis.max_degree() + 1);
  for (int k = 0; k <= basis.max_degree(); ++k) {
    cplx tr = 0.0;
    for (int i = basis.degree_begin(k); i < basis.degree_end(k); ++i) tr += s(i, i);
    lv(k) = tr / static_cast<double>(basis.degree_end(k) - basis.degree_begin(k));
  }
  return {basis, lv};
}

OperatorMatrix radialize(const OperatorMatrix& s) { return radial_part(s).to_matrix(); }

namespace {

double power_iteration_norm(const CMatrix& a) {
  CVector v = CVector::Ones(a.cols()) / std::sqrt(static_cast<double>(a.cols()));
  double sigma = 0.0;
  for (int it = 0; it < 5000; ++it) {
    CVector w = a.adjoint() * (a * v);
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    w /= nw;
    const double next = std::sqrt(nw);
    v = w;
    if (std::abs(next - sigma) <= 1e-10 * std::max(1.0, next)) return next;
    sigma = next;
  }
  return sigma;
}

RVector singular_values(const CMatrix& a) { return Eigen::BDCSVD<CMatrix>(a).singularValues(); }

}  // namespace

double schatten_norm(const OperatorMatrix& s, double p) {
  if (p < 1.0) throw DomainError("Schatten exponent must be at least 1");
  if (std::isinf(p)) return op_norm(s);
  const RVector sv = singular_values(s.entries());
  if (p == 1.0) return sv.sum();
  return std::pow(sv.array().pow(p).sum(), 1.0 / p);
}

double schatten_norm(const RadialOperator& s, double p) {
  if (p < 1.0) throw DomainError("Schatten exponent must be at least 1");
  const int n = s.basis().n();
  if (std::isinf(p)) return s.levels().cwiseAbs().maxCoeff();
  double acc = 0.0;
  for (int k = 0; k < s.levels().size(); ++k) acc += level_multiplicity(n, k) * std::pow(std::abs(s.level(k)), p);
  return std::pow(acc, 1.0 / p);
}

double op_norm(const OperatorMatrix& s) {
  if (s.dim() <= 400) return singular_values(s.entries())(0);
  return power_iteration_norm(s.entries());
}

cplx trace(const OperatorMatrix& s) { return s.entries().trace(); }

}  // namespace bqha

#include "common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bqha::harness::detail {

BallPoint random_point(int n, double r_max, Rng& rng) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, r_max);
  CVector z(n);
  for (int c = 0; c < n; ++c) z(c) = cplx(g(rng), g(rng));
  z *= u(rng) / z.norm();
  return BallPoint(z);
}

CMatrix random_unitary(int n, Rng& rng) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m.householderQr().householderQ();
}

GroupElement random_group(int n, double r_max, Rng& rng) {
  const BallPoint z = random_point(n, r_max, rng);
  return boost(z) * unitary_embed(random_unitary(n, rng));
}

OperatorMatrix random_low_degree_operator(const BasisSpec& basis, int top, Rng& rng, bool hermitian) {
  std::normal_distribution<double> g;
  const int cols = basis.degree_end(std::min(top, basis.max_degree()));
  CMatrix m = CMatrix::Zero(basis.dim(), basis.dim());
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng)) / static_cast<double>(cols);
  if (hermitian) m = (0.5 * (m + m.adjoint())).eval();
  return {basis, m};
}

RadialOperator random_low_degree_radial(const BasisSpec& basis, int top, Rng& rng) {
  std::normal_distribution<double> g;
  CVector lv = CVector::Zero(basis.max_degree() + 1);
  for (int k = 0; k <= std::min(top, basis.max_degree()); ++k) lv(k) = cplx(g(rng), g(rng));
  return {basis, lv};
}

namespace {

CVector sign_levels(int depth) {
  CVector lv(depth + 1);
  for (int k = 0; k <= depth; ++k) lv(k) = k % 2 ? -1.0 : 1.0;
  return lv;
}

}  // namespace

OperatorMatrix operator_matrix(const Config& cfg, const OperatorSpec& op) {
  const BasisSpec basis = cfg.basis();
  if (op.kind == "toeplitz") return toeplitz_radial(*op.symbol.make().profile(), basis).to_matrix();
  if (op.kind == "identity") return OperatorMatrix::identity(basis);
  if (op.kind == "sign_diagonal") return RadialOperator(basis, sign_levels(cfg.D)).to_matrix();
  if (op.kind == "composite") {
    const ExtendedRadialOperator e = extended_operator(cfg, op);
    return e.truncate(basis).to_matrix();
  }
  if (op.kind == "rank_one") {
    CoeffVector u{basis, CVector::Zero(basis.dim())};
    CoeffVector v{basis, CVector::Zero(basis.dim())};
    u.coeffs(op.u) = 1.0;
    v.coeffs(op.v) = 1.0;
    return OperatorMatrix::rank_one(u, v);
  }
  return read_operator(op.path);
}

ExtendedRadialOperator extended_operator(const Config& cfg, const OperatorSpec& op) {
  const int depth = cfg.depth();
  if (op.kind == "toeplitz") return ExtendedRadialOperator::toeplitz(*op.symbol.make().profile(), cfg.n, depth);
  if (op.kind == "identity") return ExtendedRadialOperator::toeplitz(*symbols::constant(1.0).profile(), cfg.n, depth);
  if (op.kind == "composite") {
    const BasisSpec small(cfg.n, static_cast<int>(std::lround(op.beta)));
    return ExtendedRadialOperator::composite(*op.symbol.make().profile(), phi_alpha(op.beta, small).op, depth);
  }
  if (op.kind == "sign_diagonal") return {cfg.n, sign_levels(depth), 0.0};
  throw DomainError("operator kind '" + op.kind + "' is not radial");
}

double operator_sup(const OperatorSpec& op) {
  if (op.kind == "toeplitz") return op.symbol.sup_norm();
  if (op.kind == "identity") return 1.0;
  return std::numeric_limits<double>::infinity();
}

ExtendedBerezin::ExtendedBerezin(ExtendedRadialOperator s, int phi_degree, int max_column_degree)
    : s_(std::move(s)), phi_degree_(phi_degree), cols_(max_column_degree) {}

Evaluation ExtendedBerezin::operator()(double r, double alpha) {
  auto it = cache_.find(r);
  if (it == cache_.end()) it = cache_.emplace(r, column_expectations(s_, r, cols_)).first;
  return alpha_berezin(it->second, s_, alpha, phi_degree_);
}

int phi_support_degree(const std::vector<double>& alphas, int phi_degree) {
  int top = 0;
  for (double a : alphas) {
    if (is_integer(a) && a < phi_degree)
      top = std::max(top, static_cast<int>(std::lround(a)));
    else
      top = phi_degree;
  }
  return top;
}

Rule1D graded_t_rule() {
  std::vector<double> cuts;
  for (int i = 1; i <= 24; ++i) cuts.push_back(1.0 - std::ldexp(1.0, -i));
  return composite_gauss_legendre(16, 0.0, 1.0, cuts);
}

std::vector<double> criterion_radii(const QuadratureGrid& grid, double r_max) {
  std::vector<double> t{0.0};
  for (int r = 0; r < grid.ring_count(); ++r)
    if (grid.ring_t(r) <= r_max * r_max) t.push_back(grid.ring_t(r));
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  std::vector<double> radii;
  for (double x : t) radii.push_back(std::sqrt(x));
  return radii;
}

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace bqha::harness::detail

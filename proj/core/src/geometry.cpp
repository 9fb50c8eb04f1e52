#include "bqha/geometry.hpp"

#include <cmath>
#include <string>

#include "bqha/special.hpp"

namespace bqha {

namespace {

CMatrix form_matrix(int n) {
  CMatrix j = CMatrix::Identity(n + 1, n + 1);
  j(n, n) = -1.0;
  return j;
}

}  // namespace

cplx inner(const CVector& a, const CVector& b) { return b.dot(a); }

BallPoint::BallPoint(CVector coords) : z_(std::move(coords)) {
  if (z_.size() < 1) throw DomainError("ball point needs at least one coordinate");
  if (!(z_.squaredNorm() < 1.0)) throw DomainError("point is not inside the unit ball");
}

BallPoint::BallPoint(std::initializer_list<cplx> coords)
    : BallPoint(CVector(Eigen::Map<const CVector>(coords.begin(), coords.size()))) {}

BallPoint BallPoint::origin(int n) { return BallPoint(CVector::Zero(n)); }

GroupElement::GroupElement(CMatrix mat, double tol) : m_(std::move(mat)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2)
    throw DomainError("group element must be a square matrix of size n+1 >= 2");
  if (form_defect() > tol) throw DomainError("matrix does not preserve the form of signature (n,1)");
  const double scale = std::max(1.0, m_.squaredNorm());
  if (std::abs(m_.determinant() - 1.0) > tol * scale) throw DomainError("group element must have determinant 1");
}

GroupElement GroupElement::identity(int n) {
  return GroupElement(CMatrix::Identity(n + 1, n + 1), Unchecked{});
}

GroupElement GroupElement::inverse() const {
  const CMatrix j = form_matrix(dim());
  return GroupElement(j * m_.adjoint() * j, Unchecked{});
}

GroupElement GroupElement::operator*(const GroupElement& h) const {
  if (h.dim() != dim()) throw DimensionMismatch("group elements of different dimension");
  return GroupElement(m_ * h.m_, Unchecked{});
}

double GroupElement::form_defect() const {
  const CMatrix j = form_matrix(dim());
  const double scale = std::max(1.0, m_.squaredNorm());
  return (m_.adjoint() * j * m_ - j).cwiseAbs().maxCoeff() / scale;
}

BallPoint mobius_act(const GroupElement& g, const BallPoint& z) {
  if (g.dim() != z.dim()) throw DimensionMismatch("group element and point have different dimension");
  const int n = g.dim();
  const CMatrix& m = g.matrix();
  const CVector num = m.topLeftCorner(n, n) * z.coords() + m.topRightCorner(n, 1);
  const cplx den = (m.bottomLeftCorner(1, n) * z.coords())(0) + m(n, n);
  if (std::abs(den) < 1e-14) throw SingularMapError("Mobius denominator vanishes");
  return BallPoint(CVector(num / den));
}

BallPoint involution_map(const BallPoint& z, const BallPoint& w) {
  if (z.dim() != w.dim()) throw DimensionMismatch("points of different dimension");
  const double r2 = z.norm2();
  if (r2 == 0.0) return BallPoint(CVector(-w.coords()));
  const cplx wz = inner(w.coords(), z.coords());
  const CVector pw = (wz / r2) * z.coords();
  const CVector qw = w.coords() - pw;
  const double s = std::sqrt(1.0 - r2);
  return BallPoint(CVector((z.coords() - pw - s * qw) / (1.0 - wz)));
}

GroupElement boost(const BallPoint& z) {
  const int n = z.dim();
  const double r2 = z.norm2();
  const double gamma = 1.0 / std::sqrt(1.0 - r2);
  CMatrix m = CMatrix::Identity(n + 1, n + 1);
  if (r2 > 0.0) {
    const CVector zh = z.coords() / std::sqrt(r2);
    m.topLeftCorner(n, n) += (gamma - 1.0) * zh * zh.adjoint();
  }
  m.topRightCorner(n, 1) = gamma * z.coords();
  m.bottomLeftCorner(1, n) = gamma * z.coords().adjoint();
  m(n, n) = gamma;
  // det is 1 analytically; remove rounding drift with a scalar phase.
  const cplx det = m.determinant();
  m *= std::pow(det, -1.0 / (n + 1));
  return GroupElement(m);
}

GroupElement unitary_embed(const CMatrix& a) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || n < 1) throw DomainError("unitary block must be square");
  if ((a.adjoint() * a - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12)
    throw DomainError("matrix is not unitary");
  CMatrix m = CMatrix::Zero(n + 1, n + 1);
  m.topLeftCorner(n, n) = a;
  m(n, n) = 1.0 / a.determinant();
  return GroupElement(m);
}

CocycleValue cocycle(const GroupElement& g, const BallPoint& z, double alpha) {
  if (alpha <= -1.0) throw DomainError("weight parameter must exceed -1");
  if (g.dim() != z.dim()) throw DimensionMismatch("group element and point have different dimension");
  const int n = g.dim();
  const cplx base = inner(z.coords(), g.block_v()) + g.block_d();
  if (std::abs(base) < 1e-14) throw SingularMapError("cocycle base vanishes");
  const double e = alpha + n + 1;
  cplx value;
  if (is_integer(e)) {
    cplx p = 1.0;
    for (int k = 0; k < static_cast<int>(std::round(e)); ++k) p *= base;
    value = 1.0 / p;
  } else {
    value = std::pow(base, -e);
  }
  return {value, alpha};
}

double invariant_density(const BallPoint& z) { return std::pow(1.0 - z.norm2(), -(z.dim() + 1.0)); }

}  // namespace bqha

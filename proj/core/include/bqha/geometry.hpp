#pragma once

#include <initializer_list>

#include "bqha/types.hpp"

namespace bqha {

// <a, b> = sum_i a_i conj(b_i), linear in the first slot.
cplx inner(const CVector& a, const CVector& b);

class BallPoint {
 public:
  explicit BallPoint(CVector coords);
  BallPoint(std::initializer_list<cplx> coords);

  static BallPoint origin(int n);

  int dim() const { return static_cast<int>(z_.size()); }
  const CVector& coords() const { return z_; }
  cplx operator[](int i) const { return z_(i); }
  double norm2() const { return z_.squaredNorm(); }
  double norm() const { return z_.norm(); }

 private:
  CVector z_;
};

// Element of SU(n,1) stored as its (n+1)x(n+1) matrix [[A, u], [v*, d]].
class GroupElement {
 public:
  // Validates g* I g = I and det g = 1 (relative tolerance).
  explicit GroupElement(CMatrix mat, double tol = 1e-12);

  static GroupElement identity(int n);

  int dim() const { return static_cast<int>(m_.rows()) - 1; }
  const CMatrix& matrix() const { return m_; }

  CMatrix block_a() const { return m_.topLeftCorner(dim(), dim()); }
  CVector block_u() const { return m_.topRightCorner(dim(), 1); }
  // Column v such that the bottom row is v*.
  CVector block_v() const { return m_.bottomLeftCorner(1, dim()).adjoint(); }
  cplx block_d() const { return m_(dim(), dim()); }

  // g^{-1} = I g* I.
  GroupElement inverse() const;
  GroupElement operator*(const GroupElement& h) const;

  // max-entry size of g* I g - I, scaled by |g|^2.
  double form_defect() const;

 private:
  struct Unchecked {};
  GroupElement(CMatrix mat, Unchecked) : m_(std::move(mat)) {}
  CMatrix m_;
};

struct CocycleValue {
  cplx value;
  double alpha;
};

// (Az + u) / (<z, v> + d).
BallPoint mobius_act(const GroupElement& g, const BallPoint& z);

// Ball automorphism exchanging 0 and z:
// (z - P_z w - s_z Q_z w) / (1 - <w, z>), s_z = sqrt(1 - |z|^2).
BallPoint involution_map(const BallPoint& z, const BallPoint& w);

// Transvection with boost(z) . 0 = z.
GroupElement boost(const BallPoint& z);

// diag(A, 1/det A) for unitary A.
GroupElement unitary_embed(const CMatrix& a);

// j_alpha(g, z) = (<z, v> + d)^{-(alpha+n+1)}, principal branch.
CocycleValue cocycle(const GroupElement& g, const BallPoint& z, double alpha);

// (1 - |z|^2)^{-(n+1)}: density of the invariant measure against dv.
double invariant_density(const BallPoint& z);

}  // namespace bqha

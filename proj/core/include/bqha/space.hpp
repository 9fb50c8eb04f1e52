#pragma once

#include <functional>

#include "bqha/basis.hpp"
#include "bqha/geometry.hpp"
#include "bqha/quadrature.hpp"
#include "bqha/types.hpp"

namespace bqha {

struct KernelParams {
  explicit KernelParams(double alpha = 0.0);

  double alpha;
  double weight_constant(int n) const;
};

// K^alpha_z(w) = (1 - <w, z>)^{-(n+1+alpha)}.
cplx kernel(const KernelParams& params, const BallPoint& z, const BallPoint& w);

// Truncated k^alpha_z in the orthonormal basis of A^2_alpha. For alpha = 0
// these are the e_m coordinates of k_z.
CoeffVector normalized_kernel(const KernelParams& params, const BasisSpec& basis, const BallPoint& z);

// Samples of f at every grid node, in grid order.
CVector sample(const QuadratureGrid& grid, const std::function<cplx(const BallPoint&)>& f);

// c_m = sum_j w_j f(z_j) conj(e_m(z_j)).
CoeffVector project(const BasisSpec& basis, const CVector& samples, const QuadratureGrid& grid);

cplx integrate(const CVector& samples, const QuadratureGrid& grid);
cplx integrate_invariant(const CVector& samples, const QuadratureGrid& grid);

}  // namespace bqha

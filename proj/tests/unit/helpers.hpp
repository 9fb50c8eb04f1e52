#pragma once

#include <random>

#include "bqha/bqha.hpp"

namespace bqha::testing {

inline CVector random_coords(int n, double radius, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector z(n);
  for (int c = 0; c < n; ++c) z(c) = cplx(g(rng), g(rng));
  return z * (radius / z.norm());
}

// Uniform radius in [0, rmax].
inline BallPoint random_point(int n, double rmax, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, rmax);
  return BallPoint(random_coords(n, u(rng), rng));
}

inline CMatrix random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix> qr(m);
  CMatrix q = qr.householderQ();
  return q;
}

inline GroupElement random_group(int n, double rmax, std::mt19937_64& rng) {
  return boost(random_point(n, rmax, rng)) * unitary_embed(random_unitary(n, rng));
}

inline OperatorMatrix random_operator(const BasisSpec& b, std::mt19937_64& rng, bool hermitian = false) {
  std::normal_distribution<double> g;
  CMatrix m(b.dim(), b.dim());
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) m(i, j) = cplx(g(rng), g(rng));
  if (hermitian) m = 0.5 * (m + m.adjoint()).eval();
  return {b, m};
}

// Random operator whose entries decay with degree, so it lives on low degrees.
inline OperatorMatrix random_low_degree_operator(const BasisSpec& b, int top, std::mt19937_64& rng,
                                                 bool hermitian = false) {
  OperatorMatrix s = random_operator(b, rng, hermitian);
  CMatrix m = s.entries();
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      if (b.degree(i) > top || b.degree(j) > top) m(i, j) = 0.0;
  return {b, m};
}

inline double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace bqha::testing

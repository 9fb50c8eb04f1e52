#include "bqha/translation.hpp"

#include <cmath>

namespace bqha {

SeriesMap translation_series(const CVector& z) {
  const int n = static_cast<int>(z.size());
  const double r2 = z.squaredNorm();
  if (!(r2 < 1.0)) throw DomainError("translation point is not inside the unit ball");
  const double s = std::sqrt(1.0 - r2);
  CMatrix l = s * CMatrix::Identity(n, n);
  if (r2 > 0.0) l += (1.0 - s) / r2 * z * z.adjoint();
  return {std::pow(1.0 - r2, 0.5 * (n + 1)), z.conjugate(), z, -l};
}

SeriesMap representation_series(const GroupElement& g) {
  const GroupElement h = g.inverse();
  const int n = h.dim();
  const cplx d = h.block_d();
  cplx pref = 1.0;
  for (int k = 0; k <= n; ++k) pref /= d;
  return {pref, CVector(-h.block_v().conjugate() / d), CVector(h.block_u() / d), CMatrix(h.block_a() / d)};
}

namespace {

// q = s / (1 - b.w), solved degree by degree.
void divide_linear(const BasisSpec& basis, const CVector& b, CVector& q) {
  const int n = basis.n();
  for (int i = 1; i < basis.dim(); ++i) {
    cplx acc = q(i);
    for (int c = 0; c < n; ++c) {
      const int l = basis.lower(i, c);
      if (l >= 0) acc += b(c) * q(l);
    }
    q(i) = acc;
  }
}

// out = (c0 + sum_j lin_j w_j) s
void multiply_linear(const BasisSpec& basis, cplx c0, const CVector& lin, const CVector& s, CVector& out) {
  const int n = basis.n();
  for (int i = 0; i < basis.dim(); ++i) {
    cplx acc = c0 * s(i);
    for (int c = 0; c < n; ++c) {
      const int l = basis.lower(i, c);
      if (l >= 0) acc += lin(c) * s(l);
    }
    out(i) = acc;
  }
}

}  // namespace

CMatrix series_columns(const BasisSpec& rows, int cols, const SeriesMap& map) {
  const int n = rows.n();
  const int dim = rows.dim();
  if (cols < 0 || cols > dim) throw DimensionMismatch("column count exceeds the row basis");
  if (map.b.size() != n || map.c0.size() != n || map.lin.rows() != n || map.lin.cols() != n)
    throw DimensionMismatch("series map has wrong dimension");

  // Raw monomial coefficients of each column image, built from a parent column.
  CMatrix raw(dim, cols);
  if (cols == 0) return raw;
  CVector base = CVector::Zero(dim);
  base(0) = map.prefactor;
  for (int k = 0; k <= n; ++k) divide_linear(rows, map.b, base);
  raw.col(0) = base;

  CVector tmp(dim);
  std::vector<CVector> lin_rows(n);
  for (int c = 0; c < n; ++c) lin_rows[c] = map.lin.row(c).transpose();
  for (int col = 1; col < cols; ++col) {
    int coord = 0;
    while (rows.lower(col, coord) < 0) ++coord;
    const int parent = rows.lower(col, coord);
    multiply_linear(rows, map.c0(coord), lin_rows[coord], raw.col(parent), tmp);
    divide_linear(rows, map.b, tmp);
    raw.col(col) = tmp;
  }

  // Convert monomial coefficients to e_m coordinates.
  for (int col = 0; col < cols; ++col) {
    const double nc = rows.norm_factor(col);
    for (int i = 0; i < dim; ++i) raw(i, col) *= nc / rows.norm_factor(i);
  }
  return raw;
}

RVector column_tails(const CMatrix& columns) {
  RVector t(columns.cols());
  for (int c = 0; c < columns.cols(); ++c) t(c) = std::sqrt(std::max(0.0, 1.0 - columns.col(c).squaredNorm()));
  return t;
}

}  // namespace bqha

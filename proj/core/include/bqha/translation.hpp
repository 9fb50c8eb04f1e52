#pragma once

#include "bqha/basis.hpp"
#include "bqha/geometry.hpp"
#include "bqha/types.hpp"

namespace bqha {

// A composition operator with multiplier f -> j(w) f(phi(w)) where
//   j(w)   = prefactor (1 - b.w)^{-(n+1)},
//   phi(w) = (c0 + L w) / (1 - b.w),   b.w = sum_i b_i w_i.
// Both pi(z) and pi(g) have this form, so their matrices in the e_m basis
// are computed exactly by truncated power-series arithmetic.
struct SeriesMap {
  cplx prefactor;
  CVector b;
  CVector c0;
  CMatrix lin;
};

// pi(z) f(w) = (1-|z|^2)^{(n+1)/2} K_z(w) f(tau_z w).
SeriesMap translation_series(const CVector& z);

// pi(g) f(w) = j(g^{-1}, w) f(g^{-1} w) with j = j_0.
SeriesMap representation_series(const GroupElement& g);

// Columns 0..cols-1 of P_rows T P_cols in the e_m basis: entry (i, c) is the
// e_i coefficient of T e_c. The column basis is the prefix of `rows` with
// `cols` elements, so cols <= rows.dim().
CMatrix series_columns(const BasisSpec& rows, int cols, const SeriesMap& map);

// ||(I - P) T e_c|| for unitary T from the retained mass of each column.
RVector column_tails(const CMatrix& columns);

}  // namespace bqha

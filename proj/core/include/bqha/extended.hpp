#pragma once

#include "bqha/basis.hpp"
#include "bqha/operators.hpp"
#include "bqha/radialcalc.hpp"
#include "bqha/types.hpp"

namespace bqha {

// A radial operator known far beyond the working truncation: exact levels
// for degrees 0..depth plus the value they approach as k -> infinity.
//
// Compressing a radial Toeplitz operator to degree D and then translating it
// loses exactly the high levels that pi(z) moves mass into, so transforms of
// the compression are wrong near the boundary. Keeping levels to depth >> D
// and assigning the limit to the mass beyond depth (pi(z) is unitary, so that
// mass is known) evaluates alpha-Berezin transforms of the true operator.
class ExtendedRadialOperator {
 public:
  ExtendedRadialOperator(int n, CVector levels, cplx limit);

  // T_a: moments of a up to depth, limit a(1-).
  static ExtendedRadialOperator toeplitz(const RadialProfile& a, int n, int depth);
  // A finite-rank radial operator padded with zero levels.
  static ExtendedRadialOperator from_radial(const RadialOperator& s, int depth);
  // a *_pi A for radial a and radial A; limit a(1-) Tr A.
  static ExtendedRadialOperator composite(const RadialProfile& a, const RadialOperator& s, int depth);

  int n() const { return rows_.n(); }
  int depth() const { return rows_.max_degree(); }
  const CVector& levels() const { return levels_; }
  cplx limit() const { return limit_; }
  const BasisSpec& rows() const { return rows_; }

  // Levels of degree <= basis.max_degree().
  RadialOperator truncate(const BasisSpec& basis) const;

 private:
  BasisSpec rows_;
  CVector levels_;
  cplx limit_;
};

struct ColumnExpectations {
  CVector values;      // <S pi(z) e_c, pi(z) e_c>
  RVector lost_mass;   // ||(I - P_depth) pi(z) e_c||^2
  double level_gap;    // |lambda_depth - limit|, size of the extrapolation step
};

// Expectations for the columns of degree <= max_degree at z = (r, 0, ..., 0).
ColumnExpectations column_expectations(const ExtendedRadialOperator& s, double r, int max_degree);

// alpha-Berezin transform at |z| = r with Phi_alpha cut at phi_degree.
// remainder bounds the extrapolation error by sum_c |lambda_c| lost_c gap,
// plus the Phi_alpha trace tail times the largest level.
Evaluation alpha_berezin(const ExtendedRadialOperator& s, double r, double alpha, int phi_degree);
Evaluation alpha_berezin(const ColumnExpectations& e, const ExtendedRadialOperator& s, double alpha,
                         int phi_degree);

}  // namespace bqha

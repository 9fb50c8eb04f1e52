#pragma once

#include "bqha/basis.hpp"
#include "bqha/geometry.hpp"
#include "bqha/quadrature.hpp"
#include "bqha/radialcalc.hpp"
#include "bqha/symbol.hpp"
#include "bqha/types.hpp"

namespace bqha {

// Dense matrix of an operator on the truncated space; entry (m, m') = <S e_m', e_m>.
class OperatorMatrix {
 public:
  OperatorMatrix(BasisSpec basis, CMatrix entries);

  static OperatorMatrix identity(const BasisSpec& basis);
  static OperatorMatrix zero(const BasisSpec& basis);
  // f -> <f, v> u
  static OperatorMatrix rank_one(const CoeffVector& u, const CoeffVector& v);

  const BasisSpec& basis() const { return basis_; }
  const CMatrix& entries() const { return m_; }
  int dim() const { return basis_.dim(); }
  cplx operator()(int i, int j) const { return m_(i, j); }

  OperatorMatrix adjoint() const { return {basis_, m_.adjoint()}; }

 private:
  BasisSpec basis_;
  CMatrix m_;
};

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(cplx s, const OperatorMatrix& a);
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

// K-invariant operator: eigenvalue levels[k] on homogeneous degree k.
class RadialOperator {
 public:
  RadialOperator(BasisSpec basis, CVector levels);

  const BasisSpec& basis() const { return basis_; }
  const CVector& levels() const { return levels_; }
  cplx level(int k) const { return levels_(k); }
  LevelSequence level_sequence() const { return {basis_.n(), levels_}; }
  OperatorMatrix to_matrix() const;
  cplx trace() const;
  // Highest degree with a nonzero level (-1 for the zero operator).
  int support_degree() const;

 private:
  BasisSpec basis_;
  CVector levels_;
};

struct Evaluation {
  cplx value;
  double tail = 0.0;       // largest ||(I - P) pi(z) e_m|| (or kernel tail) that entered
  double remainder = 0.0;  // level-series truncation remainder (non-integer alpha)
};

// T_a from symbol samples on `grid`; entries <a e_m', e_m> by quadrature.
OperatorMatrix toeplitz(const CVector& samples, const QuadratureGrid& grid, const BasisSpec& basis);
// Samples `a` on grid with its jump radii added as radial panel breaks.
OperatorMatrix toeplitz(const SymbolFunction& a, const QuadratureGrid& grid, const BasisSpec& basis);
RadialOperator toeplitz_radial(const RadialProfile& a, const BasisSpec& basis);

// Phi = 1 (x) 1, the projection onto constants.
OperatorMatrix phi(const BasisSpec& basis);

struct PhiAlpha {
  RadialOperator op;
  double trace_tail;  // estimate of the trace lost beyond degree D
};
PhiAlpha phi_alpha(double alpha, const BasisSpec& basis);

Evaluation berezin(const OperatorMatrix& s, const BallPoint& z);

struct TranslationMatrix {
  OperatorMatrix matrix;
  RVector tails;  // ||(I - P) T e_m|| per column

  double max_tail() const { return tails.size() ? tails.maxCoeff() : 0.0; }
};
// P pi(z) P.
TranslationMatrix pi_matrix(const BasisSpec& basis, const BallPoint& z);
// P pi(g) P.
TranslationMatrix representation_matrix(const BasisSpec& basis, const GroupElement& g);

struct TranslatedVector {
  CoeffVector value;
  double tail;  // norm lost to truncation
};
TranslatedVector translate_vector(const CoeffVector& f, const BallPoint& z);
// Reference route: sample pi(z) f on a grid and project.
TranslatedVector translate_vector_quadrature(const CoeffVector& f, const BallPoint& z, const QuadratureGrid& grid);

struct TranslatedOperator {
  OperatorMatrix value;
  double tail;
};
// pi(z) S pi(z).
TranslatedOperator translate_operator(const OperatorMatrix& s, const BallPoint& z);
// pi(g) S pi(g)^{-1}.
TranslatedOperator translate_operator(const OperatorMatrix& s, const GroupElement& g);

// Tr(S pi~(z) Phi_alpha) with Phi_alpha cut at degree D.
Evaluation alpha_berezin(const OperatorMatrix& s, const BallPoint& z, double alpha);

// Samples of z -> Tr(S pi~(z) A) at every node of `grid`, for radial A.
// Uses pi(Uz) = U pi(z) U* to reuse one translation per ring.
CVector translated_trace_samples(const OperatorMatrix& s, const RadialOperator& a, const QuadratureGrid& grid);
CVector alpha_berezin_samples(const OperatorMatrix& s, double alpha, const QuadratureGrid& grid);

// Average over the unitary group: zero cross-degree blocks, and replace each
// degree-k block B by (Tr B / d_k) Id.
OperatorMatrix radialize(const OperatorMatrix& s);
RadialOperator radial_part(const OperatorMatrix& s);

double schatten_norm(const OperatorMatrix& s, double p);
double schatten_norm(const RadialOperator& s, double p);
double op_norm(const OperatorMatrix& s);
cplx trace(const OperatorMatrix& s);

}  // namespace bqha

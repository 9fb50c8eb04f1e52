#pragma once

#include "bqha/geometry.hpp"
#include "bqha/operators.hpp"
#include "bqha/quadrature.hpp"
#include "bqha/symbol.hpp"
#include "bqha/types.hpp"

namespace bqha {

struct ConvolutionResult {
  OperatorMatrix value;
  double domain_remainder;  // operator norm of the part of the integral over r_max <= |z| < 1
};

// psi *_pi S = int psi(z) pi~(z) Rad(S) dlambda(z) over |z| <= r_max. With
// r_max = 1 the whole ball is integrated and the remainder is zero.
ConvolutionResult fun_conv_op(const SymbolFunction& psi, const OperatorMatrix& s, const QuadratureGrid& grid,
                              double r_max = 1.0);

// Same integral with psi given as samples on `grid`, over the grid's own range.
OperatorMatrix fun_conv_op(const CVector& psi_samples, const RadialOperator& a, const QuadratureGrid& grid);

// (S *_pi A)(z) = Tr(S pi~(z) A).
cplx op_conv_op(const OperatorMatrix& s, const OperatorMatrix& a, const BallPoint& z);
// (S *_pi A)(g) = Tr(S pi(g) A pi(g)^{-1}) at a group element.
cplx op_conv_op(const OperatorMatrix& s, const OperatorMatrix& a, const GroupElement& g);

struct FunctionConvolution {
  cplx value;
  double domain_remainder;  // int |f| |g#| dlambda outside the grid's range
};

// (f * g)(w) = int f(z) g#(tau_z w) dlambda(z) over the grid's range.
FunctionConvolution fun_conv_fun(const SymbolFunction& f, const SymbolFunction& g, const BallPoint& w,
                                 const QuadratureGrid& grid);

// Same integral with f given by its samples on `grid`, which must cover the ball.
cplx fun_conv_fun(const CVector& f_samples, const SymbolFunction& g, const BallPoint& w, const QuadratureGrid& grid);

// Sphere average f#(z), using the grid's angular rule.
SymbolFunction radialize_fun(const SymbolFunction& f, const QuadratureGrid& grid);

}  // namespace bqha

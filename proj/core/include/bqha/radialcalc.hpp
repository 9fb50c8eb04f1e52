#pragma once

#include <functional>
#include <vector>

#include "bqha/quadrature.hpp"
#include "bqha/types.hpp"

namespace bqha {

// Radial profile a(r), r = |z| in [0, 1], with jump locations (in r).
struct RadialProfile {
  std::function<cplx(double)> f;
  std::vector<double> breaks;

  cplx operator()(double r) const { return f(r); }
  // Jump locations expressed in t = r^2.
  std::vector<double> t_breaks() const;
};

struct LevelSequence {
  int n = 1;
  CVector values;

  int max_degree() const { return static_cast<int>(values.size()) - 1; }
  // sum_k d_k lambda_k.
  cplx trace() const;
};

// Nodes of the t-rule used for 1-D moments (256 Gauss nodes per panel).
inline constexpr int kMomentNodes = 256;

// gamma_k(a) = (n+k) int_0^1 a(sqrt t) t^{n+k-1} dt, k = 0..D.
LevelSequence moment_levels(const RadialProfile& a, int n, int max_degree);

// Same moments to large depth using uniform composite panels, which resolve
// t^k for k in the thousands.
LevelSequence moment_levels_deep(const RadialProfile& a, int n, int depth);

// lambda_k = C_alpha (-1)^k binom(alpha, k) k! n! / (n+k)!.
LevelSequence phi_alpha_levels(double alpha, int n, int max_degree);

// Estimate of sum_{k > D} d_k lambda_k (the part of Tr Phi_alpha lost to
// truncation); exactly zero for integer alpha <= D. Computed by direct
// summation far past D plus the leading asymptotic tail.
double phi_alpha_trace_tail(double alpha, int n, int max_degree);

// (1-r^2)^{n+1} sum_k lambda_k binom(n+k, n) r^{2k}.
cplx berezin_radial(const LevelSequence& levels, double r);

// C_alpha (1-r^2)^{n+1+alpha} int a(|w|) (1-|w|^2)^alpha |1 - r conj(w_1)|^{-2(n+1+alpha)} dv(w)
// by full quadrature on `grid`.
cplx balpha_radial_symbol(const RadialProfile& a, double alpha, double r, const QuadratureGrid& grid);

// Moment system for polynomial profiles a(sqrt t) = sum_j c_j t^j:
// A(k, j) = (n+k) / (n+k+j), k = 0..levels-1, j = 0..coeffs-1.
RMatrix moment_matrix(int n, int levels, int coeffs);

struct MomentFit {
  CVector coeffs;
  double residual = 0.0;      // ||A c - gamma|| / max(1, ||gamma||)
  double cond_raw = 0.0;      // condition number of A
  double cond_scaled = 0.0;   // after scaling columns to unit norm
};

// Least-squares fit with `coeffs` polynomial coefficients (square solve when
// coeffs = D + 1).
MomentFit fit_polynomial_profile(const LevelSequence& target, int coeffs, bool scale_columns = true);

}  // namespace bqha

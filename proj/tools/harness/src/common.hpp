#pragma once

#include <map>
#include <random>
#include <vector>

#include "bqha/bqha.hpp"
#include "bqha_harness/config.hpp"

namespace bqha::harness::detail {

using Rng = std::mt19937_64;

BallPoint random_point(int n, double r_max, Rng& rng);
CMatrix random_unitary(int n, Rng& rng);
// boost(z) . unitary_embed(U) with |g . 0| <= r_max
GroupElement random_group(int n, double r_max, Rng& rng);
// Entries only among basis elements of degree <= top.
OperatorMatrix random_low_degree_operator(const BasisSpec& basis, int top, Rng& rng, bool hermitian);
RadialOperator random_low_degree_radial(const BasisSpec& basis, int top, Rng& rng);

// The operator as a matrix on the truncated space.
OperatorMatrix operator_matrix(const Config& cfg, const OperatorSpec& op);
// Radial operators, known to the configured depth.
ExtendedRadialOperator extended_operator(const Config& cfg, const OperatorSpec& op);
double operator_sup(const OperatorSpec& op);

// alpha-Berezin transform of an extended radial operator with the column
// expectations at each radius computed once and shared by all alpha.
class ExtendedBerezin {
 public:
  ExtendedBerezin(ExtendedRadialOperator s, int phi_degree, int max_column_degree);
  Evaluation operator()(double r, double alpha);
  const ExtendedRadialOperator& op() const { return s_; }

 private:
  ExtendedRadialOperator s_;
  int phi_degree_;
  int cols_;
  std::map<double, ColumnExpectations> cache_;
};

// Highest Phi_alpha column degree needed for the alphas at phi_degree.
int phi_support_degree(const std::vector<double>& alphas, int phi_degree);

// Gauss rule in t, graded toward t = 1.
Rule1D graded_t_rule();

// Grid of radii: 0 and every distinct ring t inside |z| <= r_max.
std::vector<double> criterion_radii(const QuadratureGrid& grid, double r_max);

double max_abs(const CMatrix& m);

}  // namespace bqha::harness::detail

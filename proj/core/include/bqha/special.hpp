#pragma once

namespace bqha {

// Integer binomial coefficient as a double (exact while it fits in 53 bits).
double binomial(int a, int b);

// Generalized binomial coefficient binom(alpha, k) for real alpha.
double binomial_real(double alpha, int k);

double log_factorial(int k);

// C_alpha = Gamma(n+alpha+1) / (n! Gamma(alpha+1)).
double weight_constant(int n, double alpha);

// Dimension of the homogeneous polynomials of degree k in n variables.
double level_multiplicity(int n, int k);

bool is_integer(double x, double tol = 1e-12);

}  // namespace bqha

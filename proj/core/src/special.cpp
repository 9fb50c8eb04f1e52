#include "bqha/special.hpp"

#include <cmath>

#include "bqha/types.hpp"

namespace bqha {

double binomial(int a, int b) {
  if (b < 0 || b > a) return 0.0;
  if (b > a - b) b = a - b;
  double r = 1.0;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return std::round(r);
}

double binomial_real(double alpha, int k) {
  if (k < 0) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (alpha - i) / (i + 1);
  return r;
}

double log_factorial(int k) { return std::lgamma(k + 1.0); }

double weight_constant(int n, double alpha) {
  if (alpha <= -1.0) throw DomainError("weight parameter must exceed -1");
  if (is_integer(alpha) && alpha < 150) return binomial(n + static_cast<int>(std::round(alpha)), n);
  return std::exp(std::lgamma(n + alpha + 1.0) - log_factorial(n) - std::lgamma(alpha + 1.0));
}

double level_multiplicity(int n, int k) { return binomial(n + k - 1, k); }

bool is_integer(double x, double tol) { return std::abs(x - std::round(x)) <= tol; }

}  // namespace bqha

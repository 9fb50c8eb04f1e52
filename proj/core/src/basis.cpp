#include "bqha/basis.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "bqha/special.hpp"

namespace bqha {

namespace {

void enumerate_degree(int n, int k, MultiIndex& cur, int pos, std::vector<MultiIndex>& out) {
  if (pos == n - 1) {
    cur[pos] = k;
    out.push_back(cur);
    return;
  }
  for (int a = k; a >= 0; --a) {
    cur[pos] = a;
    enumerate_degree(n, k - a, cur, pos + 1, out);
  }
}

double log_norm2(int n, const MultiIndex& m) {
  int deg = 0;
  double s = 0.0;
  for (int a : m) {
    deg += a;
    s -= log_factorial(a);
  }
  return s + log_factorial(n + deg) - log_factorial(n);
}

}  // namespace

int BasisSpec::dimension(int n, int max_degree) {
  return static_cast<int>(binomial(max_degree + n, n));
}

BasisSpec::BasisSpec(int n, int max_degree) : n_(n), max_degree_(max_degree) {
  if (n < 1) throw DomainError("dimension n must be positive");
  if (max_degree < 0) throw DomainError("truncation degree must be non-negative");
  auto t = std::make_shared<Tables>();
  MultiIndex cur(n, 0);
  for (int k = 0; k <= max_degree; ++k) {
    t->degree_begin.push_back(static_cast<int>(t->index.size()));
    enumerate_degree(n, k, cur, 0, t->index);
  }
  t->degree_begin.push_back(static_cast<int>(t->index.size()));

  std::map<MultiIndex, int> pos;
  for (int i = 0; i < static_cast<int>(t->index.size()); ++i) pos.emplace(t->index[i], i);

  t->degree.resize(t->index.size());
  t->norm.resize(t->index.size());
  t->lower.assign(t->index.size() * n, -1);
  for (std::size_t i = 0; i < t->index.size(); ++i) {
    MultiIndex m = t->index[i];
    int deg = 0;
    for (int a : m) deg += a;
    t->degree[i] = deg;
    t->norm[i] = std::exp(0.5 * log_norm2(n, m));
    for (int c = 0; c < n; ++c) {
      if (m[c] == 0) continue;
      --m[c];
      t->lower[i * n + c] = pos.at(m);
      ++m[c];
    }
  }
  t_ = std::move(t);
}

int BasisSpec::find(const MultiIndex& m) const {
  if (static_cast<int>(m.size()) != n_) throw DimensionMismatch("multi-index has wrong length");
  int deg = 0;
  for (int a : m) {
    if (a < 0) return -1;
    deg += a;
  }
  if (deg > max_degree_) return -1;
  // Rank inside the degree block: count indices that precede m in descending-lex order.
  int rank = 0;
  int rest = deg;
  for (int c = 0; c + 1 < n_; ++c) {
    for (int a = rest; a > m[c]; --a) rank += static_cast<int>(binomial(rest - a + n_ - c - 2, n_ - c - 2));
    rest -= m[c];
  }
  return degree_begin(deg) + rank;
}

cplx basis_eval(const MultiIndex& m, const BallPoint& z) {
  if (static_cast<int>(m.size()) != z.dim()) throw DimensionMismatch("multi-index has wrong length");
  cplx v = std::exp(0.5 * log_norm2(z.dim(), m));
  for (int c = 0; c < z.dim(); ++c) v *= std::pow(z[c], m[c]);
  return v;
}

cplx basis_eval(const BasisSpec& basis, int i, const BallPoint& z) { return basis_eval(basis.index(i), z); }

CVector basis_values(const BasisSpec& basis, const CVector& z) {
  if (z.size() != basis.n()) throw DimensionMismatch("point has wrong dimension");
  // Monomials built from the parent index; e_m = norm * z^m.
  CVector mono(basis.dim());
  mono(0) = 1.0;
  for (int i = 1; i < basis.dim(); ++i) {
    for (int c = 0; c < basis.n(); ++c) {
      const int l = basis.lower(i, c);
      if (l >= 0) {
        mono(i) = mono(l) * z(c);
        break;
      }
    }
  }
  for (int i = 0; i < basis.dim(); ++i) mono(i) *= basis.norm_factor(i);
  return mono;
}

cplx evaluate(const CoeffVector& f, const BallPoint& z) {
  return (basis_values(f.basis, z.coords()).transpose() * f.coeffs)(0);
}

}  // namespace bqha

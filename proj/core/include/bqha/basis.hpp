#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "bqha/geometry.hpp"
#include "bqha/types.hpp"

namespace bqha {

using MultiIndex = std::vector<int>;

// Multi-indices with |m| <= D in graded lexicographic order: degrees are
// contiguous and increasing, and inside a degree the first coordinate
// decreases. A basis of degree D is a prefix of every basis of larger degree.
class BasisSpec {
 public:
  static constexpr std::string_view kOrdering = "grlex";

  BasisSpec(int n, int max_degree);

  static int dimension(int n, int max_degree);

  int n() const { return n_; }
  int max_degree() const { return max_degree_; }
  int dim() const { return static_cast<int>(t_->index.size()); }

  const MultiIndex& index(int i) const { return t_->index[i]; }
  int degree(int i) const { return t_->degree[i]; }
  // Position of m, or -1 when |m| > D.
  int find(const MultiIndex& m) const;
  // Position of m - e_c, or -1 when m_c = 0.
  int lower(int i, int c) const { return t_->lower[static_cast<std::size_t>(i) * n_ + c]; }
  int degree_begin(int k) const { return t_->degree_begin[k]; }
  int degree_end(int k) const { return t_->degree_begin[k + 1]; }
  // sqrt((n+|m|)! / (n! m!)), so that e_m = norm_factor * z^m.
  double norm_factor(int i) const { return t_->norm[i]; }

  bool operator==(const BasisSpec& o) const { return n_ == o.n_ && max_degree_ == o.max_degree_; }

 private:
  struct Tables {
    std::vector<MultiIndex> index;
    std::vector<int> degree;
    std::vector<int> lower;
    std::vector<int> degree_begin;
    std::vector<double> norm;
  };
  int n_;
  int max_degree_;
  std::shared_ptr<const Tables> t_;
};

struct CoeffVector {
  BasisSpec basis;
  CVector coeffs;

  double norm() const { return coeffs.norm(); }
};

cplx basis_eval(const BasisSpec& basis, int i, const BallPoint& z);
cplx basis_eval(const MultiIndex& m, const BallPoint& z);
// All e_m(z) in basis order.
CVector basis_values(const BasisSpec& basis, const CVector& z);
// Evaluate sum_m c_m e_m(z).
cplx evaluate(const CoeffVector& f, const BallPoint& z);

}  // namespace bqha

#pragma once

#include <vector>

#include "bqha/basis.hpp"
#include "bqha/quadrature.hpp"

namespace bqha::detail {

// offset(i, j) = spectrum position of the frequency m_i - m_j.
class FrequencyTable {
 public:
  FrequencyTable(const BasisSpec& basis, const AngularSpectrum& layout);

  int operator()(int i, int j) const { return off_[static_cast<std::size_t>(i) * dim_ + j]; }

 private:
  int dim_;
  std::vector<int> off_;
};

// acc(i, j) += weight * y(i, j) * spec(m_i - m_j)
void accumulate_ring(CMatrix& acc, const CMatrix& y, const AngularSpectrum& spec, double weight,
                     const FrequencyTable& freq);

// A ring position of the grid as a complex base point.
inline CVector ring_point(const QuadratureGrid& grid, int r) { return grid.ring_base(r).cast<cplx>(); }

}  // namespace bqha::detail

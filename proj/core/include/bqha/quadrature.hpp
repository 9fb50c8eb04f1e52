#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bqha/geometry.hpp"
#include "bqha/types.hpp"

namespace bqha {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

// Gauss-Legendre rule with `points` nodes on [a, b].
Rule1D gauss_legendre(int points, double a = 0.0, double b = 1.0);

// `points` Gauss nodes on each panel of [a, b] cut at the interior breakpoints.
Rule1D composite_gauss_legendre(int points, double a, double b, std::span<const double> breaks = {});

// Polar tensor grid on the ball (n = 1, 2) for normalized volume measure dv.
//
// n = 1: z = sqrt(t) e^{i theta}, dv = dt dtheta / 2pi.
// n = 2: z = (sqrt(t(1-u)) e^{i theta1}, sqrt(t u) e^{i theta2}),
//        dv = 2t dt du dtheta1 dtheta2 / (2pi)^2, i.e. u = sin^2(phi).
//
// Gauss rules in t (composite when breakpoints are given) and u, trapezoid in
// each angle. Nodes sharing (t, u) form a "ring": a torus orbit on which a
// symbol is resolved into angular Fourier modes.
class QuadratureGrid {
 public:
  static QuadratureGrid polar(int n, int radial_nodes, int angular_nodes, double t_lo = 0.0,
                              double t_hi = 1.0, std::vector<double> t_breaks = {});
  // Sizes giving exactness on z^m conj(z)^m' for |m|, |m'| <= 2D + 4.
  static QuadratureGrid for_degree(int n, int max_degree);
  static int default_radial_nodes(int max_degree);
  static int default_angular_nodes(int max_degree);

  int n() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(ring_count()) * ring_size(); }
  int radial_nodes() const { return radial_nodes_; }
  int angular_nodes() const { return angular_nodes_; }
  double t_lo() const { return t_lo_; }
  double t_hi() const { return t_hi_; }
  const std::vector<double>& t_breaks() const { return t_breaks_; }
  bool covers_ball() const { return t_lo_ == 0.0 && t_hi_ == 1.0; }

  int ring_count() const { return static_cast<int>(ring_t_.size()); }
  int ring_size() const { return ring_size_; }
  double ring_t(int r) const { return ring_t_[r]; }
  double ring_weight(int r) const { return ring_w_[r]; }
  // Real non-negative coordinates of the ring point with all angles zero.
  const RVector& ring_base(int r) const { return ring_base_[r]; }
  // Angle of coordinate c at angular position a inside a ring.
  double angle(int a, int c) const;

  CVector node_coords(std::size_t i) const;
  BallPoint node(std::size_t i) const { return BallPoint(node_coords(i)); }
  double weight(std::size_t i) const { return ring_w_[i / ring_size_] / ring_size_; }
  RVector weights() const;

  // Same node counts on a sub-range of t = |z|^2.
  QuadratureGrid restricted(double t_lo, double t_hi) const;
  // Same configuration with additional radial breakpoints (in t).
  QuadratureGrid with_breaks(const std::vector<double>& t_breaks) const;

  // Angle-only rule used to average over the sphere {|w| = rho}: unit-sphere
  // points and weights summing to 1.
  const std::vector<CVector>& sphere_points() const { return sphere_pts_; }
  const std::vector<double>& sphere_weights() const { return sphere_w_; }

 private:
  QuadratureGrid() = default;
  void build();

  int n_ = 1;
  int radial_nodes_ = 0;
  int angular_nodes_ = 0;
  double t_lo_ = 0.0;
  double t_hi_ = 1.0;
  std::vector<double> t_breaks_;
  int ring_size_ = 0;
  std::vector<double> ring_t_;
  std::vector<double> ring_w_;
  std::vector<RVector> ring_base_;
  std::vector<CVector> sphere_pts_;
  std::vector<double> sphere_w_;
};

// Angular Fourier data of one ring: F(k) = mean over the ring of f e^{-i k.theta}
// for |k_c| <= K, stored densely.
class AngularSpectrum {
 public:
  AngularSpectrum(int n, int max_freq);

  int n() const { return n_; }
  int max_freq() const { return k_; }
  int width() const { return 2 * k_ + 1; }
  std::size_t size() const { return data_.size(); }
  // Flat position of the frequency vector k (each |k_c| <= K).
  int offset(std::span<const int> k) const;
  cplx& operator[](std::size_t i) { return data_[i]; }
  cplx operator[](std::size_t i) const { return data_[i]; }
  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

 private:
  int n_;
  int k_;
  std::vector<cplx> data_;
};

// Discrete Fourier coefficients of ring samples (ring_size values).
AngularSpectrum ring_spectrum(const QuadratureGrid& grid, std::span<const cplx> ring_samples, int max_freq);

// Inverse: samples f(theta) = sum_k F(k) e^{i k.theta} at the ring's angular nodes.
void ring_synthesize(const QuadratureGrid& grid, const AngularSpectrum& spec, std::span<cplx> ring_samples);

}  // namespace bqha

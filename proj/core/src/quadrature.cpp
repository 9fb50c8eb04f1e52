#include "bqha/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace bqha {

namespace {

double step_angle(int a, int nodes) { return 2.0 * std::numbers::pi * a / nodes; }

}  // namespace

Rule1D gauss_legendre(int points, double a, double b) {
  if (points < 1) throw DomainError("Gauss rule needs at least one node");
  Rule1D rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  if (points == 1) {
    rule.nodes[0] = mid;
    rule.weights[0] = b - a;
    return rule;
  }
  // P_points(x) and its derivative.
  auto legendre = [points](double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= points; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, points * (x * p1 - p0) / (x * x - 1.0)};
  };
  for (int i = 0; i < (points + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[points - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[points - 1 - i] = half * w;
  }
  return rule;
}

Rule1D composite_gauss_legendre(int points, double a, double b, std::span<const double> breaks) {
  std::vector<double> cuts{a};
  std::vector<double> inner(breaks.begin(), breaks.end());
  std::sort(inner.begin(), inner.end());
  for (double c : inner)
    if (c > cuts.back() + 1e-14 && c < b - 1e-14) cuts.push_back(c);
  cuts.push_back(b);
  Rule1D out;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const Rule1D r = gauss_legendre(points, cuts[p], cuts[p + 1]);
    out.nodes.insert(out.nodes.end(), r.nodes.begin(), r.nodes.end());
    out.weights.insert(out.weights.end(), r.weights.begin(), r.weights.end());
  }
  return out;
}

int QuadratureGrid::default_radial_nodes(int max_degree) { return std::max(24, (2 * max_degree + 4 + 2) / 2 + 4); }

int QuadratureGrid::default_angular_nodes(int max_degree) { return 2 * max_degree + 5; }

QuadratureGrid QuadratureGrid::for_degree(int n, int max_degree) {
  return polar(n, default_radial_nodes(max_degree), default_angular_nodes(max_degree));
}

QuadratureGrid QuadratureGrid::polar(int n, int radial_nodes, int angular_nodes, double t_lo, double t_hi,
                                     std::vector<double> t_breaks) {
  if (n != 1 && n != 2) throw DomainError("full-ball grids are available for n = 1 and n = 2 only");
  if (radial_nodes < 1 || angular_nodes < 1) throw DomainError("grid sizes must be positive");
  if (!(0.0 <= t_lo && t_lo < t_hi && t_hi <= 1.0)) throw DomainError("radial range must satisfy 0 <= lo < hi <= 1");
  QuadratureGrid g;
  g.n_ = n;
  g.radial_nodes_ = radial_nodes;
  g.angular_nodes_ = angular_nodes;
  g.t_lo_ = t_lo;
  g.t_hi_ = t_hi;
  std::sort(t_breaks.begin(), t_breaks.end());
  g.t_breaks_ = std::move(t_breaks);
  g.build();
  return g;
}

void QuadratureGrid::build() {
  const Rule1D rt = composite_gauss_legendre(radial_nodes_, t_lo_, t_hi_, t_breaks_);
  ring_size_ = n_ == 1 ? angular_nodes_ : angular_nodes_ * angular_nodes_;
  ring_t_.clear();
  ring_w_.clear();
  ring_base_.clear();
  sphere_pts_.clear();
  sphere_w_.clear();
  if (n_ == 1) {
    for (std::size_t j = 0; j < rt.size(); ++j) {
      ring_t_.push_back(rt.nodes[j]);
      ring_w_.push_back(rt.weights[j]);
      RVector x(1);
      x(0) = std::sqrt(rt.nodes[j]);
      ring_base_.push_back(x);
    }
    for (int a = 0; a < angular_nodes_; ++a) {
      CVector p(1);
      p(0) = std::polar(1.0, step_angle(a, angular_nodes_));
      sphere_pts_.push_back(p);
      sphere_w_.push_back(1.0 / angular_nodes_);
    }
    return;
  }
  const Rule1D ru = gauss_legendre(radial_nodes_, 0.0, 1.0);
  for (std::size_t j = 0; j < rt.size(); ++j) {
    for (std::size_t l = 0; l < ru.size(); ++l) {
      const double t = rt.nodes[j];
      const double u = ru.nodes[l];
      ring_t_.push_back(t);
      ring_w_.push_back(2.0 * t * rt.weights[j] * ru.weights[l]);
      RVector x(2);
      x(0) = std::sqrt(t * (1.0 - u));
      x(1) = std::sqrt(t * u);
      ring_base_.push_back(x);
    }
  }
  for (std::size_t l = 0; l < ru.size(); ++l) {
    for (int a1 = 0; a1 < angular_nodes_; ++a1) {
      for (int a2 = 0; a2 < angular_nodes_; ++a2) {
        CVector p(2);
        p(0) = std::polar(std::sqrt(1.0 - ru.nodes[l]), step_angle(a1, angular_nodes_));
        p(1) = std::polar(std::sqrt(ru.nodes[l]), step_angle(a2, angular_nodes_));
        sphere_pts_.push_back(p);
        sphere_w_.push_back(ru.weights[l] / (angular_nodes_ * angular_nodes_));
      }
    }
  }
}

double QuadratureGrid::angle(int a, int c) const {
  if (n_ == 2) a = c == 0 ? a / angular_nodes_ : a % angular_nodes_;
  return step_angle(a, angular_nodes_);
}

CVector QuadratureGrid::node_coords(std::size_t i) const {
  const int r = static_cast<int>(i / ring_size_);
  const int a = static_cast<int>(i % ring_size_);
  const RVector& x = ring_base_[r];
  CVector z(n_);
  if (n_ == 1) {
    z(0) = std::polar(x(0), angle(a, 0));
  } else {
    z(0) = std::polar(x(0), angle(a, 0));
    z(1) = std::polar(x(1), angle(a, 1));
  }
  return z;
}

RVector QuadratureGrid::weights() const {
  RVector w(size());
  for (std::size_t i = 0; i < size(); ++i) w(i) = weight(i);
  return w;
}

QuadratureGrid QuadratureGrid::restricted(double t_lo, double t_hi) const {
  std::vector<double> keep;
  for (double b : t_breaks_)
    if (b > t_lo && b < t_hi) keep.push_back(b);
  return polar(n_, radial_nodes_, angular_nodes_, t_lo, t_hi, keep);
}

QuadratureGrid QuadratureGrid::with_breaks(const std::vector<double>& t_breaks) const {
  std::vector<double> all = t_breaks_;
  for (double b : t_breaks)
    if (b > t_lo_ && b < t_hi_) all.push_back(b);
  return polar(n_, radial_nodes_, angular_nodes_, t_lo_, t_hi_, all);
}

AngularSpectrum::AngularSpectrum(int n, int max_freq) : n_(n), k_(max_freq) {
  std::size_t sz = 1;
  for (int c = 0; c < n; ++c) sz *= static_cast<std::size_t>(2 * max_freq + 1);
  data_.assign(sz, cplx(0.0));
}

int AngularSpectrum::offset(std::span<const int> k) const {
  int off = 0;
  for (int c = 0; c < n_; ++c) off = off * width() + (k[c] + k_);
  return off;
}

namespace {

// tw[a * width + (k + K)] = e^{-i k theta_a}
std::vector<cplx> twiddles(const QuadratureGrid& grid, int kmax) {
  const int na = grid.angular_nodes();
  const int w = 2 * kmax + 1;
  std::vector<cplx> tw(static_cast<std::size_t>(na) * w);
  for (int a = 0; a < na; ++a)
    for (int k = -kmax; k <= kmax; ++k) tw[a * w + k + kmax] = std::polar(1.0, -k * step_angle(a, na));
  return tw;
}

}  // namespace

AngularSpectrum ring_spectrum(const QuadratureGrid& grid, std::span<const cplx> f, int kmax) {
  const int na = grid.angular_nodes();
  AngularSpectrum spec(grid.n(), kmax);
  const int w = spec.width();
  const std::vector<cplx> tw = twiddles(grid, kmax);
  if (grid.n() == 1) {
    for (int k = 0; k < w; ++k) {
      cplx s = 0.0;
      for (int a = 0; a < na; ++a) s += f[a] * tw[a * w + k];
      spec[k] = s / static_cast<double>(na);
    }
    return spec;
  }
  // Separable transform: inner angle first.
  std::vector<cplx> partial(static_cast<std::size_t>(na) * w);
  for (int a1 = 0; a1 < na; ++a1) {
    for (int k2 = 0; k2 < w; ++k2) {
      cplx s = 0.0;
      for (int a2 = 0; a2 < na; ++a2) s += f[a1 * na + a2] * tw[a2 * w + k2];
      partial[a1 * w + k2] = s / static_cast<double>(na);
    }
  }
  for (int k1 = 0; k1 < w; ++k1) {
    for (int k2 = 0; k2 < w; ++k2) {
      cplx s = 0.0;
      for (int a1 = 0; a1 < na; ++a1) s += partial[a1 * w + k2] * tw[a1 * w + k1];
      spec[k1 * w + k2] = s / static_cast<double>(na);
    }
  }
  return spec;
}

void ring_synthesize(const QuadratureGrid& grid, const AngularSpectrum& spec, std::span<cplx> f) {
  const int na = grid.angular_nodes();
  const int kmax = spec.max_freq();
  const int w = spec.width();
  std::vector<cplx> tw = twiddles(grid, kmax);
  for (cplx& c : tw) c = std::conj(c);
  if (grid.n() == 1) {
    for (int a = 0; a < na; ++a) {
      cplx s = 0.0;
      for (int k = 0; k < w; ++k) s += spec[k] * tw[a * w + k];
      f[a] = s;
    }
    return;
  }
  std::vector<cplx> partial(static_cast<std::size_t>(w) * na);
  for (int k1 = 0; k1 < w; ++k1) {
    for (int a2 = 0; a2 < na; ++a2) {
      cplx s = 0.0;
      for (int k2 = 0; k2 < w; ++k2) s += spec[k1 * w + k2] * tw[a2 * w + k2];
      partial[k1 * na + a2] = s;
    }
  }
  for (int a1 = 0; a1 < na; ++a1) {
    for (int a2 = 0; a2 < na; ++a2) {
      cplx s = 0.0;
      for (int k1 = 0; k1 < w; ++k1) s += partial[k1 * na + a2] * tw[a1 * w + k1];
      f[a1 * na + a2] = s;
    }
  }
}

}  // namespace bqha

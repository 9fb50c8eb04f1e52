#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"

namespace bqha {
namespace {

TEST(Basis, FindInvertsIndex) {
  for (int n : {1, 2, 3}) {
    const BasisSpec b(n, 9);
    EXPECT_EQ(b.dim(), BasisSpec::dimension(n, 9));
    EXPECT_EQ(b.dim(), static_cast<int>(binomial(n + 9, n)));
    for (int i = 0; i < b.dim(); ++i) EXPECT_EQ(b.find(b.index(i)), i);
    MultiIndex big(n, 0);
    big[0] = 10;
    EXPECT_EQ(b.find(big), -1);
  }
}

TEST(Basis, GradedLexOrderAndPrefix) {
  const BasisSpec b(2, 3);
  EXPECT_EQ(b.index(0), (MultiIndex{0, 0}));
  EXPECT_EQ(b.index(1), (MultiIndex{1, 0}));
  EXPECT_EQ(b.index(2), (MultiIndex{0, 1}));
  EXPECT_EQ(b.index(3), (MultiIndex{2, 0}));
  EXPECT_EQ(b.index(5), (MultiIndex{0, 2}));
  EXPECT_EQ(b.degree_begin(3), 6);
  EXPECT_EQ(b.degree_end(3), 10);
  const BasisSpec big(2, 8);
  for (int i = 0; i < b.dim(); ++i) EXPECT_EQ(big.index(i), b.index(i));
  EXPECT_EQ(b.lower(4, 0), 2);  // (1,1) - e_1 = (0,1)
  EXPECT_EQ(b.lower(5, 0), -1);
}

TEST(Basis, NormFactors) {
  const BasisSpec b(2, 4);
  // e_(1,1) = sqrt(4! / (2! 1! 1!)) z1 z2
  EXPECT_NEAR(b.norm_factor(b.find({1, 1})), std::sqrt(12.0), 1e-14);
  const BallPoint z{cplx(0.3, 0.1), cplx(-0.2, 0.4)};
  const CVector v = basis_values(b, z.coords());
  for (int i = 0; i < b.dim(); ++i) EXPECT_LT(std::abs(v(i) - basis_eval(b.index(i), z)), 1e-15);
}

TEST(Space, GramMatrixIsIdentity) {
  for (int n : {1, 2}) {
    const BasisSpec b(n, n == 1 ? 20 : 8);
    const QuadratureGrid grid = QuadratureGrid::for_degree(n, b.max_degree());
    CMatrix gram = CMatrix::Zero(b.dim(), b.dim());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const CVector v = basis_values(b, grid.node_coords(j));
      gram += grid.weight(j) * v * v.adjoint();
    }
    EXPECT_LT(testing::max_abs(gram - CMatrix::Identity(b.dim(), b.dim())), 1e-12) << "n=" << n;
  }
}

TEST(Space, ProjectRecoversPolynomial) {
  std::mt19937_64 rng(21);
  const BasisSpec b(2, 6);
  CoeffVector f{b, testing::random_coords(b.dim(), 1.0, rng)};
  const QuadratureGrid grid = QuadratureGrid::for_degree(2, 6);
  const CoeffVector p = project(b, sample(grid, [&](const BallPoint& z) { return evaluate(f, z); }), grid);
  EXPECT_LT((p.coeffs - f.coeffs).norm(), 1e-12);

  // Anti-holomorphic content projects to its constant term.
  const CoeffVector q = project(b, sample(grid, [](const BallPoint& z) { return 1.0 + std::conj(z[0]); }), grid);
  EXPECT_NEAR(std::abs(q.coeffs(0) - 1.0), 0.0, 1e-13);
  EXPECT_LT(q.coeffs.tail(b.dim() - 1).norm(), 1e-13);
}

TEST(Space, KernelValues) {
  const BallPoint z{0.5};
  EXPECT_NEAR(std::abs(kernel(KernelParams(0.0), z, z) - 16.0 / 9.0), 0.0, 1e-14);
  const BallPoint w{cplx(0.0, 0.5)};
  // (1 - <w, z>)^{-2} with <w,z> = 0.25 i
  EXPECT_LT(std::abs(kernel(KernelParams(0.0), z, w) - std::pow(cplx(1.0, -0.25), -2)), 1e-14);
  EXPECT_NEAR(KernelParams(1.0).weight_constant(1), 2.0, 1e-14);
  EXPECT_NEAR(KernelParams(0.5).weight_constant(2), 1.875, 1e-14);
}

TEST(Space, ReproducingProperty) {
  std::mt19937_64 rng(22);
  for (int n : {1, 2}) {
    const BasisSpec b(n, 7);
    CoeffVector f{b, testing::random_coords(b.dim(), 1.0, rng)};
    for (int trial = 0; trial < 10; ++trial) {
      const BallPoint z = testing::random_point(n, 0.9, rng);
      const CoeffVector k = normalized_kernel(KernelParams(0.0), b, z);
      const cplx lhs = k.coeffs.dot(f.coeffs);
      const cplx rhs = std::pow(1.0 - z.norm2(), 0.5 * (n + 1)) * evaluate(f, z);
      EXPECT_LT(std::abs(lhs - rhs), 1e-13);
    }
  }
}

TEST(Space, NormalizedKernelNorm) {
  // ||P_D k_z||^2 = (1-s)^2 sum_{k<=D} (k+1) s^k for n = 1.
  const BasisSpec b(1, 30);
  const BallPoint z{cplx(0.5, 0.3)};
  const double s = z.norm2();
  double expected = 0.0;
  for (int k = 0; k <= 30; ++k) expected += (k + 1) * std::pow(s, k);
  expected *= (1 - s) * (1 - s);
  EXPECT_NEAR(normalized_kernel(KernelParams(0.0), b, z).coeffs.squaredNorm(), expected, 1e-14);
}

TEST(Space, Integrals) {
  const QuadratureGrid g2 = QuadratureGrid::for_degree(2, 6);
  EXPECT_NEAR(integrate(sample(g2, [](const BallPoint&) { return cplx(1.0); }), g2).real(), 1.0, 1e-12);
  EXPECT_NEAR(integrate(sample(g2, [](const BallPoint& z) { return std::norm(z[0]); }), g2).real(), 1.0 / 3.0,
              1e-12);
  double total = 0.0, second = 0.0;
  for (std::size_t i = 0; i < g2.sphere_points().size(); ++i) {
    total += g2.sphere_weights()[i];
    second += g2.sphere_weights()[i] * std::norm(g2.sphere_points()[i](1));
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NEAR(second, 0.5, 1e-12);
}

TEST(Quadrature, GaussLegendre) {
  const Rule1D r = gauss_legendre(10, 0.0, 2.0);
  double m = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) m += r.weights[i] * std::pow(r.nodes[i], 19);
  EXPECT_NEAR(m, std::pow(2.0, 20) / 20.0, 1e-8);
  const std::vector<double> breaks{0.25};
  const Rule1D c = composite_gauss_legendre(4, 0.0, 1.0, breaks);
  EXPECT_EQ(c.size(), 8u);
  double step = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) step += c.nodes[i] < 0.25 ? c.weights[i] : 0.0;
  EXPECT_NEAR(step, 0.25, 1e-15);
}

TEST(Quadrature, RingSpectrumRoundTrip) {
  const QuadratureGrid grid = QuadratureGrid::polar(2, 4, 9);
  std::vector<cplx> samples(grid.ring_size());
  for (int a = 0; a < grid.ring_size(); ++a) {
    const double t1 = grid.angle(a, 0), t2 = grid.angle(a, 1);
    samples[a] = 2.0 + std::polar(1.0, 3 * t1 - 2 * t2) - cplx(0, 1) * std::polar(1.0, -t2);
  }
  const AngularSpectrum spec = ring_spectrum(grid, samples, 4);
  const int k1[2] = {3, -2};
  const int k2[2] = {0, -1};
  const int k0[2] = {0, 0};
  EXPECT_NEAR(std::abs(spec[spec.offset(k1)] - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(spec[spec.offset(k2)] - cplx(0, -1)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(spec[spec.offset(k0)] - 2.0), 0.0, 1e-14);
  std::vector<cplx> back(grid.ring_size());
  ring_synthesize(grid, spec, back);
  for (int a = 0; a < grid.ring_size(); ++a) EXPECT_LT(std::abs(back[a] - samples[a]), 1e-13);
}

}  // namespace
}  // namespace bqha

#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"

namespace bqha {
namespace {

using testing::max_abs;

TEST(Operators, ToeplitzOfRadialPower) {
  const BasisSpec b(1, 12);
  const OperatorMatrix t = toeplitz(symbols::power(1.0), QuadratureGrid::for_degree(1, 12), b);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      const double expected = i == j ? (i + 1.0) / (i + 2.0) : 0.0;
      EXPECT_NEAR(std::abs(t(i, j) - expected), 0.0, 1e-13);
    }
  const RadialOperator r = toeplitz_radial(symbols::power(1.0).profile().value(), b);
  EXPECT_LT(max_abs(r.to_matrix().entries() - t.entries()), 1e-13);
}

TEST(Operators, ToeplitzLevelsInBall) {
  const BasisSpec b(2, 10);
  RadialProfile a{[](double r) { return cplx(1.0 - r * r); }, {}};
  const RadialOperator t = toeplitz_radial(a, b);
  for (int k = 0; k <= 10; ++k) EXPECT_NEAR(std::abs(t.level(k) - 1.0 / (k + 3)), 0.0, 1e-14);
  const OperatorMatrix q = toeplitz(sample(QuadratureGrid::for_degree(2, 10),
                                           [](const BallPoint& z) { return cplx(1.0 - z.norm2()); }),
                                    QuadratureGrid::for_degree(2, 10), b);
  EXPECT_LT(max_abs(q.entries() - t.to_matrix().entries()), 1e-13);
}

TEST(Operators, ToeplitzOfCoordinate) {
  const BasisSpec b(1, 8);
  const QuadratureGrid grid = QuadratureGrid::for_degree(1, 8);
  const OperatorMatrix t = toeplitz(sample(grid, [](const BallPoint& z) { return z[0]; }), grid, b);
  for (int k = 0; k < 8; ++k) EXPECT_NEAR(std::abs(t(k + 1, k) - std::sqrt((k + 1.0) / (k + 2.0))), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(t(0, 1)), 0.0, 1e-14);
}

TEST(Operators, ToeplitzOfStepUsesBreaks) {
  const BasisSpec b(1, 6);
  const OperatorMatrix t = toeplitz(symbols::step(0.5), QuadratureGrid::for_degree(1, 6), b);
  // (k+1) int_0^{1/4} t^k dt = 4^{-(k+1)}
  for (int k = 0; k <= 6; ++k) EXPECT_NEAR(t(k, k).real(), std::pow(0.25, k + 1), 1e-14);
}

TEST(Operators, BerezinOfToeplitz) {
  const BasisSpec b(1, 60);
  const RadialOperator t = toeplitz_radial(symbols::power(1.0).profile().value(), b);
  const Evaluation e = berezin(t.to_matrix(), BallPoint{cplx(0.0, 0.5)});
  EXPECT_NEAR(e.value.real(), 0.589138652066028347, 1e-13);
  EXPECT_NEAR(berezin_radial(t.level_sequence(), 0.5).real(), 0.589138652066028347, 1e-13);

  const BasisSpec b2(2, 40);
  RadialProfile a{[](double r) { return cplx(1.0 - r * r); }, {}};
  const RadialOperator t2 = toeplitz_radial(a, b2);
  EXPECT_NEAR(berezin_radial(t2.level_sequence(), 0.5).real(), 0.267415956198085041, 1e-12);
  EXPECT_NEAR(berezin(t2.to_matrix(), BallPoint{cplx(0.3), cplx(0.0, 0.4)}).value.real(), 0.267415956198085041,
              1e-12);
}

TEST(Operators, PhiAlphaLevelsAndTrace) {
  const BasisSpec b(1, 40);
  const PhiAlpha p1 = phi_alpha(1.0, b);
  EXPECT_NEAR(p1.op.level(0).real(), 2.0, 1e-14);
  EXPECT_NEAR(p1.op.level(1).real(), -1.0, 1e-14);
  EXPECT_EQ(p1.op.support_degree(), 1);
  EXPECT_EQ(p1.trace_tail, 0.0);
  EXPECT_NEAR(p1.op.trace().real(), 1.0, 1e-14);
  EXPECT_NEAR(schatten_norm(p1.op, 1.0), 3.0, 1e-14);

  const PhiAlpha p0 = phi_alpha(0.0, b);
  EXPECT_LT(max_abs(p0.op.to_matrix().entries() - phi(b).entries()), 1e-15);

  struct Row {
    int n, d;
    double alpha, tail;
  };
  for (const Row& r : {Row{1, 40, -0.5, 0.0878433924473961612}, Row{1, 40, 0.5, -0.0010844863265110637},
                       Row{1, 40, 1.5, 4.11830250573821665e-5}, Row{2, 16, 0.5, -0.0099474217859096825},
                       Row{1, 8, -0.5, 0.1854705810546875}}) {
    const PhiAlpha p = phi_alpha(r.alpha, BasisSpec(r.n, r.d));
    EXPECT_NEAR(p.trace_tail, r.tail, 1e-9 * std::max(1.0, std::abs(r.tail) * 1e3)) << r.alpha;
    EXPECT_NEAR(p.op.trace().real() + p.trace_tail, 1.0, 1e-9);
  }
}

TEST(Operators, PhiAlphaLevelsMatchMoments) {
  // Berezin(Phi_alpha) = phi_alpha: sum_k lambda_k binom(n+k,n) s^k = C_alpha (1-s)^alpha.
  const int n = 2;
  const double alpha = 0.5, s = 0.3;
  const LevelSequence l = phi_alpha_levels(alpha, n, 200);
  cplx sum = 0.0;
  for (int k = 0; k <= 200; ++k) sum += l.values(k) * binomial(n + k, n) * std::pow(s, k);
  EXPECT_NEAR(sum.real(), weight_constant(n, alpha) * std::pow(1 - s, alpha), 1e-12);
}

TEST(Operators, AlphaBerezinValues) {
  const BasisSpec b(1, 40);
  const OperatorMatrix t = toeplitz_radial(symbols::power(1.0).profile().value(), b).to_matrix();
  const Evaluation e = alpha_berezin(t, BallPoint{0.5}, 2.0);
  EXPECT_NEAR(e.value.real(), 0.4067436057827653677, 1e-12);
  EXPECT_EQ(e.remainder, 0.0);

  const OperatorMatrix st = toeplitz(symbols::step(0.5), QuadratureGrid::for_degree(1, 40), b);
  EXPECT_NEAR(alpha_berezin(st, BallPoint{cplx(0.0, 0.3)}, 3.0).value.real(), 0.5437490228394944945, 1e-12);

  const QuadratureGrid fine = QuadratureGrid::polar(1, 120, 160, 0.0, 1.0, {0.25});
  EXPECT_NEAR(balpha_radial_symbol(symbols::step(0.5).profile().value(), 3.0, 0.3, fine).real(),
              0.5437490228394944945, 1e-10);

  // alpha = 0 is the Berezin transform.
  std::mt19937_64 rng(41);
  const OperatorMatrix s = testing::random_low_degree_operator(BasisSpec(2, 20), 3, rng);
  const BallPoint z{cplx(0.2, 0.1), cplx(0.0, -0.3)};
  EXPECT_LT(std::abs(alpha_berezin(s, z, 0.0).value - berezin(s, z).value), 1e-12);
}

TEST(Operators, AlphaBerezinNonIntegerRemainder) {
  const BasisSpec b(1, 40);
  const OperatorMatrix id = OperatorMatrix::identity(b);
  // pi(0) is diagonal, so the truncated value misses exactly the trace tail.
  const Evaluation e = alpha_berezin(id, BallPoint::origin(1), 0.5);
  EXPECT_NEAR(e.value.real() - 0.0010844863265110637, 1.0, 1e-9);
  EXPECT_NEAR(e.remainder, 0.0010844863265110637, 1e-9);
}

TEST(Operators, RadialPartAndRadialize) {
  const BasisSpec b(2, 3);
  CoeffVector e{b, CVector::Zero(b.dim())};
  e.coeffs(b.find({1, 1})) = 1.0;
  const OperatorMatrix p = OperatorMatrix::rank_one(e, e);
  const RadialOperator r = radial_part(p);
  EXPECT_NEAR(r.level(2).real(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(std::abs(r.level(1)), 0.0, 1e-15);
  EXPECT_LT(max_abs(radialize(p).entries() - r.to_matrix().entries()), 1e-15);
  EXPECT_NEAR(std::abs(trace(radialize(p)) - trace(p)), 0.0, 1e-15);

  std::mt19937_64 rng(42);
  const OperatorMatrix s = testing::random_operator(b, rng);
  EXPECT_NEAR(std::abs(trace(radialize(s)) - trace(s)), 0.0, 1e-12);
  // Radialization commutes with rotations, so rotating first changes nothing.
  CMatrix u(2, 2);
  u << std::polar(1.0, 0.3), 0.0, 0.0, std::polar(1.0, -1.1);
  const CMatrix rot = representation_matrix(b, unitary_embed(u)).matrix.entries();
  const OperatorMatrix sr{b, rot * s.entries() * rot.adjoint()};
  EXPECT_LT(max_abs(radialize(sr).entries() - radialize(s).entries()), 1e-12);
}

TEST(Operators, NormsAndAlgebra) {
  const BasisSpec b(1, 3);
  CVector lv(4);
  lv << 3.0, -4.0, 0.0, 1.0;
  const RadialOperator r(b, lv);
  EXPECT_NEAR(schatten_norm(r, 1.0), 8.0, 1e-14);
  EXPECT_NEAR(schatten_norm(r, 2.0), std::sqrt(26.0), 1e-14);
  EXPECT_NEAR(schatten_norm(r.to_matrix(), 2.0), std::sqrt(26.0), 1e-14);
  EXPECT_NEAR(op_norm(r.to_matrix()), 4.0, 1e-14);
  EXPECT_THROW(schatten_norm(r, 0.5), DomainError);

  std::mt19937_64 rng(43);
  const OperatorMatrix a = testing::random_operator(b, rng), c = testing::random_operator(b, rng);
  EXPECT_LT(max_abs((a * c).entries() - a.entries() * c.entries()), 1e-14);
  EXPECT_LT(max_abs((a + c - c).entries() - a.entries()), 1e-14);
  EXPECT_LT(max_abs((cplx(2.0) * a).entries() - 2.0 * a.entries()), 1e-14);
  EXPECT_THROW(a + OperatorMatrix::zero(BasisSpec(1, 4)), DimensionMismatch);

  CoeffVector u{b, CVector::Zero(4)}, v{b, CVector::Zero(4)};
  u.coeffs(1) = 2.0;
  v.coeffs(2) = cplx(0, 1);
  const OperatorMatrix ruv = OperatorMatrix::rank_one(u, v);
  // <e_2, i e_2> = -i
  EXPECT_NEAR(std::abs(ruv(1, 2) - cplx(0, -2)), 0.0, 1e-15);
}

TEST(Operators, TranslatedTraceSamples) {
  std::mt19937_64 rng(44);
  const BasisSpec b(2, 24);
  const OperatorMatrix s = testing::random_low_degree_operator(b, 2, rng);
  const RadialOperator a = phi_alpha(1.0, b).op;
  const QuadratureGrid grid = QuadratureGrid::polar(2, 3, 5, 0.0, 0.5);
  const CVector f = translated_trace_samples(s, a, grid);
  for (std::size_t i = 0; i < grid.size(); i += 7) {
    const cplx direct = alpha_berezin(s, grid.node(i), 1.0).value;
    EXPECT_LT(std::abs(f(static_cast<Eigen::Index>(i)) - direct), 1e-11) << i;
  }
  const CVector g = alpha_berezin_samples(s, 1.0, grid);
  EXPECT_LT((f - g).norm(), 1e-12);
}

}  // namespace
}  // namespace bqha

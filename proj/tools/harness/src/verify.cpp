#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "bqha_harness/commands.hpp"
#include "bqha_harness/csv.hpp"
#include "common.hpp"

namespace bqha::harness {

namespace {

using detail::max_abs;
using detail::Rng;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// K_alpha(a, b) = (1 - <a, b>)^{-(n+1+alpha)}
cplx kern(double alpha, const BallPoint& a, const BallPoint& b) { return kernel(KernelParams(alpha), b, a); }

struct Context {
  const Config& cfg;
  RunReport& rep;
  Rng rng;
  BasisSpec basis;
  QuadratureGrid grid;

  int n() const { return cfg.n; }
  int D() const { return cfg.D; }
  // Low degree used by random finite-rank operators.
  int low() const { return std::min(2, cfg.D); }
  void err(std::string name, std::string anchor, double e, double tol, json diag = json::object()) {
    rep.add(error_record(std::move(name), std::move(anchor), e, tol, std::move(diag)));
  }
  void bound(std::string name, std::string anchor, double m, double target, double tol, json diag = json::object()) {
    rep.add(bound_record(std::move(name), std::move(anchor), m, target, tol, std::move(diag)));
  }
};

std::vector<BallPoint> points(Context& c, int count, double r_max) {
  std::vector<BallPoint> p;
  for (int i = 0; i < count; ++i) p.push_back(detail::random_point(c.n(), r_max, c.rng));
  return p;
}

// ---------------------------------------------------------------- geometry

void cocycle_suite(Context& c) {
  const int n = c.n();
  const int tuples = 200;
  double e1 = 0, e2 = 0, e3a = 0, e3b = 0, e4 = 0, e5 = 0;
  for (int t = 0; t < tuples; ++t) {
    const double alpha = t % 4;
    const GroupElement g = detail::random_group(n, 0.8, c.rng);
    const GroupElement h = detail::random_group(n, 0.8, c.rng);
    const BallPoint z = detail::random_point(n, 0.9, c.rng);
    const BallPoint w = detail::random_point(n, 0.9, c.rng);
    const BallPoint o = BallPoint::origin(n);
    const BallPoint g0 = mobius_act(g, o);
    auto j = [alpha](const GroupElement& x, const BallPoint& p) { return cocycle(x, p, alpha).value; };

    const cplx l1 = j(g, w) * kern(alpha, mobius_act(g, w), mobius_act(g, z)) * std::conj(j(g, z));
    e1 = std::max(e1, rel(l1, kern(alpha, w, z)));
    e2 = std::max(e2, std::abs(std::norm(j(g, o)) - std::pow(1.0 - g0.norm2(), n + 1 + alpha)));
    e3a = std::max(e3a, rel(j(g.inverse(), mobius_act(g, z)), 1.0 / j(g, z)));
    e3b = std::max(e3b, rel(std::conj(j(g.inverse(), o)), j(g, o)));
    const cplx l4 = std::conj(j(g.inverse(), mobius_act(h.inverse(), o)));
    e4 = std::max(e4, rel(l4, j(h, g0) * j(g, o) / j(h, o)));
    e5 = std::max(e5, rel(j(g.inverse(), w), std::conj(j(g, o)) * kern(alpha, w, g0)));
  }
  const json d{{"tuples", tuples}, {"alphas", {0, 1, 2, 3}}, {"error", "relative to max(1, |rhs|)"}};
  c.err("cocycle/kernel-identity", "j(g,w) K(gw,gz) conj(j(g,z)) = K(w,z)", e1, 1e-10, d);
  c.err("cocycle/modulus-at-origin", "|j(g,0)|^2 = (1-|g0|^2)^(n+1+alpha)", e2, 1e-10, d);
  c.err("cocycle/inverse", "j(g^-1, gz) = j(g,z)^-1", e3a, 1e-10, d);
  c.err("cocycle/conjugate-at-origin", "conj(j(g^-1,0)) = j(g,0)", e3b, 1e-10, d);
  c.err("cocycle/two-elements", "conj(j(g^-1,h^-1 0)) = j(h,g0) j(g,0)/j(h,0)", e4, 1e-10, d);
  c.err("cocycle/kernel-factor", "j(g^-1,w) = conj(j(g,0)) K(w,g0)", e5, 1e-10, d);

  // Non-integer weights: only moduli are branch independent.
  double em = 0.0;
  for (double alpha : {-0.5, 0.5, 1.5}) {
    for (int t = 0; t < 20; ++t) {
      const GroupElement g = detail::random_group(n, 0.8, c.rng);
      const BallPoint z = detail::random_point(n, 0.9, c.rng);
      const double g0 = mobius_act(g, BallPoint::origin(n)).norm2();
      em = std::max(em, std::abs(std::norm(cocycle(g, BallPoint::origin(n), alpha).value) - std::pow(1.0 - g0, n + 1 + alpha)));
      em = std::max(em, std::abs(std::abs(cocycle(g.inverse(), mobius_act(g, z), alpha).value *
                                          cocycle(g, z, alpha).value) - 1.0));
    }
  }
  c.err("cocycle/modulus-noninteger", "|j(g,0)|^2 and |j(g^-1,gz) j(g,z)| for alpha in {-0.5,0.5,1.5}", em, 1e-10);
}

void geometry_suite(Context& c) {
  const int n = c.n();
  double ei = 0.0, ee = 0.0;
  for (int t = 0; t < 100; ++t) {
    const BallPoint z = detail::random_point(n, 0.95, c.rng);
    const BallPoint w = detail::random_point(n, 0.95, c.rng);
    ei = std::max(ei, (involution_map(z, involution_map(z, w)).coords() - w.coords()).norm());
    ee = std::max(ee, (involution_map(z, BallPoint::origin(n)).coords() - z.coords()).norm());
    ee = std::max(ee, involution_map(z, z).norm());
  }
  c.err("geometry/involution", "tau_z(tau_z(w)) = w", ei, 1e-12, {{"pairs", 100}});
  c.err("geometry/involution-endpoints", "tau_z(0) = z, tau_z(z) = 0", ee, 1e-12);

  double ea = 0.0, eb = 0.0;
  for (int t = 0; t < 100; ++t) {
    const GroupElement g = detail::random_group(n, 0.8, c.rng);
    const GroupElement h = detail::random_group(n, 0.8, c.rng);
    const BallPoint z = detail::random_point(n, 0.9, c.rng);
    ea = std::max(ea, (mobius_act(g, mobius_act(h, z)).coords() - mobius_act(g * h, z).coords()).norm());
    eb = std::max(eb, (mobius_act(boost(z), BallPoint::origin(n)).coords() - z.coords()).norm());
  }
  c.err("geometry/group-action", "g(hz) = (gh)z", ea, 1e-12);
  c.err("geometry/boost-origin", "boost(z) 0 = z", eb, 1e-12);

  // f(z) = (1-|z|^2)^5 (1 + Re z_1) is integrable; its translate has the same dlambda-integral.
  const QuadratureGrid q = n == 1 ? QuadratureGrid::polar(1, 40, 48) : QuadratureGrid::polar(2, 20, 24);
  const auto f = [](const BallPoint& z) { return cplx(std::pow(1.0 - z.norm2(), 5) * (1.0 + z[0].real())); };
  const cplx base = integrate_invariant(sample(q, f), q);
  double em = 0.0;
  for (int t = 0; t < 3; ++t) {
    const GroupElement g = detail::random_group(n, 0.3, c.rng).inverse();
    const cplx moved = integrate_invariant(sample(q, [&](const BallPoint& z) { return f(mobius_act(g, z)); }), q);
    em = std::max(em, std::abs(moved - base));
  }
  c.err("geometry/invariant-measure", "int f(g^-1 z) dlambda = int f dlambda", em, 1e-8,
        {{"integral", base.real()}, {"elements", 3}});
}

// ---------------------------------------------------------------- space

// Quadrature sum of e_i conj(e_j) over the grid, with each ring's angular
// trapezoid sum taken in closed form (a root-of-unity sum).
CMatrix gram_matrix(const BasisSpec& basis, const QuadratureGrid& grid) {
  const int dim = basis.dim();
  const int na = grid.angular_nodes();
  CMatrix gm = CMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      bool alive = true;
      for (int cc = 0; cc < basis.n(); ++cc)
        alive = alive && (basis.index(i)[cc] - basis.index(j)[cc]) % na == 0;
      if (!alive) continue;
      double s = 0.0;
      for (int r = 0; r < grid.ring_count(); ++r) {
        double p = grid.ring_weight(r);
        for (int cc = 0; cc < basis.n(); ++cc)
          p *= std::pow(grid.ring_base(r)(cc), basis.index(i)[cc] + basis.index(j)[cc]);
        s += p;
      }
      gm(i, j) = s * basis.norm_factor(i) * basis.norm_factor(j);
    }
  }
  return gm;
}

void space_suite(Context& c) {
  const int n = c.n();
  const int D = c.D();
  const BasisSpec& basis = c.basis;
  const CMatrix gm = gram_matrix(basis, c.grid);
  c.err("space/gram", "<e_m, e_m'> = delta", max_abs(gm - CMatrix::Identity(basis.dim(), basis.dim())), 1e-12,
        {{"radial_nodes", c.grid.radial_nodes()}, {"angular_nodes", c.grid.angular_nodes()}});

  double em = 0.0;
  for (int i = 0; i < basis.dim(); ++i) {
    double s = 0.0;
    for (int r = 0; r < c.grid.ring_count(); ++r) {
      double p = c.grid.ring_weight(r);
      for (int cc = 0; cc < n; ++cc) p *= std::pow(c.grid.ring_base(r)(cc), 2 * basis.index(i)[cc]);
      s += p;
    }
    double exact = std::exp(log_factorial(n) - log_factorial(n + basis.degree(i)));
    for (int cc = 0; cc < n; ++cc) exact *= std::exp(log_factorial(basis.index(i)[cc]));
    em = std::max(em, std::abs(s - exact) / exact);
  }
  c.err("space/monomial-moments", "int |z^m|^2 dv = n! m! / (n+|m|)!", em, 1e-12, {{"error", "relative"}});

  double ew = 0.0;
  for (int a = 0; a <= std::max(D, 12); ++a)
    ew = std::max(ew, std::abs(weight_constant(n, a) - binomial(n + a, n)) / binomial(n + a, n));
  c.err("space/weight-constant", "Gamma(n+a+1)/(n! Gamma(a+1)) = (n+a)!/(n! a!)", ew, 1e-12);

  // Reproducing property on a grid whose angular rule resolves K_z to below
  // double precision at the test radius.
  const double rz = n == 1 ? 0.9 : 0.4;
  const int na = D + 5 + static_cast<int>(std::ceil(std::log(1e-17) / std::log(rz)));
  const QuadratureGrid q = QuadratureGrid::polar(n, D / 2 + 2, na);
  std::normal_distribution<double> gauss;
  CoeffVector f{basis, CVector(basis.dim())};
  for (int i = 0; i < basis.dim(); ++i) f.coeffs(i) = cplx(gauss(c.rng), gauss(c.rng));
  f.coeffs /= f.coeffs.norm();
  const CVector fs = sample(q, [&f](const BallPoint& w) { return evaluate(f, w); });
  double er = 0.0;
  for (const BallPoint& z : points(c, 5, rz)) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) s += q.weight(i) * fs(i) * std::conj(kern(0.0, q.node(i), z));
    er = std::max(er, std::abs(s - evaluate(f, z)));
  }
  c.err("space/reproducing", "<f, K_z> = f(z)", er, 1e-10,
        {{"max_radius", rz}, {"radial_nodes", q.radial_nodes()}, {"angular_nodes", q.angular_nodes()}});
}

// ---------------------------------------------------------------- translation

void translation_suite(Context& c) {
  const int n = c.n();
  const int D = c.D();
  const BasisSpec& basis = c.basis;
  std::normal_distribution<double> gauss;

  {
    // Coefficients of pi(z) f beyond degree D + j fall like binom(j + D + n, D + n) |z|^j; the angular
    // grid must outrun that or aliasing dominates.
    const double rz = n == 1 ? 0.5 : 0.3;
    int j = 1;
    const auto log_coeff = [&](int jj) {
      return std::lgamma(jj + D + n + 1.0) - std::lgamma(jj + 1.0) - std::lgamma(D + n + 1.0) + jj * std::log(rz);
    };
    while (log_coeff(j) > std::log(1e-18) || j < D) ++j;
    const QuadratureGrid q = QuadratureGrid::polar(n, D / 2 + 2, D + j + 1);
    double e = 0.0, tail = 0.0;
    for (int t = 0; t < 2; ++t) {
      CoeffVector f{basis, CVector(basis.dim())};
      for (int i = 0; i < basis.dim(); ++i) f.coeffs(i) = cplx(gauss(c.rng), gauss(c.rng));
      f.coeffs /= f.coeffs.norm();
      const BallPoint z = detail::random_point(n, rz, c.rng);
      const TranslatedVector a = translate_vector(f, z);
      const TranslatedVector b = translate_vector_quadrature(f, z, q);
      e = std::max(e, (a.value.coeffs - b.value.coeffs).norm());
      tail = std::max(tail, a.tail);
    }
    c.err("translation/dual-route", "series P pi(z) f = projected samples of pi(z) f", e, 1e-9,
          {{"tail", tail}, {"max_radius", rz}, {"angular_nodes", q.angular_nodes()}});
  }

  const BasisSpec big(n, D + (n == 1 ? 40 : 30));
  const int dim = basis.dim();
  {
    double ei = 0.0, eu = 0.0, tail = 0.0;
    for (int t = 0; t < 3; ++t) {
      const BallPoint z = detail::random_point(n, 0.5, c.rng);
      const TranslationMatrix p = pi_matrix(big, z);
      const CMatrix& m = p.matrix.entries();
      const CMatrix id = CMatrix::Identity(dim, dim);
      ei = std::max(ei, max_abs(m.topRows(dim) * m.leftCols(dim) - id));
      eu = std::max(eu, max_abs(m.leftCols(dim).adjoint() * m.leftCols(dim) - id));
      tail = std::max(tail, p.tails.head(dim).maxCoeff());
    }
    const json d{{"tail", tail}, {"row_degree", big.max_degree()}};
    c.err("translation/involutive", "pi(z)^2 = I", ei, std::max(1e-10, 10 * tail), d);
    c.err("translation/unitary", "pi(z)* pi(z) = I", eu, std::max(1e-10, 10 * tail), d);
  }
  {
    // Columns of low degree only, so the intermediate truncation at the big degree is negligible.
    const int low_dim = BasisSpec(n, std::min(D, 8)).dim();
    double e = 0.0, tail = 0.0;
    for (int t = 0; t < 3; ++t) {
      const GroupElement g = detail::random_group(n, 0.3, c.rng);
      const GroupElement h = detail::random_group(n, 0.3, c.rng);
      const TranslationMatrix pg = representation_matrix(big, g);
      const TranslationMatrix ph = representation_matrix(big, h);
      const TranslationMatrix pgh = representation_matrix(big, g * h);
      const CMatrix prod = pg.matrix.entries().topRows(dim) * ph.matrix.entries().leftCols(low_dim);
      e = std::max(e, max_abs(prod - pgh.matrix.entries().topLeftCorner(dim, low_dim)));
      tail = std::max(tail, ph.tails.head(low_dim).maxCoeff());
    }
    c.err("translation/representation", "pi(g) pi(h) = pi(gh)", e, std::max(1e-10, 10 * tail),
          {{"tail", tail}, {"column_degree", std::min(D, 8)}});
  }
}

// ---------------------------------------------------------------- Toeplitz and Berezin

void toeplitz_suite(Context& c) {
  const int n = c.n();
  const BasisSpec& basis = c.basis;
  std::uniform_real_distribution<double> uw(-8.0, 8.0);
  std::uniform_int_distribution<int> uk(-3, 3);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const double omega = uw(c.rng);
    const int k = uk(c.rng);
    const SymbolFunction a = SymbolFunction::general(
        "unimodular",
        [omega, k](const BallPoint& z) {
          const cplx z1 = z[0];
          const cplx phase = std::abs(z1) > 0.0 ? std::pow(z1 / std::abs(z1), k) : cplx(1.0);
          return std::polar(1.0, omega * z.norm2()) * phase;
        },
        {true, false, 1.0});
    worst = std::max(worst, op_norm(toeplitz(a, c.grid, basis)));
  }
  c.bound("toeplitz/contraction", "||T_a|| <= ||a||_inf", worst, 1.0, 1e-10, {{"symbols", 20}});

  // Matrix engine against the 1-D moment oracle.
  for (const SymbolSpec& s : c.cfg.symbols) {
    const SymbolFunction a = s.make();
    const OperatorMatrix tm = toeplitz(a, c.grid, basis);
    const LevelSequence lv = moment_levels(*a.profile(), n, c.D());
    double ed = 0.0, eo = 0.0;
    for (int i = 0; i < basis.dim(); ++i)
      for (int j = 0; j < basis.dim(); ++j) {
        if (i == j) ed = std::max(ed, std::abs(tm(i, i) - lv.values(basis.degree(i))));
        else eo = std::max(eo, std::abs(tm(i, j)));
      }
    double eb = 0.0;
    for (int t = 0; t <= 9; ++t) {
      const BallPoint z = detail::random_point(n, 0.9, c.rng);
      const CVector dir = z.norm() > 0 ? CVector(z.coords() / z.norm()) : CVector(CVector::Unit(n, 0));
      const BallPoint p(CVector(0.1 * t * dir));
      eb = std::max(eb, std::abs(berezin(tm, p).value - berezin_radial(lv, 0.1 * t)));
    }
    const double e = std::max({ed, eo, eb});
    c.err("dual-oracle/" + s.id(), "<T_a e_m, e_m> = gamma_|m|(a), Berezin profile = radial series", e, 1e-9,
          {{"diagonal", ed}, {"off_diagonal", eo}, {"berezin", eb}});
  }

  // B~_alpha(T_a) (extended route) against a *_l phi_alpha (ball quadrature).
  {
    const QuadratureGrid q = n == 1 ? QuadratureGrid::polar(1, 120, 160) : QuadratureGrid::polar(2, 16, 56);
    const std::vector<double> radii = n == 1 ? std::vector<double>{0.0, 0.35, 0.7} : std::vector<double>{0.35, 0.6};
    std::vector<double> alphas;
    for (double a : n == 1 ? std::vector<double>{0, 1, 2, 3} : std::vector<double>{0, 2})
      if (a <= c.D()) alphas.push_back(a);
    const std::size_t count = n == 1 ? c.cfg.symbols.size() : std::min<std::size_t>(4, c.cfg.symbols.size());
    for (std::size_t si = 0; si < count; ++si) {
      const SymbolSpec& s = c.cfg.symbols[si];
      const SymbolFunction a = s.make();
      detail::ExtendedBerezin eb(ExtendedRadialOperator::toeplitz(*a.profile(), n, c.cfg.depth()), c.D(),
                                 detail::phi_support_degree(alphas, c.D()));
      double e = 0.0, rem = 0.0;
      for (double alpha : alphas) {
        for (double r : radii) {
          CVector w = CVector::Zero(n);
          w(0) = r;
          const Evaluation ev = eb(r, alpha);
          const FunctionConvolution fc = fun_conv_fun(a, symbols::phi_alpha(alpha, n), BallPoint(w), q);
          e = std::max(e, std::abs(ev.value - fc.value));
          rem = std::max(rem, ev.remainder);
        }
      }
      c.err("berezin/alpha-commutation/" + s.id(), "B~_alpha(T_a) = a *_l phi_alpha", e, 1e-8 + rem,
            {{"remainder", rem}, {"radii", radii}, {"alphas", alphas}});
    }
  }

  // B_alpha(B~_beta(S)) = B_beta(B~_alpha(S)) for a finite-rank S.
  {
    const double alpha = std::min(1, c.D());
    const double beta = std::min(3, c.D());
    const OperatorMatrix s = detail::random_low_degree_operator(basis, c.low(), c.rng, false);
    const QuadratureGrid q = n == 1 ? QuadratureGrid::polar(1, 80, 140) : QuadratureGrid::polar(2, 20, 40);
    const CVector fb = alpha_berezin_samples(s, beta, q);
    const CVector fa = alpha_berezin_samples(s, alpha, q);
    const SymbolFunction pa = symbols::phi_alpha(alpha, n);
    const SymbolFunction pb = symbols::phi_alpha(beta, n);
    double e = 0.0;
    for (const BallPoint& w : points(c, n == 1 ? 20 : 6, n == 1 ? 0.7 : 0.35))
      e = std::max(e, std::abs(fun_conv_fun(fb, pa, w, q) - fun_conv_fun(fa, pb, w, q)));
    c.err("berezin/commuting-transforms", "B_alpha(B~_beta(S)) = B_beta(B~_alpha(S))", e, 1e-7,
          {{"alpha", alpha}, {"beta", beta}});
  }

  // Bound on every configured symbol, extended route, |z| <= r_max.
  for (const SymbolSpec& s : c.cfg.symbols) {
    OperatorSpec op;
    op.kind = "toeplitz";
    op.symbol = s;
    double m = 0.0, rem = 0.0;
    for (const CriterionRow& row : criterion_rows(c.cfg, op)) {
      m = std::max(m, row.max_abs);
      rem = std::max(rem, row.remainder);
    }
    c.bound("toeplitz-criterion/" + s.id(), "max |B~_alpha(T_a)| <= ||a||_inf", m, s.sup_norm(), 1e-6 + rem,
            {{"alphas", c.cfg.criterion_alphas}, {"remainder", rem}});
  }

  {
    std::normal_distribution<double> g;
    CMatrix m(basis.dim(), basis.dim());
    for (int i = 0; i < basis.dim(); ++i)
      for (int j = 0; j < basis.dim(); ++j) m(i, j) = cplx(g(c.rng), g(c.rng));
    const OperatorMatrix s(basis, m);
    const OperatorMatrix r1 = radialize(s);
    const double e = max_abs(radialize(r1).entries() - r1.entries()) / std::max(1.0, max_abs(r1.entries()));
    c.err("radial/idempotent", "Rad(Rad S) = Rad S", e, 1e-15);
  }
  {
    const RadialOperator rs = detail::random_low_degree_radial(basis, c.D(), c.rng);
    const OperatorMatrix rm = rs.to_matrix();
    double e = 0.0;
    for (const BallPoint& z : points(c, 10, 0.9))
      e = std::max(e, std::abs(berezin(rm, z).value - berezin_radial(rs.level_sequence(), z.norm())));
    c.err("radial/berezin-closed-form", "B(S)(z) = (1-|z|^2)^(n+1) sum lambda_k binom(n+k,n) |z|^2k", e, 1e-9);
  }
}

// ---------------------------------------------------------------- Phi_alpha

void phi_alpha_suite(Context& c) {
  const int n = c.n();
  const int D = c.D();
  std::vector<double> alphas = c.cfg.alpha_grid;
  for (double a : {-0.5, 0.5, 1.5}) alphas.push_back(a);
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  for (double alpha : alphas) {
    const PhiAlpha pa = phi_alpha(alpha, c.basis);
    const double tr = pa.op.trace().real();
    const std::string id = format_double(alpha);
    if (is_integer(alpha) && alpha <= D) {
      double mass = 0.0;
      for (int k = 0; k <= D; ++k) mass += level_multiplicity(n, k) * std::abs(pa.op.level(k));
      c.err("phi-alpha/trace/" + id, "Tr Phi_alpha = 1", tr - 1.0, 1e-12 * std::max(1.0, mass), {{"abs_level_sum", mass}});
    } else {
      c.err("phi-alpha/trace/" + id, "Tr Phi_alpha = 1 (truncated, plus tail)", tr + pa.trace_tail - 1.0, 1e-9,
            {{"truncated_trace", tr}, {"tail", pa.trace_tail}});
    }
  }
  const Rule1D rule = gauss_legendre(32);
  // Level k carries multiplicity binom(n+k-1, k), which turns (1-t)^(n-1) into t^(n-1); the two integrals
  // agree only for n = 1.
  for (int a = 1; a <= std::min(D, 6); ++a) {
    double integral = 0.0, unweighted = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const double t = rule.nodes[q];
      integral += rule.weights[q] * std::pow(1.0 + t, a) * std::pow(t, n - 1);
      unweighted += rule.weights[q] * std::pow(1.0 + t, a) * std::pow(1.0 - t, n - 1);
    }
    const double want = n * weight_constant(n, a) * integral;
    const double got = schatten_norm(phi_alpha(a, c.basis).op, 1.0);
    c.err("phi-alpha/trace-norm/" + std::to_string(a), "||Phi_a||_1 = n C_a int (1+t)^a t^(n-1) dt", got - want,
          1e-12 * want,
          {{"measured_norm", got}, {"formula", want}, {"without_multiplicity", n * weight_constant(n, a) * unweighted}});
  }
  if (n == 1 && D >= 1) {
    const PhiAlpha p1 = phi_alpha(1.0, c.basis);
    c.err("phi-alpha/trace-norm-value", "||Phi_1||_1 = 3", schatten_norm(p1.op, 1.0) - 3.0, 1e-12);
    CVector want = CVector::Zero(D + 1);
    want(0) = 2.0;
    want(1) = -1.0;
    c.err("phi-alpha/levels-alpha-1", "Phi_1 levels (2, -1, 0, ...)", max_abs(p1.op.levels() - want), 1e-14);
  }
}

// ---------------------------------------------------------------- convolutions

void convolution_suite(Context& c) {
  const int n = c.n();
  const int D = c.D();
  const BasisSpec& basis = c.basis;
  const OperatorMatrix ph = phi(basis);

  // T_a = a *_pi Phi, on |z| <= r_max (with the shell reported) and on the whole ball.
  for (const SymbolSpec& s : c.cfg.symbols) {
    const SymbolFunction a = s.make();
    const OperatorMatrix t = toeplitz(a, c.grid, basis);
    const ConvolutionResult part = fun_conv_op(a, ph, c.grid, c.cfg.r_max);
    const ConvolutionResult full = fun_conv_op(a, ph, c.grid, 1.0);
    c.bound("toeplitz-convolution/" + s.id(), "T_a = a *_pi Phi on |z| <= r_max", op_norm(t - part.value), 0.0,
            1e-6 + part.domain_remainder, {{"r_max", c.cfg.r_max}, {"domain_remainder", part.domain_remainder}});
    c.bound("toeplitz-convolution-ball/" + s.id(), "T_a = a *_pi Phi", op_norm(t - full.value), 0.0, 1e-6);
  }

  {
    const SymbolFunction one = symbols::constant(1.0);
    const OperatorMatrix id = OperatorMatrix::identity(basis);
    const ConvolutionResult part = fun_conv_op(one, ph, c.grid, 0.95);
    const ConvolutionResult full = fun_conv_op(one, ph, c.grid, 1.0);
    c.bound("normalization/identity-r0.95", "1 *_pi Phi = Id (d_pi = 1)", op_norm(part.value - id), 0.0,
            1e-4 + part.domain_remainder, {{"r_max", 0.95}, {"domain_remainder", part.domain_remainder}});
    c.bound("normalization/identity-ball", "1 *_pi Phi = Id (d_pi = 1)", op_norm(full.value - id), 0.0, 1e-10);
  }

  // Berezin identities on |z| <= 0.7.
  {
    std::vector<BallPoint> zs = points(c, 10, 0.7);
    zs.push_back(BallPoint::origin(n));
    CVector edge = CVector::Zero(n);
    edge(n - 1) = 0.7;
    zs.emplace_back(edge);
    double e = 0.0;
    for (const BallPoint& z : zs) e = std::max(e, std::abs(op_conv_op(ph, ph, z) - std::pow(1.0 - z.norm2(), n + 1)));
    c.err("berezin-identity/phi-phi", "Phi *_pi Phi = phi", e, 1e-8, {{"points", zs.size()}, {"max_radius", 0.7}});
    for (int a = 0; a <= std::min(6, D); ++a) {
      const OperatorMatrix pa = phi_alpha(a, basis).op.to_matrix();
      const SymbolFunction fa = symbols::phi_alpha(a, n);
      double e1 = 0.0, e2 = 0.0;
      for (const BallPoint& z : zs) {
        e1 = std::max(e1, std::abs(op_conv_op(pa, ph, z) - fa(z)));
        e2 = std::max(e2, std::abs(op_conv_op(ph, pa, z) - fa(z)));
      }
      c.err("berezin-identity/phi_alpha-phi/" + std::to_string(a), "Phi_alpha *_pi Phi = phi_alpha", e1, 1e-7);
      c.err("berezin-identity/phi-phi_alpha/" + std::to_string(a), "Phi *_pi Phi_alpha = phi_alpha", e2, 1e-7);
    }
    const OperatorMatrix s = detail::random_low_degree_operator(basis, D, c.rng, false);
    double eb = 0.0, tail = 0.0;
    for (const BallPoint& z : zs) {
      const Evaluation b = berezin(s, z);
      eb = std::max(eb, std::abs(op_conv_op(s, ph, z) - b.value));
      tail = std::max(tail, b.tail);
    }
    c.err("berezin-identity/berezin", "B(S) = S *_pi Phi", eb, 1e-10, {{"tail", tail}});
  }

  // phi_alpha *_pi S = T_{B~_alpha(S)} for radial S.
  {
    const RadialOperator rs = detail::random_low_degree_radial(basis, c.low(), c.rng);
    const OperatorMatrix sm = rs.to_matrix();
    for (int a = 0; a <= std::min(2, D); ++a) {
      const OperatorMatrix lhs = fun_conv_op(symbols::phi_alpha(a, n), sm, c.grid, 1.0).value;
      const OperatorMatrix rhs = toeplitz(alpha_berezin_samples(sm, a, c.grid), c.grid, basis);
      c.err("convolution/phi_alpha-radial/" + std::to_string(a), "phi_alpha *_pi S = T_{B~_alpha(S)}",
            op_norm(lhs - rhs), 1e-7);
    }
  }

  // (psi *_pi S) * Phi = psi * (S * Phi) with psi = phi_2, S self-adjoint.
  {
    const double alpha = 2.0;
    const SymbolFunction psi = symbols::phi_alpha(alpha, n);
    const OperatorMatrix s = detail::random_low_degree_operator(basis, c.low(), c.rng, true);
    const OperatorMatrix left = fun_conv_op(psi, s, c.grid, 1.0).value;
    // S * Phi = B(S); only its radialization B(Rad S) enters a function convolution.
    const LevelSequence rl = radial_part(s).level_sequence();
    const SymbolFunction bs =
        SymbolFunction::radial("berezin", {[rl](double r) { return berezin_radial(rl, r); }, {}}, {true, false, {}});
    const QuadratureGrid q = n == 1 ? QuadratureGrid::polar(1, 80, 140) : QuadratureGrid::polar(2, 20, 40);
    double e = 0.0, tail = 0.0;
    for (const BallPoint& z : points(c, 10, n == 1 ? 0.7 : 0.3)) {
      const Evaluation lv = berezin(left, z);
      e = std::max(e, std::abs(lv.value - fun_conv_fun(psi, bs, z, q).value));
      tail = std::max(tail, lv.tail);
    }
    c.err("convolution/associativity", "(psi *_pi S) * Phi = psi * (S * Phi)", e, std::max(1e-6, 10 * tail),
          {{"tail", tail}, {"psi", "phi_2"}});
  }

  // Radial pairs commute, also at genuine group elements.
  {
    const OperatorMatrix s = detail::random_low_degree_radial(basis, c.low(), c.rng).to_matrix();
    const OperatorMatrix a = detail::random_low_degree_radial(basis, c.low(), c.rng).to_matrix();
    double e = 0.0;
    for (int t = 0; t < 10; ++t) {
      const GroupElement g = detail::random_group(n, 0.7, c.rng);
      e = std::max(e, std::abs(op_conv_op(s, a, g) - op_conv_op(a, s, g)));
      const BallPoint z = detail::random_point(n, 0.9, c.rng);
      e = std::max(e, std::abs(op_conv_op(s, a, z) - op_conv_op(a, s, z)));
    }
    c.err("convolution/radial-commutativity", "S *_pi A = A *_pi S (radial S, A)", e, 1e-8);
  }

  // (S * A) *_pi B = (S * B) *_pi A for radial A, B.
  {
    const OperatorMatrix s = detail::random_low_degree_operator(basis, c.low(), c.rng, false);
    const RadialOperator a = detail::random_low_degree_radial(basis, c.low(), c.rng);
    const RadialOperator b = detail::random_low_degree_radial(basis, c.low(), c.rng);
    const OperatorMatrix m1 = fun_conv_op(translated_trace_samples(s, a, c.grid), b, c.grid);
    const OperatorMatrix m2 = fun_conv_op(translated_trace_samples(s, b, c.grid), a, c.grid);
    double e = 0.0;
    for (const BallPoint& z : points(c, 10, 0.7)) e = std::max(e, std::abs(berezin(m1, z).value - berezin(m2, z).value));
    c.err("convolution/exchange", "(S * A) *_pi B = (S * B) *_pi A", std::max(e, op_norm(m1 - m2)), 1e-6,
          {{"berezin_points", 10}, {"operator_norm", op_norm(m1 - m2)}});
  }

  // ||psi *_pi S||_p <= ||psi||_1 ||S||_p.
  {
    const OperatorMatrix s = detail::random_low_degree_operator(basis, c.low(), c.rng, false);
    const double r0 = 0.6;
    const Rule1D rule = gauss_legendre(64, 0.0, r0 * r0);
    double ind_mass = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q)
      ind_mass += rule.weights[q] * n * std::pow(rule.nodes[q], n - 1) * std::pow(1.0 - rule.nodes[q], -(n + 1.0));
    struct Case {
      std::string id;
      SymbolFunction psi;
      double l1;
    };
    const std::vector<Case> cases{{"phi_1", symbols::phi_alpha(1.0, n), 1.0},
                                  {"ball_indicator(0.6)", symbols::ball_indicator(r0), ind_mass}};
    for (const Case& cs : cases) {
      const OperatorMatrix conv = fun_conv_op(cs.psi, s, c.grid, 1.0).value;
      for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
        const std::string pid = std::isinf(p) ? "inf" : format_double(p);
        c.bound("convolution/young/" + cs.id + "/p=" + pid, "||psi *_pi S||_p <= ||psi||_1 ||S||_p",
                schatten_norm(conv, p), cs.l1 * schatten_norm(s, p), 1e-6, {{"psi_l1", cs.l1}});
      }
    }
  }

  // ||S * A||_inf <= ||S||_1 ||A||_op and int S * A dlambda = Tr S Tr A.
  {
    const OperatorMatrix s = detail::random_low_degree_operator(basis, c.low(), c.rng, false);
    const RadialOperator a = detail::random_low_degree_radial(basis, c.low(), c.rng);
    const CVector f = translated_trace_samples(s, a, c.grid);
    const double sup = f.cwiseAbs().maxCoeff();
    const double opa = a.levels().cwiseAbs().maxCoeff();
    c.bound("convolution/linf", "||S * A||_inf <= ||S||_1 ||A||", sup, schatten_norm(s, 1.0) * opa, 1e-12);

    const cplx want = trace(s) * a.trace();
    const cplx full = integrate_invariant(f, c.grid);
    const double t_max = c.cfg.r_max * c.cfg.r_max;
    const QuadratureGrid inner = c.grid.restricted(0.0, t_max);
    const QuadratureGrid shell = c.grid.restricted(t_max, 1.0);
    const cplx part = integrate_invariant(translated_trace_samples(s, a, inner), inner);
    const CVector fs = translated_trace_samples(s, a, shell);
    const double rem = integrate_invariant(CVector(fs.cwiseAbs().cast<cplx>()), shell).real();
    c.bound("convolution/total-integral", "int S * A dlambda over |z| <= r_max = Tr S Tr A", std::abs(part - want), 0.0,
            1e-8 + rem, {{"domain_remainder", rem}, {"r_max", c.cfg.r_max}});
    c.bound("convolution/total-integral-ball", "int S * A dlambda = Tr S Tr A", std::abs(full - want), 0.0,
            1e-8 * std::max(1.0, std::abs(want)));
  }

  // Function convolutions.
  {
    const QuadratureGrid q = n == 1 ? QuadratureGrid::polar(1, 40, 64) : QuadratureGrid::polar(2, 16, 32);
    const std::vector<BallPoint> ws = points(c, 3, 0.5);
    double e1 = 0.0;
    for (double a : {0.0, 1.0, 2.0})
      for (const BallPoint& w : ws)
        e1 = std::max(e1, std::abs(fun_conv_fun(symbols::phi_alpha(a, n), symbols::constant(1.0), w, q).value - 1.0));
    c.err("function-convolution/phi_alpha-one", "phi_alpha * 1 = 1", e1, 1e-10);

    const SymbolFunction f = symbols::phi_alpha(1.0, n);
    const SymbolFunction g = symbols::phi_alpha(2.5, n);
    double e2 = 0.0;
    for (const BallPoint& w : ws)
      e2 = std::max(e2, std::abs(fun_conv_fun(f, g, w, q).value - fun_conv_fun(g, f, w, q).value));
    c.err("function-convolution/commutativity", "f * g = g * f (radial f, g)", e2, 1e-9);

    const SymbolFunction lin =
        SymbolFunction::general("z1", [](const BallPoint& z) { return z[0]; }, {true, false, 1.0});
    const SymbolFunction mix = SymbolFunction::general(
        "|z|^2+Re z1", [](const BallPoint& z) { return cplx(z.norm2() + z[0].real()); }, {true, false, 2.0});
    const SymbolFunction lr = radialize_fun(lin, q);
    const SymbolFunction mr = radialize_fun(mix, q);
    const SymbolFunction pr = radialize_fun(g, q);
    double e3 = 0.0;
    for (const BallPoint& w : ws) {
      e3 = std::max(e3, std::abs(lr(w)));
      e3 = std::max(e3, std::abs(mr(w) - w.norm2()));
      e3 = std::max(e3, std::abs(pr(w) - g(w)));
    }
    c.err("function-convolution/radialize", "z1# = 0, (|z|^2 + Re z1)# = |z|^2, f# = f for radial f", e3, 1e-12);
  }
}

// ---------------------------------------------------------------- radialcalc

void radialcalc_suite(Context& c) {
  const int n = c.n();
  double lo = 0.0, hi = 0.0;
  int checked = 0;
  for (const SymbolSpec& s : c.cfg.symbols) {
    const SymbolFunction a = s.make();
    // Profiles with values in [0, 1].
    bool unit = true;
    for (int i = 0; i <= 200 && unit; ++i) {
      const cplx v = (*a.profile())(i / 200.0 * 0.999999);
      unit = std::abs(v.imag()) == 0.0 && v.real() >= 0.0 && v.real() <= 1.0;
    }
    if (!unit) continue;
    ++checked;
    const LevelSequence lv = moment_levels(*a.profile(), n, c.D());
    lo = std::max(lo, -lv.values.real().minCoeff());
    hi = std::max(hi, lv.values.real().maxCoeff() - 1.0);
  }
  c.bound("radialcalc/moment-bounds", "0 <= a <= 1 implies 0 <= gamma_k <= 1", std::max(lo, hi), 0.0, 1e-14,
          {{"symbols", checked}});

  const LevelSequence r2 = moment_levels(*symbols::power(1.0).profile(), n, c.D());
  double worst = -1.0;
  for (int k = 0; k <= c.D(); ++k) worst = std::max(worst, std::abs(1.0 - r2.values(k).real()) - 2.0 / (k + 2));
  c.bound("radialcalc/boundary-trend", "|1 - gamma_k(r^2)| <= 2/(k+2)", worst, 0.0, 0.0);
}

}  // namespace

RunReport cmd_verify(const Config& cfg, const std::filesystem::path& out) {
  RunReport rep{"verify", cfg.echo(), cfg.seed, {}};
  Context c{cfg, rep, Rng(cfg.seed), cfg.basis(), cfg.grid()};
  cocycle_suite(c);
  geometry_suite(c);
  space_suite(c);
  translation_suite(c);
  toeplitz_suite(c);
  phi_alpha_suite(c);
  convolution_suite(c);
  radialcalc_suite(c);

  CsvWriter csv(out / "verify.csv", {"name", "measured", "target", "tolerance", "pass"});
  for (const Record& r : rep.records) {
    csv << r.name << r.measured << r.target << r.tolerance << (r.pass ? 1 : 0);
    csv.end_row();
  }
  return rep;
}

}  // namespace bqha::harness

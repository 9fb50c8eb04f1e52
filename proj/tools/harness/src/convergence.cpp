#include <cmath>

#include "bqha_harness/commands.hpp"
#include "bqha_harness/csv.hpp"
#include "common.hpp"

namespace bqha::harness {

double largest_increase(const std::vector<double>& e, const std::vector<double>& remainders) {
  // Each error is known up to its remainder, so compare the intervals rather than the points.
  const auto r = [&](std::size_t i) { return i < remainders.size() ? remainders[i] : 0.0; };
  const std::size_t start = e.size() > 5 ? e.size() - 5 : 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = start + 1; i < e.size(); ++i) worst = std::max(worst, (e[i] - r(i)) - (e[i - 1] + r(i - 1)));
  return e.size() > 1 ? worst : 0.0;
}

bool tail_non_increasing(const std::vector<double>& e, const std::vector<double>& remainders, double slack) {
  return largest_increase(e, remainders) <= slack;
}

namespace {

// Moments of B~_alpha(S) on one extension depth: gamma, the propagated a-priori remainder and the tail.
struct Moments {
  CVector gamma;
  CVector bound;
  RVector tail;
};

Moments radial_moments(detail::ExtendedBerezin& eb, int n, int D, double alpha) {
  const Rule1D rule = detail::graded_t_rule();
  Moments m{CVector::Zero(D + 1), CVector::Zero(D + 1), RVector::Zero(D + 1)};
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double t = rule.nodes[q];
    const Evaluation ev = eb(std::sqrt(t), alpha);
    for (int k = 0; k <= D; ++k) {
      const double w = rule.weights[q] * (n + k) * std::pow(t, n + k - 1);
      m.gamma(k) += w * ev.value;
      m.bound(k) += w * ev.remainder;
      m.tail(k) += w * ev.tail;
    }
  }
  return m;
}

// Radial S: levels of T_{B~_alpha(S)} are the moments of the radial function
// B~_alpha(S), sampled on a t-rule graded toward the boundary.
//
// The a-priori bound ignores the sign pattern of the Phi_alpha levels and grows like ||Phi_alpha||_1,
// so the reported remainder is the change under halving the extension depth, plus the Phi_alpha
// truncation term, which is sharp.
void radial_curve(const Config& cfg, const OperatorSpec& op, const NormSpec& norm, ConvergenceCurve& out) {
  const int n = cfg.n;
  const int D = cfg.D;
  const int phi_degree = detail::phi_support_degree(cfg.alpha_grid, D);
  Config half = cfg;
  half.extended_depth = std::max(D, cfg.depth() / 2);
  detail::ExtendedBerezin eb(detail::extended_operator(cfg, op), D, phi_degree);
  detail::ExtendedBerezin eh(detail::extended_operator(half, op), D, phi_degree);
  const CVector s = eb.op().levels().head(D + 1);
  const double s_max = std::max(eb.op().levels().cwiseAbs().maxCoeff(), std::abs(eb.op().limit()));
  for (double alpha : cfg.alpha_grid) {
    const Moments full = radial_moments(eb, n, D, alpha);
    const Moments coarse = radial_moments(eh, n, D, alpha);
    const double e = norm.of_levels(n, full.gamma - s);
    const double tt = std::abs(phi_alpha_trace_tail(alpha, n, D)) * s_max;
    out.alphas.push_back(alpha);
    out.errors.push_back(e);
    out.tails.push_back(full.tail.maxCoeff());
    out.remainders.push_back(std::abs(e - norm.of_levels(n, coarse.gamma - s)) +
                             norm.of_levels(n, CVector::Constant(D + 1, tt)));
    out.remainder_bounds.push_back(norm.of_levels(n, full.bound));
  }
}

void matrix_curve(const Config& cfg, const OperatorSpec& op, const NormSpec& norm, ConvergenceCurve& out) {
  const OperatorMatrix s = detail::operator_matrix(cfg, op);
  const QuadratureGrid grid = cfg.grid();
  const double sn = op_norm(s);
  for (double alpha : cfg.alpha_grid) {
    const OperatorMatrix t = toeplitz(alpha_berezin_samples(s, alpha, grid), grid, s.basis());
    out.alphas.push_back(alpha);
    out.errors.push_back(norm.of(t - s));
    out.tails.push_back(0.0);
    out.remainders.push_back(std::abs(phi_alpha_trace_tail(alpha, cfg.n, cfg.D)) * sn);
    out.remainder_bounds.push_back(out.remainders.back());
  }
}

}  // namespace

ConvergenceCurve convergence_curve(const Config& cfg, const OperatorSpec& op) {
  const NormSpec norm = op.norm.value_or(cfg.norm);
  ConvergenceCurve c{op.id(), norm.label(), op.asserted_convergence(), {}, {}, {}, {}, {}};
  if (op.radial())
    radial_curve(cfg, op, norm, c);
  else
    matrix_curve(cfg, op, norm, c);
  return c;
}

RunReport cmd_convergence(const Config& cfg, const std::filesystem::path& out) {
  RunReport rep{"convergence", cfg.echo(), cfg.seed, {}};
  CsvWriter csv(out / "convergence.csv",
                {"operator", "norm", "alpha", "error", "tail", "remainder", "remainder_bound", "asserted"});
  for (const OperatorSpec& op : cfg.operators) {
    const ConvergenceCurve c = convergence_curve(cfg, op);
    for (std::size_t i = 0; i < c.alphas.size(); ++i) {
      csv << c.id << c.norm << c.alphas[i] << c.errors[i] << c.tails[i] << c.remainders[i] << c.remainder_bounds[i]
          << (c.asserted ? 1 : 0);
      csv.end_row();
    }
    if (!c.asserted || c.errors.empty()) continue;
    json diag{{"norm", c.norm}, {"alphas", c.alphas}, {"errors", c.errors}, {"remainders", c.remainders},
              {"remainder_bounds", c.remainder_bounds}};
    rep.add(bound_record("convergence/non-increasing/" + c.id, "T_{B~_alpha(S)} -> S",
                         largest_increase(c.errors, c.remainders), 0.0, 1e-9, diag));
    if (op.kind == "toeplitz" && op.symbol.family == "power" && op.symbol.p == 1.0 && c.alphas.size() > 1) {
      const double ratio = c.errors.back() / c.errors.front();
      Record r = bound_record("convergence/halving/" + c.id, "e(last alpha) < e(first alpha) / 2", ratio, 0.5, 0.0,
                              {{"first", c.errors.front()}, {"last", c.errors.back()}});
      r.pass = ratio < 0.5;
      rep.add(r);
    }
  }
  return rep;
}

}  // namespace bqha::harness

#include <cmath>

#include "bqha_harness/commands.hpp"
#include "bqha_harness/csv.hpp"
#include "common.hpp"

namespace bqha::harness {

std::vector<CriterionRow> criterion_rows(const Config& cfg, const OperatorSpec& op) {
  std::vector<CriterionRow> rows;
  const QuadratureGrid grid = cfg.grid();
  if (op.radial()) {
    const std::vector<double> radii = detail::criterion_radii(grid, cfg.r_max);
    detail::ExtendedBerezin eb(detail::extended_operator(cfg, op), cfg.D,
                               detail::phi_support_degree(cfg.criterion_alphas, cfg.D));
    for (double alpha : cfg.criterion_alphas) {
      CriterionRow row{alpha, 0.0, 0.0, 0.0};
      for (double r : radii) {
        const Evaluation ev = eb(r, alpha);
        row.max_abs = std::max(row.max_abs, std::abs(ev.value));
        row.remainder = std::max(row.remainder, ev.remainder);
        row.tail = std::max(row.tail, ev.tail);
      }
      rows.push_back(row);
    }
    return rows;
  }
  const OperatorMatrix s = detail::operator_matrix(cfg, op);
  const QuadratureGrid inner = grid.restricted(0.0, cfg.r_max * cfg.r_max);
  const double sn = op_norm(s);
  for (double alpha : cfg.criterion_alphas) {
    const CVector v = alpha_berezin_samples(s, alpha, inner);
    const Evaluation origin = alpha_berezin(s, BallPoint::origin(cfg.n), alpha);
    rows.push_back({alpha, std::max(v.cwiseAbs().maxCoeff(), std::abs(origin.value)),
                    std::abs(phi_alpha_trace_tail(alpha, cfg.n, cfg.D)) * sn, 0.0});
  }
  return rows;
}

RunReport cmd_criterion(const Config& cfg, const std::filesystem::path& out) {
  RunReport rep{"criterion", cfg.echo(), cfg.seed, {}};
  CsvWriter csv(out / "criterion.csv", {"operator", "alpha", "max_abs", "bound", "remainder", "tail", "asserted"});
  for (const OperatorSpec& op : cfg.operators) {
    const double sup = detail::operator_sup(op);
    for (const CriterionRow& row : criterion_rows(cfg, op)) {
      csv << op.id() << row.alpha << row.max_abs << sup << row.remainder << row.tail << (op.toeplitz() ? 1 : 0);
      csv.end_row();
      if (!op.toeplitz()) continue;
      const std::string id = op.id() + "/alpha=" + format_double(row.alpha);
      const json diag{{"remainder", row.remainder}, {"tail", row.tail}, {"r_max", cfg.r_max}};
      rep.add(bound_record("criterion/bound/" + id, "max |B~_alpha(T_a)| <= ||a||_inf", row.max_abs, sup,
                           1e-6 + row.remainder, diag));
      if (op.kind == "identity")
        rep.add(error_record("criterion/identity/" + id, "B~_alpha(Id) = 1", row.max_abs - 1.0, 1e-9 + row.remainder,
                             diag));
    }
  }
  return rep;
}

}  // namespace bqha::harness

#include <cmath>

#include "bqha_harness/commands.hpp"
#include "bqha_harness/csv.hpp"
#include "common.hpp"

namespace bqha::harness {

namespace {

LevelSequence wiener_target(const Config& cfg) {
  const WienerSpec& w = cfg.wiener;
  LevelSequence t{cfg.n, CVector::Zero(w.D + 1)};
  if (w.target == "phi") {
    t.values(0) = 1.0;
  } else if (w.target == "ones") {
    t.values.setOnes();
  } else if (w.target == "symbol") {
    t = moment_levels(*w.symbol->make().profile(), cfg.n, w.D);
  } else {
    for (int k = 0; k <= w.D; ++k) t.values(k) = w.levels[k];
  }
  return t;
}

}  // namespace

RunReport cmd_wiener(const Config& cfg, const std::filesystem::path& out) {
  RunReport rep{"wiener", cfg.echo(), cfg.seed, {}};
  const WienerSpec& w = cfg.wiener;
  const LevelSequence target = wiener_target(cfg);

  const MomentFit square = fit_polynomial_profile(target, w.D + 1, true);
  const MomentFit raw = fit_polynomial_profile(target, w.D + 1, false);
  {
    CsvWriter csv(out / "wiener_recovery.csv", {"j", "coeff_re", "coeff_im", "raw_coeff_re", "raw_coeff_im"});
    for (int j = 0; j <= w.D; ++j) {
      csv << j << square.coeffs(j) << raw.coeffs(j);
      csv.end_row();
    }
  }
  rep.add(bound_record("wiener/square-residual", "moment system solved with scaled columns", square.residual, 0.0,
                       1e-8,
                       {{"target", w.target},
                        {"D", w.D},
                        {"cond_raw", square.cond_raw},
                        {"cond_scaled", square.cond_scaled},
                        {"raw_residual", raw.residual}}));
  if (w.target == "ones") {
    CVector e1 = CVector::Zero(w.D + 1);
    e1(0) = 1.0;
    rep.add(error_record("wiener/constant-recovered", "all-ones levels give a = 1", (square.coeffs - e1).norm(), 1e-8));
  }

  // Residual with J < D+1 coefficients; it must fall strictly until it
  // reaches the rounding floor.
  const double floor = 1e-10;
  std::vector<double> res;
  {
    CsvWriter csv(out / "wiener_truncation.csv", {"coeffs", "residual", "cond_raw", "cond_scaled"});
    for (int j = 1; j <= w.D + 1; ++j) {
      const MomentFit f = fit_polynomial_profile(target, j, true);
      res.push_back(f.residual);
      csv << j << f.residual << f.cond_raw << f.cond_scaled;
      csv.end_row();
    }
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < res.size(); ++i)
    if (res[i - 1] > floor) worst = std::max(worst, res[i] - res[i - 1]);
  Record dec = bound_record("wiener/residual-decreasing", "residual strictly decreasing in J", worst, 0.0, 0.0,
                            {{"residuals", res}, {"floor", floor}});
  dec.pass = !(worst >= 0.0);
  if (!std::isfinite(worst)) dec.measured = 0.0;
  rep.add(dec);

  CsvWriter csv(out / "wiener_conditioning.csv", {"D", "cond_raw", "cond_scaled"});
  for (int d = 0; d <= w.conditioning_max_degree; ++d) {
    const LevelSequence probe{cfg.n, CVector::Ones(d + 1)};
    const MomentFit f = fit_polynomial_profile(probe, d + 1, true);
    csv << d << f.cond_raw << f.cond_scaled;
    csv.end_row();
  }
  return rep;
}

}  // namespace bqha::harness

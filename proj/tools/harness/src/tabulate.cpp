#include <cmath>

#include "bqha_harness/commands.hpp"
#include "bqha_harness/csv.hpp"
#include "common.hpp"

namespace bqha::harness {

RunReport cmd_tabulate(const Config& cfg, const std::filesystem::path& out) {
  RunReport rep{"tabulate", cfg.echo(), cfg.seed, {}};
  const int n = cfg.n;
  const int D = cfg.D;
  {
    CsvWriter csv(out / "moments.csv", {"symbol", "k", "re", "im"});
    for (const SymbolSpec& s : cfg.symbols) {
      const LevelSequence lv = moment_levels(*s.make().profile(), n, D);
      for (int k = 0; k <= D; ++k) {
        csv << s.id() << k << lv.values(k);
        csv.end_row();
      }
    }
  }
  {
    CsvWriter csv(out / "phi_alpha_levels.csv", {"alpha", "k", "re", "im"});
    for (double alpha : cfg.alpha_grid) {
      const LevelSequence lv = phi_alpha_levels(alpha, n, D);
      for (int k = 0; k <= D; ++k) {
        csv << alpha << k << lv.values(k);
        csv.end_row();
      }
    }
  }
  double e0 = 0.0;
  {
    CsvWriter csv(out / "phi_alpha_profiles.csv", {"alpha", "r", "value"});
    for (double alpha : cfg.alpha_grid) {
      const SymbolFunction f = symbols::phi_alpha(alpha, n);
      for (int i = 0; i <= 100; ++i) {
        const double r = i / 100.0;
        CVector z = CVector::Zero(n);
        z(0) = r;
        const double v = i == 100 ? 0.0 : f(BallPoint(z)).real();
        csv << alpha << r << v;
        csv.end_row();
      }
      e0 = std::max(e0, std::abs(f(BallPoint::origin(n)).real() - weight_constant(n, alpha)));
    }
  }
  rep.add(error_record("tabulate/profile-at-origin", "phi_alpha(0) = C_alpha", e0, 1e-12));
  const LevelSequence r2 = moment_levels(*symbols::power(1.0).profile(), n, D);
  double er = 0.0;
  if (n == 1)
    for (int k = 0; k <= D; ++k) er = std::max(er, std::abs(r2.values(k) - (k + 1.0) / (k + 2.0)));
  else
    for (int k = 0; k <= D; ++k) er = std::max(er, std::abs(r2.values(k) - (n + k) / (n + k + 1.0)));
  rep.add(error_record("tabulate/power-moments", "gamma_k(r^2) = (n+k)/(n+k+1)", er, 1e-13));
  return rep;
}

}  // namespace bqha::harness

#include "jamsec/sweep.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include "jamsec/types.hpp"

namespace jamsec {

SimResult simulate_to_precision(const SystemParams& p, const ExperimentConfig& cfg) {
  const RandomStream stream(p.seed);
  SimOptions options;
  options.n_slots = cfg.n_slots;
  options.replicas = cfg.replicas;
  options.deplete_on_insecure = cfg.deplete_on_insecure;

  SimResult res = simulate(p, options, stream);
  while (cfg.target_rel_ci > 0.0 && res.ci_halfwidth > cfg.target_rel_ci * res.mu_a &&
         options.n_slots < cfg.max_slots) {
    options.n_slots = std::min(2 * options.n_slots, cfg.max_slots);
    res = simulate(p, options, stream);
  }
  return res;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<SweepRow> rows;
  rows.reserve(cfg.sweep_values.size());
  for (const double value : cfg.sweep_values) {
    const SystemParams p = cfg.params_at(value);
    SweepRow row;
    row.value = value;
    row.sim = simulate_to_precision(p, cfg);
    row.regime = estimate_regime_means_and_beta(p, cfg.n_draws_means, RandomStream(p.seed));
    const RegimeEstimate& r = row.regime;
    if (p.lambda_a == 1.0) {
      row.pred_alice_saturated = predict_mu_a_alice_saturated(r.mean_jammed, r.mean_unjammed, p.lambda_j, r.beta_hat);
    }
    if (p.lambda_j == 1.0) {
      row.pred_jimmy_saturated = predict_mu_a_jimmy_saturated(r.mean_jammed, p.lambda_a, r.beta_hat);
    }
    row.pred_geo_d1 = predict_mu_a_geo_d1(r.mean_jammed, r.mean_unjammed, p.lambda_a, p.lambda_j);
    rows.push_back(row);
  }
  return rows;
}

const char* sweep_csv_header() {
  return "sweep_value,mu_a,ci_halfwidth,p_joint_on,beta_hat,mean_rate_jammed,mean_rate_unjammed,"
         "pred_alice_saturated,pred_jimmy_saturated,pred_geo_d1";
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17) << std::defaultfloat;
  out << sweep_csv_header() << '\n';
  auto optional = [&out](const std::optional<double>& v) {
    if (v) out << *v;
  };
  for (const SweepRow& row : rows) {
    out << row.value << ',' << row.sim.mu_a << ',' << row.sim.ci_halfwidth << ',' << row.sim.p_joint_on << ','
        << row.regime.beta_hat << ',' << row.regime.mean_jammed << ',' << row.regime.mean_unjammed << ',';
    optional(row.pred_alice_saturated);
    out << ',';
    optional(row.pred_jimmy_saturated);
    out << ',' << row.pred_geo_d1 << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

void run_sweep_to_output(const ExperimentConfig& cfg, std::ostream& stdout_stream) {
  cfg.validate();
  if (cfg.output_path.empty()) {
    write_csv(stdout_stream, run_sweep(cfg));
    return;
  }
  // Open before the (long) run so a bad path fails fast.
  std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + cfg.output_path + "' for writing");
  write_csv(file, run_sweep(cfg));
  file.flush();
  if (!file) throw IoError("failed writing output file '" + cfg.output_path + "'");
}

}  // namespace jamsec

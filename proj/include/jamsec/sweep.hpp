#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "jamsec/config.hpp"
#include "jamsec/montecarlo.hpp"

namespace jamsec {

struct SweepRow {
  double value = 0.0;
  SimResult sim;
  RegimeEstimate regime;
  std::optional<double> pred_alice_saturated;  ///< only when lambda_a = 1
  std::optional<double> pred_jimmy_saturated;  ///< only when lambda_j = 1
  double pred_geo_d1 = 0.0;
};

/// One simulation per sweep value. Every point uses the same random stream, so
/// the channel and arrival draws are shared across the sweep.
[[nodiscard]] std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg);

/// Simulation at one parameter point, doubling the slot count until the CI
/// target of `cfg` is met or max_slots is reached.
[[nodiscard]] SimResult simulate_to_precision(const SystemParams& p, const ExperimentConfig& cfg);

[[nodiscard]] const char* sweep_csv_header();

/// Header plus one row per point; 17 significant digits, LF line endings.
/// Predictions that do not apply to a point are left empty.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// run_sweep + write_csv to cfg.output_path (stdout when empty).
/// Throws IoError when the output cannot be written.
void run_sweep_to_output(const ExperimentConfig& cfg, std::ostream& stdout_stream);

}  // namespace jamsec

#pragma once

#include <cstdint>
#include <optional>

namespace jamsec {

/// Scenario constants. Powers are stored as per-slot SNRs with the noise
/// power normalized to one, so snr_a is e_A / (kappa T W).
struct SystemParams {
  int n_antennas = 6;
  int k_active = 6;
  double snr_a = 100.0;
  double snr_j = 100.0;
  double lambda_a = 0.8;
  double lambda_j = 0.9;
  int cap_a = 10;
  int cap_j = 10;
  std::optional<double> alpha_fixed;
  int alpha_grid = 64;
  std::uint64_t seed = 1;

  /// Throws ConfigError naming the first offending field.
  void validate() const;
};

double db_to_linear(double db);

}  // namespace jamsec

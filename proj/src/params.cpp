#include "jamsec/params.hpp"

#include <cmath>
#include <string>

#include "jamsec/types.hpp"

namespace jamsec {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("invalid parameter: " + what);
}

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void SystemParams::validate() const {
  require(k_active >= 2, "k_active must be >= 2 (got " + std::to_string(k_active) + ")");
  require(k_active <= n_antennas, "k_active must not exceed n_antennas (" + std::to_string(k_active) +
                                      " > " + std::to_string(n_antennas) + ")");
  require(std::isfinite(snr_a) && snr_a > 0.0, "snr_a must be positive and finite");
  require(std::isfinite(snr_j) && snr_j > 0.0, "snr_j must be positive and finite");
  require(is_probability(lambda_a), "lambda_a must lie in [0, 1]");
  require(is_probability(lambda_j), "lambda_j must lie in [0, 1]");
  require(cap_a >= 1, "cap_a must be >= 1");
  require(cap_j >= 1, "cap_j must be >= 1");
  if (alpha_fixed) {
    require(*alpha_fixed > 0.0 && *alpha_fixed <= 1.0, "alpha_fixed must lie in (0, 1]");
  }
  require(alpha_grid >= 2, "alpha_grid must be >= 2");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace jamsec

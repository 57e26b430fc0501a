#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "jamsec/params.hpp"

namespace jamsec {

enum class SweepVariable { lambda_j, lambda_a, k_active };
enum class AlphaMode { optimized_alpha, fixed_alpha_1 };

struct ExperimentConfig {
  SystemParams params;
  SweepVariable sweep_variable = SweepVariable::lambda_j;
  std::vector<double> sweep_values{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::int64_t n_slots = 40000;
  std::int64_t n_draws_means = 40000;
  AlphaMode mode = AlphaMode::optimized_alpha;
  std::string output_path;  ///< empty writes to stdout
  int replicas = 1;
  /// Slots are doubled (up to max_slots) until the CI half-width is at most
  /// this fraction of mu_a. Zero keeps n_slots fixed.
  double target_rel_ci = 0.01;
  std::int64_t max_slots = 1 << 22;
  bool deplete_on_insecure = false;

  /// Throws ConfigError naming the offending entry.
  void validate() const;

  /// params with `value` substituted for the sweep variable and the alpha mode applied.
  [[nodiscard]] SystemParams params_at(double value) const;
};

using KeyValues = std::map<std::string, std::string>;

/// Parses `key = value` lines. '#' starts a comment; blank lines are ignored;
/// '-' in keys is read as '_'.
[[nodiscard]] KeyValues parse_key_values(std::istream& in);
[[nodiscard]] KeyValues read_config_file(const std::string& path);

/// Applies entries in key order. Unknown keys and malformed values throw
/// ConfigError naming the key.
void apply(ExperimentConfig& cfg, const KeyValues& entries);

[[nodiscard]] SweepVariable parse_sweep_variable(const std::string& text);
[[nodiscard]] AlphaMode parse_mode(const std::string& text);
[[nodiscard]] std::string to_string(SweepVariable v);
[[nodiscard]] std::string to_string(AlphaMode m);

/// Either a comma-separated list ("0.1,0.5,1") or an inclusive range
/// "start:stop:step".
[[nodiscard]] std::vector<double> parse_values(const std::string& text);

}  // namespace jamsec

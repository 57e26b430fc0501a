// jamsec: secrecy-rate sweeps, validation suites and battery steady states.

#include <deque>
#include <iomanip>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "jamsec/battery.hpp"
#include "jamsec/config.hpp"
#include "jamsec/sweep.hpp"
#include "jamsec/types.hpp"
#include "jamsec/validate.hpp"

namespace {

constexpr int kExitValidationFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

// Flags mirror the config-file keys; every flag given on the command line
// overrides the file.
struct FlagSet {
  std::vector<std::pair<std::string, CLI::Option*>> options;
  std::deque<std::string> storage;  // stable addresses for CLI11

  void add(CLI::App& app, const std::string& key, const std::string& flag, const std::string& help) {
    storage.emplace_back();
    options.emplace_back(key, app.add_option(flag, storage.back(), help));
  }

  jamsec::KeyValues given() const {
    jamsec::KeyValues kv;
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (options[i].second->count() > 0) kv[options[i].first] = storage[i];
    }
    return kv;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy rates of an energy-harvesting source with a multi-antenna cooperative jammer"};
  app.require_subcommand(1);

  auto* sweep = app.add_subcommand("sweep", "Simulate mu_a over a parameter sweep and write CSV");
  std::string config_path;
  sweep->add_option("--config", config_path, "key=value configuration file (flags take precedence)");
  FlagSet flags;
  flags.add(*sweep, "seed", "--seed", "Random seed");
  flags.add(*sweep, "slots", "--slots", "Measured slots per sweep point (default 40000)");
  flags.add(*sweep, "draws", "--draws", "Channel draws for the regime means and beta (default 40000)");
  flags.add(*sweep, "n", "--n", "Jammer antennas N (default 6)");
  flags.add(*sweep, "k", "--k", "Active jammer antennas K (default 6)");
  flags.add(*sweep, "lambda_a", "--lambda-a", "Energy arrival probability at the source (default 0.8)");
  flags.add(*sweep, "lambda_j", "--lambda-j", "Energy arrival probability at the jammer (default 0.9)");
  flags.add(*sweep, "snr_db", "--snr-db", "Per-packet SNR of source and jammer in dB (default 20)");
  flags.add(*sweep, "snr_a_db", "--snr-a-db", "Source SNR in dB");
  flags.add(*sweep, "snr_j_db", "--snr-j-db", "Jammer SNR in dB");
  flags.add(*sweep, "cap_a", "--cap-a", "Source battery capacity in packets (default 10)");
  flags.add(*sweep, "cap_j", "--cap-j", "Jammer battery capacity in packets (default 10)");
  flags.add(*sweep, "alpha_grid", "--alpha-grid", "Grid points of the alpha search (default 64)");
  flags.add(*sweep, "mode", "--mode", "optimized_alpha | fixed_alpha_1");
  flags.add(*sweep, "out", "--out", "Output CSV path (default stdout)");
  flags.add(*sweep, "sweep", "--sweep", "lambda_j | lambda_a | k_active");
  flags.add(*sweep, "values", "--values", "Comma list or start:stop:step");
  flags.add(*sweep, "replicas", "--replicas", "Independent replicas per point (run concurrently)");
  flags.add(*sweep, "target_rel_ci", "--target-rel-ci", "Relative CI target for slot doubling; 0 disables");
  flags.add(*sweep, "max_slots", "--max-slots", "Upper bound for slot doubling");
  flags.add(*sweep, "deplete_on_insecure", "--deplete-on-insecure", "Spend packets in insecure slots (true/false)");

  auto* validate = app.add_subcommand("validate", "Run the property suites and report per-suite status");
  std::uint64_t validate_seed = 1;
  validate->add_option("--seed", validate_seed, "Random seed");

  auto* steady = app.add_subcommand("steady-state", "Print the Geo/Geo/1 battery distribution as CSV");
  double lambda = 0.3;
  double mu = 0.6;
  int cap = 10;
  steady->add_option("--lambda", lambda, "Arrival probability per slot")->required();
  steady->add_option("--mu", mu, "Service probability per slot")->required();
  steady->add_option("--cap", cap, "Battery capacity in packets")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) {
      jamsec::ExperimentConfig cfg;
      if (!config_path.empty()) jamsec::apply(cfg, jamsec::read_config_file(config_path));
      jamsec::apply(cfg, flags.given());
      jamsec::run_sweep_to_output(cfg, std::cout);
      return 0;
    }
    if (*validate) {
      jamsec::ValidationOptions options;
      options.seed = validate_seed;
      const jamsec::ValidationReport report = jamsec::run_validate(options);
      report.print(std::cout);
      return report.all_passed() ? 0 : kExitValidationFailed;
    }
    if (*steady) {
      const jamsec::BatteryChain chain = jamsec::geo_geo1_steady_state(lambda, mu, cap);
      std::cout << std::setprecision(17) << "level,probability\n";
      for (int level = 0; level <= cap; ++level) std::cout << level << ',' << chain.steady[level] << '\n';
      return 0;
    }
  } catch (const jamsec::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const jamsec::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIoError;
  }
  return 0;
}

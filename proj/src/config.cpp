#include "jamsec/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "jamsec/types.hpp"

namespace jamsec {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

double to_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "': expected a number, got '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw ConfigError("'" + key + "': expected a number, got '" + text + "'");
  }
  return v;
}

std::int64_t to_int(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "': expected an integer, got '" + text + "'");
  }
  if (used != text.size()) throw ConfigError("'" + key + "': expected an integer, got '" + text + "'");
  return v;
}

std::uint64_t to_uint(const std::string& key, const std::string& text) {
  if (text.empty() || text.front() == '-') {
    throw ConfigError("'" + key + "': expected a non-negative integer, got '" + text + "'");
  }
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "': expected a non-negative integer, got '" + text + "'");
  }
  if (used != text.size()) throw ConfigError("'" + key + "': expected a non-negative integer, got '" + text + "'");
  return v;
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw ConfigError("'" + key + "': expected a boolean, got '" + text + "'");
}

int to_small_int(const std::string& key, const std::string& text) {
  const std::int64_t v = to_int(key, text);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ConfigError("'" + key + "': value out of range: " + text);
  }
  return static_cast<int>(v);
}

}  // namespace

void ExperimentConfig::validate() const {
  params.validate();
  if (sweep_values.empty()) throw ConfigError("sweep values must not be empty");
  for (std::size_t i = 0; i < sweep_values.size(); ++i) {
    const double v = sweep_values[i];
    const std::string where = "sweep value #" + std::to_string(i + 1) + " (" + std::to_string(v) + ") for " +
                              to_string(sweep_variable);
    switch (sweep_variable) {
      case SweepVariable::lambda_a:
      case SweepVariable::lambda_j:
        if (!(v >= 0.0 && v <= 1.0)) throw ConfigError(where + " must lie in [0, 1]");
        break;
      case SweepVariable::k_active:
        if (v != std::floor(v) || v < 2 || v > params.n_antennas) {
          throw ConfigError(where + " must be an integer in [2, " + std::to_string(params.n_antennas) + "]");
        }
        break;
    }
  }
  if (n_slots < 1) throw ConfigError("slots must be >= 1");
  if (n_draws_means < 1) throw ConfigError("draws must be >= 1");
  if (replicas < 1) throw ConfigError("replicas must be >= 1");
  if (!(target_rel_ci >= 0.0)) throw ConfigError("target_rel_ci must be >= 0");
  if (max_slots < n_slots) throw ConfigError("max_slots must be >= slots");
}

SystemParams ExperimentConfig::params_at(double value) const {
  SystemParams p = params;
  switch (sweep_variable) {
    case SweepVariable::lambda_a: p.lambda_a = value; break;
    case SweepVariable::lambda_j: p.lambda_j = value; break;
    case SweepVariable::k_active: p.k_active = static_cast<int>(value); break;
  }
  if (mode == AlphaMode::fixed_alpha_1) p.alpha_fixed = 1.0;
  return p;
}

KeyValues parse_key_values(std::istream& in) {
  KeyValues out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value, got '" + line + "'");
    }
    const std::string key = normalize_key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  return parse_key_values(in);
}

void apply(ExperimentConfig& cfg, const KeyValues& entries) {
  SystemParams& p = cfg.params;
  for (const auto& [raw_key, value] : entries) {
    const std::string key = normalize_key(raw_key);
    if (key == "seed") {
      p.seed = to_uint(key, value);
    } else if (key == "slots") {
      cfg.n_slots = to_int(key, value);
      cfg.max_slots = std::max(cfg.max_slots, cfg.n_slots);
    } else if (key == "draws") {
      cfg.n_draws_means = to_int(key, value);
    } else if (key == "k") {
      p.k_active = to_small_int(key, value);
    } else if (key == "n") {
      p.n_antennas = to_small_int(key, value);
    } else if (key == "lambda_a") {
      p.lambda_a = to_double(key, value);
    } else if (key == "lambda_j") {
      p.lambda_j = to_double(key, value);
    } else if (key == "snr_db") {
      p.snr_a = p.snr_j = db_to_linear(to_double(key, value));
    } else if (key == "snr_a_db") {
      p.snr_a = db_to_linear(to_double(key, value));
    } else if (key == "snr_j_db") {
      p.snr_j = db_to_linear(to_double(key, value));
    } else if (key == "cap_a") {
      p.cap_a = to_small_int(key, value);
    } else if (key == "cap_j") {
      p.cap_j = to_small_int(key, value);
    } else if (key == "alpha_grid") {
      p.alpha_grid = to_small_int(key, value);
    } else if (key == "mode") {
      cfg.mode = parse_mode(value);
    } else if (key == "out") {
      cfg.output_path = value;
    } else if (key == "sweep") {
      cfg.sweep_variable = parse_sweep_variable(value);
    } else if (key == "values") {
      cfg.sweep_values = parse_values(value);
    } else if (key == "replicas") {
      cfg.replicas = to_small_int(key, value);
    } else if (key == "target_rel_ci") {
      cfg.target_rel_ci = to_double(key, value);
    } else if (key == "max_slots") {
      cfg.max_slots = to_int(key, value);
    } else if (key == "deplete_on_insecure") {
      cfg.deplete_on_insecure = to_bool(key, value);
    } else {
      throw ConfigError("unknown configuration key '" + raw_key + "'");
    }
  }
}

SweepVariable parse_sweep_variable(const std::string& text) {
  const std::string t = normalize_key(text);
  if (t == "lambda_j") return SweepVariable::lambda_j;
  if (t == "lambda_a") return SweepVariable::lambda_a;
  if (t == "k_active" || t == "k") return SweepVariable::k_active;
  throw ConfigError("unknown sweep variable '" + text + "' (expected lambda_j, lambda_a or k_active)");
}

AlphaMode parse_mode(const std::string& text) {
  const std::string t = normalize_key(text);
  if (t == "optimized_alpha" || t == "optimized") return AlphaMode::optimized_alpha;
  if (t == "fixed_alpha_1" || t == "fixed") return AlphaMode::fixed_alpha_1;
  throw ConfigError("unknown mode '" + text + "' (expected optimized_alpha or fixed_alpha_1)");
}

std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::lambda_j: return "lambda_j";
    case SweepVariable::lambda_a: return "lambda_a";
    case SweepVariable::k_active: return "k_active";
  }
  return "?";
}

std::string to_string(AlphaMode m) {
  return m == AlphaMode::optimized_alpha ? "optimized_alpha" : "fixed_alpha_1";
}

std::vector<double> parse_values(const std::string& text) {
  const std::string key = "values";
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(to_double(key, trim(item)));
    if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
      throw ConfigError("'values': range must be start:stop:step with step > 0 and stop >= start, got '" + text +
                        "'");
    }
    const auto count = static_cast<std::int64_t>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
    for (std::int64_t i = 0; i <= count; ++i) {
      // Round to 12 digits so 0.1:1:0.1 yields 0.3 rather than 0.30000000000000004.
      const double v = parts[0] + static_cast<double>(i) * parts[2];
      out.push_back(std::round(v * 1e12) / 1e12);
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError("'values': empty entry in '" + text + "'");
    out.push_back(to_double(key, item));
  }
  if (out.empty()) throw ConfigError("'values': no entries");
  return out;
}

}  // namespace jamsec

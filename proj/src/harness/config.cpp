#include "satmps/harness/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "satmps/util/random.hpp"

namespace satmps::harness {
namespace {

using nlohmann::json;

#define SATMPS_CONFIG_FIELDS(X)                                                                                        \
  X(seed) X(out) X(workers) X(backend) X(timestamp) X(n) X(alpha) X(instances) X(ensemble) X(rejection_budget)        \
  X(instance_file) X(dtau) X(tau_max) X(record_every) X(max_bond) X(cutoff) X(cut) X(cross_check_tolerance)           \
  X(snapshot_dir) X(mps_file) X(tolerance) X(reports) X(filling) X(samples) X(m_max) X(corrections) X(tau)            \
  X(pauli_samples) X(chain_length) X(burn_in) X(batches) X(exact)

void set_field(ExperimentConfig& c, const std::string& key, const json& value) {
  try {
#define X(name)                                   \
  if (key == #name) {                             \
    value.get_to(c.name);                         \
    return;                                       \
  }
    SATMPS_CONFIG_FIELDS(X)
#undef X
  } catch (const json::exception& e) {
    throw ConfigError("bad value for '" + key + "': " + e.what());
  }
  throw ConfigError("unknown config key '" + key + "'");
}

// Scalars are accepted where a list is expected.
json listify(const std::string& key, json value) {
  static const char* lists[] = {"n", "alpha", "reports", "filling", "tau"};
  for (const char* l : lists)
    if (key == l && !value.is_array()) return json::array({value});
  return value;
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  for (const auto& [key, value] : doc.items()) set_field(c, key, listify(key, value));
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void apply_override(ExperimentConfig& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) throw ConfigError("override must look like key=value");
  const std::string key(assignment.substr(0, eq));
  const std::string text(assignment.substr(eq + 1));
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error&) {
    value = text;
  }
  set_field(config, key, listify(key, value));
}

std::string to_json(const ExperimentConfig& c) {
  json doc;
#define X(name) doc[#name] = c.name;
  SATMPS_CONFIG_FIELDS(X)
#undef X
  return doc.dump(2);
}

void validate(const ExperimentConfig& c) {
  if (c.workers < 1) throw ConfigError("workers must be >= 1");
  if (c.backend != "dense" && c.backend != "mps" && c.backend != "both")
    throw ConfigError("backend must be dense, mps or both");
  if (c.ensemble != "random" && c.ensemble != "satisfiable" && c.ensemble != "unique")
    throw ConfigError("ensemble must be random, satisfiable or unique");
  if (c.instances < 0) throw ConfigError("instances must be >= 0");
  for (int n : c.n)
    if (n < 1 || n > 64) throw ConfigError("n must be in [1, 64]");
  for (double a : c.alpha)
    if (!(a >= 0.0)) throw ConfigError("alpha must be non-negative");
  if (!(c.dtau > 0.0) || !(c.tau_max >= 0.0) || c.record_every < 1) throw ConfigError("bad imaginary-time schedule");
  if (c.max_bond < 1 || !(c.cutoff >= 0.0)) throw ConfigError("bad truncation policy");
  if (c.rejection_budget < 1) throw ConfigError("rejection_budget must be >= 1");
  if (c.samples < 0 || c.pauli_samples < 1 || c.chain_length < 1 || c.batches < 2)
    throw ConfigError("bad sample counts");
  for (double t : c.tau)
    if (!(t >= 0.0)) throw ConfigError("tau values must be non-negative");
  for (double f : c.filling)
    if (!(f >= 0.0 && f <= 1.0)) throw ConfigError("filling values must be in [0, 1]");
}

std::uint64_t instance_seed(std::uint64_t master, int n, int m, int k) noexcept {
  const std::uint64_t cell = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) |
                             static_cast<std::uint32_t>(m);
  return derive_seed(derive_seed(master, streams::instances, cell), streams::instances, static_cast<std::uint64_t>(k));
}

}  // namespace satmps::harness

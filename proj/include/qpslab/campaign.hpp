#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpslab/io.hpp"

namespace qpslab {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CampaignConfig {
  std::string suite;
  std::string group = "sl2";
  std::string backend = "exact";
  std::size_t samples = 10;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  unsigned jobs = 1;
  TestHooks hooks;

  /// Throws ConfigError.
  void validate() const;
  json to_json() const;
};

struct CheckRecord {
  std::size_t index = 0;
  std::string check;
  json point;
  bool passed = false;
  std::string witness;
};

struct VerificationReport {
  CampaignConfig config;
  std::vector<CheckRecord> records;

  std::size_t total() const { return records.size(); }
  std::size_t passed() const;
  std::size_t failed() const { return total() - passed(); }
  bool ok() const { return failed() == 0; }

  json to_json(const std::string& timestamp) const;
  /// One line per check id: "<check>  passed/total".
  std::string summary_text() const;
};

const std::vector<std::string>& suite_names();
bool is_known_suite(const std::string& name);

/// Names accepted by --corrupt: sigma-half, sigma-sign, omega-sign, dorfman-eta.
void apply_hook(TestHooks& hooks, const std::string& name);
std::vector<std::string> hook_names(const TestHooks& hooks);

/// Deterministic in (suite, group, backend, samples, seed, tolerance, hooks);
/// the point stream is generated before any work is scheduled.
VerificationReport run_suite(const CampaignConfig& config);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace qpslab

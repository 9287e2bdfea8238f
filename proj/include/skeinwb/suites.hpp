#pragma once

// Property suites. Each suite produces records
//   {case, inputs, values, residual, pass}
// in a fixed order, so a given seed always yields the same output.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace skeinwb {

struct Record {
  std::string name;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json values = nlohmann::json::object();
  double residual = 0.0;
  bool pass = true;
  /// Human-readable note for vacuous or expected-failure cases.
  std::string note;

  nlohmann::json to_json() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Representations per transport case; 0 makes the transport suite vacuous.
  int samples = 20;
};

/// rings, qtorus, skein, sl2, transport, selflink.
const std::vector<std::string>& suite_names();

/// `which` is one of suite_names() or "all". Throws std::invalid_argument otherwise.
std::vector<Record> run_suite(const std::string& which, const SuiteOptions& options);

// Individual suites, also used by the acceptance runner.
std::vector<Record> rings_suite(const SuiteOptions& options);
std::vector<Record> qtorus_suite(const SuiteOptions& options);
std::vector<Record> skein_suite(const SuiteOptions& options);
std::vector<Record> sl2_suite(const SuiteOptions& options);
std::vector<Record> transport_suite(const SuiteOptions& options);
std::vector<Record> selflink_suite(const SuiteOptions& options);

/// q-identities, hessian, trace-identity.
const std::vector<std::string>& selflink_group_names();
/// One selflink group; samples < 0 selects the default count.
std::vector<Record> selflink_group(const std::string& group, std::uint64_t seed, int samples);

}  // namespace skeinwb

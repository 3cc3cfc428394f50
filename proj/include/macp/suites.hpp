#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "macp/io.hpp"

namespace macp {

struct SuiteOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  int samples = 25;
  unsigned threads = 0;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  long long checked = 0;
  long long failed = 0;
  std::vector<std::string> witnesses;  // first few failures
  Json details = Json::object();

  bool passed() const { return failed == 0; }
  void fail(std::string witness);
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, int n, const SuiteOptions& options = {});
Json to_json(const SuiteReport& report);

}  // namespace macp

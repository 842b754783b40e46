#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "postlie/enumerate.hpp"

namespace postlie {

struct SuiteFailure {
  std::string input;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failed = 0;
  /// The first few failures, in case order.
  std::vector<SuiteFailure> failures;
  double seconds = 0;
  std::map<std::string, std::size_t> counters;

  bool passed() const { return failed == 0 && cases > 0; }
};

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(const std::string& name) : std::invalid_argument("unknown suite: " + name) {}
};

std::vector<std::string> suite_names();
SuiteReport run_suite(std::string_view name, const EnumParams& p = {});

}  // namespace postlie

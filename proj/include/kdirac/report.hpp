#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace kdirac {

/// One verification outcome, the unit of every machine-readable report.
struct Check {
  std::string name;
  bool pass = false;
  nlohmann::json expected;
  nlohmann::json actual;
  nlohmann::json witness;  // counterexample payload, null when passing

  static Check ok(std::string name, nlohmann::json expected, nlohmann::json actual) {
    return Check{std::move(name), true, std::move(expected), std::move(actual), nullptr};
  }
  static Check fail(std::string name, nlohmann::json expected, nlohmann::json actual,
                    nlohmann::json witness = nullptr) {
    return Check{std::move(name), false, std::move(expected), std::move(actual),
                 std::move(witness)};
  }
  static Check of(std::string name, nlohmann::json expected, nlohmann::json actual) {
    bool pass = expected == actual;
    return Check{std::move(name), pass, std::move(expected), std::move(actual), nullptr};
  }
};

struct Report {
  nlohmann::json params;
  std::string command;
  std::vector<Check> checks;
  long long elapsed_ms = 0;

  bool all_pass() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

}  // namespace kdirac

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fdstab {

/// Published values and tolerances, one place.
const nlohmann::json& reference_manifest();

struct CheckLine {
  std::string name;
  /// Published value when there is one, otherwise null in JSON.
  std::optional<double> reference;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct ReproduceReport {
  std::string target;
  std::vector<CheckLine> checks;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// Targets: example1, example2, lemma1, halfline, modes.
std::vector<std::string> reproduce_targets();
ReproduceReport reproduce(std::string_view target);

}  // namespace fdstab

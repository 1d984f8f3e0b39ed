#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "vcvis/decomposition.hpp"

namespace vcvis {

struct Expected {
  std::optional<bool> shattered;
  std::optional<int> signature_count;

  friend bool operator==(const Expected&, const Expected&) = default;
};

struct Scenario {
  std::string name;
  Metric metric = Metric::kL1;
  SimplePolygon polygon;
  PointSet points;
  Expected expected;
};

bool operator==(const Scenario& a, const Scenario& b);

// Scenario JSON, format 1:
//   {"format": 1, "name": "...", "metric": "l1",
//    "polygon": [["0", "0"], ["4", "0"], ...],
//    "points": [{"label": 1, "x": "1/2", "y": "3"}, ...],
//    "expected": {"shattered": true, "signatureCount": 32}}
// Coordinates are strings (integer, decimal or a/b) or JSON integers.
// Throws kParseError (with line and column for malformed JSON) or
// kValidationError (polygon or point set rejected by the kernel).
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);  // also kIoError

std::string serialize_scenario(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

}  // namespace vcvis

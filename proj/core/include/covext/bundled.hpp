#pragma once

#include <string_view>
#include <vector>

namespace covext {

struct BundledScenario {
  std::string_view name;
  std::string_view text;
};

/// Scenario files compiled into the library, sorted by name.
const std::vector<BundledScenario>& bundled_scenarios();

}  // namespace covext

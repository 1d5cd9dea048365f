#pragma once

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "covext/scenario.hpp"

namespace covext {

struct RunOptions {
  /// Coset tables and other intermediate tables go here when set.
  std::ostream* debug_tables = nullptr;
  /// Wall-clock timings make reports nondeterministic, so they are opt-in.
  bool timings = false;
};

/// Report: {"scenario": echo, "results": {...}, "claims": [...]}. Throws the
/// library's errors on computation failure.
nlohmann::json run_scenario(const Scenario& s, const RunOptions& opts = {});

struct ClaimRow {
  std::string scenario;
  std::string anchor;
  std::string text;
  std::string verdict;
  nlohmann::json observed;
  nlohmann::json expected;
};

struct PaperSummary {
  std::vector<std::string> names;
  std::vector<nlohmann::json> reports;
  std::vector<ClaimRow> rows;
};

/// Runs every bundled scenario whose name contains `filter`.
PaperSummary verify_paper(std::string_view filter = {}, const RunOptions& opts = {});

void print_summary(std::ostream& os, const PaperSummary& s);

}  // namespace covext

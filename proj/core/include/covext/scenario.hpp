#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace covext {

enum class Relation { Eq, Ne, Le, Ge };

/// A statement about one computed fact, kept as data so the verdict is
/// computed rather than asserted.
struct Claim {
  std::string anchor;
  std::string text;
  /// JSON pointer into the scenario's results.
  std::string fact;
  Relation relation = Relation::Eq;
  /// Absent means the fact is reported without a verdict.
  std::optional<nlohmann::json> expect;
  /// Absolute tolerance applied to every number compared.
  double tol = 0.0;
};

struct Scenario {
  std::string name;
  /// extension, braid-search, slice-monodromy or hartogs-check.
  std::string kind;
  std::string description;
  std::uint64_t seed = 0;
  nlohmann::json tolerances = nlohmann::json::object();
  std::vector<Claim> claims;
  nlohmann::json payload;
};

/// Validates the whole document, payload included, before anything is
/// computed. Throws SchemaError pointing at the first offending field.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario parse_scenario_text(std::string_view text);
/// Unreadable files and JSON syntax errors are SchemaErrors with pointer "".
Scenario load_scenario_file(const std::string& path);

/// Canonical form; parse_scenario(to_json(s)) reproduces s.
nlohmann::json to_json(const Scenario& s);

std::string_view to_string(Relation r);

enum class Verdict { Matches, Contradicts, NotClaimed };
std::string_view to_string(Verdict v);

/// Compares the fact at `claim.fact` in `results`. Throws SchemaError if the
/// pointer does not resolve or an ordering is asked of non-numbers.
Verdict evaluate_claim(const Claim& claim, const nlohmann::json& results, std::size_t index);

}  // namespace covext

#pragma once

// Typed scenario payloads. Decoding performs every schema check so that
// computation only starts on valid input.

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covext/braid.hpp"
#include "covext/hartogs.hpp"
#include "covext/perm.hpp"
#include "covext/slice.hpp"
#include "covext/word.hpp"

namespace covext::payload {

using json = nlohmann::json;

struct SliceClosedness {
  std::string word;
  std::string ptr;
  std::optional<std::uint32_t> sheet;
  /// Branch point and the root it carries, identifying a sheet by approach.
  std::optional<std::pair<Complex, Complex>> sheet_at;
};

struct SliceSeparation {
  Bivariate h;
  Complex z;
};

struct SliceSpec {
  Bivariate cover;
  std::optional<Complex> basepoint;
  std::vector<std::pair<std::string, std::string>> loops;
  std::string loops_ptr;
  std::vector<SliceClosedness> closedness;
  std::optional<Bivariate> weierstrass_h;
  std::vector<SliceSeparation> separation;
  bool refinement_check = false;
  SliceOptions opts;
};

struct ExtensionCandidate {
  std::string id;
  std::vector<Permutation> images;
  std::string ptr;
};

struct ExtensionClosedness {
  bool on_rho1 = false;
  Word word{Alphabet{}};
  std::uint32_t sheet = 0;
  std::string ptr;
};

struct ExtensionSpec {
  Presentation g0;
  Presentation g1;
  std::vector<Permutation> rho0_images;
  std::optional<SliceSpec> rho0_slice;
  std::vector<Word> inclusion;
  bool surjectivity_assumed = false;
  std::size_t cap = 0;
  std::vector<ExtensionCandidate> candidates;
  std::vector<ExtensionClosedness> closedness;
};

struct BraidSearchSpec {
  HomSearchConstraints constraints;
};

struct MinimalExtensionSpec {
  std::size_t g0_strands = 3;
  std::vector<Permutation> g0_images;
  std::size_t max_degree = 6;
  std::vector<FiberMode> modes;
};

struct BraidSpec {
  std::size_t strands = 0;
  std::optional<BraidSearchSpec> search;
  std::optional<MinimalExtensionSpec> minimal_extension;
};

struct HartogsSpec {
  std::vector<HartogsParams> cases;
  std::size_t samples = 1000;
  std::size_t containment_samples = 0;
  std::size_t union_samples = 0;
  double signature_tol = 1e-12;
};

SliceOptions slice_options(const json& tolerances, const std::string& ptr);
SliceSpec decode_slice(const json& payload, const std::string& ptr, const SliceOptions& opts);
ExtensionSpec decode_extension(const json& payload, const std::string& ptr, const SliceOptions& opts);
BraidSpec decode_braid(const json& payload, const std::string& ptr);
HartogsSpec decode_hartogs(const json& payload, const std::string& ptr, const json& tolerances);

/// Decodes and discards; throws SchemaError on the first problem.
void validate(const std::string& kind, const json& payload, const json& tolerances);

}  // namespace covext::payload

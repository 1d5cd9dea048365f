#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "covext/monodromy.hpp"
#include "covext/perm.hpp"
#include "covext/word.hpp"

namespace covext {

inline constexpr std::size_t kMaxBraidStrands = 6;
inline constexpr std::size_t kMaxBraidTargetDegree = 6;

/// Artin presentation of B_m on generators sigma1..sigma{m-1}: braid
/// relators σ_iσ_{i+1}σ_i(σ_{i+1}σ_iσ_{i+1})⁻¹ followed by commutators
/// σ_iσ_jσ_i⁻¹σ_j⁻¹ for j ≥ i+2.
Presentation braid_presentation(std::size_t strands);

/// σ_i ↦ transposition (i-1 i) in S_m.
MonodromyRep standard_rep(std::size_t strands);

/// B_n → B_m, σ_i ↦ σ_i.
InclusionMap braid_inclusion(std::size_t n, std::size_t m);

struct HomSearchConstraints {
  std::size_t degree = 0;  ///< target symmetric group S_degree
  /// Pinned images keyed by 0-based generator index (σ_{i+1}).
  std::map<std::size_t, Permutation> pinned;
  bool require_transitive = false;
  bool require_all_nontrivial = false;
};

/// Every homomorphism B_m → S_n satisfying the constraints, by exhaustive
/// search over the unpinned generator images in lexicographic order with
/// relator pruning. Each result has one image per generator.
/// Throws CapacityError when m > kMaxBraidStrands or n > kMaxBraidTargetDegree.
std::vector<std::vector<Permutation>> hom_search(std::size_t strands, const HomSearchConstraints& c);

/// Evaluates every relator of braid_presentation(m) as a word; independent of
/// the pointwise checks used inside hom_search.
bool satisfies_braid_relators(std::size_t strands, const std::vector<Permutation>& images);

enum class FiberMode {
  /// The extension's fiber map must be onto (weak extension).
  Surjective,
  /// The fiber map must be injective (the original sheets embed).
  Injective,
};

struct MinimalExtension {
  std::size_t degree = 0;
  MonodromyRep witness;
  std::vector<std::uint32_t> fiber_map;
  /// Homomorphisms examined before the witness was found, summed over degrees.
  std::size_t homomorphisms_examined = 0;
};

/// Smallest N ≤ max_degree such that some transitive B_m → S_N restricts along
/// braid_inclusion to something compatible with g0 through a fiber map of the
/// requested kind. Returns nullopt if none up to max_degree.
std::optional<MinimalExtension> minimal_extension_degree(const MonodromyRep& g0, std::size_t strands,
                                                         std::size_t max_degree,
                                                         FiberMode mode = FiberMode::Surjective);

}  // namespace covext

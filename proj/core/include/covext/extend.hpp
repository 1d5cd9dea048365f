#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covext/coset.hpp"
#include "covext/monodromy.hpp"
#include "covext/perm.hpp"
#include "covext/word.hpp"

namespace covext {

/// A connected cover over the small domain (rho0 over G0) together with the
/// homomorphism G0 → G1 induced by enlarging the domain.
struct ExtensionProblem {
  MonodromyRep rho0;
  Presentation g1;
  InclusionMap inclusion;
  bool surjectivity_assumed = false;
  std::size_t cap = kDefaultCosetCap;
};

struct ExtensionResult {
  MonodromyRep rho1;
  std::size_t b0 = 0;
  std::size_t b1 = 0;
  /// fiber_map[s] is the sheet of the extension that sheet s of rho0 lands on.
  std::vector<std::uint32_t> fiber_map;
  bool strong = false;
  SchreierData schreier;
  /// The stabilizer generators pushed through the inclusion.
  std::vector<Word> pushed_generators;
  CosetTable table;
};

/// Necessary condition for surjectivity of G0 → G1: the images of the
/// generators together with the relators of G1 span Z^k after abelianizing.
struct AbelianizationCheck {
  bool spans = false;
  /// Invariant factors of the cokernel Z^k / span; all equal 1 iff `spans`.
  std::vector<long> cokernel_torsion;
  /// Rank of the free part of the cokernel.
  std::size_t cokernel_rank = 0;
};

AbelianizationCheck abelianization_check(const Presentation& g1, const InclusionMap& inclusion);

enum class ExtensionStatus {
  Extended,
  /// Coset enumeration hit its cap; the index of ι*(K) was not established.
  IndexNotEstablished,
};

struct ExtensionOutcome {
  ExtensionStatus status = ExtensionStatus::Extended;
  std::optional<ExtensionResult> result;
  AbelianizationCheck abelianization;
  std::size_t cosets_defined = 0;
  std::size_t cap = 0;
};

/// Sheets of the extension are the cosets of ⟨ι*(K)⟩ in G1, where K is the
/// stabilizer of sheet 0 under rho0.
///
/// Throws NotConnected when rho0 is intransitive, and HypothesisViolated when
/// surjectivity is assumed but refuted (abelianization check fails, or the
/// enumeration closes with more sheets than rho0 has).
ExtensionOutcome weak_extend(const ExtensionProblem& problem);

bool is_strong(const ExtensionResult& r);

/// Every map f from the sheets of `rho0` to the sheets of `candidate` with
/// f(ρ0(g)(s)) = candidate(ι(g))(f(s)), ordered by f(0). rho0 must be transitive.
std::vector<std::vector<std::uint32_t>> equivariant_fiber_maps(const MonodromyRep& rho0,
                                                               const InclusionMap& inclusion,
                                                               const MonodromyRep& candidate);

/// Lexicographically smallest surjective map f from the sheets of `rho0` onto
/// the sheets of `candidate` with f(ρ0(g)(s)) = candidate(ι(g))(f(s)), if any.
std::optional<std::vector<std::uint32_t>> compatible_fiber_map(const MonodromyRep& rho0,
                                                               const InclusionMap& inclusion,
                                                               const MonodromyRep& candidate,
                                                               bool require_surjective = true);

struct MaximalityVerdict {
  std::size_t candidate_degree = 0;
  std::size_t b1 = 0;
  std::vector<std::uint32_t> fiber_map;
  bool degree_bounded = false;  ///< candidate_degree ≤ b1
  bool equal_degree = false;
  /// Present when equal_degree and candidate is conjugate to rho1.
  std::optional<Permutation> conjugator;
  bool holds() const { return degree_bounded && (!equal_degree || conjugator.has_value()); }
};

/// Checks a competing extension `candidate` of rho0 over G1 against the
/// computed one. Throws NotAnExtension if no compatible fiber surjection
/// exists and CapacityError above degree kMaxSearchDegree.
MaximalityVerdict maximality_check(const ExtensionProblem& problem, const ExtensionResult& r,
                                   const MonodromyRep& candidate);

/// Same presentation, same degree, simultaneously conjugate generator images.
bool equivalent(const MonodromyRep& a, const MonodromyRep& b);

/// Enumerates every representation of the free group on k generators into
/// S_2 sending each generator to the transposition and reports whether they
/// are all equivalent, i.e. whether there is exactly one.
bool two_sheet_unique(std::size_t k);

}  // namespace covext

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace covext {

/// Group-closure operations refuse degrees above this.
inline constexpr std::size_t kMaxClosureDegree = 64;
/// Exhaustive searches over S_d refuse degrees above this.
inline constexpr std::size_t kMaxSearchDegree = 8;

/// A bijection of {0..d-1}, stored as its one-line image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidRep unless `images` is a bijection of {0..d-1}.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Builds from 0-based disjoint cycles, e.g. from_cycles(3, {{0, 1}}).
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<std::uint32_t>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_.at(x); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// Disjoint cycles including fixed points, each starting at its smallest point.
  std::vector<std::vector<std::uint32_t>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Left-to-right product: compose(p, q)(x) = q(p(x)). With this convention
/// monodromy of a concatenated path is the composite of the pieces.
Permutation compose(const Permutation& p, const Permutation& q);
/// σ⁻¹·p·σ in the left-to-right convention, i.e. x ↦ σ(p(σ⁻¹(x))).
Permutation conjugate(const Permutation& p, const Permutation& sigma);
/// p^k for any integer k.
Permutation power(const Permutation& p, long k);
std::size_t order(const Permutation& p);

/// Cycle lengths sorted in decreasing order; they sum to the degree.
std::vector<std::size_t> cycle_type(const Permutation& p);

/// Cycle notation with 1-based points and fixed points shown, e.g. `(1 2)(3)`.
std::string to_cycle_string(const Permutation& p);
/// 0-based one-line notation, e.g. `[1 0 2]`.
std::string to_one_line_string(const Permutation& p);

/// Points reachable from `start` under the group generated by `gens`, in
/// breadth-first discovery order.
std::vector<std::uint32_t> orbit(std::span<const Permutation> gens, std::size_t degree,
                                 std::uint32_t start);
bool is_transitive(std::span<const Permutation> gens, std::size_t degree);
/// Degree taken from the generators; an empty set is transitive only on one point.
bool is_transitive(std::span<const Permutation> gens);

struct Exceeded {
  std::size_t cap = 0;
};
using ClosureOrder = std::variant<std::size_t, Exceeded>;

/// Order of ⟨gens⟩ by naive closure, or Exceeded once `cap` elements are seen.
ClosureOrder closure_order(std::span<const Permutation> gens, std::size_t cap);

/// Lexicographically smallest σ ∈ S_d with σ⁻¹·a[i]·σ = b[i] for every i, by
/// exhaustive search. Throws CapacityError for d > kMaxSearchDegree.
std::optional<Permutation> conjugating_permutation(std::span<const Permutation> a,
                                                   std::span<const Permutation> b);

}  // namespace covext

#pragma once

#include <cstdint>
#include <vector>

#include "covext/perm.hpp"
#include "covext/word.hpp"

namespace covext {

/// A homomorphism from a finitely presented group to S_b, given by one
/// permutation per generator. Sheets are numbered 0..b-1.
class MonodromyRep {
 public:
  /// Validates degree ≥ 1, one image per generator, equal degrees and that
  /// every relator acts trivially. Throws InvalidRep otherwise.
  MonodromyRep(Presentation presentation, std::vector<Permutation> images);

  /// The one-sheeted representation sending everything to the identity.
  static MonodromyRep trivial(const Presentation& presentation);

  const Presentation& presentation() const noexcept { return presentation_; }
  const Alphabet& alphabet() const noexcept { return presentation_.alphabet; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& images() const noexcept { return images_; }
  const Permutation& image(GeneratorId g) const { return images_.at(g); }

  /// ρ(w), composed left to right along the word.
  Permutation evaluate(const Word& w) const;
  bool is_transitive() const;

 private:
  Presentation presentation_;
  std::size_t degree_ = 1;
  std::vector<Permutation> images_;
};

/// Whether the lift of the loop `w` starting on `sheet` closes up.
bool lift_is_closed(const MonodromyRep& rep, const Word& w, std::uint32_t sheet);

}  // namespace covext

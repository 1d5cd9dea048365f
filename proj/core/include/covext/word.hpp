#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace covext {

using GeneratorId = std::uint32_t;

struct GeneratorSymbol {
  GeneratorId id = 0;
  std::string name;

  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

/// An ordered, immutable list of generator names. Copies share storage.
///
/// Two alphabets compare equal when their name lists are identical, so the
/// alphabet of a free group on {alpha1, alpha2} never matches the alphabet of
/// ⟨gamma⟩ even though both start at id 0.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(GeneratorId id) const;
  GeneratorSymbol symbol(GeneratorId id) const;
  std::optional<GeneratorId> find(std::string_view name) const;
  const std::vector<std::string>& names() const noexcept { return *names_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

struct Letter {
  GeneratorId gen = 0;
  std::int8_t sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word over an alphabet. The empty word is the identity.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  /// Freely reduces `letters`; throws AlphabetError on unknown ids or bad signs.
  static Word reduce(const Alphabet& alphabet, std::span<const Letter> letters);
  static Word generator(const Alphabet& alphabet, GeneratorId id, int sign = 1);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const Word& a, const Word& b);

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
/// Signed count of occurrences of `g` in `w`.
long exponent_sum(const Word& w, const GeneratorSymbol& g);
long exponent_sum(const Word& w, GeneratorId g);

/// Text form: whitespace-separated generator names, inverses written `name^-1`.
/// The empty word prints as `e`; parsing accepts `e`, `1` or an empty string.
std::string to_string(const Word& w);
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Run-length display, e.g. `gamma^2 alpha1^-1`.
std::string to_power_string(const Word& w);

struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  Presentation() = default;
  Presentation(Alphabet alphabet, std::vector<Word> relators);

  static Presentation free(const Alphabet& alphabet) { return {alphabet, {}}; }
  bool is_free() const noexcept { return relators.empty(); }
};

/// A homomorphism of free groups given by the image of each source generator.
class InclusionMap {
 public:
  InclusionMap(Alphabet source, Alphabet target, std::vector<Word> images);

  static InclusionMap identity(const Alphabet& alphabet);

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  const Word& image(GeneratorId g) const { return images_.at(g); }
  const std::vector<Word>& images() const noexcept { return images_; }

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

Word substitute(const Word& w, const InclusionMap& map);

}  // namespace covext

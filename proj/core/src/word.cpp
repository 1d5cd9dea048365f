#include "covext/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "covext/errors.hpp"

namespace covext {

namespace {

const std::shared_ptr<const std::vector<std::string>>& empty_names() {
  static const auto kEmpty = std::make_shared<const std::vector<std::string>>();
  return kEmpty;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isspace(c) || c == '^';
  });
}

void require_same(const Alphabet& a, const Alphabet& b, const char* where) {
  if (!(a == b)) throw AlphabetError(std::string(where) + ": words live over different alphabets");
}

}  // namespace

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet() : names_(empty_names()) {}

Alphabet::Alphabet(std::vector<std::string> names) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (!valid_name(n)) throw AlphabetError("invalid generator name '" + n + "'");
    if (n == "e" || n == "1") throw AlphabetError("generator name '" + n + "' is reserved for the identity");
    if (!seen.insert(n).second) throw AlphabetError("duplicate generator name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

const std::string& Alphabet::name(GeneratorId id) const {
  if (id >= names_->size()) throw AlphabetError("generator id " + std::to_string(id) + " out of range");
  return (*names_)[id];
}

GeneratorSymbol Alphabet::symbol(GeneratorId id) const { return {id, name(id)}; }

std::optional<GeneratorId> Alphabet::find(std::string_view name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<GeneratorId>(it - names_->begin());
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  return a.names_ == b.names_ || *a.names_ == *b.names_;
}

// -------------------------------------------------------------------- Word

Word Word::reduce(const Alphabet& alphabet, std::span<const Letter> letters) {
  Word out(alphabet);
  out.letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.gen >= alphabet.size())
      throw AlphabetError("generator id " + std::to_string(l.gen) + " not in alphabet");
    if (l.sign != 1 && l.sign != -1) throw AlphabetError("letter exponent must be +1 or -1");
    if (!out.letters_.empty() && out.letters_.back() == l.inverse()) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

Word Word::generator(const Alphabet& alphabet, GeneratorId id, int sign) {
  const Letter l{id, static_cast<std::int8_t>(sign)};
  return reduce(alphabet, std::span<const Letter>(&l, 1));
}

bool operator==(const Word& a, const Word& b) {
  return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
}

Word multiply(const Word& u, const Word& v) {
  require_same(u.alphabet(), v.alphabet(), "multiply");
  std::vector<Letter> joined(u.letters());
  joined.insert(joined.end(), v.letters().begin(), v.letters().end());
  return Word::reduce(u.alphabet(), joined);
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word::reduce(w.alphabet(), out);
}

long exponent_sum(const Word& w, GeneratorId g) {
  long sum = 0;
  for (const Letter& l : w.letters())
    if (l.gen == g) sum += l.sign;
  return sum;
}

long exponent_sum(const Word& w, const GeneratorSymbol& g) {
  if (g.id >= w.alphabet().size() || w.alphabet().name(g.id) != g.name)
    throw AlphabetError("generator '" + g.name + "' is not in the word's alphabet");
  return exponent_sum(w, g.id);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += w.alphabet().name(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string to_power_string(const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long power = static_cast<long>(j - i) * ls[i].sign;
    if (i > 0) os << ' ';
    os << w.alphabet().name(ls[i].gen);
    if (power != 1) os << '^' << power;
    i = j;
  }
  return os.str();
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    if (token == "e" || token == "1") continue;
    int sign = 1;
    std::string_view name = token;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      const std::string_view exp = std::string_view(token).substr(caret + 1);
      if (exp == "-1") {
        sign = -1;
      } else if (exp != "1") {
        throw AlphabetError("unsupported exponent in token '" + token + "' (only ^-1 is allowed)");
      }
      name = std::string_view(token).substr(0, caret);
    }
    auto id = alphabet.find(name);
    if (!id) throw AlphabetError("unknown generator '" + std::string(name) + "'");
    letters.push_back({*id, static_cast<std::int8_t>(sign)});
  }
  return Word::reduce(alphabet, letters);
}

// ------------------------------------------------------------ Presentation

Presentation::Presentation(Alphabet a, std::vector<Word> rels)
    : alphabet(std::move(a)), relators(std::move(rels)) {
  for (const Word& r : relators) require_same(r.alphabet(), alphabet, "presentation relator");
}

// ------------------------------------------------------------ InclusionMap

InclusionMap::InclusionMap(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size())
    throw AlphabetError("inclusion map needs exactly one image per source generator (" +
                        std::to_string(source_.size()) + " expected, " +
                        std::to_string(images_.size()) + " given)");
  for (const Word& w : images_) require_same(w.alphabet(), target_, "inclusion image");
}

InclusionMap InclusionMap::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (GeneratorId g = 0; g < alphabet.size(); ++g) images.push_back(Word::generator(alphabet, g));
  return {alphabet, alphabet, std::move(images)};
}

Word substitute(const Word& w, const InclusionMap& map) {
  require_same(w.alphabet(), map.source(), "substitute");
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const Word& img = map.image(l.gen);
    if (l.sign > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        out.push_back(it->inverse());
    }
  }
  return Word::reduce(map.target(), out);
}

}  // namespace covext

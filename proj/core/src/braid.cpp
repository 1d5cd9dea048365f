#include "covext/braid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "covext/errors.hpp"
#include "covext/extend.hpp"

namespace covext {

namespace {

Alphabet braid_alphabet(std::size_t strands) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i < strands; ++i) names.push_back("sigma" + std::to_string(i));
  return Alphabet(std::move(names));
}

Word letters(const Alphabet& a, std::initializer_list<std::pair<GeneratorId, int>> ls) {
  std::vector<Letter> out;
  for (auto [g, s] : ls) out.push_back({g, static_cast<std::int8_t>(s)});
  return Word::reduce(a, out);
}

// All permutations of {0..n-1} in lexicographic order, with a product table
// indexed by position in that order.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(std::size_t n) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    do {
      index_.emplace(p, elements_.size());
      elements_.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t size = elements_.size();
    product_.resize(size * size);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b)
        product_[a * size + b] = index_of(compose(elements_[a], elements_[b]));
  }

  std::size_t size() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const Permutation& p) const { return index_.at(p.images()); }
  std::size_t mul(std::size_t a, std::size_t b) const { return product_[a * size() + b]; }
  bool braid(std::size_t a, std::size_t b) const { return mul(mul(a, b), a) == mul(mul(b, a), b); }
  bool commute(std::size_t a, std::size_t b) const { return mul(a, b) == mul(b, a); }

 private:
  std::vector<Permutation> elements_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
  std::vector<std::uint32_t> product_;
};

}  // namespace

Presentation braid_presentation(std::size_t strands) {
  if (strands < 2) throw Error("braid_presentation: need at least 2 strands");
  const Alphabet a = braid_alphabet(strands);
  const std::size_t k = strands - 1;
  std::vector<Word> relators;
  for (GeneratorId i = 0; i + 1 < k; ++i)
    relators.push_back(letters(a, {{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}}));
  for (GeneratorId i = 0; i < k; ++i)
    for (GeneratorId j = i + 2; j < k; ++j)
      relators.push_back(letters(a, {{i, 1}, {j, 1}, {i, -1}, {j, -1}}));
  return Presentation(a, std::move(relators));
}

MonodromyRep standard_rep(std::size_t strands) {
  Presentation p = braid_presentation(strands);
  std::vector<Permutation> images;
  for (std::uint32_t i = 0; i + 1 < strands; ++i) images.push_back(Permutation::from_cycles(strands, {{i, i + 1}}));
  return MonodromyRep(std::move(p), std::move(images));
}

InclusionMap braid_inclusion(std::size_t n, std::size_t m) {
  if (n < 2 || n > m) throw Error("braid_inclusion: need 2 <= n <= m");
  const Alphabet src = braid_alphabet(n);
  const Alphabet dst = braid_alphabet(m);
  std::vector<Word> images;
  for (GeneratorId i = 0; i + 1 < n; ++i) images.push_back(Word::generator(dst, i));
  return InclusionMap(src, dst, std::move(images));
}

bool satisfies_braid_relators(std::size_t strands, const std::vector<Permutation>& images) {
  const Presentation p = braid_presentation(strands);
  if (images.size() != p.alphabet.size()) return false;
  for (const Word& r : p.relators) {
    Permutation acc = Permutation::identity(images.front().degree());
    for (const Letter& l : r.letters())
      acc = compose(acc, l.sign > 0 ? images[l.gen] : images[l.gen].inverse());
    if (!acc.is_identity()) return false;
  }
  return true;
}

std::vector<std::vector<Permutation>> hom_search(std::size_t strands, const HomSearchConstraints& c) {
  if (strands < 2) throw Error("hom_search: need at least 2 strands");
  if (strands > kMaxBraidStrands)
    throw CapacityError("hom_search: more than " + std::to_string(kMaxBraidStrands) + " strands");
  if (c.degree == 0) throw Error("hom_search: target degree must be positive");
  if (c.degree > kMaxBraidTargetDegree)
    throw CapacityError("hom_search: target degree above " + std::to_string(kMaxBraidTargetDegree));
  const std::size_t k = strands - 1;
  for (const auto& [i, p] : c.pinned) {
    if (i >= k) throw Error("hom_search: pinned generator sigma" + std::to_string(i + 1) + " not in B_" +
                            std::to_string(strands));
    if (p.degree() != c.degree) throw DegreeMismatch("hom_search: pinned image has the wrong degree");
  }

  const SymmetricGroup group(c.degree);
  std::vector<std::vector<std::size_t>> choices(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (auto it = c.pinned.find(i); it != c.pinned.end()) {
      choices[i] = {group.index_of(it->second)};
    } else {
      for (std::size_t e = 0; e < group.size(); ++e) choices[i].push_back(e);
    }
    if (c.require_all_nontrivial)
      std::erase_if(choices[i], [&](std::size_t e) { return group.element(e).is_identity(); });
  }

  std::vector<std::vector<Permutation>> results;
  std::vector<std::size_t> assigned(k);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      std::vector<Permutation> images;
      for (std::size_t e : assigned) images.push_back(group.element(e));
      if (c.require_transitive && !is_transitive(images, c.degree)) return;
      if (!satisfies_braid_relators(strands, images))
        throw Error("hom_search: relator cross-check rejected a search result (internal error)");
      results.push_back(std::move(images));
      return;
    }
    for (std::size_t e : choices[i]) {
      if (i >= 1 && !group.braid(assigned[i - 1], e)) continue;
      bool ok = true;
      for (std::size_t j = 0; ok && j + 2 <= i; ++j) ok = group.commute(assigned[j], e);
      if (!ok) continue;
      assigned[i] = e;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return results;
}

std::optional<MinimalExtension> minimal_extension_degree(const MonodromyRep& g0, std::size_t strands,
                                                         std::size_t max_degree, FiberMode mode) {
  const std::size_t n = g0.alphabet().size() + 1;
  if (max_degree > kMaxBraidTargetDegree)
    throw CapacityError("minimal_extension_degree: degree cap above " +
                        std::to_string(kMaxBraidTargetDegree));
  if (!(g0.alphabet() == braid_presentation(n).alphabet))
    throw AlphabetError("minimal_extension_degree: g0 is not a representation of a braid group");
  const InclusionMap inclusion = braid_inclusion(n, strands);
  const Presentation target = braid_presentation(strands);

  std::size_t examined = 0;
  for (std::size_t degree = 1; degree <= max_degree; ++degree) {
    if (mode == FiberMode::Injective && degree < g0.degree()) continue;
    HomSearchConstraints c;
    c.degree = degree;
    c.require_transitive = true;
    for (auto& images : hom_search(strands, c)) {
      ++examined;
      MonodromyRep candidate(target, std::move(images));
      for (auto& f : equivariant_fiber_maps(g0, inclusion, candidate)) {
        std::vector<std::uint32_t> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        const auto last = std::unique(sorted.begin(), sorted.end());
        const auto distinct = static_cast<std::size_t>(last - sorted.begin());
        const bool ok = mode == FiberMode::Surjective ? distinct == degree : distinct == f.size();
        if (ok) return MinimalExtension{degree, std::move(candidate), std::move(f), examined};
      }
    }
  }
  return std::nullopt;
}

}  // namespace covext

// Independent reimplementations used as oracles against the library.

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "covext/braid.hpp"
#include "covext/coset.hpp"

using namespace covext;

namespace {

// Stallings folding: the core graph of the subgroup generated by `gens` in
// the free group. The subgroup has finite index iff the folded graph is
// complete, and then the index is its vertex count.
class FoldedGraph {
 public:
  FoldedGraph(std::size_t rank, const std::vector<Word>& gens) : rank_(rank) {
    add_vertex();
    for (const Word& w : gens) {
      std::size_t v = 0;
      const auto& ls = w.letters();
      for (std::size_t i = 0; i < ls.size(); ++i) {
        const std::size_t next = i + 1 == ls.size() ? 0 : add_vertex();
        add_edge(v, ls[i].gen, ls[i].sign, next);
        v = next;
      }
    }
    fold();
  }

  // Vertex count if complete, 0 otherwise.
  std::size_t index() const {
    std::size_t live = 0;
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (find(v) != v) continue;
      ++live;
      for (std::size_t c = 0; c < 2 * rank_; ++c)
        if (!out_[v].count(c)) return 0;
    }
    return live;
  }

 private:
  std::size_t add_vertex() {
    parent_.push_back(parent_.size());
    out_.emplace_back();
    return parent_.size() - 1;
  }
  std::size_t column(GeneratorId g, int sign) const { return 2 * g + (sign > 0 ? 0 : 1); }
  void add_edge(std::size_t u, GeneratorId g, int sign, std::size_t v) {
    pending_.push_back({u, column(g, sign), v});
    pending_.push_back({v, column(g, -sign), u});
  }
  std::size_t find(std::size_t v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }
  void fold() {
    while (!pending_.empty()) {
      auto [u, c, v] = pending_.back();
      pending_.pop_back();
      u = find(u);
      v = find(v);
      auto it = out_[u].find(c);
      if (it == out_[u].end()) {
        out_[u][c] = v;
        continue;
      }
      const std::size_t w = find(it->second);
      if (w == v) continue;
      // Identify v and w: move v's edges onto w.
      const std::size_t keep = std::min(v, w);
      const std::size_t drop = std::max(v, w);
      parent_[drop] = keep;
      for (auto [col, target] : out_[drop]) pending_.push_back({keep, col, target});
      out_[drop].clear();
      // Re-point edges into the dropped vertex lazily through find().
      for (std::size_t x = 0; x < out_.size(); ++x)
        for (auto& [col, target] : out_[x]) target = find(target);
    }
  }

  struct Edge {
    std::size_t from, col, to;
  };
  std::size_t rank_;
  std::vector<std::size_t> parent_;
  std::vector<std::map<std::size_t, std::size_t>> out_;
  std::vector<Edge> pending_;
};

Word random_word(std::mt19937_64& rng, const Alphabet& al, std::size_t len) {
  std::vector<Letter> ls;
  for (std::size_t i = 0; i < len; ++i)
    ls.push_back({static_cast<GeneratorId>(rng() % al.size()), static_cast<std::int8_t>(rng() % 2 ? 1 : -1)});
  return Word::reduce(al, ls);
}

}  // namespace

TEST(Oracle, FoldingAgreesWithToddCoxeterOnRandomSubgroups) {
  const Alphabet al({"a", "b"});
  std::mt19937_64 rng(2024);
  int finite = 0;
  for (int t = 0; t < 400; ++t) {
    std::vector<Word> gens;
    const std::size_t k = 1 + rng() % 5;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_word(rng, al, 1 + rng() % 6));
    const std::size_t oracle = FoldedGraph(2, gens).index();
    const CosetTable table = todd_coxeter(Presentation::free(al), gens, 5000);
    if (oracle == 0) {
      EXPECT_FALSE(table.closed());
    } else {
      ++finite;
      ASSERT_TRUE(table.closed());
      EXPECT_EQ(table.index(), oracle);
    }
  }
  EXPECT_GT(finite, 20);
}

TEST(Oracle, HomSearchMatchesNaiveEnumeration) {
  for (std::size_t strands = 2; strands <= 4; ++strands)
    for (std::size_t degree = 1; degree <= 4; ++degree) {
      HomSearchConstraints c;
      c.degree = degree;
      const auto found = hom_search(strands, c);
      std::vector<Permutation> all;
      std::vector<std::uint32_t> p(degree);
      std::iota(p.begin(), p.end(), 0u);
      do all.emplace_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      std::size_t naive = 0;
      std::vector<std::size_t> idx(strands - 1, 0);
      for (;;) {
        std::vector<Permutation> images;
        for (auto i : idx) images.push_back(all[i]);
        if (satisfies_braid_relators(strands, images)) ++naive;
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == all.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
      }
      EXPECT_EQ(found.size(), naive) << strands << " strands into S_" << degree;
    }
}

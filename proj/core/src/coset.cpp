#include "covext/coset.hpp"

#include <ostream>

#include "covext/errors.hpp"

namespace covext {

// ------------------------------------------------------------------ Schreier

SchreierData schreier_generators(const MonodromyRep& rep, std::uint32_t base) {
  const std::size_t b = rep.degree();
  if (base >= b) throw InvalidRep("base sheet out of range");
  const Alphabet& alphabet = rep.alphabet();
  const std::size_t n = alphabet.size();

  std::vector<std::optional<Word>> reps(b);
  std::vector<std::uint32_t> discovery{base};
  reps[base] = Word(alphabet);
  std::vector<Permutation> inverses;
  for (const auto& p : rep.images()) inverses.push_back(p.inverse());

  for (std::size_t head = 0; head < discovery.size(); ++head) {
    const std::uint32_t s = discovery[head];
    for (int sign : {1, -1}) {
      for (GeneratorId g = 0; g < n; ++g) {
        const std::uint32_t t = sign > 0 ? rep.image(g)(s) : inverses[g](s);
        if (reps[t]) continue;
        reps[t] = multiply(*reps[s], Word::generator(alphabet, g, sign));
        discovery.push_back(t);
      }
    }
  }
  if (discovery.size() != b) throw NotConnected("schreier_generators: representation is not transitive");

  SchreierData out;
  out.base = base;
  for (auto& w : reps) out.representatives.push_back(std::move(*w));
  for (std::uint32_t s : discovery) {
    for (GeneratorId g = 0; g < n; ++g) {
      Word w = multiply(multiply(out.representatives[s], Word::generator(alphabet, g)),
                        invert(out.representatives[rep.image(g)(s)]));
      if (!w.empty()) out.stabilizer_generators.push_back(std::move(w));
    }
  }
  return out;
}

// -------------------------------------------------------------- CosetTable

CosetTable::CosetTable(Presentation presentation, TableStatus status, std::size_t cap,
                       std::vector<std::vector<std::uint32_t>> rows, std::size_t cosets_defined)
    : presentation_(std::move(presentation)),
      status_(status),
      cap_(cap),
      rows_(std::move(rows)),
      cosets_defined_(cosets_defined) {}

std::uint32_t CosetTable::act(std::uint32_t coset, GeneratorId g, int sign) const {
  if (!closed()) throw Error("coset table is not closed");
  return rows_.at(coset).at(2 * g + (sign < 0 ? 1 : 0));
}

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  if (!(w.alphabet() == presentation_.alphabet))
    throw AlphabetError("trace: word is not over the table's alphabet");
  for (const Letter& l : w.letters()) coset = act(coset, l.gen, l.sign);
  return coset;
}

// ------------------------------------------------------------ Enumeration

namespace {

using Column = std::uint32_t;
using Coset = std::int64_t;
constexpr Coset kUndefined = -1;

struct TableFull {};

std::vector<Column> to_columns(const Word& w) {
  std::vector<Column> cols;
  cols.reserve(w.length());
  for (const Letter& l : w.letters()) cols.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
  return cols;
}

class Enumerator {
 public:
  Enumerator(std::size_t ngens, std::size_t cap) : ncols_(2 * ngens), cap_(cap) { new_row(); }

  // Returns false when the cap is hit even after lookahead.
  bool run(const std::vector<std::vector<Column>>& relators,
           const std::vector<std::vector<Column>>& subgroup) {
    Coset current = 0;
    bool subgroup_done = false;
    for (;;) {
      try {
        if (!subgroup_done) {
          for (const auto& w : subgroup) scan_and_fill(0, w);
          subgroup_done = true;
        }
        for (; current < rows(); ++current) {
          if (!alive(current)) continue;
          for (const auto& r : relators) {
            scan_and_fill(current, r);
            if (!alive(current)) break;
          }
          if (!alive(current)) continue;
          for (Column x = 0; x < ncols_; ++x)
            if (entry(current, x) == kUndefined) define(current, x);
        }
        return true;
      } catch (const TableFull&) {
        lookahead(relators);
        current = compact(current);
        if (live_ >= cap_) return false;
      }
    }
  }

  std::size_t defined() const { return defined_; }

  // Standardized rows: breadth-first from coset 0, generators before inverses.
  std::vector<std::vector<std::uint32_t>> standardized_rows() const {
    std::vector<Coset> order{0};
    std::vector<Coset> new_index(static_cast<std::size_t>(rows()), kUndefined);
    new_index[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (int parity : {0, 1}) {
        for (Column x = static_cast<Column>(parity); x < ncols_; x += 2) {
          const Coset t = entry(order[head], x);
          if (new_index[static_cast<std::size_t>(t)] == kUndefined) {
            new_index[static_cast<std::size_t>(t)] = static_cast<Coset>(order.size());
            order.push_back(t);
          }
        }
      }
    }
    std::vector<std::vector<std::uint32_t>> out(order.size(), std::vector<std::uint32_t>(ncols_));
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Column x = 0; x < ncols_; ++x)
        out[i][x] = static_cast<std::uint32_t>(new_index[static_cast<std::size_t>(entry(order[i], x))]);
    return out;
  }

 private:
  Coset rows() const { return static_cast<Coset>(parent_.size()); }
  bool alive(Coset c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  Coset& entry(Coset c, Column x) { return table_[static_cast<std::size_t>(c) * ncols_ + x]; }
  Coset entry(Coset c, Column x) const { return table_[static_cast<std::size_t>(c) * ncols_ + x]; }
  static Column inv(Column x) { return x ^ 1u; }

  Coset new_row() {
    const Coset n = rows();
    table_.resize(table_.size() + ncols_, kUndefined);
    parent_.push_back(n);
    ++live_;
    return n;
  }

  void define(Coset c, Column x) {
    if (live_ >= cap_ || parent_.size() >= 2 * cap_ + 64) throw TableFull{};
    const Coset n = new_row();
    ++defined_;
    entry(c, x) = n;
    entry(n, inv(x)) = c;
  }

  Coset rep(Coset c) {
    Coset root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (c != root) {
      const Coset next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  void merge(Coset a, Coset b, std::vector<Coset>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(Coset a, Coset b) {
    std::vector<Coset> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Coset g = queue[i];
      for (Column x = 0; x < ncols_; ++x) {
        const Coset d = entry(g, x);
        if (d == kUndefined) continue;
        entry(d, inv(x)) = kUndefined;
        const Coset mu = rep(g);
        const Coset nu = rep(d);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, inv(x)) != kUndefined) {
          merge(mu, entry(nu, inv(x)), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, inv(x)) = mu;
        }
      }
    }
  }

  // Scans `w` at coset c; defines new cosets only when `fill` is set.
  void scan(Coset c, const std::vector<Column>& w, bool fill) {
    if (w.empty()) return;
    Coset f = c;
    Coset b = c;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) != kUndefined) {
        f = entry(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inv(w[static_cast<std::size_t>(j)])) != kUndefined) {
        b = entry(b, inv(w[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const Column x = w[static_cast<std::size_t>(i)];
        entry(f, x) = b;
        entry(b, inv(x)) = f;
        return;
      }
      if (!fill) return;
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  void scan_and_fill(Coset c, const std::vector<Column>& w) { scan(c, w, true); }

  void lookahead(const std::vector<std::vector<Column>>& relators) {
    for (Coset c = 0; c < rows(); ++c) {
      for (const auto& r : relators) {
        if (!alive(c)) break;
        scan(c, r, false);
      }
    }
  }

  // Drops dead rows, preserving order; returns the new position of `current`.
  Coset compact(Coset current) {
    std::vector<Coset> new_index(parent_.size(), kUndefined);
    Coset next = 0;
    Coset mapped_current = -1;
    for (Coset c = 0; c < rows(); ++c) {
      if (c == current) mapped_current = next;
      if (alive(c)) new_index[static_cast<std::size_t>(c)] = next++;
    }
    if (mapped_current < 0) mapped_current = next;
    std::vector<Coset> table(static_cast<std::size_t>(next) * ncols_, kUndefined);
    for (Coset c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      for (Column x = 0; x < ncols_; ++x) {
        const Coset t = entry(c, x);
        table[static_cast<std::size_t>(new_index[static_cast<std::size_t>(c)]) * ncols_ + x] =
            t == kUndefined ? kUndefined : new_index[static_cast<std::size_t>(t)];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    for (Coset c = 0; c < next; ++c) parent_[static_cast<std::size_t>(c)] = c;
    live_ = static_cast<std::size_t>(next);
    return mapped_current;
  }

  std::size_t ncols_;
  std::size_t cap_;
  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  std::size_t live_ = 0;
  std::size_t defined_ = 1;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& presentation, const std::vector<Word>& subgroup_generators,
                        std::size_t cap) {
  if (cap == 0) throw CapacityError("todd_coxeter: cap must be at least 1");
  std::vector<std::vector<Column>> relators;
  for (const Word& r : presentation.relators) relators.push_back(to_columns(r));
  std::vector<std::vector<Column>> subgroup;
  for (const Word& w : subgroup_generators) {
    if (!(w.alphabet() == presentation.alphabet))
      throw AlphabetError("todd_coxeter: subgroup generator '" + to_string(w) +
                          "' is not over the presentation alphabet");
    subgroup.push_back(to_columns(w));
  }

  Enumerator e(presentation.alphabet.size(), cap);
  if (!e.run(relators, subgroup))
    return CosetTable(presentation, TableStatus::Exceeded, cap, {}, e.defined());
  return CosetTable(presentation, TableStatus::Closed, cap, e.standardized_rows(), e.defined());
}

MonodromyRep coset_action(const CosetTable& table) {
  if (!table.closed())
    throw Error("coset_action: enumeration exceeded its cap of " + std::to_string(table.cap()) +
                " cosets; no representation is defined");
  const std::size_t ngens = table.presentation().alphabet.size();
  std::vector<Permutation> images;
  for (GeneratorId g = 0; g < ngens; ++g) {
    std::vector<std::uint32_t> img(table.index());
    for (std::uint32_t c = 0; c < table.index(); ++c) img[c] = table.rows()[c][2 * g];
    images.emplace_back(std::move(img));
  }
  return MonodromyRep(table.presentation(), std::move(images));
}

void dump_table(std::ostream& os, const CosetTable& table) {
  if (!table.closed()) {
    os << "# exceeded cap " << table.cap() << " after " << table.cosets_defined() << " definitions\n";
    return;
  }
  for (const auto& row : table.rows()) {
    for (std::size_t x = 0; x < row.size(); ++x) os << (x ? "\t" : "") << row[x];
    os << '\n';
  }
}

}  // namespace covext

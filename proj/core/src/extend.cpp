#include "covext/extend.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "covext/errors.hpp"

namespace covext {

// ---------------------------------------------------------- abelianization

namespace {

// Diagonal of the Smith normal form of an integer matrix (rows × cols),
// non-zero entries only.
std::vector<long> smith_diagonal(std::vector<std::vector<long>> m, std::size_t cols) {
  std::vector<long> diag;
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < m.size(); ++col) {
    // Work on the submatrix [top.., col..]; find a non-zero pivot of least modulus.
    for (;;) {
      std::size_t pr = m.size();
      std::size_t pc = cols;
      long best = 0;
      for (std::size_t r = top; r < m.size(); ++r)
        for (std::size_t c = col; c < cols; ++c)
          if (m[r][c] != 0 && (best == 0 || std::labs(m[r][c]) < best)) {
            best = std::labs(m[r][c]);
            pr = r;
            pc = c;
          }
      if (best == 0) return diag;
      std::swap(m[top], m[pr]);
      for (auto& row : m) std::swap(row[col], row[pc]);

      bool clean = true;
      for (std::size_t r = top + 1; r < m.size(); ++r) {
        const long q = m[r][col] / m[top][col];
        for (std::size_t c = col; c < cols; ++c) m[r][c] -= q * m[top][c];
        if (m[r][col] != 0) clean = false;
      }
      for (std::size_t c = col + 1; c < cols; ++c) {
        const long q = m[top][c] / m[top][col];
        for (std::size_t r = top; r < m.size(); ++r) m[r][c] -= q * m[r][col];
        if (m[top][c] != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the rest of the submatrix.
      bool divides = true;
      for (std::size_t r = top + 1; divides && r < m.size(); ++r)
        for (std::size_t c = col + 1; c < cols; ++c)
          if (m[r][c] % m[top][col] != 0) {
            for (std::size_t k = col; k < cols; ++k) m[top][k] += m[r][k];
            divides = false;
            break;
          }
      if (!divides) continue;
      diag.push_back(std::labs(m[top][col]));
      ++top;
      break;
    }
  }
  return diag;
}

std::vector<long> exponent_vector(const Word& w) {
  std::vector<long> v(w.alphabet().size(), 0);
  for (const Letter& l : w.letters()) v[l.gen] += l.sign;
  return v;
}

}  // namespace

AbelianizationCheck abelianization_check(const Presentation& g1, const InclusionMap& inclusion) {
  if (!(inclusion.target() == g1.alphabet))
    throw AlphabetError("abelianization_check: inclusion target is not the alphabet of G1");
  const std::size_t k = g1.alphabet.size();
  std::vector<std::vector<long>> rows;
  for (const Word& r : g1.relators) rows.push_back(exponent_vector(r));
  for (const Word& w : inclusion.images()) rows.push_back(exponent_vector(w));

  AbelianizationCheck out;
  const std::vector<long> diag = smith_diagonal(std::move(rows), k);
  out.cokernel_rank = k - diag.size();
  for (long d : diag)
    if (d > 1) out.cokernel_torsion.push_back(d);
  out.spans = out.cokernel_rank == 0 && out.cokernel_torsion.empty();
  return out;
}

// -------------------------------------------------------------- weak_extend

ExtensionOutcome weak_extend(const ExtensionProblem& p) {
  if (!(p.inclusion.source() == p.rho0.alphabet()))
    throw AlphabetError("weak_extend: inclusion source differs from the alphabet of rho0");
  if (!(p.inclusion.target() == p.g1.alphabet))
    throw AlphabetError("weak_extend: inclusion target differs from the alphabet of G1");
  if (!p.rho0.is_transitive()) throw NotConnected("weak_extend: rho0 is not transitive");

  ExtensionOutcome outcome;
  outcome.cap = p.cap;
  outcome.abelianization = abelianization_check(p.g1, p.inclusion);
  if (p.surjectivity_assumed && !outcome.abelianization.spans)
    throw HypothesisViolated(
        "surjectivity of the inclusion was assumed, but its image does not span the abelianization of G1");

  SchreierData schreier = schreier_generators(p.rho0, 0);
  std::vector<Word> pushed;
  for (const Word& w : schreier.stabilizer_generators) {
    Word img = substitute(w, p.inclusion);
    if (!img.empty()) pushed.push_back(std::move(img));
  }

  CosetTable table = todd_coxeter(p.g1, pushed, p.cap);
  outcome.cosets_defined = table.cosets_defined();
  if (!table.closed()) {
    outcome.status = ExtensionStatus::IndexNotEstablished;
    return outcome;
  }

  MonodromyRep rho1 = coset_action(table);
  const std::size_t b0 = p.rho0.degree();
  const std::size_t b1 = rho1.degree();
  std::vector<std::uint32_t> fiber(b0);
  for (std::uint32_t s = 0; s < b0; ++s)
    fiber[s] = table.trace(0, substitute(schreier.representatives[s], p.inclusion));

  std::vector<bool> hit(b1, false);
  for (auto f : fiber) hit[f] = true;
  const bool onto = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  if (p.surjectivity_assumed && (!onto || b1 > b0))
    throw HypothesisViolated("surjectivity of the inclusion was assumed, but the extension has " +
                             std::to_string(b1) + " sheets over " + std::to_string(b0) +
                             (onto ? "" : " and the fiber map is not onto"));

  for (GeneratorId g = 0; g < p.rho0.alphabet().size(); ++g) {
    const Permutation img = rho1.evaluate(p.inclusion.image(g));
    for (std::uint32_t s = 0; s < b0; ++s)
      if (fiber[p.rho0.image(g)(s)] != img(fiber[s]))
        throw Error("weak_extend: fiber map is not equivariant (internal error)");
  }

  std::vector<std::uint32_t> sorted = fiber;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  outcome.status = ExtensionStatus::Extended;
  outcome.result = ExtensionResult{std::move(rho1), b0,      b1,
                                   std::move(fiber), injective && b1 == b0,
                                   std::move(schreier), std::move(pushed), std::move(table)};
  return outcome;
}

bool is_strong(const ExtensionResult& r) {
  std::vector<std::uint32_t> sorted = r.fiber_map;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

// ------------------------------------------------------------- maximality

std::vector<std::vector<std::uint32_t>> equivariant_fiber_maps(const MonodromyRep& rho0,
                                                               const InclusionMap& inclusion,
                                                               const MonodromyRep& candidate) {
  if (!(inclusion.source() == rho0.alphabet()) || !(inclusion.target() == candidate.alphabet()))
    throw AlphabetError("equivariant_fiber_maps: inclusion does not connect the two representations");
  if (!rho0.is_transitive()) throw NotConnected("equivariant_fiber_maps: rho0 is not transitive");

  const std::size_t b0 = rho0.degree();
  const std::size_t n = candidate.degree();
  const std::size_t ngens = rho0.alphabet().size();
  std::vector<Permutation> pushed;
  std::vector<Permutation> pushed_inv;
  std::vector<Permutation> source_inv;
  for (GeneratorId g = 0; g < ngens; ++g) {
    pushed.push_back(candidate.evaluate(inclusion.image(g)));
    pushed_inv.push_back(pushed.back().inverse());
    source_inv.push_back(rho0.image(g).inverse());
  }

  // Transitivity of rho0 means f is pinned down by f(0).
  std::vector<std::vector<std::uint32_t>> maps;
  for (std::uint32_t start = 0; start < n; ++start) {
    std::vector<std::int64_t> f(b0, -1);
    f[0] = start;
    std::vector<std::uint32_t> queue{0};
    bool ok = true;
    for (std::size_t head = 0; ok && head < queue.size(); ++head) {
      const std::uint32_t s = queue[head];
      const auto fs = static_cast<std::uint32_t>(f[s]);
      for (GeneratorId g = 0; ok && g < ngens; ++g) {
        for (int sign : {1, -1}) {
          const std::uint32_t t = sign > 0 ? rho0.image(g)(s) : source_inv[g](s);
          const std::uint32_t ft = sign > 0 ? pushed[g](fs) : pushed_inv[g](fs);
          if (f[t] < 0) {
            f[t] = ft;
            queue.push_back(t);
          } else if (static_cast<std::uint32_t>(f[t]) != ft) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) maps.emplace_back(f.begin(), f.end());
  }
  return maps;
}

std::optional<std::vector<std::uint32_t>> compatible_fiber_map(const MonodromyRep& rho0,
                                                               const InclusionMap& inclusion,
                                                               const MonodromyRep& candidate,
                                                               bool require_surjective) {
  for (auto& f : equivariant_fiber_maps(rho0, inclusion, candidate)) {
    if (require_surjective) {
      std::vector<bool> hit(candidate.degree(), false);
      for (auto x : f) hit[x] = true;
      if (!std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) continue;
    }
    return std::move(f);
  }
  return std::nullopt;
}

MaximalityVerdict maximality_check(const ExtensionProblem& problem, const ExtensionResult& r,
                                   const MonodromyRep& candidate) {
  if (!(candidate.alphabet() == problem.g1.alphabet))
    throw AlphabetError("maximality_check: candidate is not a representation of G1");
  if (candidate.degree() > kMaxSearchDegree || problem.rho0.degree() > kMaxSearchDegree)
    throw CapacityError("maximality_check: degrees above " + std::to_string(kMaxSearchDegree) +
                        " are not searched");
  auto f = compatible_fiber_map(problem.rho0, problem.inclusion, candidate, true);
  if (!f) throw NotAnExtension("candidate admits no fiber surjection compatible with rho0");

  MaximalityVerdict v;
  v.candidate_degree = candidate.degree();
  v.b1 = r.b1;
  v.fiber_map = std::move(*f);
  v.degree_bounded = v.candidate_degree <= v.b1;
  v.equal_degree = v.candidate_degree == v.b1;
  if (v.equal_degree) v.conjugator = conjugating_permutation(r.rho1.images(), candidate.images());
  return v;
}

bool equivalent(const MonodromyRep& a, const MonodromyRep& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw AlphabetError("equivalent: representations of different groups");
  if (a.degree() != b.degree()) return false;
  if (a.degree() > kMaxSearchDegree)
    throw CapacityError("equivalent: degree " + std::to_string(a.degree()) + " exceeds " +
                        std::to_string(kMaxSearchDegree));
  return conjugating_permutation(a.images(), b.images()).has_value();
}

bool two_sheet_unique(std::size_t k) {
  if (k == 0 || k > 8) throw CapacityError("two_sheet_unique: k must lie in 1..8");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("g" + std::to_string(i));
  const Presentation free_group = Presentation::free(Alphabet(names));
  const Permutation id = Permutation::identity(2);
  const Permutation swap = Permutation::from_cycles(2, {{0, 1}});

  std::vector<MonodromyRep> admissible;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<Permutation> images;
    for (std::size_t i = 0; i < k; ++i) images.push_back((mask >> i) & 1u ? swap : id);
    MonodromyRep rep(free_group, std::move(images));
    const bool all_nontrivial = std::none_of(rep.images().begin(), rep.images().end(),
                                             [](const Permutation& p) { return p.is_identity(); });
    if (all_nontrivial) admissible.push_back(std::move(rep));
  }
  if (admissible.empty()) return false;
  for (std::size_t i = 1; i < admissible.size(); ++i)
    if (!equivalent(admissible[0], admissible[i])) return false;
  return true;
}

}  // namespace covext

#include "covext/perm.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "covext/errors.hpp"

namespace covext {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::uint32_t x : images_) {
    if (x >= images_.size() || hit[x]) throw InvalidRep("images do not form a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0u);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]]) throw InvalidRep("cycles are not disjoint or exceed the degree");
      used[c[i]] = true;
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<std::uint32_t>> cycles) {
  std::vector<std::vector<std::uint32_t>> cs;
  for (const auto& c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = i;
  return inv;
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> c;
    for (std::uint32_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  std::vector<std::uint32_t> out(p.degree());
  for (std::uint32_t x = 0; x < out.size(); ++x) out[x] = q(p(x));
  return Permutation(std::move(out));
}

Permutation conjugate(const Permutation& p, const Permutation& sigma) {
  return compose(compose(sigma.inverse(), p), sigma);
}

Permutation power(const Permutation& p, long k) {
  Permutation base = k < 0 ? p.inverse() : p;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Permutation result = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1UL) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t order(const Permutation& p) {
  std::size_t result = 1;
  for (std::size_t len : cycle_type(p)) result = std::lcm(result, len);
  return result;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> lengths;
  for (const auto& c : p.cycles()) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string to_cycle_string(const Permutation& p) {
  if (p.degree() == 0) return "()";
  std::ostringstream os;
  for (const auto& c : p.cycles()) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  return os.str();
}

std::string to_one_line_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.degree(); ++i) os << (i ? " " : "") << p(static_cast<std::uint32_t>(i));
  os << ']';
  return os.str();
}

std::vector<std::uint32_t> orbit(std::span<const Permutation> gens, std::size_t degree,
                                 std::uint32_t start) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw DegreeMismatch("orbit: generator degree differs");
  if (start >= degree) return {};
  std::vector<bool> seen(degree, false);
  std::vector<std::uint32_t> out{start};
  seen[start] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      const std::uint32_t y = g(out[head]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

bool is_transitive(std::span<const Permutation> gens, std::size_t degree) {
  if (degree <= 1) return true;
  return orbit(gens, degree, 0).size() == degree;
}

bool is_transitive(std::span<const Permutation> gens) {
  if (gens.empty()) return true;
  return is_transitive(gens, gens.front().degree());
}

ClosureOrder closure_order(std::span<const Permutation> gens, std::size_t cap) {
  if (cap == 0) throw CapacityError("closure_order: cap must be at least 1");
  if (gens.empty()) return std::size_t{1};
  const std::size_t degree = gens.front().degree();
  if (degree > kMaxClosureDegree)
    throw CapacityError("closure_order: degree " + std::to_string(degree) + " exceeds " +
                        std::to_string(kMaxClosureDegree));
  std::set<Permutation> elements{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    const Permutation x = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation y = compose(x, g);
      if (elements.insert(y).second) {
        if (elements.size() > cap) return Exceeded{cap};
        frontier.push_back(std::move(y));
      }
    }
  }
  return elements.size();
}

std::optional<Permutation> conjugating_permutation(std::span<const Permutation> a,
                                                   std::span<const Permutation> b) {
  if (a.size() != b.size()) throw DegreeMismatch("conjugating_permutation: tuple lengths differ");
  if (a.empty()) return Permutation::identity(0);
  const std::size_t d = a.front().degree();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].degree() != d || b[i].degree() != d)
      throw DegreeMismatch("conjugating_permutation: degrees differ");
  if (d > kMaxSearchDegree)
    throw CapacityError("conjugating_permutation: degree " + std::to_string(d) + " exceeds " +
                        std::to_string(kMaxSearchDegree));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (cycle_type(a[i]) != cycle_type(b[i])) return std::nullopt;

  // σ⁻¹ a σ = b  ⇔  σ(a(x)) = b(σ(x)) for all x.
  std::vector<std::uint32_t> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 0u);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < a.size(); ++i)
      for (std::uint32_t x = 0; ok && x < d; ++x) ok = sigma[a[i](x)] == b[i](sigma[x]);
    if (ok) return Permutation(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

}  // namespace covext

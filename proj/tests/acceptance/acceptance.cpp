// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "covext/bundled.hpp"
#include "covext/coset.hpp"
#include "covext/cpoly.hpp"
#include "covext/extend.hpp"
#include "covext/runner.hpp"

using namespace covext;
using json = nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failed checks instead of stopping at the first.
class Checker {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  Outcome outcome() const {
    Outcome o{failures_.empty(), {}};
    const auto& parts = failures_.empty() ? notes_ : failures_;
    for (std::size_t i = 0; i < parts.size(); ++i) o.detail += (i ? "; " : "") + parts[i];
    return o;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

json run_bundled(const std::string& name) {
  for (const auto& b : bundled_scenarios())
    if (b.name == name) return run_scenario(parse_scenario_text(b.text));
  throw std::runtime_error("no bundled scenario " + name);
}

std::string verdict_of(const json& report, const std::string& fact, std::size_t nth = 0) {
  for (const auto& c : report["claims"])
    if (c["fact"] == fact && nth-- == 0) return c["verdict"];
  return "absent";
}

Complex cx(const json& j) { return {j[0].get<double>(), j[1].get<double>()}; }

bool same_point_set(const json& got, std::vector<Complex> want, double tol) {
  if (got.size() != want.size()) return false;
  for (const auto& g : got) {
    auto it = std::find_if(want.begin(), want.end(), [&](Complex w) { return std::abs(cx(g) - w) <= tol; });
    if (it == want.end()) return false;
    want.erase(it);
  }
  return true;
}

Outcome example3() {
  Checker c;
  const json r = run_bundled("example3_extension");
  c.require(r["results"]["b1"] == 1, "b1 = " + r["results"]["b1"].dump());
  c.require(verdict_of(r, "/b1") == "MATCHES", "claim verdict " + verdict_of(r, "/b1"));
  c.note("b1 = 1, claim MATCHES");
  return c.outcome();
}

Outcome two_sheet() {
  Checker c;
  const json r = run_bundled("two_sheet_extension")["results"];
  c.require(r["b1"] == 2, "b1 = " + r["b1"].dump());
  c.require(r["strong"] == true, "not strong");
  const auto f = r["fiber_map"].get<std::vector<int>>();
  c.require(f.size() == 2 && f[0] != f[1], "fiber map not injective");
  c.note("b1 = 2, fiber map " + r["fiber_map"].dump());
  return c.outcome();
}

Outcome cubic_slice() {
  Checker c;
  const json r = run_bundled("cubic_slice_monodromy")["results"];
  c.require(same_point_set(r["branch_points"], {1.0, -1.0}, 1e-10), "branch points " + r["branch_points"].dump());
  const json& l = r["lassos"];
  c.require(l.size() == 2, "lasso count");
  if (l.size() == 2) {
    for (const auto& x : l) c.require(x["cycle_type"] == json({2, 1}), "lasso not a transposition");
    c.require(l[0]["one_line"] != l[1]["one_line"], "lasso permutations coincide");
    std::vector<std::uint32_t> a = l[0]["one_line"], b = l[1]["one_line"];
    c.require(cycle_type(compose(Permutation(a), Permutation(b))) == std::vector<std::size_t>{3},
              "lasso product is not a 3-cycle");
  }
  c.require(r["closure_order"] == 6, "closure order " + r["closure_order"].dump());
  c.require(r["closedness"][0]["closed"] == true, "alpha1 lift at the simple-root sheet is not closed");
  c.require(r["closedness"][1]["closed"] == false, "alpha1 alpha2 lift at the simple-root sheet is closed");
  c.require(r["refinement_stable"] == true, "permutations change under 2x refinement");
  c.note("branch points +1, -1; transpositions " + l[0]["cycles"].get<std::string>() + ", " +
         l[1]["cycles"].get<std::string>() + "; group order 6; simple-root sheet " +
         r["closedness"][0]["sheet"].dump() + " fixed by alpha1, moved by alpha1 alpha2");
  return c.outcome();
}

Outcome stein() {
  Checker c;
  const json r = run_bundled("stein_weierstrass")["results"];
  c.require(same_point_set(r["branch_points"], {0.0}, 1e-10), "branch points " + r["branch_points"].dump());
  c.require(r["lassos"].size() == 1 && r["lassos"][0]["one_line"] == json({1, 0}), "monodromy is not (0 1)");
  const json& a = r["weierstrass"]["coefficients"];
  const std::vector<std::vector<Complex>> want = {{0.0, -1.0, 2.0, -1.0}, {}, {1.0}};
  double err = 0.0;
  bool shape = a.size() == want.size();
  for (std::size_t k = 0; shape && k < want.size(); ++k) {
    shape = a[k].size() == want[k].size();
    for (std::size_t i = 0; shape && i < want[k].size(); ++i) err = std::max(err, std::abs(cx(a[k][i]) - want[k][i]));
  }
  c.require(shape && err <= 1e-8, "Weierstrass coefficients " + a.dump());
  c.require(r["separation"][0]["separates"] == true, "h does not separate the fiber over -1");
  c.require(r["separation"][1]["separates"] == false, "h separates the fiber over 1");
  std::ostringstream os;
  os << "zeta^2 - z(z-1)^2 to " << std::scientific << std::setprecision(1) << err << "; separates at -1, not at 1";
  c.note(os.str());
  return c.outcome();
}

Outcome galois_slice() {
  Checker c;
  const json r = run_bundled("galois_slice_monodromy")["results"];
  c.require(r["lassos"].size() == 2, "lasso count");
  for (const auto& x : r["lassos"]) c.require(x["cycle_type"] == json({3}), "lasso not a 3-cycle");
  c.require(r["closure_order"] == 3, "closure order " + r["closure_order"].dump());
  c.note("two 3-cycles, group order 3");
  return c.outcome();
}

Outcome cubic_discriminant() {
  Checker c;
  std::mt19937_64 rng(31);
  std::normal_distribution<double> n01;
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Complex p(n01(rng), n01(rng));
    const Complex q(n01(rng), n01(rng));
    const Complex got = discriminant(CPoly{q, p, 0.0, 1.0});
    const Complex want = -4.0 * p * p * p - 27.0 * q * q;
    worst = std::max(worst, std::abs(got - want) / std::max(std::abs(want), 1e-300));
  }
  c.require(worst <= 1e-9, "relative error " + std::to_string(worst));
  std::ostringstream os;
  os << "1000 samples, worst relative error " << std::scientific << std::setprecision(1) << worst;
  c.note(os.str());
  return c.outcome();
}

Outcome braid_audit() {
  Checker c;
  const json r = run_bundled("braid_4_3_search");
  const json& s = r["results"]["search"];
  c.require(s["exhaustive"] == true, "search not confirmed exhaustive");
  c.require(s["all_relators_hold"] == true, "a solution fails the relator evaluator");
  c.require(s["brute_force_count"] == s["solution_count"], "brute-force count differs");
  const std::string v = verdict_of(r, "/search/solution_count");
  c.require(v == "MATCHES" || v == "CONTRADICTS", "verdict for the nonexistence claim not attached");

  const json m = run_bundled("minimal_extension_degree");
  const json& me = m["results"]["minimal_extension"];
  c.require(me["injective"].contains("witness"), "no injective witness");
  c.require(me["surjective"].contains("witness"), "no surjective witness");
  const std::string v4 = verdict_of(m, "/minimal_extension/injective/degree", 0);
  const std::string v5 = verdict_of(m, "/minimal_extension/injective/degree", 1);
  c.require(v4 != "absent" && v5 != "absent", "4- and 5-sheet claims not both attached");
  c.note(s["solution_count"].dump() + " homomorphism(s), exhaustive; nonexistence claim " + v + "; minimal degree " +
         me["injective"]["degree"].dump() + " (injective), " + me["surjective"]["degree"].dump() +
         " (surjective); 4-sheet " + v4 + ", 5-sheet " + v5);
  return c.outcome();
}

Outcome coset_oracle() {
  Checker c;
  std::mt19937_64 rng(8);
  int instances = 0;
  const Alphabet al({"a", "b", "c"});
  while (instances < 100) {
    const std::size_t rank = 2 + rng() % 2;
    const std::size_t degree = 1 + rng() % 12;
    const Alphabet sub(std::vector<std::string>(al.names().begin(), al.names().begin() + rank));
    std::vector<Permutation> images;
    for (std::size_t g = 0; g < rank; ++g) {
      std::vector<std::uint32_t> p(degree);
      std::iota(p.begin(), p.end(), 0u);
      std::shuffle(p.begin(), p.end(), rng);
      images.emplace_back(p);
    }
    const MonodromyRep rep(Presentation::free(sub), images);
    if (!rep.is_transitive()) continue;
    ++instances;
    std::vector<Word> gens = schreier_generators(rep).stabilizer_generators;
    // Nielsen moves keep the subgroup but hide the transversal structure.
    for (int k = 0; k < 6 && gens.size() > 1; ++k) {
      const std::size_t i = rng() % gens.size();
      const std::size_t j = (i + 1 + rng() % (gens.size() - 1)) % gens.size();
      gens[i] = multiply(gens[i], rng() % 2 ? gens[j] : invert(gens[j]));
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    const std::size_t orbit_size = orbit(rep.images(), degree, 0).size();
    const CosetTable t = todd_coxeter(Presentation::free(sub), gens);
    c.require(t.closed() && t.index() == orbit_size,
              "instance " + std::to_string(instances) + ": index " + std::to_string(t.index()) + " vs orbit " +
                  std::to_string(orbit_size));
  }
  c.note("100 instances agree");
  return c.outcome();
}

Outcome two_sheet_uniqueness() {
  Checker c;
  for (std::size_t k = 1; k <= 8; ++k) c.require(two_sheet_unique(k), "k = " + std::to_string(k));
  c.note("k = 1..8 unique");
  return c.outcome();
}

Outcome hartogs() {
  Checker c;
  const json r = run_bundled("hartogs_signature_sweep")["results"];
  std::size_t points = 0;
  double dev = 0.0, fd = 0.0;
  for (const auto& k : r["cases"]) {
    const std::string tag = "n=" + k["n"].dump() + " alpha=" + k["alpha"].dump();
    c.require(k["samples"].get<std::size_t>() >= 1000, tag + ": fewer than 1000 samples");
    c.require(k["all_expected"] == true, tag + ": signature " + k["signature_histogram"].dump());
    c.require(k["max_negative_deviation"].get<double>() <= 1e-6, tag + ": negative eigenvalue off -2");
    c.require(k["max_fd_discrepancy"].get<double>() <= 1e-5, tag + ": finite differences disagree");
    points += k["samples"].get<std::size_t>();
    dev = std::max(dev, k["max_negative_deviation"].get<double>());
    fd = std::max(fd, k["max_fd_discrepancy"].get<double>());
  }
  c.require(r["cases"].size() == 9, "expected the 3 x 3 grid of (n, alpha)");
  std::ostringstream os;
  os << points << " points, |lambda+2| <= " << std::scientific << std::setprecision(1) << dev << ", FD <= " << fd;
  c.note(os.str());
  return c.outcome();
}

Outcome determinism() {
  Checker c;
  const PaperSummary a = verify_paper();
  const PaperSummary b = verify_paper();
  c.require(a.reports.size() == bundled_scenarios().size(), "not every bundled scenario ran");
  c.require(a.reports.size() == b.reports.size(), "report counts differ");
  for (std::size_t i = 0; i < std::min(a.reports.size(), b.reports.size()); ++i)
    c.require(a.reports[i].dump(2) == b.reports[i].dump(2), a.names[i] + " differs");
  std::ostringstream sa, sb;
  print_summary(sa, a);
  print_summary(sb, b);
  c.require(sa.str() == sb.str(), "summary tables differ");
  c.note(std::to_string(a.reports.size()) + " reports identical");
  return c.outcome();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "example-3 extension", 1.0, example3},
      {2, "two-sheet extension", 1.0, two_sheet},
      {3, "cubic slice monodromy", 5.0, cubic_slice},
      {4, "square-root slice and Weierstrass polynomial", 2.0, stein},
      {5, "Galois slice monodromy", 5.0, galois_slice},
      {6, "cubic discriminant closed form", 1.0, cubic_discriminant},
      {7, "braid audit", 1.0, braid_audit},
      {8, "coset enumeration vs orbit oracle", 10.0, coset_oracle},
      {9, "two-sheet uniqueness", 1.0, two_sheet_uniqueness},
      {10, "Hartogs Levi signatures", 10.0, hartogs},
      {11, "verify-paper determinism", 60.0, determinism},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_s) {
      o.ok = false;
      o.detail += "; took longer than " + std::to_string(cr.limit_s) + " s";
    }
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << cr.id << "  " << cr.name << "  ("
              << std::fixed << std::setprecision(3) << secs << " s)  " << o.detail << "\n";
  }
  std::cout << (11 - failures) << "/11 criteria pass\n";
  return failures;
}

#include "covext/runner.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <set>

#include "covext/braid.hpp"
#include "covext/bundled.hpp"
#include "covext/coset.hpp"
#include "covext/errors.hpp"
#include "covext/extend.hpp"
#include "covext/hartogs.hpp"
#include "covext/slice.hpp"
#include "covext/wire.hpp"
#include "payloads.hpp"

namespace covext {

using json = nlohmann::json;
using wire::child;
using wire::to_json;

namespace {

constexpr std::size_t kClosureCap = 1'000'000;

// Uniform doubles from the raw 64-bit stream, identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

json closure_json(std::span<const Permutation> gens) {
  const ClosureOrder o = closure_order(gens, kClosureCap);
  if (const auto* n = std::get_if<std::size_t>(&o)) return *n;
  return "exceeded";
}

json perm_with_type(const Permutation& p) {
  json j = to_json(p);
  j["cycle_type"] = cycle_type(p);
  return j;
}

json rep_json(const MonodromyRep& rep) {
  json out = json::object();
  for (GeneratorId g = 0; g < rep.alphabet().size(); ++g) out[rep.alphabet().name(g)] = perm_with_type(rep.image(g));
  return out;
}

// ------------------------------------------------------------------ slices

struct SliceRun {
  json results;
  std::optional<MonodromyRep> loops;
};

SliceRun run_slice(const payload::SliceSpec& s, const RunOptions& opts) {
  const CoverSlice cover(s.cover);
  const SliceMonodromy m = full_monodromy(cover, s.basepoint, s.opts);
  SliceRun run;
  json& r = run.results;
  r["degree"] = cover.degree();
  r["discriminant"] = to_json(m.branch.discriminant);
  r["branch_points"] = json::array();
  for (const auto& p : m.branch.points) r["branch_points"].push_back(to_json(p));
  r["discriminant_orders"] = m.branch.discriminant_order;
  r["basepoint"] = to_json(m.basepoint);
  r["fiber"] = json::array();
  for (const auto& w : m.fiber.roots) r["fiber"].push_back(to_json(w));
  r["lassos"] = json::array();
  for (std::size_t i = 0; i < m.lassos.size(); ++i) {
    json l = perm_with_type(m.lasso_permutations[i]);
    l["name"] = m.rep.alphabet().name(static_cast<GeneratorId>(i));
    l["center"] = to_json(m.lassos[i].center);
    l["radius"] = m.lassos[i].radius;
    r["lassos"].push_back(std::move(l));
  }
  r["boundary"] = perm_with_type(m.boundary);
  r["closure_order"] = closure_json(m.rep.images());
  r["transitive"] = m.rep.is_transitive();
  r["diagnostics"] = {{"steps", m.steps}, {"min_root_separation", m.min_root_separation}};

  const MonodromyRep* words_over = &m.rep;
  if (!s.loops.empty()) {
    for (std::size_t i = 0; i < s.loops.size(); ++i) {
      try {
        parse_word(m.rep.alphabet(), s.loops[i].second);
      } catch (const AlphabetError& e) {
        throw SchemaError(child(child(s.loops_ptr, i), "word"), e.what());
      }
    }
    run.loops = named_loop_rep(m, s.loops);
    words_over = &*run.loops;
    r["loops"] = rep_json(*run.loops);
    r["loop_closure_order"] = closure_json(run.loops->images());
  }

  if (!s.closedness.empty()) {
    json rows = json::array();
    for (const auto& c : s.closedness) {
      Word w(words_over->alphabet());
      try {
        w = parse_word(words_over->alphabet(), c.word);
      } catch (const AlphabetError& e) {
        throw SchemaError(child(c.ptr, "word"), e.what());
      }
      std::uint32_t sheet = 0;
      json row = {{"word", c.word}};
      if (c.sheet) {
        sheet = *c.sheet;
        if (sheet >= cover.degree()) throw SchemaError(child(c.ptr, "sheet"), "sheet index out of range");
      } else {
        sheet = sheet_approaching(cover, m, c.sheet_at->first, c.sheet_at->second, s.opts);
        row["sheet_at"] = {{"z", to_json(c.sheet_at->first)}, {"w", to_json(c.sheet_at->second)}};
      }
      row["sheet"] = sheet;
      row["closed"] = lift_is_closed(*words_over, w, sheet);
      rows.push_back(std::move(row));
    }
    r["closedness"] = std::move(rows);
  }

  if (s.refinement_check) {
    SliceOptions finer = s.opts;
    finer.max_step /= 2.0;
    const SliceMonodromy refined = full_monodromy(cover, s.basepoint, finer);
    r["refinement_stable"] = refined.lasso_permutations == m.lasso_permutations;
  }

  if (s.weierstrass_h) {
    const std::vector<CPoly> a = weierstrass_poly_of_function(cover, *s.weierstrass_h, s.opts);
    json coeffs = json::array();
    for (const auto& p : a) coeffs.push_back(to_json(p));
    r["weierstrass"] = {{"coefficients", std::move(coeffs)}};
  }
  if (!s.separation.empty()) {
    json rows = json::array();
    for (const auto& sep : s.separation)
      rows.push_back({{"z", to_json(sep.z)}, {"separates", separates_fiber(cover, sep.h, sep.z, s.opts)}});
    r["separation"] = std::move(rows);
  }
  (void)opts;
  return run;
}

// -------------------------------------------------------------- extension

json run_extension(const Scenario& sc, const payload::ExtensionSpec& s, const RunOptions& opts) {
  json r = json::object();
  std::vector<Permutation> images = s.rho0_images;
  if (s.rho0_slice) {
    SliceRun sr = run_slice(*s.rho0_slice, opts);
    images = sr.loops->images();
    r["rho0_slice"] = std::move(sr.results);
  }
  const MonodromyRep rho0(s.g0, images);
  ExtensionProblem problem{rho0, s.g1, InclusionMap(s.g0.alphabet, s.g1.alphabet, s.inclusion),
                           s.surjectivity_assumed, s.cap};
  r["rho0"] = rep_json(rho0);
  r["b0"] = rho0.degree();
  const ExtensionOutcome out = weak_extend(problem);
  r["abelianization"] = {{"spans", out.abelianization.spans},
                         {"cokernel_rank", out.abelianization.cokernel_rank},
                         {"cokernel_torsion", out.abelianization.cokernel_torsion}};
  r["cap"] = out.cap;
  r["cosets_defined"] = out.cosets_defined;
  if (out.status == ExtensionStatus::IndexNotEstablished) {
    r["status"] = "index-not-established";
    return r;
  }
  const ExtensionResult& e = *out.result;
  r["status"] = "extended";
  r["b1"] = e.b1;
  r["fiber_map"] = e.fiber_map;
  r["strong"] = e.strong;
  r["rho1"] = rep_json(e.rho1);
  r["rho1_closure_order"] = closure_json(e.rho1.images());
  json reps = json::array();
  for (const auto& w : e.schreier.representatives) reps.push_back(to_string(w));
  json stab = json::array();
  for (const auto& w : e.schreier.stabilizer_generators) stab.push_back(to_string(w));
  json pushed = json::array();
  for (const auto& w : e.pushed_generators) pushed.push_back(to_string(w));
  r["schreier"] = {{"representatives", reps}, {"stabilizer_generators", stab}, {"pushed_generators", pushed}};
  if (opts.debug_tables) {
    *opts.debug_tables << "# coset table: " << sc.name << " (rows = cosets, columns = generator, inverse)\n";
    dump_table(*opts.debug_tables, e.table);
  }

  if (!s.candidates.empty()) {
    json rows = json::array();
    for (const auto& c : s.candidates) {
      const MonodromyRep cand(s.g1, c.images);
      json row = {{"id", c.id}, {"degree", cand.degree()}};
      try {
        const MaximalityVerdict v = maximality_check(problem, e, cand);
        row["fiber_map"] = v.fiber_map;
        row["degree_bounded"] = v.degree_bounded;
        row["equal_degree"] = v.equal_degree;
        row["conjugator"] = v.conjugator ? to_json(*v.conjugator) : json();
        row["maximality_holds"] = v.holds();
      } catch (const NotAnExtension& ex) {
        row["not_an_extension"] = ex.what();
      }
      rows.push_back(std::move(row));
    }
    r["candidates"] = std::move(rows);
  }
  if (!s.closedness.empty()) {
    json rows = json::array();
    for (const auto& c : s.closedness) {
      const MonodromyRep& rep = c.on_rho1 ? e.rho1 : rho0;
      if (c.sheet >= rep.degree()) throw SchemaError(child(c.ptr, "sheet"), "sheet index out of range");
      rows.push_back({{"rep", c.on_rho1 ? "rho1" : "rho0"},
                      {"word", to_string(c.word)},
                      {"sheet", c.sheet},
                      {"closed", lift_is_closed(rep, c.word, c.sheet)}});
    }
    r["closedness"] = std::move(rows);
  }
  return r;
}

// ------------------------------------------------------------------ braids

// Counts every tuple meeting the constraints by direct enumeration, with no
// pruning, as an independent check on hom_search.
std::optional<std::size_t> brute_force_count(std::size_t strands, const HomSearchConstraints& c) {
  std::vector<Permutation> all;
  std::vector<std::uint32_t> p(c.degree);
  for (std::uint32_t i = 0; i < c.degree; ++i) p[i] = i;
  do all.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t k = strands - 1;
  double space = 1.0;
  for (std::size_t i = 0; i < k; ++i) space *= c.pinned.count(i) ? 1.0 : static_cast<double>(all.size());
  if (space > 2e6) return std::nullopt;

  std::size_t count = 0;
  std::vector<Permutation> images(k);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      if (!satisfies_braid_relators(strands, images)) return;
      if (c.require_transitive && !is_transitive(images, c.degree)) return;
      if (c.require_all_nontrivial)
        for (const auto& x : images)
          if (x.is_identity()) return;
      ++count;
      return;
    }
    if (auto it = c.pinned.find(i); it != c.pinned.end()) {
      images[i] = it->second;
      self(self, i + 1);
      return;
    }
    for (const auto& x : all) {
      images[i] = x;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return count;
}

json run_braid(const payload::BraidSpec& s) {
  json r = {{"strands", s.strands}};
  const Alphabet a = braid_presentation(s.strands).alphabet;
  if (s.search) {
    const HomSearchConstraints& c = s.search->constraints;
    const auto sols = hom_search(s.strands, c);
    json rows = json::array();
    bool all_valid = true;
    for (const auto& images : sols) {
      json imgs = json::object();
      for (GeneratorId g = 0; g < images.size(); ++g) imgs[a.name(g)] = perm_with_type(images[g]);
      bool shared = true;
      for (const auto& x : images) shared = shared && cycle_type(x) == cycle_type(images.front());
      const bool valid = satisfies_braid_relators(s.strands, images);
      all_valid = all_valid && valid;
      rows.push_back({{"images", std::move(imgs)},
                      {"transitive", is_transitive(images, c.degree)},
                      {"closure_order", closure_json(images)},
                      {"twist_cycle_types_agree", shared},
                      {"relators_hold", valid}});
    }
    json pinned = json::object();
    for (const auto& [i, p] : c.pinned) pinned[a.name(static_cast<GeneratorId>(i))] = to_json(p);
    const auto brute = brute_force_count(s.strands, c);
    r["search"] = {{"degree", c.degree},
                   {"pinned", std::move(pinned)},
                   {"require_transitive", c.require_transitive},
                   {"require_all_nontrivial", c.require_all_nontrivial},
                   {"solution_count", sols.size()},
                   {"all_relators_hold", all_valid},
                   {"brute_force_count", brute ? json(*brute) : json()},
                   {"exhaustive", brute ? json(*brute == sols.size()) : json()},
                   {"solutions", std::move(rows)}};
  }
  if (s.minimal_extension) {
    const auto& m = *s.minimal_extension;
    const MonodromyRep g0(braid_presentation(m.g0_strands), m.g0_images);
    json me = {{"g0_strands", m.g0_strands}, {"g0", rep_json(g0)}, {"max_degree", m.max_degree}};
    for (FiberMode mode : m.modes) {
      const auto found = minimal_extension_degree(g0, s.strands, m.max_degree, mode);
      json row;
      if (found) {
        row = {{"degree", found->degree},
               {"witness", rep_json(found->witness)},
               {"fiber_map", found->fiber_map},
               {"homomorphisms_examined", found->homomorphisms_examined}};
      }
      me[mode == FiberMode::Surjective ? "surjective" : "injective"] = std::move(row);
    }
    r["minimal_extension"] = std::move(me);
  }
  return r;
}

// ----------------------------------------------------------------- Hartogs

CPoint random_point(Rng& rng, int n) {
  CPoint w(static_cast<std::size_t>(n));
  for (auto& x : w) {
    const double rad = std::sqrt(rng.uniform());
    x = std::polar(rad, 2.0 * std::numbers::pi * rng.uniform());
  }
  return w;
}

double w2_norm2(const CPoint& w, int q) {
  double s = 0.0;
  for (std::size_t i = w.size() - static_cast<std::size_t>(q); i < w.size(); ++i) s += std::norm(w[i]);
  return s;
}

json run_hartogs(const Scenario& sc, const payload::HartogsSpec& s) {
  Rng rng(sc.seed);
  json cases = json::array();
  bool all_expected = true;
  for (const HartogsParams& p : s.cases) {
    std::map<std::string, std::size_t> hist;
    double max_dev = 0.0;
    double max_fd = 0.0;
    double min_pos = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (std::size_t i = 0; i < s.samples; ++i) {
      CPoint w = random_point(rng, p.n);
      while (w2_norm2(w, p.q) == 0.0) w = random_point(rng, p.n);
      const LeviSignature sig = levi_signature(w, p, s.signature_tol);
      ++hist[std::to_string(sig.positive) + "+ " + std::to_string(sig.negative) + "- " + std::to_string(sig.zero) + "0"];
      ok = ok && sig.positive == p.q && sig.negative == p.n - p.q && sig.zero == 0;
      for (double e : sig.eigenvalues) {
        if (e < 0.0) max_dev = std::max(max_dev, std::abs(e + 2.0));
        if (e > 0.0) min_pos = std::min(min_pos, e);
      }
      max_fd = std::max(max_fd, sig.fd_discrepancy);
    }
    all_expected = all_expected && ok;
    cases.push_back({{"n", p.n},
                     {"q", p.q},
                     {"r", p.r},
                     {"alpha", p.alpha},
                     {"samples", s.samples},
                     {"signature_histogram", hist},
                     {"expected_signature", {p.q, p.n - p.q, 0}},
                     {"all_expected", ok},
                     {"max_negative_deviation", max_dev},
                     {"min_positive_eigenvalue", std::isfinite(min_pos) ? json(min_pos) : json()},
                     {"max_fd_discrepancy", max_fd}});
  }
  json r = {{"cases", std::move(cases)}, {"all_signatures_expected", all_expected}};

  std::set<std::tuple<int, int, double>> shapes;
  for (const auto& p : s.cases) shapes.emplace(p.n, p.q, p.r);

  if (s.containment_samples > 0) {
    json rows = json::array();
    bool all_inside = true;
    for (const auto& [n, q, rad] : shapes) {
      const auto a0 = containment_alpha(q, rad);
      json row = {{"n", n}, {"q", q}, {"r", rad}};
      if (!a0) {
        row["alpha0"] = json();
        row["note"] = "q(1-r)^2 >= 1: points with |w2| > 1 in the inner polydisk stay in every D_alpha";
        all_inside = false;
        rows.push_back(std::move(row));
        continue;
      }
      const HartogsParams p{n, q, rad, std::max(*a0, 1e-3)};
      std::size_t accepted = 0;
      std::size_t inside = 0;
      std::size_t draws = 0;
      while (accepted < s.containment_samples && draws < 1000 * s.containment_samples) {
        ++draws;
        const CPoint w = random_point(rng, n);
        if (!(rho_alpha(w, p) > 0.0)) continue;
        ++accepted;
        if (in_hartogs_figure(w, p)) ++inside;
      }
      row["alpha0"] = *a0;
      row["accepted"] = accepted;
      row["draws"] = draws;
      row["inside"] = inside;
      row["all_inside"] = accepted > 0 && inside == accepted;
      all_inside = all_inside && inside == accepted && accepted > 0;
      rows.push_back(std::move(row));
    }
    r["containment"] = std::move(rows);
    r["all_contained"] = all_inside;
  }

  if (s.union_samples > 0) {
    json rows = json::array();
    bool all_covered = true;
    for (const auto& [n, q, rad] : shapes) {
      std::size_t covered = 0;
      for (std::size_t i = 0; i < s.union_samples; ++i) {
        const CPoint w = random_point(rng, n);
        bool hit = false;
        for (int k = -40; k <= 20 && !hit; ++k) {
          const HartogsParams p{n, q, rad, std::ldexp(1.0, k)};
          hit = rho_alpha(w, p) > 0.0;
        }
        if (hit) ++covered;
      }
      rows.push_back({{"n", n},
                      {"q", q},
                      {"r", rad},
                      {"samples", s.union_samples},
                      {"covered", covered},
                      {"all_covered", covered == s.union_samples}});
      all_covered = all_covered && covered == s.union_samples;
    }
    r["union"] = std::move(rows);
    r["union_all_covered"] = all_covered;
  }
  return r;
}

}  // namespace

json run_scenario(const Scenario& s, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const SliceOptions slice_opts = payload::slice_options(s.tolerances, "/tolerances");
  json results;
  if (s.kind == "extension") {
    results = run_extension(s, payload::decode_extension(s.payload, "/payload", slice_opts), opts);
  } else if (s.kind == "braid-search") {
    results = run_braid(payload::decode_braid(s.payload, "/payload"));
  } else if (s.kind == "slice-monodromy") {
    results = run_slice(payload::decode_slice(s.payload, "/payload", slice_opts), opts).results;
  } else if (s.kind == "hartogs-check") {
    results = run_hartogs(s, payload::decode_hartogs(s.payload, "/payload", s.tolerances));
  } else {
    throw SchemaError("/kind", "unknown kind '" + s.kind + "'");
  }

  json claims = json::array();
  for (std::size_t i = 0; i < s.claims.size(); ++i) {
    const Claim& c = s.claims[i];
    const Verdict v = evaluate_claim(c, results, i);
    json row = {{"anchor", c.anchor},
                {"text", c.text},
                {"fact", c.fact},
                {"relation", std::string(to_string(c.relation))},
                {"observed", results.at(json::json_pointer(c.fact))},
                {"verdict", std::string(to_string(v))}};
    if (c.expect) row["expect"] = *c.expect;
    claims.push_back(std::move(row));
  }
  json report = {{"scenario", to_json(s)}, {"results", std::move(results)}, {"claims", std::move(claims)}};
  if (opts.timings) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    report["timings"] = {{"total_ms", ms.count()}};
  }
  return report;
}

PaperSummary verify_paper(std::string_view filter, const RunOptions& opts) {
  PaperSummary out;
  for (const auto& b : bundled_scenarios()) {
    if (!filter.empty() && b.name.find(filter) == std::string_view::npos) continue;
    const Scenario s = parse_scenario_text(b.text);
    json report = run_scenario(s, opts);
    for (const auto& c : report["claims"]) {
      out.rows.push_back({std::string(b.name), c["anchor"], c["text"], c["verdict"], c["observed"],
                          c.contains("expect") ? c["expect"] : json()});
    }
    out.names.emplace_back(b.name);
    out.reports.push_back(std::move(report));
  }
  return out;
}

void print_summary(std::ostream& os, const PaperSummary& s) {
  auto shorten = [](const json& j) {
    std::string t = j.dump();
    if (t.size() > 48) t = t.substr(0, 45) + "...";
    return t;
  };
  std::size_t name_w = 8;
  std::size_t anchor_w = 6;
  for (const auto& r : s.rows) {
    name_w = std::max(name_w, r.scenario.size());
    anchor_w = std::max(anchor_w, r.anchor.size());
  }
  auto pad = [](std::string t, std::size_t w) {
    t.resize(std::max(t.size(), w), ' ');
    return t;
  };
  os << pad("scenario", name_w) << "  " << pad("anchor", anchor_w) << "  " << pad("verdict", 11) << "  observed"
     << "  [claimed]  text\n";
  std::map<std::string, std::size_t> tally;
  for (const auto& r : s.rows) {
    ++tally[r.verdict];
    os << pad(r.scenario, name_w) << "  " << pad(r.anchor, anchor_w) << "  " << pad(r.verdict, 11) << "  "
       << shorten(r.observed);
    if (!r.expected.is_null()) os << "  [" << shorten(r.expected) << "]";
    os << "  \"" << r.text << "\"\n";
  }
  os << s.reports.size() << " scenarios, " << s.rows.size() << " claims:";
  for (const char* v : {"MATCHES", "CONTRADICTS", "NOT-CLAIMED"}) os << " " << tally[v] << " " << v;
  os << "\n";
}

}  // namespace covext

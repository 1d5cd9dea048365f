#include "payloads.hpp"

#include <set>

#include "covext/coset.hpp"
#include "covext/errors.hpp"
#include "covext/wire.hpp"

namespace covext::payload {

using wire::allow_keys;
using wire::as_array;
using wire::as_bool;
using wire::as_complex;
using wire::as_double;
using wire::as_int;
using wire::as_object;
using wire::as_string;
using wire::child;
using wire::member;
using wire::optional_member;

namespace {

double positive(const json& j, const std::string& ptr) {
  const double x = as_double(j, ptr);
  if (!(x > 0.0)) throw SchemaError(ptr, "must be positive");
  return x;
}

Presentation decode_group(const json& j, const std::string& ptr) {
  as_object(j, ptr);
  if (const json* b = optional_member(j, "braid", ptr)) {
    allow_keys(j, {"braid"}, ptr);
    return braid_presentation(static_cast<std::size_t>(as_int(*b, child(ptr, "braid"), 2, 64)));
  }
  allow_keys(j, {"generators", "relators"}, ptr);
  const std::string gptr = child(ptr, "generators");
  const json& gens = as_array(member(j, "generators", ptr), gptr);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) names.push_back(as_string(gens[i], child(gptr, i)));
  Alphabet a;
  try {
    a = Alphabet(std::move(names));
  } catch (const Error& e) {
    throw SchemaError(gptr, e.what());
  }
  std::vector<Word> relators;
  if (const json* rel = optional_member(j, "relators", ptr)) {
    const std::string rptr = child(ptr, "relators");
    as_array(*rel, rptr);
    for (std::size_t i = 0; i < rel->size(); ++i) relators.push_back(wire::as_word(a, (*rel)[i], child(rptr, i)));
  }
  return Presentation(a, std::move(relators));
}

// {"name": [one-line], ...} with one entry per generator of `a`.
std::vector<Permutation> decode_images(const Alphabet& a, const json& j, const std::string& ptr) {
  as_object(j, ptr);
  for (const auto& [key, value] : j.items())
    if (!a.find(key)) throw SchemaError(child(ptr, key), "not a generator of the group");
  std::vector<Permutation> images;
  for (GeneratorId g = 0; g < a.size(); ++g)
    images.push_back(wire::as_permutation(member(j, a.name(g), ptr), child(ptr, a.name(g))));
  for (const auto& p : images)
    if (p.degree() != images.front().degree()) throw SchemaError(ptr, "images have different degrees");
  return images;
}

void check_rep(const Presentation& p, const std::vector<Permutation>& images, const std::string& ptr) {
  try {
    MonodromyRep rep(p, images);
  } catch (const Error& e) {
    throw SchemaError(ptr, e.what());
  }
}

Bivariate decode_bivariate(const json& j, const std::string& ptr) { return wire::as_bivariate(j, ptr); }

}  // namespace

SliceOptions slice_options(const json& tol, const std::string& ptr) {
  SliceOptions o;
  as_object(tol, ptr);
  const std::pair<const char*, double SliceOptions::*> fields[] = {
      {"root_tol", &SliceOptions::root_tol},
      {"match_tol", &SliceOptions::match_tol},
      {"dedup_tol", &SliceOptions::dedup_tol},
      {"cluster_tol", &SliceOptions::cluster_tol},
      {"multiple_root_tol", &SliceOptions::multiple_root_tol},
      {"lasso_radius_factor", &SliceOptions::lasso_radius_factor},
      {"max_step", &SliceOptions::max_step},
      {"min_step", &SliceOptions::min_step},
  };
  for (const auto& [key, value] : tol.items()) {
    bool known = key == "signature_tol";
    for (const auto& [name, field] : fields)
      if (key == name) {
        o.*field = positive(value, child(ptr, key));
        known = true;
      }
    if (!known) throw SchemaError(child(ptr, key), "unknown tolerance");
  }
  if (o.lasso_radius_factor >= 0.5) throw SchemaError(child(ptr, "lasso_radius_factor"), "must be below 0.5");
  return o;
}

SliceSpec decode_slice(const json& j, const std::string& ptr, const SliceOptions& opts) {
  allow_keys(j, {"cover", "basepoint", "loops", "closedness", "weierstrass", "separation", "refinement_check"}, ptr);
  SliceSpec s;
  s.opts = opts;
  const std::string cptr = child(ptr, "cover");
  s.cover = decode_bivariate(member(j, "cover", ptr), cptr);
  try {
    CoverSlice check(s.cover);
    if (check.degree() > 12) throw Error("degree in w above 12 is not supported");
  } catch (const Error& e) {
    throw SchemaError(cptr, e.what());
  }
  if (const json* b = optional_member(j, "basepoint", ptr)) s.basepoint = as_complex(*b, child(ptr, "basepoint"));

  s.loops_ptr = child(ptr, "loops");
  std::set<std::string> loop_names;
  if (const json* loops = optional_member(j, "loops", ptr)) {
    as_array(*loops, s.loops_ptr);
    for (std::size_t i = 0; i < loops->size(); ++i) {
      const std::string lp = child(s.loops_ptr, i);
      allow_keys((*loops)[i], {"name", "word"}, lp);
      std::string name = as_string(member((*loops)[i], "name", lp), child(lp, "name"));
      if (!loop_names.insert(name).second) throw SchemaError(child(lp, "name"), "duplicate loop name");
      s.loops.emplace_back(std::move(name), as_string(member((*loops)[i], "word", lp), child(lp, "word")));
    }
    try {
      std::vector<std::string> names(loop_names.begin(), loop_names.end());
      Alphabet check(names);
    } catch (const Error& e) {
      throw SchemaError(s.loops_ptr, e.what());
    }
  }

  if (const json* cl = optional_member(j, "closedness", ptr)) {
    const std::string clp = child(ptr, "closedness");
    as_array(*cl, clp);
    for (std::size_t i = 0; i < cl->size(); ++i) {
      const std::string ep = child(clp, i);
      const json& e = (*cl)[i];
      allow_keys(e, {"word", "sheet", "sheet_at"}, ep);
      SliceClosedness c;
      c.word = as_string(member(e, "word", ep), child(ep, "word"));
      c.ptr = ep;
      const json* sheet = optional_member(e, "sheet", ep);
      const json* at = optional_member(e, "sheet_at", ep);
      if ((sheet == nullptr) == (at == nullptr)) throw SchemaError(ep, "give exactly one of sheet and sheet_at");
      if (sheet) c.sheet = static_cast<std::uint32_t>(as_int(*sheet, child(ep, "sheet"), 0, 1 << 20));
      if (at) {
        const std::string ap = child(ep, "sheet_at");
        allow_keys(*at, {"z", "w"}, ap);
        c.sheet_at = std::pair{as_complex(member(*at, "z", ap), child(ap, "z")),
                               as_complex(member(*at, "w", ap), child(ap, "w"))};
      }
      s.closedness.push_back(std::move(c));
    }
  }

  if (const json* w = optional_member(j, "weierstrass", ptr)) {
    const std::string wp = child(ptr, "weierstrass");
    allow_keys(*w, {"h"}, wp);
    s.weierstrass_h = decode_bivariate(member(*w, "h", wp), child(wp, "h"));
  }
  if (const json* sep = optional_member(j, "separation", ptr)) {
    const std::string sp = child(ptr, "separation");
    as_array(*sep, sp);
    for (std::size_t i = 0; i < sep->size(); ++i) {
      const std::string ep = child(sp, i);
      allow_keys((*sep)[i], {"h", "z"}, ep);
      s.separation.push_back({decode_bivariate(member((*sep)[i], "h", ep), child(ep, "h")),
                              as_complex(member((*sep)[i], "z", ep), child(ep, "z"))});
    }
  }
  if (const json* r = optional_member(j, "refinement_check", ptr))
    s.refinement_check = as_bool(*r, child(ptr, "refinement_check"));
  return s;
}

ExtensionSpec decode_extension(const json& j, const std::string& ptr, const SliceOptions& opts) {
  allow_keys(j, {"g0", "g1", "rho0", "inclusion", "surjectivity_assumed", "cap", "candidates", "closedness"}, ptr);
  ExtensionSpec s;
  s.g0 = decode_group(member(j, "g0", ptr), child(ptr, "g0"));
  s.g1 = decode_group(member(j, "g1", ptr), child(ptr, "g1"));

  const std::string rp = child(ptr, "rho0");
  const json& rho0 = member(j, "rho0", ptr);
  as_object(rho0, rp);
  if (optional_member(rho0, "slice", rp)) {
    allow_keys(rho0, {"slice"}, rp);
    if (!s.g0.is_free()) throw SchemaError(child(ptr, "g0"), "a slice-derived rho0 needs a free group g0");
    s.rho0_slice = decode_slice(member(rho0, "slice", rp), child(rp, "slice"), opts);
    std::vector<std::string> names;
    for (const auto& [name, word] : s.rho0_slice->loops) names.push_back(name);
    if (names != s.g0.alphabet.names())
      throw SchemaError(s.rho0_slice->loops_ptr, "loops must name the generators of g0, in order");
  } else {
    allow_keys(rho0, {"images"}, rp);
    s.rho0_images = decode_images(s.g0.alphabet, member(rho0, "images", rp), child(rp, "images"));
    check_rep(s.g0, s.rho0_images, child(rp, "images"));
  }

  const std::string ip = child(ptr, "inclusion");
  const json& inc = member(j, "inclusion", ptr);
  as_object(inc, ip);
  for (const auto& [key, value] : inc.items())
    if (!s.g0.alphabet.find(key)) throw SchemaError(child(ip, key), "not a generator of g0");
  for (GeneratorId g = 0; g < s.g0.alphabet.size(); ++g) {
    const std::string& name = s.g0.alphabet.name(g);
    s.inclusion.push_back(wire::as_word(s.g1.alphabet, member(inc, name, ip), child(ip, name)));
  }

  if (const json* f = optional_member(j, "surjectivity_assumed", ptr))
    s.surjectivity_assumed = as_bool(*f, child(ptr, "surjectivity_assumed"));
  s.cap = kDefaultCosetCap;
  if (const json* c = optional_member(j, "cap", ptr))
    s.cap = static_cast<std::size_t>(as_int(*c, child(ptr, "cap"), 1, 10'000'000));

  if (const json* cands = optional_member(j, "candidates", ptr)) {
    const std::string cp = child(ptr, "candidates");
    as_array(*cands, cp);
    for (std::size_t i = 0; i < cands->size(); ++i) {
      const std::string ep = child(cp, i);
      allow_keys((*cands)[i], {"id", "images"}, ep);
      ExtensionCandidate c;
      c.id = as_string(member((*cands)[i], "id", ep), child(ep, "id"));
      c.images = decode_images(s.g1.alphabet, member((*cands)[i], "images", ep), child(ep, "images"));
      check_rep(s.g1, c.images, child(ep, "images"));
      c.ptr = ep;
      s.candidates.push_back(std::move(c));
    }
  }
  if (const json* cl = optional_member(j, "closedness", ptr)) {
    const std::string clp = child(ptr, "closedness");
    as_array(*cl, clp);
    for (std::size_t i = 0; i < cl->size(); ++i) {
      const std::string ep = child(clp, i);
      const json& e = (*cl)[i];
      allow_keys(e, {"rep", "word", "sheet"}, ep);
      ExtensionClosedness c;
      const std::string rep = as_string(member(e, "rep", ep), child(ep, "rep"));
      if (rep != "rho0" && rep != "rho1") throw SchemaError(child(ep, "rep"), "must be rho0 or rho1");
      c.on_rho1 = rep == "rho1";
      c.word = wire::as_word(c.on_rho1 ? s.g1.alphabet : s.g0.alphabet, member(e, "word", ep), child(ep, "word"));
      c.sheet = static_cast<std::uint32_t>(as_int(member(e, "sheet", ep), child(ep, "sheet"), 0, 1 << 20));
      c.ptr = ep;
      s.closedness.push_back(std::move(c));
    }
  }
  return s;
}

BraidSpec decode_braid(const json& j, const std::string& ptr) {
  allow_keys(j, {"strands", "search", "minimal_extension"}, ptr);
  BraidSpec s;
  s.strands = static_cast<std::size_t>(
      as_int(member(j, "strands", ptr), child(ptr, "strands"), 2, static_cast<long>(kMaxBraidStrands)));
  const Alphabet a = braid_presentation(s.strands).alphabet;

  if (const json* se = optional_member(j, "search", ptr)) {
    const std::string sp = child(ptr, "search");
    allow_keys(*se, {"degree", "pinned", "require_transitive", "require_all_nontrivial"}, sp);
    BraidSearchSpec b;
    b.constraints.degree = static_cast<std::size_t>(
        as_int(member(*se, "degree", sp), child(sp, "degree"), 1, static_cast<long>(kMaxBraidTargetDegree)));
    if (const json* pins = optional_member(*se, "pinned", sp)) {
      const std::string pp = child(sp, "pinned");
      as_object(*pins, pp);
      for (const auto& [key, value] : pins->items()) {
        const auto id = a.find(key);
        if (!id) throw SchemaError(child(pp, key), "not a generator of the braid group");
        Permutation p = wire::as_permutation(value, child(pp, key));
        if (p.degree() != b.constraints.degree) throw SchemaError(child(pp, key), "pinned image has the wrong degree");
        b.constraints.pinned.emplace(*id, std::move(p));
      }
    }
    if (const json* t = optional_member(*se, "require_transitive", sp))
      b.constraints.require_transitive = as_bool(*t, child(sp, "require_transitive"));
    if (const json* t = optional_member(*se, "require_all_nontrivial", sp))
      b.constraints.require_all_nontrivial = as_bool(*t, child(sp, "require_all_nontrivial"));
    s.search = std::move(b);
  }

  if (const json* me = optional_member(j, "minimal_extension", ptr)) {
    const std::string mp = child(ptr, "minimal_extension");
    allow_keys(*me, {"g0_strands", "g0", "max_degree", "modes"}, mp);
    MinimalExtensionSpec m;
    m.g0_strands = static_cast<std::size_t>(
        as_int(member(*me, "g0_strands", mp), child(mp, "g0_strands"), 2, static_cast<long>(s.strands)));
    const Presentation g0 = braid_presentation(m.g0_strands);
    const json& g = member(*me, "g0", mp);
    const std::string gp = child(mp, "g0");
    if (g.is_string()) {
      const std::string kind = g.get<std::string>();
      if (kind == "standard") {
        m.g0_images = standard_rep(m.g0_strands).images();
      } else if (kind == "trivial") {
        m.g0_images = MonodromyRep::trivial(g0).images();
      } else {
        throw SchemaError(gp, "expected \"standard\", \"trivial\" or an image map");
      }
    } else {
      m.g0_images = decode_images(g0.alphabet, g, gp);
      check_rep(g0, m.g0_images, gp);
    }
    if (const json* md = optional_member(*me, "max_degree", mp))
      m.max_degree = static_cast<std::size_t>(
          as_int(*md, child(mp, "max_degree"), 1, static_cast<long>(kMaxBraidTargetDegree)));
    const std::string modes_ptr = child(mp, "modes");
    const json& modes = as_array(member(*me, "modes", mp), modes_ptr);
    for (std::size_t i = 0; i < modes.size(); ++i) {
      const std::string mode = as_string(modes[i], child(modes_ptr, i));
      if (mode == "surjective") {
        m.modes.push_back(FiberMode::Surjective);
      } else if (mode == "injective") {
        m.modes.push_back(FiberMode::Injective);
      } else {
        throw SchemaError(child(modes_ptr, i), "expected \"surjective\" or \"injective\"");
      }
    }
    if (m.modes.empty()) throw SchemaError(modes_ptr, "at least one fiber mode is required");
    s.minimal_extension = std::move(m);
  }
  if (!s.search && !s.minimal_extension) throw SchemaError(ptr, "give search, minimal_extension or both");
  return s;
}

HartogsSpec decode_hartogs(const json& j, const std::string& ptr, const json& tolerances) {
  allow_keys(j, {"n", "q", "r", "alpha", "samples", "containment_samples", "union_samples"}, ptr);
  auto list = [&](const char* key) {
    const std::string kp = child(ptr, key);
    const json& v = member(j, key, ptr);
    std::vector<std::pair<const json*, std::string>> out;
    if (v.is_array()) {
      if (v.empty()) throw SchemaError(kp, "must not be empty");
      for (std::size_t i = 0; i < v.size(); ++i) out.emplace_back(&v[i], child(kp, i));
    } else {
      out.emplace_back(&v, kp);
    }
    return out;
  };
  HartogsSpec s;
  for (const auto& [nj, np] : list("n"))
    for (const auto& [qj, qp] : list("q"))
      for (const auto& [rj, rp] : list("r"))
        for (const auto& [aj, ap] : list("alpha")) {
          HartogsParams p;
          p.n = static_cast<int>(as_int(*nj, np, 3, 16));
          p.q = static_cast<int>(as_int(*qj, qp, 2, 15));
          p.r = as_double(*rj, rp);
          p.alpha = as_double(*aj, ap);
          try {
            p.validate();
          } catch (const Error& e) {
            throw SchemaError(ptr, e.what());
          }
          s.cases.push_back(p);
        }
  if (const json* v = optional_member(j, "samples", ptr))
    s.samples = static_cast<std::size_t>(as_int(*v, child(ptr, "samples"), 1, 1'000'000));
  if (const json* v = optional_member(j, "containment_samples", ptr))
    s.containment_samples = static_cast<std::size_t>(as_int(*v, child(ptr, "containment_samples"), 0, 1'000'000));
  if (const json* v = optional_member(j, "union_samples", ptr))
    s.union_samples = static_cast<std::size_t>(as_int(*v, child(ptr, "union_samples"), 0, 1'000'000));
  if (const json* t = optional_member(tolerances, "signature_tol", "/tolerances"))
    s.signature_tol = positive(*t, "/tolerances/signature_tol");
  return s;
}

void validate(const std::string& kind, const json& payload, const json& tolerances) {
  const SliceOptions opts = slice_options(tolerances, "/tolerances");
  if (kind == "extension") {
    decode_extension(payload, "/payload", opts);
  } else if (kind == "braid-search") {
    decode_braid(payload, "/payload");
  } else if (kind == "slice-monodromy") {
    decode_slice(payload, "/payload", opts);
  } else if (kind == "hartogs-check") {
    decode_hartogs(payload, "/payload", tolerances);
  } else {
    throw SchemaError("/kind", "unknown kind '" + kind + "'");
  }
}

}  // namespace covext::payload

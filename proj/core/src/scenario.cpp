#include "covext/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "covext/errors.hpp"
#include "covext/wire.hpp"
#include "payloads.hpp"

namespace covext {

using json = nlohmann::json;
using wire::child;

namespace {

const char* const kKinds[] = {"extension", "braid-search", "slice-monodromy", "hartogs-check"};

Relation parse_relation(const std::string& s, const std::string& ptr) {
  if (s == "eq") return Relation::Eq;
  if (s == "ne") return Relation::Ne;
  if (s == "le") return Relation::Le;
  if (s == "ge") return Relation::Ge;
  throw SchemaError(ptr, "relation must be one of eq, ne, le, ge");
}

bool approx_equal(const json& a, const json& b, double tol) {
  if (a.is_number() && b.is_number()) {
    if (a.is_number_integer() && b.is_number_integer() && tol == 0.0) return a.get<long>() == b.get<long>();
    return std::abs(a.get<double>() - b.get<double>()) <= tol;
  }
  if (a.is_array() && b.is_array()) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!approx_equal(a[i], b[i], tol)) return false;
    return true;
  }
  if (a.is_object() && b.is_object()) {
    if (a.size() != b.size()) return false;
    for (const auto& [key, value] : a.items()) {
      const auto it = b.find(key);
      if (it == b.end() || !approx_equal(value, *it, tol)) return false;
    }
    return true;
  }
  return a == b;
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Eq: return "eq";
    case Relation::Ne: return "ne";
    case Relation::Le: return "le";
    case Relation::Ge: return "ge";
  }
  return "eq";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Matches: return "MATCHES";
    case Verdict::Contradicts: return "CONTRADICTS";
    case Verdict::NotClaimed: return "NOT-CLAIMED";
  }
  return "NOT-CLAIMED";
}

Scenario parse_scenario(const json& doc) {
  using namespace wire;
  allow_keys(doc, {"name", "kind", "description", "seed", "tolerances", "claims", "payload"}, "");
  Scenario s;
  s.name = as_string(member(doc, "name", ""), "/name");
  if (s.name.empty()) throw SchemaError("/name", "must not be empty");
  s.kind = as_string(member(doc, "kind", ""), "/kind");
  bool known = false;
  for (const char* k : kKinds) known = known || s.kind == k;
  if (!known) throw SchemaError("/kind", "unknown kind '" + s.kind + "'");
  if (const json* d = optional_member(doc, "description", "")) s.description = as_string(*d, "/description");
  if (const json* seed = optional_member(doc, "seed", "")) {
    if (!seed->is_number_unsigned() && !(seed->is_number_integer() && seed->get<long>() >= 0))
      throw SchemaError("/seed", "expected a non-negative integer");
    s.seed = seed->get<std::uint64_t>();
  }
  if (const json* t = optional_member(doc, "tolerances", "")) s.tolerances = as_object(*t, "/tolerances");

  if (const json* claims = optional_member(doc, "claims", "")) {
    as_array(*claims, "/claims");
    for (std::size_t i = 0; i < claims->size(); ++i) {
      const std::string cp = child("/claims", i);
      const json& c = (*claims)[i];
      allow_keys(c, {"anchor", "text", "fact", "relation", "expect", "tol"}, cp);
      Claim claim;
      claim.anchor = as_string(member(c, "anchor", cp), child(cp, "anchor"));
      claim.text = as_string(member(c, "text", cp), child(cp, "text"));
      claim.fact = as_string(member(c, "fact", cp), child(cp, "fact"));
      try {
        json::json_pointer check(claim.fact);
      } catch (const json::exception& e) {
        throw SchemaError(child(cp, "fact"), e.what());
      }
      if (const json* r = optional_member(c, "relation", cp))
        claim.relation = parse_relation(as_string(*r, child(cp, "relation")), child(cp, "relation"));
      if (const json* e = optional_member(c, "expect", cp)) claim.expect = *e;
      if (const json* t = optional_member(c, "tol", cp)) {
        claim.tol = as_double(*t, child(cp, "tol"));
        if (claim.tol < 0.0) throw SchemaError(child(cp, "tol"), "must be non-negative");
      }
      if ((claim.relation == Relation::Le || claim.relation == Relation::Ge) && claim.expect &&
          !claim.expect->is_number())
        throw SchemaError(child(cp, "expect"), "ordering relations need a number");
      s.claims.push_back(std::move(claim));
    }
  }

  s.payload = as_object(member(doc, "payload", ""), "/payload");
  payload::validate(s.kind, s.payload, s.tolerances);
  return s;
}

Scenario parse_scenario_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("not valid JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

json to_json(const Scenario& s) {
  json out;
  out["name"] = s.name;
  out["kind"] = s.kind;
  if (!s.description.empty()) out["description"] = s.description;
  out["seed"] = s.seed;
  out["tolerances"] = s.tolerances;
  json claims = json::array();
  for (const Claim& c : s.claims) {
    json cj = {{"anchor", c.anchor}, {"text", c.text}, {"fact", c.fact}, {"relation", std::string(to_string(c.relation))}};
    if (c.expect) cj["expect"] = *c.expect;
    if (c.tol != 0.0) cj["tol"] = c.tol;
    claims.push_back(std::move(cj));
  }
  out["claims"] = std::move(claims);
  out["payload"] = s.payload;
  return out;
}

Verdict evaluate_claim(const Claim& claim, const json& results, std::size_t index) {
  const std::string ptr = child(child("/claims", index), "fact");
  const json::json_pointer fact(claim.fact);
  if (!results.contains(fact)) throw SchemaError(ptr, "fact '" + claim.fact + "' is not among the results");
  if (!claim.expect) return Verdict::NotClaimed;
  const json& observed = results.at(fact);
  const json& expect = *claim.expect;
  bool holds = false;
  switch (claim.relation) {
    case Relation::Eq: holds = approx_equal(observed, expect, claim.tol); break;
    case Relation::Ne: holds = !approx_equal(observed, expect, claim.tol); break;
    case Relation::Le:
    case Relation::Ge: {
      if (!observed.is_number()) throw SchemaError(ptr, "ordering relation on a non-numeric fact");
      const double o = observed.get<double>();
      const double e = expect.get<double>();
      holds = claim.relation == Relation::Le ? o <= e + claim.tol : o >= e - claim.tol;
      break;
    }
  }
  return holds ? Verdict::Matches : Verdict::Contradicts;
}

}  // namespace covext

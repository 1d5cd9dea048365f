#include "covext/wire.hpp"

#include <cmath>

#include "covext/errors.hpp"

namespace covext::wire {

namespace {

const char* type_name(const json& j) { return j.type_name(); }

}  // namespace

std::string child(const std::string& parent, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return parent + "/" + escaped;
}

std::string child(const std::string& parent, std::size_t index) { return parent + "/" + std::to_string(index); }

const json& as_object(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError(ptr, std::string("expected an object, found ") + type_name(j));
  return j;
}

const json& as_array(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, std::string("expected an array, found ") + type_name(j));
  return j;
}

const json& member(const json& obj, const std::string& key, const std::string& ptr) {
  as_object(obj, ptr);
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(child(ptr, key), "required field is missing");
  return *it;
}

const json* optional_member(const json& obj, const std::string& key, const std::string& ptr) {
  as_object(obj, ptr);
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

void allow_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& ptr) {
  as_object(obj, ptr);
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw SchemaError(child(ptr, key), "unknown field");
  }
}

std::string as_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw SchemaError(ptr, std::string("expected a string, found ") + type_name(j));
  return j.get<std::string>();
}

bool as_bool(const json& j, const std::string& ptr) {
  if (!j.is_boolean()) throw SchemaError(ptr, std::string("expected a boolean, found ") + type_name(j));
  return j.get<bool>();
}

double as_double(const json& j, const std::string& ptr) {
  if (!j.is_number()) throw SchemaError(ptr, std::string("expected a number, found ") + type_name(j));
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw SchemaError(ptr, "number is not finite");
  return x;
}

long as_int(const json& j, const std::string& ptr, long lo, long hi) {
  if (!j.is_number_integer()) throw SchemaError(ptr, std::string("expected an integer, found ") + type_name(j));
  const long v = j.get<long>();
  if (v < lo || v > hi)
    throw SchemaError(ptr, "integer " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
  return v;
}

Complex as_complex(const json& j, const std::string& ptr) {
  if (j.is_number()) return {as_double(j, ptr), 0.0};
  if (!j.is_array() || j.size() != 2) throw SchemaError(ptr, "expected a complex number [re, im]");
  return {as_double(j[0], child(ptr, 0)), as_double(j[1], child(ptr, 1))};
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

CPoly as_cpoly(const json& j, const std::string& ptr) {
  as_array(j, ptr);
  std::vector<Complex> a;
  for (std::size_t i = 0; i < j.size(); ++i) a.push_back(as_complex(j[i], child(ptr, i)));
  return CPoly(std::move(a));
}

json to_json(const CPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Bivariate as_bivariate(const json& j, const std::string& ptr) {
  as_array(j, ptr);
  Bivariate b;
  for (std::size_t i = 0; i < j.size(); ++i) b.w_coeffs.push_back(as_cpoly(j[i], child(ptr, i)));
  return b;
}

Permutation as_permutation(const json& j, const std::string& ptr) {
  as_array(j, ptr);
  std::vector<std::uint32_t> images;
  for (std::size_t i = 0; i < j.size(); ++i)
    images.push_back(static_cast<std::uint32_t>(as_int(j[i], child(ptr, i), 0, 1L << 20)));
  try {
    return Permutation(std::move(images));
  } catch (const Error& e) {
    throw SchemaError(ptr, e.what());
  }
}

json to_json(const Permutation& p) { return {{"one_line", p.images()}, {"cycles", to_cycle_string(p)}}; }

Word as_word(const Alphabet& a, const json& j, const std::string& ptr) {
  const std::string text = as_string(j, ptr);
  try {
    return parse_word(a, text);
  } catch (const Error& e) {
    throw SchemaError(ptr, e.what());
  }
}

}  // namespace covext::wire

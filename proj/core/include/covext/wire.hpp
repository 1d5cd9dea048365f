#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "covext/cpoly.hpp"
#include "covext/perm.hpp"
#include "covext/slice.hpp"
#include "covext/word.hpp"

namespace covext::wire {

using json = nlohmann::json;

/// JSON pointer of `key` below `parent`, with ~ and / escaped.
std::string child(const std::string& parent, const std::string& key);
std::string child(const std::string& parent, std::size_t index);

/// The following readers throw SchemaError carrying `ptr` on malformed input.
const json& member(const json& obj, const std::string& key, const std::string& ptr);
const json* optional_member(const json& obj, const std::string& key, const std::string& ptr);
/// Rejects keys outside `allowed`.
void allow_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& ptr);

std::string as_string(const json& j, const std::string& ptr);
bool as_bool(const json& j, const std::string& ptr);
double as_double(const json& j, const std::string& ptr);
long as_int(const json& j, const std::string& ptr, long lo, long hi);
const json& as_array(const json& j, const std::string& ptr);
const json& as_object(const json& j, const std::string& ptr);

/// [re, im] or a bare real number.
Complex as_complex(const json& j, const std::string& ptr);
json to_json(Complex z);

/// Coefficient list, constant term first.
CPoly as_cpoly(const json& j, const std::string& ptr);
json to_json(const CPoly& p);

/// One z-polynomial per power of w.
Bivariate as_bivariate(const json& j, const std::string& ptr);

/// One-line notation, 0-based.
Permutation as_permutation(const json& j, const std::string& ptr);
/// {"one_line": [...], "cycles": "(1 2)(3)"}.
json to_json(const Permutation& p);

Word as_word(const Alphabet& a, const json& j, const std::string& ptr);

}  // namespace covext::wire

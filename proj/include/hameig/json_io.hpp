#pragma once

#include <string>

#include "json.hpp"

#include "hameig/constructions.hpp"
#include "hameig/oracle.hpp"
#include "hameig/vertex_function.hpp"

namespace hameig {

/// ordered_json keeps insertion order, so every serializer below emits keys
/// in a fixed order and dumps are byte-stable across runs.
using json = nlohmann::ordered_json;

/// Function file format: {"n": 2, "q": 3, "values": ["0", "-1", ...]} with
/// q^n values in vertex-index order. Values are exact rational strings;
/// integer JSON numbers are accepted on input.
json function_to_json(const VertexFunction& f);
VertexFunction function_from_json(const json& j);
VertexFunction load_function(const std::string& path);
void save_function(const VertexFunction& f, const std::string& path);

/// {"form":"zero"} | {"form":"single_layer","i":..,"k":..,"c":"1"} |
/// {"form":"dual_layer","i":..,"k":..,"j":..,"m":..,"c":"1"}.
json form_to_json(const CanonicalForm& form);
CanonicalForm form_from_json(const json& j);

json report_to_json(const SearchReport& report);
SearchReport report_from_json(const json& j);

json lemma3_to_json(const Lemma3Report& report);

/// dump(2) plus a trailing newline; the byte-stable rendering used for every
/// file this library writes.
std::string render_json(const json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hameig

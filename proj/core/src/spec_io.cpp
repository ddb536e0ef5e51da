/**
 * This code is part of kpmap.
 *
 * (C) Copyright kpmap developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Any modifications or derivative works of this code must retain this
 * copyright notice, and modified files need to carry a notice indicating
 * that they have been altered from the originals.
 */

#include "kpmap/spec_io.hpp"

#include "json_support.hpp"

namespace kpmap {

namespace {

using nlohmann::json;

json parse_document(const std::string &text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw MalformedSpec("document is not valid JSON");
  return doc;
}

Index index_field(const json &doc, const std::string &field) {
  if (!doc.contains(field) || !doc[field].is_number_integer())
    throw MalformedSpec("missing or non-integer field \"" + field + "\"");
  const auto value = doc[field].get<long long>();
  if (value < 1)
    throw MalformedSpec("field \"" + field + "\" must be >= 1");
  return static_cast<Index>(value);
}

} // namespace

namespace detail {

MapSpec map_spec_from_json(const json &doc) {
  if (!doc.is_object())
    throw MalformedSpec("map document must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw MalformedSpec("missing or non-string field \"kind\"");
  const std::string kind = doc["kind"].get<std::string>();

  MapSpec spec;
  spec.n = index_field(doc, "n");
  spec.m = doc.contains("m") ? index_field(doc, "m") : spec.n;

  if (kind == "zoo") {
    spec.kind = MapSpecKind::zoo;
    if (spec.m != spec.n)
      throw MalformedSpec("zoo maps act on square algebras: need m == n");
    if (!doc.contains("zoo") || !doc["zoo"].is_string())
      throw MalformedSpec("zoo spec: missing or non-string field \"zoo\"");
    spec.zoo_name = doc["zoo"].get<std::string>();
    if (doc.contains("params")) {
      if (!doc["params"].is_array())
        throw MalformedSpec("zoo spec: \"params\" must be an array of numbers");
      for (const json &p : doc["params"]) {
        if (!p.is_number())
          throw MalformedSpec("zoo spec: \"params\" must be an array of numbers");
        spec.params.push_back(p.get<double>());
      }
    }
    return spec;
  }
  if (kind == "choi2-explicit") {
    spec.kind = MapSpecKind::choi2_explicit;
    if (!doc.contains("choi2"))
      throw MalformedSpec("choi2-explicit spec: missing field \"choi2\"");
    spec.choi2 =
        matrix_from_json(doc["choi2"], spec.n * spec.m, spec.n * spec.m, "choi2");
    return spec;
  }
  if (kind == "kraus") {
    spec.kind = MapSpecKind::kraus;
    if (!doc.contains("kraus") || !doc["kraus"].is_array() || doc["kraus"].empty())
      throw MalformedSpec("kraus spec: missing or empty field \"kraus\"");
    for (const json &op : doc["kraus"])
      spec.kraus.push_back(matrix_from_json(op, spec.m, spec.n, "kraus"));
    return spec;
  }
  throw MalformedSpec("unknown kind \"" + kind +
                      "\" (expected choi2-explicit, kraus, or zoo)");
}

json map_spec_to_json(const MapSpec &spec) {
  json doc;
  doc["n"] = spec.n;
  doc["m"] = spec.m;
  switch (spec.kind) {
  case MapSpecKind::zoo:
    doc["kind"] = "zoo";
    doc["zoo"] = spec.zoo_name;
    doc["params"] = spec.params;
    break;
  case MapSpecKind::choi2_explicit:
    doc["kind"] = "choi2-explicit";
    doc["choi2"] = matrix_to_json(spec.choi2);
    break;
  case MapSpecKind::kraus: {
    doc["kind"] = "kraus";
    json ops = json::array();
    for (const CMatrix &k : spec.kraus)
      ops.push_back(matrix_to_json(k));
    doc["kraus"] = ops;
    break;
  }
  }
  return doc;
}

} // namespace detail

MapSpec parse_map_spec(const std::string &text) {
  return detail::map_spec_from_json(parse_document(text));
}

std::string serialize_map_spec(const MapSpec &spec) {
  return detail::map_spec_to_json(spec).dump();
}

CVector parse_vector_doc(const std::string &text) {
  const json doc = parse_document(text);
  if (!doc.is_array())
    throw MalformedSpec("vector document must be a JSON array of [re, im] "
                        "pairs");
  return detail::vector_from_json(doc);
}

std::string serialize_vector_doc(const CVector &v) {
  return detail::vector_to_json(v).dump();
}

} // namespace kpmap

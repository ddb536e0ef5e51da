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

// Internal json <-> domain-type helpers shared by the serialization units.
// Not installed.

#ifndef KPMAP_SRC_JSON_SUPPORT_HPP
#define KPMAP_SRC_JSON_SUPPORT_HPP

#include <json.hpp>

#include "kpmap/maps.hpp"

namespace kpmap::detail {

using nlohmann::json;

inline json complex_to_json(const Complex &z) {
  return json::array({z.real(), z.imag()});
}

inline Complex complex_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw MalformedSpec("expected a [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

inline json matrix_to_json(const CMatrix &a) {
  json entries = json::array();
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      entries.push_back(complex_to_json(a(i, j)));
  return entries;
}

inline CMatrix matrix_from_json(const json &j, Index rows, Index cols,
                                const std::string &field) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows * cols)
    throw MalformedSpec("field \"" + field + "\" must be a row-major array of " +
                        std::to_string(rows * cols) + " [re, im] pairs");
  CMatrix a(rows, cols);
  Index idx = 0;
  for (Index i = 0; i < rows; ++i)
    for (Index c = 0; c < cols; ++c)
      a(i, c) = complex_from_json(j[idx++]);
  return a;
}

inline json vector_to_json(const CVector &v) {
  json entries = json::array();
  for (Index i = 0; i < v.size(); ++i)
    entries.push_back(complex_to_json(v(i)));
  return entries;
}

inline CVector vector_from_json(const json &j) {
  if (!j.is_array() || j.empty())
    throw MalformedSpec("expected a nonempty JSON array of [re, im] pairs");
  CVector v(j.size());
  Index idx = 0;
  for (const json &entry : j)
    v(idx++) = complex_from_json(entry);
  return v;
}

json map_spec_to_json(const MapSpec &spec);
MapSpec map_spec_from_json(const json &doc);

} // namespace kpmap::detail

#endif

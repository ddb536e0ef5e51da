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

#ifndef KPMAP_SPEC_IO_HPP
#define KPMAP_SPEC_IO_HPP

#include <string>

#include "kpmap/maps.hpp"

namespace kpmap {

// Map documents are JSON with fields `kind` ("choi2-explicit" | "kraus" |
// "zoo"), `n`, `m`, and the matching payload: `choi2` as a row-major array
// of [re, im] pairs, `kraus` as a list of such matrices (each m x n,
// row-major), or `zoo` + `params`. Parsing failures raise MalformedSpec.
MapSpec parse_map_spec(const std::string &text);
std::string serialize_map_spec(const MapSpec &spec);

// Vector documents are a bare JSON array of [re, im] pairs.
CVector parse_vector_doc(const std::string &text);
std::string serialize_vector_doc(const CVector &v);

} // namespace kpmap

#endif

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

#ifndef KPMAP_REPORT_HPP
#define KPMAP_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kpmap/maps.hpp"
#include "kpmap/positivity.hpp"

namespace kpmap {

struct AnalyzeOptions {
  std::vector<Index> k_list; // empty: 1 .. min(n,m)
  Tolerance tol = Tolerance();
  SearchBudget budget;
  Index max_dim = 64; // cap on n*m
};

// Full analysis of one map: hermiticity, Choi spectrum, complete
// positivity, and the requested k-positivity queries.
struct AnalysisReport {
  MapSpec map;
  Index n = 0;
  Index m = 0;
  double tol_abs = 0.0;
  double tol_rel = 0.0;
  std::uint64_t seed = 0;
  int restarts = 0;
  int max_iterations = 0;

  double hermiticity_defect = 0.0;
  bool hermiticity_preserving = false;
  std::vector<double> choi_spectrum;          // descending; empty if not HP
  std::optional<PositivityVerdict> cp;        // absent if not HP
  std::vector<PositivityVerdict> k_verdicts;  // ascending k; empty if not HP

  // Wall-clock stage timings. Kept out of the machine-readable form so
  // identical seeded runs serialize byte-identically.
  std::vector<std::pair<std::string, double>> timings_ms;
};

AnalysisReport run_analysis(const MapSpec &spec, const AnalyzeOptions &opts);

// Machine-readable form; parses back losslessly (timings excluded).
std::string report_to_json(const AnalysisReport &report);
AnalysisReport report_from_json(const std::string &text);

// Human-readable form, timings included.
std::string report_to_text(const AnalysisReport &report);

} // namespace kpmap

#endif

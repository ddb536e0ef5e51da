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

#include "kpmap/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "json_support.hpp"
#include "kpmap/jamiolkowski.hpp"

namespace kpmap {

namespace {

using nlohmann::json;

constexpr const char *kReportFormat = "kpmap-report-v1";

std::string status_name(PositivityStatus status) {
  switch (status) {
  case PositivityStatus::positive:
    return "positive";
  case PositivityStatus::violated:
    return "violated";
  case PositivityStatus::inconclusive:
    return "inconclusive";
  }
  return "inconclusive";
}

PositivityStatus status_from_name(const std::string &name) {
  if (name == "positive")
    return PositivityStatus::positive;
  if (name == "violated")
    return PositivityStatus::violated;
  if (name == "inconclusive")
    return PositivityStatus::inconclusive;
  throw MalformedSpec("unknown verdict status \"" + name + "\"");
}

json verdict_to_json(const PositivityVerdict &v) {
  json j;
  j["query_k"] = v.query_k ? json(*v.query_k) : json("complete");
  j["status"] = status_name(v.status);
  j["best_value"] = v.best_value;
  if (v.certificate) {
    json cert;
    cert["schmidt_rank"] = v.certificate->schmidt_rank;
    cert["value"] = v.certificate->value;
    cert["vector"] = detail::vector_to_json(v.certificate->vector);
    j["certificate"] = cert;
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

PositivityVerdict verdict_from_json(const json &j) {
  PositivityVerdict v;
  if (j.at("query_k").is_string())
    v.query_k = std::nullopt;
  else
    v.query_k = j.at("query_k").get<Index>();
  v.status = status_from_name(j.at("status").get<std::string>());
  v.best_value = j.at("best_value").get<double>();
  if (j.contains("certificate") && !j.at("certificate").is_null()) {
    ViolationCertificate cert;
    const json &c = j.at("certificate");
    cert.schmidt_rank = c.at("schmidt_rank").get<Index>();
    cert.value = c.at("value").get<double>();
    cert.vector = detail::vector_from_json(c.at("vector"));
    v.certificate = cert;
  }
  return v;
}

class StageClock {
public:
  explicit StageClock(std::vector<std::pair<std::string, double>> &sink)
      : sink_(sink), last_(std::chrono::steady_clock::now()) {}

  void mark(const std::string &stage) {
    const auto now = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(now - last_).count();
    sink_.emplace_back(stage, ms);
    last_ = now;
  }

private:
  std::vector<std::pair<std::string, double>> &sink_;
  std::chrono::steady_clock::time_point last_;
};

} // namespace

AnalysisReport run_analysis(const MapSpec &spec, const AnalyzeOptions &opts) {
  AnalysisReport report;
  report.map = spec;
  report.tol_abs = opts.tol.abs_eps();
  report.tol_rel = opts.tol.rel_eps();
  report.seed = opts.budget.seed;
  report.restarts = opts.budget.restarts;
  report.max_iterations = opts.budget.max_iterations;

  StageClock clock(report.timings_ms);
  const LinearMap t = from_spec(spec);
  clock.mark("build");

  report.n = t.dim_in();
  report.m = t.dim_out();
  if (report.n * report.m > opts.max_dim)
    throw DimensionTooLarge("analyze: n*m = " +
                            std::to_string(report.n * report.m) +
                            " exceeds the cap " + std::to_string(opts.max_dim));

  report.hermiticity_defect = hermiticity_defect(t);
  report.hermiticity_preserving =
      report.hermiticity_defect <= opts.tol.abs_eps();
  clock.mark("hermiticity");
  if (!report.hermiticity_preserving)
    return report; // positivity queries are rejected for non-HP maps

  const HermitianEig eig = hermitian_eig(t.choi2(), opts.tol);
  report.choi_spectrum.assign(eig.eigenvalues.data(),
                              eig.eigenvalues.data() + eig.eigenvalues.size());
  clock.mark("spectrum");

  report.cp = is_completely_positive(t, opts.tol);
  clock.mark("cp");

  std::vector<Index> ks = opts.k_list;
  if (ks.empty())
    for (Index k = 1; k <= std::min(report.n, report.m); ++k)
      ks.push_back(k);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (Index k : ks) {
    if (k < 1)
      throw BadRank("analyze: k values must be >= 1");
    report.k_verdicts.push_back(is_k_positive(t, k, opts.tol, opts.budget));
    clock.mark("k=" + std::to_string(k));
  }
  return report;
}

std::string report_to_json(const AnalysisReport &report) {
  json doc;
  doc["format"] = kReportFormat;
  doc["map"] = detail::map_spec_to_json(report.map);
  doc["n"] = report.n;
  doc["m"] = report.m;
  doc["tol"] = {{"abs", report.tol_abs}, {"rel", report.tol_rel}};
  doc["search"] = {{"seed", report.seed},
                   {"restarts", report.restarts},
                   {"max_iterations", report.max_iterations}};
  doc["hermiticity"] = {{"defect", report.hermiticity_defect},
                        {"preserving", report.hermiticity_preserving}};
  doc["choi_spectrum"] = report.choi_spectrum;
  doc["cp"] = report.cp ? verdict_to_json(*report.cp) : json(nullptr);
  json ks = json::array();
  for (const PositivityVerdict &v : report.k_verdicts)
    ks.push_back(verdict_to_json(v));
  doc["k_verdicts"] = ks;
  return doc.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string &text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw MalformedSpec("report document is not valid JSON");
  if (!doc.contains("format") || doc["format"] != kReportFormat)
    throw MalformedSpec("report document has an unknown format tag");

  AnalysisReport report;
  report.map = detail::map_spec_from_json(doc.at("map"));
  report.n = doc.at("n").get<Index>();
  report.m = doc.at("m").get<Index>();
  report.tol_abs = doc.at("tol").at("abs").get<double>();
  report.tol_rel = doc.at("tol").at("rel").get<double>();
  report.seed = doc.at("search").at("seed").get<std::uint64_t>();
  report.restarts = doc.at("search").at("restarts").get<int>();
  report.max_iterations = doc.at("search").at("max_iterations").get<int>();
  report.hermiticity_defect = doc.at("hermiticity").at("defect").get<double>();
  report.hermiticity_preserving =
      doc.at("hermiticity").at("preserving").get<bool>();
  report.choi_spectrum =
      doc.at("choi_spectrum").get<std::vector<double>>();
  if (!doc.at("cp").is_null())
    report.cp = verdict_from_json(doc.at("cp"));
  for (const json &v : doc.at("k_verdicts"))
    report.k_verdicts.push_back(verdict_from_json(v));
  return report;
}

std::string report_to_text(const AnalysisReport &report) {
  std::ostringstream os;
  os << std::setprecision(12);

  os << "map: ";
  switch (report.map.kind) {
  case MapSpecKind::zoo: {
    os << "zoo \"" << report.map.zoo_name << "\"";
    if (!report.map.params.empty()) {
      os << " params";
      for (double p : report.map.params)
        os << " " << p;
    }
    break;
  }
  case MapSpecKind::choi2_explicit:
    os << "explicit Choi matrix";
    break;
  case MapSpecKind::kraus:
    os << "kraus set with " << report.map.kraus.size() << " operator(s)";
    break;
  }
  os << "  (n=" << report.n << ", m=" << report.m << ")\n";

  os << "hermiticity-preserving: "
     << (report.hermiticity_preserving ? "yes" : "no") << "  (defect "
     << report.hermiticity_defect << ")\n";
  if (!report.hermiticity_preserving) {
    os << "positivity queries skipped: the quadratic form of a "
          "non-hermiticity-preserving map is not real\n";
    return os.str();
  }

  os << "choi spectrum:";
  for (double v : report.choi_spectrum)
    os << " " << v;
  os << "\n";

  auto print_verdict = [&os](const PositivityVerdict &v) {
    os << status_name(v.status) << "  (best value " << v.best_value;
    if (v.certificate)
      os << ", certificate schmidt rank " << v.certificate->schmidt_rank;
    os << ")\n";
  };

  os << "complete positivity: ";
  print_verdict(*report.cp);
  for (const PositivityVerdict &v : report.k_verdicts) {
    os << "k=" << *v.query_k << ": ";
    print_verdict(v);
  }

  if (!report.timings_ms.empty()) {
    os << "timings [ms]:";
    bool first = true;
    for (const auto &[stage, ms] : report.timings_ms) {
      os << (first ? " " : ", ") << stage << " " << std::setprecision(4) << ms
         << std::setprecision(12);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

} // namespace kpmap

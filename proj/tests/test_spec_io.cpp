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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kpmap/report.hpp"
#include "kpmap/rng.hpp"
#include "kpmap/spec_io.hpp"
#include "test_support.hpp"

using namespace kpmap;
using namespace kpmap::testing;

TEST_CASE("map specs: zoo document roundtrip") {
  const MapSpec spec = zoo("depolarizing", 3, {0.25});
  const std::string text = serialize_map_spec(spec);
  const MapSpec back = parse_map_spec(text);
  CHECK(back.kind == MapSpecKind::zoo);
  CHECK(back.n == 3);
  CHECK(back.m == 3);
  CHECK(back.zoo_name == "depolarizing");
  REQUIRE(back.params.size() == 1);
  CHECK(back.params[0] == 0.25);
  CHECK(serialize_map_spec(back) == text);
}

TEST_CASE("map specs: explicit Choi document roundtrip is lossless") {
  Rng rng(14);
  MapSpec spec;
  spec.kind = MapSpecKind::choi2_explicit;
  spec.n = 2;
  spec.m = 3;
  spec.choi2 = random_gaussian(6, 6, rng);
  const MapSpec back = parse_map_spec(serialize_map_spec(spec));
  CHECK(back.kind == MapSpecKind::choi2_explicit);
  // Bit-exact double roundtrip through the text form.
  CHECK((back.choi2 - spec.choi2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("map specs: kraus document roundtrip is lossless") {
  Rng rng(15);
  MapSpec spec;
  spec.kind = MapSpecKind::kraus;
  spec.n = 3;
  spec.m = 2;
  spec.kraus.push_back(random_gaussian(2, 3, rng));
  spec.kraus.push_back(random_gaussian(2, 3, rng));
  const MapSpec back = parse_map_spec(serialize_map_spec(spec));
  REQUIRE(back.kraus.size() == 2);
  for (int i = 0; i < 2; ++i)
    CHECK((back.kraus[i] - spec.kraus[i]).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("map specs: malformed documents are rejected") {
  CHECK_THROWS_AS(parse_map_spec("not json at all"), MalformedSpec);
  CHECK_THROWS_AS(parse_map_spec("[1,2,3]"), MalformedSpec);
  CHECK_THROWS_AS(parse_map_spec(R"({"n":2,"m":2})"), MalformedSpec);
  CHECK_THROWS_AS(parse_map_spec(R"({"kind":"soup","n":2,"m":2})"),
                  MalformedSpec);
  CHECK_THROWS_AS(parse_map_spec(R"({"kind":"zoo","n":2,"m":3,"zoo":"identity"})"),
                  MalformedSpec);
  CHECK_THROWS_AS(parse_map_spec(R"({"kind":"zoo","n":0,"zoo":"identity"})"),
                  MalformedSpec);
  CHECK_THROWS_AS(parse_map_spec(R"({"kind":"kraus","n":2,"m":2,"kraus":[]})"),
                  MalformedSpec);
  CHECK_THROWS_AS(
      parse_map_spec(R"({"kind":"choi2-explicit","n":2,"m":2,"choi2":[[1,0]]})"),
      MalformedSpec);
  CHECK_THROWS_AS(
      parse_map_spec(
          R"({"kind":"zoo","n":2,"zoo":"identity","params":["x"]})"),
      MalformedSpec);
}

TEST_CASE("vector documents: roundtrip and rejection") {
  Rng rng(16);
  CVector v(5);
  for (Index i = 0; i < 5; ++i)
    v(i) = rng.complex_normal();
  const CVector back = parse_vector_doc(serialize_vector_doc(v));
  CHECK((back - v).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(parse_vector_doc("{}"), MalformedSpec);
  CHECK_THROWS_AS(parse_vector_doc("[]"), MalformedSpec);
  CHECK_THROWS_AS(parse_vector_doc("[[1,0],[2]]"), MalformedSpec);
}

TEST_CASE("run_analysis: transposition end to end") {
  AnalyzeOptions opts;
  opts.k_list = {1, 2};
  const AnalysisReport report = run_analysis(zoo("transposition", 2), opts);

  CHECK(report.n == 2);
  CHECK(report.m == 2);
  CHECK(report.hermiticity_preserving);
  REQUIRE(report.choi_spectrum.size() == 4);
  CHECK(report.choi_spectrum[0] == doctest::Approx(1.0));
  CHECK(report.choi_spectrum[3] == doctest::Approx(-1.0));
  REQUIRE(report.cp.has_value());
  CHECK(report.cp->status == PositivityStatus::violated);
  REQUIRE(report.k_verdicts.size() == 2);
  CHECK(report.k_verdicts[0].query_k == 1);
  CHECK(report.k_verdicts[0].status != PositivityStatus::violated);
  CHECK(report.k_verdicts[1].query_k == 2);
  CHECK(report.k_verdicts[1].status == PositivityStatus::violated);
  CHECK_FALSE(report.timings_ms.empty());
}

TEST_CASE("run_analysis: defaults cover the full k range") {
  const AnalysisReport report = run_analysis(zoo("identity", 3), AnalyzeOptions{});
  REQUIRE(report.k_verdicts.size() == 3);
  for (const PositivityVerdict &v : report.k_verdicts)
    CHECK(v.status == PositivityStatus::positive);
  CHECK(report.cp->status == PositivityStatus::positive);
}

TEST_CASE("run_analysis: non-hermiticity-preserving maps short-circuit") {
  MapSpec spec;
  spec.kind = MapSpecKind::choi2_explicit;
  spec.n = 2;
  spec.m = 2;
  spec.choi2 = CMatrix::Zero(4, 4);
  spec.choi2(0, 1) = 1.0; // not Hermitian
  const AnalysisReport report = run_analysis(spec, AnalyzeOptions{});
  CHECK_FALSE(report.hermiticity_preserving);
  CHECK(report.hermiticity_defect > 0.1);
  CHECK(report.choi_spectrum.empty());
  CHECK_FALSE(report.cp.has_value());
  CHECK(report.k_verdicts.empty());
}

TEST_CASE("run_analysis: dimension cap and bad k") {
  CHECK_THROWS_AS(run_analysis(zoo("identity", 9), AnalyzeOptions{}),
                  DimensionTooLarge);
  AnalyzeOptions opts;
  opts.k_list = {0};
  CHECK_THROWS_AS(run_analysis(zoo("identity", 2), opts), BadRank);
}

TEST_CASE("report json: lossless roundtrip, timings excluded") {
  AnalyzeOptions opts;
  opts.k_list = {1, 2};
  opts.budget.seed = 7;
  const AnalysisReport report = run_analysis(zoo("transposition", 2), opts);

  const std::string text = report_to_json(report);
  const AnalysisReport back = report_from_json(text);
  CHECK(report_to_json(back) == text);

  CHECK(back.n == report.n);
  CHECK(back.seed == 7);
  CHECK(back.hermiticity_preserving == report.hermiticity_preserving);
  REQUIRE(back.cp.has_value());
  CHECK(back.cp->status == report.cp->status);
  CHECK(back.cp->best_value == report.cp->best_value);
  REQUIRE(back.cp->certificate.has_value());
  CHECK((back.cp->certificate->vector - report.cp->certificate->vector)
            .cwiseAbs()
            .maxCoeff() == 0.0);
  REQUIRE(back.k_verdicts.size() == 2);
  CHECK(back.k_verdicts[0].best_value == report.k_verdicts[0].best_value);
  CHECK(back.timings_ms.empty());

  CHECK_THROWS_AS(report_from_json("{\"format\":\"other\"}"), MalformedSpec);
}

TEST_CASE("report text: human-readable summary lines") {
  AnalyzeOptions opts;
  opts.k_list = {1, 2};
  const AnalysisReport report = run_analysis(zoo("transposition", 2), opts);
  const std::string text = report_to_text(report);
  CHECK(text.find("zoo \"transposition\"") != std::string::npos);
  CHECK(text.find("hermiticity-preserving: yes") != std::string::npos);
  CHECK(text.find("complete positivity: violated") != std::string::npos);
  CHECK(text.find("k=1: ") != std::string::npos);
  CHECK(text.find("k=2: violated") != std::string::npos);
  CHECK(text.find("timings") != std::string::npos);
}

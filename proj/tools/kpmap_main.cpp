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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kpmap/report.hpp"
#include "kpmap/schmidt.hpp"
#include "kpmap/spec_io.hpp"

namespace {

// Exit codes: 0 success, 2 violated complete positivity under
// --fail-on-violation, 3 malformed or invalid input, 4 dimension cap.
constexpr int kExitViolation = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitTooLarge = 4;

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw kpmap::MalformedSpec("cannot open input file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string &path, const std::string &text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw kpmap::Error("cannot open output file \"" + path + "\"");
  out << text;
}

struct AnalyzeArgs {
  std::string input;
  std::vector<long long> k_list;
  double tol = 1e-10;
  int restarts = 64;
  int max_iterations = 500;
  std::uint64_t seed = 42;
  long long max_dim = 64;
  std::string format = "text";
  std::string output;
  bool fail_on_violation = false;
};

int run_analyze(const AnalyzeArgs &args) {
  const kpmap::MapSpec spec = kpmap::parse_map_spec(read_file(args.input));

  kpmap::AnalyzeOptions opts;
  for (long long k : args.k_list)
    opts.k_list.push_back(static_cast<kpmap::Index>(k));
  opts.tol = kpmap::Tolerance(args.tol, args.tol);
  opts.budget.restarts = args.restarts;
  opts.budget.max_iterations = args.max_iterations;
  opts.budget.seed = args.seed;
  opts.max_dim = static_cast<kpmap::Index>(args.max_dim);

  const kpmap::AnalysisReport report = kpmap::run_analysis(spec, opts);
  write_output(args.output, args.format == "json"
                                ? kpmap::report_to_json(report)
                                : kpmap::report_to_text(report));

  const bool cp_violated =
      report.cp && report.cp->status == kpmap::PositivityStatus::violated;
  if (args.fail_on_violation && cp_violated)
    return kExitViolation;
  return 0;
}

struct SchmidtArgs {
  std::string input;
  long long n = 0;
  long long m = 0;
  double tol = 1e-10;
};

int run_schmidt(const SchmidtArgs &args) {
  const kpmap::CVector v = kpmap::parse_vector_doc(read_file(args.input));
  const kpmap::Tolerance tol(args.tol, args.tol);
  const kpmap::SchmidtForm form = kpmap::schmidt_decompose(
      v, static_cast<kpmap::Index>(args.n), static_cast<kpmap::Index>(args.m),
      tol);

  std::cout.precision(12);
  std::cout << "schmidt rank: " << form.s << "\n";
  std::cout << "coefficients:";
  for (kpmap::Index p = 0; p < form.s; ++p)
    std::cout << " " << form.coefficients(p);
  std::cout << "\n";
  const double residual = (v - form.reconstruct()).norm() / v.norm();
  std::cout << "relative reconstruction residual: " << residual << "\n";
  return 0;
}

struct ZooEmitArgs {
  std::string name;
  long long n = 0;
  std::vector<double> params;
  std::string output;
};

int run_zoo_list() {
  for (const kpmap::ZooEntry &entry : kpmap::zoo_catalog())
    std::cout << entry.name << ": " << entry.description << "\n";
  return 0;
}

int run_zoo_emit(const ZooEmitArgs &args) {
  const kpmap::MapSpec spec =
      kpmap::zoo(args.name, static_cast<kpmap::Index>(args.n), args.params);
  write_output(args.output, kpmap::serialize_map_spec(spec) + "\n");
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"kpmap: positivity, k-positivity and complete-positivity "
               "analysis of linear maps between matrix algebras"};
  app.set_version_flag("--version", "kpmap 0.1.0");
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App *analyze = app.add_subcommand(
      "analyze", "Analyze a map document: hermiticity, Choi spectrum, "
                 "complete positivity and k-positivity");
  analyze->add_option("file", analyze_args.input, "map document (JSON)")
      ->required();
  analyze->add_option("--k", analyze_args.k_list,
                      "k values to query (default 1..min(n,m))")
      ->delimiter(',');
  analyze->add_option("--tol", analyze_args.tol, "tolerance")->capture_default_str();
  analyze->add_option("--restarts", analyze_args.restarts,
                      "search restarts per k query")->capture_default_str();
  analyze->add_option("--max-iterations", analyze_args.max_iterations,
                      "iterations per restart")->capture_default_str();
  analyze->add_option("--seed", analyze_args.seed, "master search seed")->capture_default_str();
  analyze->add_option("--max-dim", analyze_args.max_dim,
                      "cap on n*m")->capture_default_str();
  analyze->add_option("--format", analyze_args.format, "text or json")->capture_default_str()->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("-o,--output", analyze_args.output,
                      "write the report to a file instead of stdout");
  analyze->add_flag("--fail-on-violation", analyze_args.fail_on_violation,
                    "exit with code 2 when complete positivity is violated");

  SchmidtArgs schmidt_args;
  CLI::App *schmidt = app.add_subcommand(
      "schmidt", "Schmidt-decompose a bipartite vector document");
  schmidt->add_option("file", schmidt_args.input, "vector document (JSON)")
      ->required();
  schmidt->add_option("--n", schmidt_args.n, "first factor dimension")
      ->required();
  schmidt->add_option("--m", schmidt_args.m, "second factor dimension")
      ->required();
  schmidt->add_option("--tol", schmidt_args.tol, "tolerance")->capture_default_str();

  CLI::App *zoo = app.add_subcommand("zoo", "Standard map catalog");
  zoo->require_subcommand(1);
  CLI::App *zoo_list = zoo->add_subcommand("list", "List the catalog");
  ZooEmitArgs zoo_args;
  CLI::App *zoo_emit =
      zoo->add_subcommand("emit", "Write a catalog map as a map document");
  zoo_emit->add_option("name", zoo_args.name, "map name")->required();
  zoo_emit->add_option("n", zoo_args.n, "dimension")->required();
  zoo_emit->add_option("params", zoo_args.params, "map parameters");
  zoo_emit->add_option("-o,--output", zoo_args.output,
                       "write to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze)
      return run_analyze(analyze_args);
    if (*schmidt)
      return run_schmidt(schmidt_args);
    if (*zoo_list)
      return run_zoo_list();
    if (*zoo_emit)
      return run_zoo_emit(zoo_args);
  } catch (const kpmap::DimensionTooLarge &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const kpmap::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}

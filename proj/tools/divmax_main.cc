// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: gen | validate | solve | oracle | experiment | bench.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "divmax/experiment.h"
#include "divmax/geometry.h"
#include "divmax/instgen.h"
#include "divmax/io.h"
#include "divmax/model.h"
#include "divmax/solvers.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitOracleLimit = 3;

struct ValidationFailed {
  std::vector<divmax::Violation> violations;
};

// Loads and validates; throws ValidationFailed or SchemaError.
divmax::Instance LoadValid(const std::string& path,
                           std::optional<double> lambda) {
  divmax::Instance instance = divmax::LoadInstance(path);
  if (lambda) instance.lambda = *lambda;
  auto violations = divmax::ValidateInstance(instance);
  if (!violations.empty()) throw ValidationFailed{std::move(violations)};
  return instance;
}

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

divmax::Algorithm AlgorithmOrThrow(const std::string& name) {
  auto a = divmax::ParseAlgorithm(name);
  if (!a) throw CLI::ValidationError("--algorithm", "unknown algorithm " + name);
  return *a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustered max-sum diversification solvers"};
  app.require_subcommand(1);

  // gen
  divmax::GenSpec gen;
  std::string family = "random", out_path;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", family, "random|prototype|fig1|tight");
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--m", gen.m);
  gen_cmd->add_option("--b", gen.budget, "Uniform budget");
  gen_cmd->add_option("--budgets", gen.budgets, "Per-cluster budgets");
  gen_cmd->add_option("--dim", gen.dim);
  gen_cmd->add_option("--overlap", gen.overlap);
  gen_cmd->add_option("--spread", gen.spread);
  gen_cmd->add_option("--D,--separation", gen.separation);
  gen_cmd->add_option("--q", gen.q);
  gen_cmd->add_option("--eps", gen.eps);
  gen_cmd->add_option("--lambda", gen.lambda);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("-o,--output", out_path);

  // shared solver options
  std::string instance_path, algorithm = "gp", odd_policy, trace_path;
  std::optional<double> lambda;
  divmax::SolverConfig config;
  std::vector<int> cluster_order;
  double limit = divmax::ExactLimits{}.max_search_space;

  auto* validate_cmd = app.add_subcommand("validate", "Validate an instance");
  validate_cmd->add_option("--instance", instance_path)->required();

  auto* solve_cmd = app.add_subcommand("solve", "Run one solver");
  solve_cmd->add_option("--instance", instance_path)->required();
  solve_cmd->add_option("--algorithm", algorithm,
                        "gp|gpa|gelms|lsi|lsg|mc|rn|exact");
  solve_cmd->add_option("--alpha", config.alpha);
  solve_cmd->add_option("--lambda", lambda);
  solve_cmd->add_option("--epsilon", config.epsilon);
  solve_cmd->add_option("--seed", config.seed);
  solve_cmd->add_option("--odd-policy", odd_policy,
                        "alg1_arbitrary|roundup_remove");
  solve_cmd->add_flag("--enhanced", config.enhanced);
  solve_cmd->add_option("--cluster-order", cluster_order);
  solve_cmd->add_option("--trace", trace_path, "Write the trace here");
  solve_cmd->add_option("-o,--output", out_path);

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum");
  oracle_cmd->add_option("--instance", instance_path)->required();
  oracle_cmd->add_option("--lambda", lambda);
  oracle_cmd->add_option("--limit", limit, "Search-space limit");
  oracle_cmd->add_option("-o,--output", out_path);

  std::vector<std::string> algorithms;
  std::vector<double> alphas;
  std::string vary = "cluster_order", summary_path;
  int runs = 10, workers = 1;
  auto* exp_cmd = app.add_subcommand("experiment", "Repeated runs, CSV report");
  exp_cmd->add_option("--instance", instance_path)->required();
  exp_cmd->add_option("--algorithm", algorithms)->required();
  exp_cmd->add_option("--alpha", config.alpha);
  exp_cmd->add_option("--alphas", alphas, "Values for --vary alpha");
  exp_cmd->add_option("--lambda", lambda);
  exp_cmd->add_option("--epsilon", config.epsilon);
  exp_cmd->add_option("--seed", config.seed, "Base seed");
  exp_cmd->add_option("--runs", runs);
  exp_cmd->add_option("--vary", vary, "seed|cluster_order|alpha");
  exp_cmd->add_option("--odd-policy", odd_policy);
  exp_cmd->add_flag("--enhanced", config.enhanced);
  exp_cmd->add_option("--workers", workers);
  exp_cmd->add_option("-o,--output", out_path, "CSV report");
  exp_cmd->add_option("--summary", summary_path, "TSV summary");

  std::vector<int> sizes;
  int repeats = 3;
  auto* bench_cmd = app.add_subcommand("bench", "Runtime scaling");
  bench_cmd->add_option("--family", family);
  bench_cmd->add_option("--sizes", sizes)->required();
  bench_cmd->add_option("--m", gen.m);
  bench_cmd->add_option("--b", gen.budget);
  bench_cmd->add_option("--dim", gen.dim);
  bench_cmd->add_option("--overlap", gen.overlap);
  bench_cmd->add_option("--seed", gen.seed);
  bench_cmd->add_option("--algorithm", algorithm);
  bench_cmd->add_option("--alpha", config.alpha);
  bench_cmd->add_flag("--enhanced", config.enhanced);
  bench_cmd->add_option("--repeats", repeats);
  bench_cmd->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every usage error maps to the validation code.
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (!odd_policy.empty()) {
      config.odd_policy = divmax::ParseOddPolicy(odd_policy);
      if (!config.odd_policy) {
        throw CLI::ValidationError("--odd-policy", "unknown policy");
      }
    }

    if (*gen_cmd) {
      auto f = divmax::ParseFamily(family);
      if (!f) throw CLI::ValidationError("--family", "unknown family");
      gen.family = *f;
      Emit(out_path, divmax::CanonicalInstanceJson(divmax::Generate(gen)));
      return kExitOk;
    }

    if (*validate_cmd) {
      const divmax::Instance instance = divmax::LoadInstance(instance_path);
      const auto violations = divmax::ValidateInstance(instance);
      for (const auto& v : violations) {
        std::cout << v.location << ": " << v.message << "\n";
      }
      if (!violations.empty()) return kExitInvalid;
      std::cout << "valid\n";
      return kExitOk;
    }

    if (*solve_cmd) {
      const divmax::Instance instance = LoadValid(instance_path, lambda);
      const divmax::DistanceOracle oracle(instance);
      config.algorithm = AlgorithmOrThrow(algorithm);
      config.cluster_order = cluster_order;
      const divmax::SolveResult result =
          divmax::Solve(instance, oracle, config);
      divmax::SolutionFile file{result.solution, result.objective, {}};
      if (!trace_path.empty()) {
        file.trace_file = trace_path;
        Emit(trace_path, divmax::TraceToJson(result.trace).dump(2) + "\n");
      }
      Emit(out_path, divmax::SolutionToJson(file).dump(2) + "\n");
      return kExitOk;
    }

    if (*oracle_cmd) {
      const divmax::Instance instance = LoadValid(instance_path, lambda);
      const divmax::DistanceOracle oracle(instance);
      const divmax::ExactResult exact =
          divmax::SolveExact(instance, oracle, {limit});
      divmax::SolutionFile file{exact.solution, exact.objective, {}};
      Emit(out_path, divmax::SolutionToJson(file).dump(2) + "\n");
      return kExitOk;
    }

    if (*exp_cmd) {
      const divmax::Instance instance = LoadValid(instance_path, lambda);
      const divmax::DistanceOracle oracle(instance);
      divmax::ExperimentSpec spec;
      for (const std::string& name : algorithms) {
        divmax::SolverConfig c = config;
        c.algorithm = AlgorithmOrThrow(name);
        spec.algorithms.push_back({name, c, std::nullopt});
      }
      auto v = divmax::ParseVary(vary);
      if (!v) throw CLI::ValidationError("--vary", "unknown sweep " + vary);
      spec.vary = *v;
      spec.runs = runs;
      spec.alphas = alphas;
      spec.base_seed = config.seed;
      spec.workers = workers;
      const divmax::ExperimentReport report =
          divmax::RunExperiment(instance, oracle, spec);
      std::ostringstream csv;
      divmax::WriteReportCsv(report, csv);
      Emit(out_path, csv.str());
      const auto summary = divmax::Summarize(report);
      std::ostringstream tsv;
      divmax::WriteSummaryTsv(summary, tsv);
      if (!summary_path.empty()) {
        Emit(summary_path, tsv.str());
      } else if (!out_path.empty() && out_path != "-") {
        std::cout << tsv.str();
      }
      return kExitOk;
    }

    if (*bench_cmd) {
      auto f = divmax::ParseFamily(family);
      if (!f) throw CLI::ValidationError("--family", "unknown family");
      gen.family = *f;
      config.algorithm = AlgorithmOrThrow(algorithm);
      const auto rows = divmax::BenchScaling(gen, sizes, config, repeats);
      std::ostringstream tsv;
      tsv << "n\tseconds\tratio\n";
      for (const auto& r : rows) {
        tsv << r.n << '\t' << r.seconds << '\t' << r.ratio << "\n";
      }
      Emit(out_path, tsv.str());
      return kExitOk;
    }
  } catch (const ValidationFailed& e) {
    for (const auto& v : e.violations) {
      std::cerr << v.location << ": " << v.message << "\n";
    }
    return kExitInvalid;
  } catch (const divmax::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const divmax::OracleLimitExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitOracleLimit;
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

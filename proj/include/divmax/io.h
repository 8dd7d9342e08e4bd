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

// JSON file formats: instances, solutions and solve traces.
//
// Instance:
//   {"n": N, "feature_kind": "vector"|"set", "features": [...],
//    "clusters": [{"members": [...], "budget": B}, ...],
//    "partition": [cell ids] | null,
//    "metric": "euclidean"|"cosine"|"jaccard"|"matrix",
//    "distance_matrix": [[...]] | null,
//    "lambda": L, "quality": {...}}
// plus the optional "distance_labels": [label per element], which turns
// "distance_matrix" into a block table (see DistanceTable). "features" may
// be empty under the matrix metric. Set features are integer item ids.
//
// Quality: {"kind": "zero"} | {"kind": "modular", "weights": [...]} |
//          {"kind": "coverage", "covers": [[item ids], ...]}
//
// Solution: {"selected": [[ids], ...],
//            "objective": {"quality": Q, "dispersion": D, "combined": C},
//            "trace_file": optional path}

#ifndef DIVMAX_IO_H_
#define DIVMAX_IO_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "divmax/model.h"
#include "divmax/objective.h"
#include "divmax/solvers.h"

namespace divmax {

// Raised for malformed JSON or schema violations. what() names the field,
// e.g. "clusters[2].budget: missing".
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json InstanceToJson(const Instance& instance);
// Schema-level parsing only; semantic checks are ValidateInstance.
Instance InstanceFromJson(const nlohmann::json& json);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string CanonicalInstanceJson(const Instance& instance);
Instance ParseInstance(const std::string& text);

Instance LoadInstance(const std::filesystem::path& path);
void SaveInstance(const Instance& instance, const std::filesystem::path& path);

struct SolutionFile {
  Solution solution;
  std::optional<ObjectiveValue> objective;
  std::optional<std::string> trace_file;
};

nlohmann::json SolutionToJson(const SolutionFile& file);
SolutionFile SolutionFromJson(const nlohmann::json& json);
SolutionFile LoadSolution(const std::filesystem::path& path);
void SaveSolution(const SolutionFile& file, const std::filesystem::path& path);

nlohmann::json TraceToJson(const SolveTrace& trace);
SolveTrace TraceFromJson(const nlohmann::json& json);

}  // namespace divmax

#endif  // DIVMAX_IO_H_

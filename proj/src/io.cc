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

#include "divmax/io.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace divmax {

using nlohmann::json;

namespace {

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw SchemaError(where.empty() ? what : where + ": " + what);
}

const json& Field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) Fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    Fail(where, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

bool Present(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it != obj.end() && !it->is_null();
}

double Number(const json& j, const std::string& where) {
  if (!j.is_number()) Fail(where, "expected a number");
  return j.get<double>();
}

std::int64_t Integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) Fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

int SmallInt(const json& j, const std::string& where) {
  const std::int64_t v = Integer(j, where);
  if (v < INT32_MIN || v > INT32_MAX) Fail(where, "integer out of range");
  return static_cast<int>(v);
}

const json& Array(const json& j, const std::string& where) {
  if (!j.is_array()) Fail(where, "expected an array");
  return j;
}

std::string At(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

std::vector<int> IntList(const json& j, const std::string& where) {
  std::vector<int> out;
  const json& arr = Array(j, where);
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(SmallInt(arr[i], At(where, i)));
  }
  return out;
}

std::vector<std::int64_t> ItemList(const json& j, const std::string& where) {
  std::vector<std::int64_t> out;
  const json& arr = Array(j, where);
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(Integer(arr[i], At(where, i)));
  }
  return out;
}

std::vector<double> NumberList(const json& j, const std::string& where) {
  std::vector<double> out;
  const json& arr = Array(j, where);
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(Number(arr[i], At(where, i)));
  }
  return out;
}

std::string Text(const json& j, const std::string& where) {
  if (!j.is_string()) Fail(where, "expected a string");
  return j.get<std::string>();
}

Metric ParseMetric(const std::string& s) {
  for (Metric m :
       {Metric::kEuclidean, Metric::kCosine, Metric::kJaccard, Metric::kMatrix}) {
    if (s == MetricName(m)) return m;
  }
  Fail("metric", "unknown metric \"" + s + "\"");
}

json QualityToJson(const QualityFunction& q) {
  switch (q.kind()) {
    case QualityKind::kZero:
      return {{"kind", "zero"}};
    case QualityKind::kModular:
      return {{"kind", "modular"}, {"weights", q.weights()}};
    case QualityKind::kCoverage:
      return {{"kind", "coverage"}, {"covers", q.covers()}};
  }
  return nullptr;
}

QualityFunction QualityFromJson(const json& j) {
  const std::string kind = Text(Field(j, "kind", "quality"), "quality.kind");
  if (kind == "zero") return {};
  try {
    if (kind == "modular") {
      return QualityFunction::Modular(
          NumberList(Field(j, "weights", "quality"), "quality.weights"));
    }
    if (kind == "coverage") {
      const json& covers =
          Array(Field(j, "covers", "quality"), "quality.covers");
      std::vector<std::vector<std::int64_t>> out;
      for (std::size_t i = 0; i < covers.size(); ++i) {
        out.push_back(ItemList(covers[i], At("quality.covers", i)));
      }
      return QualityFunction::Coverage(std::move(out));
    }
  } catch (const std::invalid_argument& e) {
    Fail("quality", e.what());
  }
  Fail("quality.kind", "unknown quality kind \"" + kind + "\"");
}

json ParseText(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

json InstanceToJson(const Instance& instance) {
  json j;
  j["n"] = instance.n;
  j["feature_kind"] = FeatureKindName(instance.feature_kind);
  json features = json::array();
  if (instance.feature_kind == FeatureKind::kVector) {
    if (!instance.vectors.empty()) {
      for (int v = 0; v < instance.n; ++v) {
        const auto x = instance.vector(v);
        features.push_back(std::vector<double>(x.begin(), x.end()));
      }
    }
  } else {
    for (const auto& s : instance.sets) features.push_back(s);
  }
  j["features"] = std::move(features);
  json clusters = json::array();
  for (const Cluster& c : instance.clusters) {
    clusters.push_back({{"members", c.members}, {"budget", c.budget}});
  }
  j["clusters"] = std::move(clusters);
  j["partition"] = instance.cells.empty() ? json(nullptr) : json(instance.cells);
  j["metric"] = MetricName(instance.metric);
  if (instance.distances) {
    const DistanceTable& t = *instance.distances;
    json rows = json::array();
    for (int r = 0; r < t.size; ++r) {
      rows.push_back(std::vector<double>(t.values.begin() + r * t.size,
                                         t.values.begin() + (r + 1) * t.size));
    }
    j["distance_matrix"] = std::move(rows);
    if (!t.labels.empty()) j["distance_labels"] = t.labels;
  } else {
    j["distance_matrix"] = nullptr;
  }
  j["lambda"] = instance.lambda;
  j["quality"] = QualityToJson(instance.quality);
  return j;
}

Instance InstanceFromJson(const json& j) {
  if (!j.is_object()) Fail("", "instance must be a JSON object");
  Instance inst;
  inst.n = SmallInt(Field(j, "n", ""), "n");
  const std::string kind =
      Text(Field(j, "feature_kind", ""), "feature_kind");
  if (kind == "vector") {
    inst.feature_kind = FeatureKind::kVector;
  } else if (kind == "set") {
    inst.feature_kind = FeatureKind::kSet;
  } else {
    Fail("feature_kind", "unknown feature kind \"" + kind + "\"");
  }
  inst.metric = ParseMetric(Text(Field(j, "metric", ""), "metric"));

  const json& features = Array(Field(j, "features", ""), "features");
  if (inst.feature_kind == FeatureKind::kVector) {
    inst.dim = features.empty() ? 0 : -1;
    for (std::size_t i = 0; i < features.size(); ++i) {
      const std::vector<double> x =
          NumberList(features[i], At("features", i));
      if (inst.dim == -1) inst.dim = static_cast<int>(x.size());
      if (static_cast<int>(x.size()) != inst.dim) {
        Fail(At("features", i), "vector dimension differs from features[0]");
      }
      inst.vectors.insert(inst.vectors.end(), x.begin(), x.end());
    }
  } else {
    for (std::size_t i = 0; i < features.size(); ++i) {
      std::vector<std::int64_t> s = ItemList(features[i], At("features", i));
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      inst.sets.push_back(std::move(s));
    }
  }

  const json& clusters = Array(Field(j, "clusters", ""), "clusters");
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const std::string where = At("clusters", i);
    Cluster c;
    c.members = IntList(Field(clusters[i], "members", where), where + ".members");
    c.budget = SmallInt(Field(clusters[i], "budget", where), where + ".budget");
    inst.clusters.push_back(std::move(c));
  }

  if (Present(j, "partition")) inst.cells = IntList(j["partition"], "partition");

  if (Present(j, "distance_matrix")) {
    const json& rows = Array(j["distance_matrix"], "distance_matrix");
    DistanceTable t;
    t.size = static_cast<int>(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::vector<double> row =
          NumberList(rows[r], At("distance_matrix", r));
      if (row.size() != rows.size()) {
        Fail(At("distance_matrix", r), "matrix is not square");
      }
      t.values.insert(t.values.end(), row.begin(), row.end());
    }
    if (Present(j, "distance_labels")) {
      t.labels = IntList(j["distance_labels"], "distance_labels");
    }
    inst.distances = std::move(t);
  } else if (Present(j, "distance_labels")) {
    Fail("distance_labels", "labels without a distance matrix");
  }

  inst.lambda = Number(Field(j, "lambda", ""), "lambda");
  inst.quality = Present(j, "quality") ? QualityFromJson(j["quality"])
                                       : QualityFunction();
  return inst;
}

std::string CanonicalInstanceJson(const Instance& instance) {
  return InstanceToJson(instance).dump(2) + "\n";
}

Instance ParseInstance(const std::string& text) {
  return InstanceFromJson(ParseText(text));
}

Instance LoadInstance(const std::filesystem::path& path) {
  return ParseInstance(ReadFile(path));
}

void SaveInstance(const Instance& instance,
                  const std::filesystem::path& path) {
  WriteFile(path, CanonicalInstanceJson(instance));
}

json SolutionToJson(const SolutionFile& file) {
  json j;
  j["selected"] = file.solution.selected;
  if (file.objective) {
    j["objective"] = {{"quality", file.objective->quality},
                      {"dispersion", file.objective->dispersion},
                      {"combined", file.objective->combined}};
  }
  if (file.trace_file) j["trace_file"] = *file.trace_file;
  return j;
}

SolutionFile SolutionFromJson(const json& j) {
  SolutionFile file;
  const json& sel = Array(Field(j, "selected", ""), "selected");
  for (std::size_t i = 0; i < sel.size(); ++i) {
    file.solution.selected.push_back(IntList(sel[i], At("selected", i)));
  }
  if (Present(j, "objective")) {
    const json& o = j["objective"];
    ObjectiveValue v;
    v.quality = Number(Field(o, "quality", "objective"), "objective.quality");
    v.dispersion =
        Number(Field(o, "dispersion", "objective"), "objective.dispersion");
    v.combined = Number(Field(o, "combined", "objective"), "objective.combined");
    file.objective = v;
  }
  if (Present(j, "trace_file")) {
    file.trace_file = Text(j["trace_file"], "trace_file");
  }
  return file;
}

SolutionFile LoadSolution(const std::filesystem::path& path) {
  return SolutionFromJson(ParseText(ReadFile(path)));
}

void SaveSolution(const SolutionFile& file,
                  const std::filesystem::path& path) {
  WriteFile(path, SolutionToJson(file).dump(2) + "\n");
}

json TraceToJson(const SolveTrace& trace) {
  json events = json::array();
  for (const TraceEvent& e : trace.events) {
    events.push_back({{"kind", EventKindName(e.kind)},
                      {"iteration", e.iteration},
                      {"cluster", e.cluster},
                      {"first", e.first},
                      {"second", e.second},
                      {"gain", e.gain},
                      {"objective", e.objective}});
  }
  return {{"wall_seconds", trace.wall_seconds}, {"events", std::move(events)}};
}

SolveTrace TraceFromJson(const json& j) {
  SolveTrace trace;
  trace.wall_seconds =
      Number(Field(j, "wall_seconds", "trace"), "trace.wall_seconds");
  const json& events = Array(Field(j, "events", "trace"), "trace.events");
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string where = At("events", i);
    const json& e = events[i];
    TraceEvent ev;
    const std::string kind = Text(Field(e, "kind", where), where + ".kind");
    bool known = false;
    for (EventKind k : {EventKind::kAddPair, EventKind::kAddSingle,
                        EventKind::kRemove, EventKind::kSwap}) {
      if (kind == EventKindName(k)) {
        ev.kind = k;
        known = true;
      }
    }
    if (!known) Fail(where + ".kind", "unknown event kind \"" + kind + "\"");
    ev.iteration = SmallInt(Field(e, "iteration", where), where);
    ev.cluster = SmallInt(Field(e, "cluster", where), where);
    ev.first = SmallInt(Field(e, "first", where), where);
    ev.second = SmallInt(Field(e, "second", where), where);
    ev.gain = Number(Field(e, "gain", where), where);
    ev.objective = Number(Field(e, "objective", where), where);
    trace.events.push_back(ev);
  }
  return trace;
}

}  // namespace divmax

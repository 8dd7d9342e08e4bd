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

#include "divmax/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace divmax {

std::optional<Vary> ParseVary(std::string_view name) {
  if (name == "seed") return Vary::kSeed;
  if (name == "cluster_order" || name == "cluster-order" || name == "order") {
    return Vary::kClusterOrder;
  }
  if (name == "alpha") return Vary::kAlpha;
  return std::nullopt;
}

namespace {

Vary VaryOf(const ExperimentSpec& spec, const AlgorithmSpec& a) {
  return a.vary.value_or(spec.vary);
}

SolverConfig RowConfig(const Instance& instance, const ExperimentSpec& spec,
                       const AlgorithmSpec& a, int run) {
  SolverConfig config = a.config;
  config.seed = spec.base_seed + static_cast<std::uint64_t>(run);
  switch (VaryOf(spec, a)) {
    case Vary::kSeed:
      break;
    case Vary::kClusterOrder: {
      std::vector<ClusterId> order(instance.clusters.size());
      std::iota(order.begin(), order.end(), 0);
      std::mt19937_64 rng(config.seed);
      std::shuffle(order.begin(), order.end(), rng);
      config.cluster_order = std::move(order);
      break;
    }
    case Vary::kAlpha:
      config.alpha = spec.alphas[run % spec.alphas.size()];
      break;
  }
  return config;
}

}  // namespace

ExperimentReport RunExperiment(const Instance& instance,
                               const DistanceOracle& oracle,
                               const ExperimentSpec& spec) {
  if (spec.runs < 1) throw std::invalid_argument("runs must be at least 1");
  if (spec.alphas.empty()) {
    for (const AlgorithmSpec& a : spec.algorithms) {
      if (VaryOf(spec, a) == Vary::kAlpha) {
        throw std::invalid_argument("alpha sweep without alphas");
      }
    }
  }
  ExperimentReport report;
  for (const AlgorithmSpec& a : spec.algorithms) {
    for (int r = 0; r < spec.runs; ++r) {
      ReportRow row;
      row.algorithm = a.label;
      row.run = r;
      report.rows.push_back(row);
    }
  }

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < report.rows.size(); i = next++) {
      ReportRow& row = report.rows[i];
      const AlgorithmSpec& a = spec.algorithms[i / spec.runs];
      try {
        const SolverConfig config = RowConfig(instance, spec, a, row.run);
        row.seed = config.seed;
        const SolveResult result = Solve(instance, oracle, config);
        row.objective = result.objective;
        row.score = result.score;
        row.wall_seconds = result.trace.wall_seconds;
        for (const auto& s : result.solution.selected) {
          row.counts.push_back(static_cast<int>(s.size()));
        }
      } catch (const std::exception& e) {
        row.error = e.what();
        if (row.error.empty()) row.error = "error";
      }
    }
  };
  const int workers = std::max(1, spec.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  double best = -std::numeric_limits<double>::infinity();
  for (const ReportRow& row : report.rows) {
    if (row.error.empty()) best = std::max(best, row.score);
  }
  for (ReportRow& row : report.rows) {
    if (!row.error.empty()) continue;
    row.normalized = best > 0.0 ? row.score / best : 1.0;
  }
  return report;
}

std::vector<SummaryRow> Summarize(const ExperimentReport& report) {
  std::vector<SummaryRow> out;
  std::map<std::string, std::size_t> index;
  std::vector<int> ok;
  std::vector<double> selected;
  for (const ReportRow& row : report.rows) {
    auto [it, inserted] = index.try_emplace(row.algorithm, out.size());
    if (inserted) {
      SummaryRow s;
      s.algorithm = row.algorithm;
      s.min = std::numeric_limits<double>::infinity();
      s.max = -std::numeric_limits<double>::infinity();
      out.push_back(s);
      ok.push_back(0);
      selected.push_back(0.0);
    }
    const std::size_t k = it->second;
    SummaryRow& s = out[k];
    if (!row.error.empty()) {
      ++s.failures;
      continue;
    }
    s.min = std::min(s.min, row.normalized);
    s.max = std::max(s.max, row.normalized);
    s.avg += row.normalized;
    if (!row.counts.empty()) {
      selected[k] += std::accumulate(row.counts.begin(), row.counts.end(), 0.0) /
                     row.counts.size();
    }
    ++ok[k];
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (ok[k] == 0) {
      out[k].min = out[k].max = 0.0;
      continue;
    }
    out[k].avg /= ok[k];
    out[k].avg_selected = selected[k] / ok[k];
  }
  return out;
}

namespace {

std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

constexpr const char* kCsvHeader =
    "algorithm,run,seed,quality,dispersion,combined,score,normalized,"
    "wall_seconds,counts,error";

}  // namespace

void WriteReportCsv(const ExperimentReport& report, std::ostream& out) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  out << kCsvHeader << "\n";
  for (const ReportRow& row : report.rows) {
    out << Quote(row.algorithm) << ',' << row.run << ',' << row.seed << ','
        << row.objective.quality << ',' << row.objective.dispersion << ','
        << row.objective.combined << ',' << row.score << ','
        << row.normalized << ',' << row.wall_seconds << ',';
    for (std::size_t k = 0; k < row.counts.size(); ++k) {
      if (k) out << ';';
      out << row.counts[k];
    }
    out << ',' << Quote(row.error) << "\n";
  }
  out.flags(flags);
  out.precision(precision);
}

ExperimentReport ReadReportCsv(std::istream& in) {
  ExperimentReport report;
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("unexpected report header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsvLine(line);
    if (f.size() != 11) throw std::runtime_error("malformed report row");
    ReportRow row;
    row.algorithm = f[0];
    row.run = std::stoi(f[1]);
    row.seed = std::stoull(f[2]);
    row.objective.quality = std::stod(f[3]);
    row.objective.dispersion = std::stod(f[4]);
    row.objective.combined = std::stod(f[5]);
    row.score = std::stod(f[6]);
    row.normalized = std::stod(f[7]);
    row.wall_seconds = std::stod(f[8]);
    std::stringstream counts(f[9]);
    std::string item;
    while (std::getline(counts, item, ';')) {
      if (!item.empty()) row.counts.push_back(std::stoi(item));
    }
    row.error = f[10];
    report.rows.push_back(std::move(row));
  }
  return report;
}

void WriteSummaryTsv(std::span<const SummaryRow> summary, std::ostream& out) {
  out << "algorithm\tmin\tavg\tmax\tavg_selected\tfailures\n";
  for (const SummaryRow& s : summary) {
    out << s.algorithm << '\t' << s.min << '\t' << s.avg << '\t' << s.max
        << '\t' << s.avg_selected << '\t' << s.failures << "\n";
  }
}

std::vector<BenchRow> BenchScaling(const GenSpec& base,
                                   std::span<const int> sizes,
                                   const SolverConfig& config, int repeats) {
  std::vector<BenchRow> out;
  for (int n : sizes) {
    GenSpec spec = base;
    spec.n = n;
    const Instance instance = Generate(spec);
    const DistanceOracle oracle(instance);
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(1, repeats); ++r) {
      const auto start = std::chrono::steady_clock::now();
      Solve(instance, oracle, config);
      best = std::min(best, std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count());
    }
    BenchRow row{n, best, 0.0};
    if (!out.empty() && out.back().seconds > 0.0) {
      row.ratio = best / out.back().seconds;
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace divmax

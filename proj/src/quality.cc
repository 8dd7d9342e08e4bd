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

#include "divmax/quality.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "divmax/model.h"

namespace divmax {

QualityFunction QualityFunction::Modular(std::vector<double> weights) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw std::invalid_argument("modular weight " + std::to_string(i) +
                                  " is negative or not finite");
    }
  }
  QualityFunction q;
  q.kind_ = QualityKind::kModular;
  q.weights_ = std::move(weights);
  return q;
}

QualityFunction QualityFunction::Coverage(
    std::vector<std::vector<std::int64_t>> covers) {
  QualityFunction q;
  q.kind_ = QualityKind::kCoverage;
  std::unordered_map<std::int64_t, int> dense;
  q.dense_covers_.resize(covers.size());
  for (std::size_t v = 0; v < covers.size(); ++v) {
    auto& items = covers[v];
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    auto& out = q.dense_covers_[v];
    out.reserve(items.size());
    for (std::int64_t item : items) {
      auto [it, inserted] = dense.try_emplace(item, q.num_items_);
      if (inserted) ++q.num_items_;
      out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
  }
  q.covers_ = std::move(covers);
  return q;
}

int QualityFunction::domain_size() const {
  switch (kind_) {
    case QualityKind::kZero:
      return 0;
    case QualityKind::kModular:
      return static_cast<int>(weights_.size());
    case QualityKind::kCoverage:
      return static_cast<int>(dense_covers_.size());
  }
  return 0;
}

namespace {

int DomainFor(const QualityFunction& q, std::span<const ElementId> s,
              std::initializer_list<ElementId> extra) {
  int n = q.domain_size();
  if (q.is_zero()) {
    for (ElementId v : s) n = std::max(n, v + 1);
    for (ElementId v : extra) n = std::max(n, v + 1);
  }
  return n;
}

}  // namespace

double QualityFunction::Value(std::span<const ElementId> s) const {
  if (is_zero()) return 0.0;
  QualityState state(*this, DomainFor(*this, s, {}));
  for (ElementId v : s) state.Add(v);
  return state.value();
}

double QualityFunction::Marginal(std::span<const ElementId> s,
                                 ElementId v) const {
  if (is_zero()) return 0.0;
  QualityState state(*this, DomainFor(*this, s, {v}));
  for (ElementId u : s) state.Add(u);
  return state.Marginal(v);
}

double QualityFunction::MarginalPair(std::span<const ElementId> s, ElementId u,
                                     ElementId v) const {
  if (u == v) throw std::invalid_argument("marginal pair needs u != v");
  if (is_zero()) return 0.0;
  QualityState state(*this, DomainFor(*this, s, {u, v}));
  for (ElementId w : s) state.Add(w);
  return state.MarginalPair(u, v);
}

QualityState::QualityState(const QualityFunction& q, int n)
    : q_(&q), member_(std::max(n, q.domain_size()), 0) {
  if (q.kind() == QualityKind::kCoverage) item_count_.assign(q.num_items(), 0);
}

double QualityState::Marginal(ElementId v) const {
  if (member_[v]) return 0.0;
  switch (q_->kind()) {
    case QualityKind::kZero:
      return 0.0;
    case QualityKind::kModular:
      return q_->weights()[v];
    case QualityKind::kCoverage: {
      int fresh = 0;
      for (int item : q_->dense_cover(v)) fresh += item_count_[item] == 0;
      return fresh;
    }
  }
  return 0.0;
}

double QualityState::MarginalPair(ElementId u, ElementId v) const {
  if (u == v) throw std::invalid_argument("marginal pair needs u != v");
  const double first = Marginal(u);
  if (member_[v]) return first;
  switch (q_->kind()) {
    case QualityKind::kZero:
      return first;
    case QualityKind::kModular:
      return first + q_->weights()[v];
    case QualityKind::kCoverage: {
      // Items of v that are uncovered and not brought in by u. Both lists
      // are sorted, so one merge pass suffices.
      const auto& cu = q_->dense_cover(u);
      const auto& cv = q_->dense_cover(v);
      const bool u_counts = !member_[u];
      int fresh = 0;
      std::size_t i = 0;
      for (int item : cv) {
        if (item_count_[item] != 0) continue;
        while (i < cu.size() && cu[i] < item) ++i;
        if (u_counts && i < cu.size() && cu[i] == item) continue;
        ++fresh;
      }
      return first + fresh;
    }
  }
  return first;
}

void QualityState::Add(ElementId v) {
  if (member_[v]) return;
  value_ += Marginal(v);
  member_[v] = 1;
  if (q_->kind() == QualityKind::kCoverage) {
    for (int item : q_->dense_cover(v)) ++item_count_[item];
  }
}

void QualityState::Remove(ElementId v) {
  if (!member_[v]) return;
  member_[v] = 0;
  if (q_->kind() == QualityKind::kCoverage) {
    for (int item : q_->dense_cover(v)) --item_count_[item];
  }
  value_ -= Marginal(v);
}

int ApplyMinCoverageFilter(Instance& instance, int threshold) {
  const QualityFunction& q = instance.quality;
  if (q.kind() != QualityKind::kCoverage || threshold <= 0) return 0;
  int removed = 0;
  std::vector<int> count(q.num_items(), 0);
  for (Cluster& cluster : instance.clusters) {
    for (ElementId v : cluster.members) {
      for (int item : q.dense_cover(v)) ++count[item];
    }
    std::vector<int> attributable;
    attributable.reserve(cluster.members.size());
    for (ElementId v : cluster.members) {
      int shared = 0;
      for (int item : q.dense_cover(v)) shared += count[item] > 1;
      attributable.push_back(shared);
    }
    std::vector<ElementId> kept;
    for (std::size_t i = 0; i < cluster.members.size(); ++i) {
      if (attributable[i] >= threshold) kept.push_back(cluster.members[i]);
    }
    if (kept.empty() && !cluster.members.empty()) {
      const auto best =
          std::max_element(attributable.begin(), attributable.end());
      kept.push_back(cluster.members[best - attributable.begin()]);
    }
    removed += static_cast<int>(cluster.members.size() - kept.size());
    for (ElementId v : cluster.members) {
      for (int item : q.dense_cover(v)) --count[item];
    }
    cluster.members = std::move(kept);
  }
  return removed;
}

}  // namespace divmax

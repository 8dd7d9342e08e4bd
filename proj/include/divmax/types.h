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

#ifndef DIVMAX_TYPES_H_
#define DIVMAX_TYPES_H_

#include <cstdint>

namespace divmax {

// Dense index into the ground set, 0..n-1.
using ElementId = int;
// Index into Instance::clusters.
using ClusterId = int;
// Partition-matroid cell. At most one selected element per cell.
using CellId = int;

inline constexpr ElementId kNoElement = -1;

}  // namespace divmax

#endif  // DIVMAX_TYPES_H_

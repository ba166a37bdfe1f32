/**************************************************************************
 * spreads.hpp
 *
 * Copyright 2026 The ogc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <vector>

#include "ogc/quadform.hpp"

namespace ogc {

enum class SpreadMethod { exact, greedy };

struct SpreadResult {
    int m = 0;
    int q = 0;
    int size = 0;
    std::vector<Subspace> witness; // pairwise point-disjoint generators
    bool exact = false;
    bool is_spread = false; // witness covers every quadric point
};

/// Largest set of pairwise disjoint generators of the parabolic quadric on
/// 2m+1 coordinates. exact runs branch-and-bound maximum clique on the
/// disjointness graph (greedy coloring bound, deterministic vertex order);
/// greedy returns a maximal, not extendable, partial spread.
SpreadResult max_partial_spread(const Field& f, int m, SpreadMethod method,
                                std::size_t vertex_cap = 5000);

} // namespace ogc

/**************************************************************************
 * grassmann.hpp
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

#include "ogc/codes.hpp"
#include "ogc/quadform.hpp"

namespace ogc {

/// The geometry of totally singular k-subspaces of GF(q)^{2n+1} under the
/// standard parabolic form, 1 <= k <= n.
struct GrassCtx {
    int n;
    int k;
    const Field* fld;
    PolarCtx polar;

    GrassCtx(const Field& f, int n_, int k_);

    const Field& field() const { return *fld; }
};

/// prod_{i=0}^{k-1} (q^{2(n-i)} - 1)/(q^{i+1} - 1)
std::uint64_t delta_point_closed_form(int n, int k, std::uint64_t q);

/// All points of the geometry, sorted by canonical basis matrix with ids
/// assigned in sorted order.
std::vector<Subspace> enumerate_delta(const GrassCtx& ctx, std::uint64_t cap = 1000000);

struct DeltaLine {
    enum class Kind { interior, conic };
    Kind kind;
    std::vector<std::int32_t> points; // sorted ids into the enumeration
};

std::vector<DeltaLine> enumerate_lines(const GrassCtx& ctx, const std::vector<Subspace>& pts);

/// rowspace(a) ∩ rowspace(b)
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// Distinct points are collinear when they meet in dimension k-1 and, for
/// k < n, span a totally singular (k+1)-space.
bool collinear(const GrassCtx& ctx, const Subspace& a, const Subspace& b);

/// The q+1 points of the unique line through two collinear points.
std::vector<Subspace> line_points(const GrassCtx& ctx, const Subspace& a, const Subspace& b);

/// One canonical wedge-coordinate vector of length C(2n+1, k) per point.
/// Throws if two points collide (the map must stay injective).
ProjSystem embed(const GrassCtx& ctx, const std::vector<Subspace>& pts);

/// All d-subspaces of GF(q)^m, canonical bases in sorted order.
std::vector<Subspace> enumerate_subspaces(const Field& f, int m, int d);

} // namespace ogc

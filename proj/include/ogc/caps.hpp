/**************************************************************************
 * caps.hpp
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

#include <array>
#include <cstdint>
#include <vector>

#include "ogc/grassmann.hpp"

namespace ogc {

/// Index data for one cap family: the sorted 1-based index set J with its
/// hyperbolic pairs {j, j+n}, the residual indices, and the orthogonal
/// companions M (plus ell when 2n+1 is in J).
struct CapSpec {
    int n = 0;
    const Field* fld = nullptr;
    std::vector<int> J;
    std::vector<std::pair<int, int>> pairs; // (j_i, j_i+n), j_i <= n
    std::vector<int> jbar;                  // unpaired members of J, 2n+1 excluded
    bool has_top = false;                   // 2n+1 in J
    std::vector<int> M;                     // m_1..m_r, from the smallest eligible indices
    int ell = 0;                            // extra companion when has_top
    std::vector<int> tau;                   // pair i -> position into M (default identity)
    int r = 0;
    int k = 0;
};

/// Validates J, detects the pairs, and picks M (and ell) as the smallest
/// indices of {1..n} orthogonal to every e_j, j in J.
CapSpec make_cap_spec(const Field& f, int n, std::vector<int> J, std::vector<int> tau = {});

struct CapMember {
    std::vector<std::vector<int>> gen_int; // generators over {-1,0,1}, table row order
    Mat gen;                               // the same rows over GF(q)
    Subspace sub;                          // canonical subspace
};

/// The 2^r subspaces X_S indexed by the subsets S of M (bit i of the index
/// is membership of m_{i+1}).
struct CapFamily {
    CapSpec spec;
    int table = 1;
    std::vector<CapMember> members;
    std::vector<CapMember> truncated;
    bool is_truncated = false;

    int dim_truncated() const { return 2 * spec.r + (table == 2 ? 1 : 0); }
};

/// table 0 selects automatically (2 exactly when 2n+1 is in J). Every
/// member is checked totally singular. Odd q only.
CapFamily build_cap(const CapSpec& spec, int table = 0);

/// Keep the first 2r (table 1) or 2r+1 (table 2) generators of each member.
void truncate_cap(CapFamily& fam);

struct PolarCapReport {
    int max_line_incidence = 0;
    std::vector<Subspace> violating_line; // a line meeting the set twice, if any
};

/// Maximum number of the given points on one line of the geometry, found
/// through pairwise collinearity and line reconstruction.
PolarCapReport verify_polar_cap(const GrassCtx& ctx, const std::vector<Subspace>& points);

struct ProjCapReport {
    bool ok = true;
    std::array<std::size_t, 3> violating{0, 0, 0};
};

/// No three of the vectors may be projectively collinear.
ProjCapReport verify_projective_cap(const Field& f, const std::vector<ProjVec>& vectors,
                                    int threads = 1);

} // namespace ogc

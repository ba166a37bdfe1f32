/**************************************************************************
 * hadamard.hpp
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

#include "ogc/caps.hpp"
#include "ogc/codes.hpp"

namespace ogc {

/// 2^r x 2^r matrix with entries +-1, rows and columns indexed by the
/// subsets of M_r (bit i-1 of the index is membership of m_i).
struct SignMatrix {
    int r = 0;
    std::vector<std::int8_t> e;

    int size() const { return 1 << r; }
    std::int8_t at(int i, int j) const { return e[static_cast<std::size_t>(i) * size() + j]; }
    std::int8_t& at(int i, int j) { return e[static_cast<std::size_t>(i) * size() + j]; }

    friend bool operator==(const SignMatrix& a, const SignMatrix& b) {
        return a.r == b.r && a.e == b.e;
    }
};

/// Position of a subset mask in the canonical order: the mask itself.
int subset_index(std::uint32_t mask);

/// The recursive order on subsets of M_r, returned as the sorted list of
/// masks. Equals 0,1,...,2^r-1 (checked in the tests).
std::vector<std::uint32_t> subset_order_by_recursion(int r);

/// Wedge-coordinate signs of one truncated member on the basis vectors
/// indexed by T (as the mask of T ∩ M_r), extracted over the integers and
/// normalized so the component at T = {j_1..j_r} is +1.
struct XiVector {
    std::uint32_t S = 0;
    std::vector<std::int8_t> comp;
};

XiVector xi_from_cap(const CapFamily& fam, std::uint32_t s_mask);

/// Row S, column T entry sigma_S(T) * sigma_empty(T), from the wedge
/// coordinates of a truncated family.
SignMatrix a_matrix_from_cap(const CapFamily& fam);

/// Entry (-1)^{|S ∩ T|}.
SignMatrix a_matrix_formula(int r);

/// M * M^T = 2^r * I over the integers.
bool is_hadamard(const SignMatrix& m);

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b);

/// The Kronecker-power family with base [[1,1],[1,-1]].
SignMatrix sylvester(int r);

struct DesignReport {
    int v = 0;
    int block_size = 0;
    int lambda = 0;
    bool is_2design = false;
};

/// Delete the all-ones row and column, map -1 to 0, and test the rows as
/// blocks of a symmetric 2-design on the columns.
DesignReport hadamard_design(const SignMatrix& m);

/// Binary code spanned by the rows of a_matrix_formula(r) under +1 -> 0,
/// -1 -> 1, together with the all-ones word.
LinearCode rm_code(const Field& gf2, int r);

} // namespace ogc

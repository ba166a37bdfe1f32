/**************************************************************************
 * linalg.hpp
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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ogc/field.hpp"

namespace ogc {

/// Dense row-major matrix over a Field. The Field must outlive the matrix.
class Mat {
public:
    Mat() = default;
    Mat(const Field& f, std::size_t rows, std::size_t cols)
        : f_(&f), rows_(rows), cols_(cols), e_(rows * cols) {}

    const Field& field() const { return *f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Felt& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    Felt at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    const std::vector<Felt>& entries() const { return e_; }
    std::vector<Felt>& entries() { return e_; }

    /// Row r as a copied vector.
    std::vector<Felt> row(std::size_t r) const {
        return {e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_};
    }

    Mat transpose() const;

    /// Entry-wise comparison; both operands must share shape and field.
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    /// Row-major entry indices, for hashing and deterministic ordering.
    std::vector<std::uint16_t> key() const {
        std::vector<std::uint16_t> k(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) k[i] = e_[i].v;
        return k;
    }

private:
    const Field* f_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Felt> e_;
};

Mat mat_from_rows(const Field& f, const std::vector<std::vector<Felt>>& rows);
Mat identity(const Field& f, std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);

struct RrefResult {
    Mat mat;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Basis of the right null space, returned with one basis vector per column.
Mat kernel(const Mat& m);

/// A k-dimensional subspace held as its unique RREF basis matrix, so
/// subspace equality is matrix equality. id is a stable index within an
/// enumeration, -1 when unassigned.
struct Subspace {
    Mat basis;
    std::int32_t id = -1;

    std::size_t dim() const { return basis.rows(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis == b.basis;
    }
};

/// Canonicalize a spanning set into a Subspace (drops dependent rows).
Subspace make_subspace(const Mat& spanning);

/// A nonzero projective point. When canonical, the first nonzero
/// coordinate is 1.
struct ProjVec {
    std::vector<Felt> coords;
    bool canonical = false;

    friend bool operator==(const ProjVec& a, const ProjVec& b) {
        return a.coords == b.coords;
    }
};

/// Scale v so its first nonzero coordinate is 1.
ProjVec canonical_projective(const Field& f, std::vector<Felt> v);

/// All k x k minors of a full-rank k x m basis matrix, indexed by the
/// k-subsets of the columns in lexicographic order, canonicalized
/// projectively. Throws RankDeficient when rank(b) < k.
ProjVec wedge_minors(const Mat& b);

/// Raw minors in the same column-subset order, no normalization.
std::vector<Felt> wedge_minors_raw(const Mat& b);

/// k-subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> lex_subsets(int m, int k);

/// Determinant via Gaussian elimination.
Felt det(const Mat& m);

/// FNV-1a hash of a key vector, for deduplication sets.
struct KeyHash {
    std::size_t operator()(const std::vector<std::uint16_t>& k) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint16_t x : k) {
            h ^= static_cast<std::size_t>(x) + 1;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace ogc

/**************************************************************************
 * linalg.cpp
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

#include "ogc/linalg.hpp"

#include <algorithm>

namespace ogc {

Mat mat_from_rows(const Field& f, const std::vector<std::vector<Felt>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimMismatch("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat identity(const Field& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Mat Mat::transpose() const {
    Mat t(*f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw DimMismatch("mat_mul shape mismatch");
    const Field& f = a.field();
    Mat c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Felt aik = a.at(i, k);
            if (aik.v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
        }
    return c;
}

RrefResult rref(const Mat& m) {
    const Field& f = m.field();
    RrefResult res{m, 0, {}};
    Mat& a = res.mat;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col).v == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(piv, j), a.at(row, j));
        const Felt s = f.inv(a.at(row, col));
        for (std::size_t j = col; j < a.cols(); ++j)
            a.at(row, j) = f.mul(s, a.at(row, j));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            const Felt t = a.at(i, col);
            if (t.v == 0) continue;
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(t, a.at(row, j)));
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel(const Mat& m) {
    const Field& f = m.field();
    const RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat k(f, n, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t fc = free_cols[j];
        k.at(fc, j) = f.one();
        for (std::size_t i = 0; i < r.rank; ++i)
            k.at(r.pivots[i], j) = f.neg(r.mat.at(i, fc));
    }
    return k;
}

Subspace make_subspace(const Mat& spanning) {
    const RrefResult r = rref(spanning);
    Mat b(spanning.field(), r.rank, spanning.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < spanning.cols(); ++j)
            b.at(i, j) = r.mat.at(i, j);
    return {std::move(b), -1};
}

ProjVec canonical_projective(const Field& f, std::vector<Felt> v) {
    std::size_t lead = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].v != 0) { lead = i; break; }
    if (lead == v.size()) throw ZeroVector("cannot normalize the zero vector");
    const Felt s = f.inv(v[lead]);
    for (auto& x : v) x = f.mul(s, x);
    return {std::move(v), true};
}

std::vector<std::vector<int>> lex_subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k == 0) return {{}};
    if (k > m) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == m - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Felt det(const Mat& m) {
    if (m.rows() != m.cols()) throw DimMismatch("det of non-square matrix");
    const Field& f = m.field();
    Mat a = m;
    const std::size_t n = a.rows();
    Felt d = f.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).v == 0) ++piv;
        if (piv == n) return f.zero();
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            d = f.neg(d);
        }
        d = f.mul(d, a.at(col, col));
        const Felt s = f.inv(a.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            const Felt t = f.mul(s, a.at(i, col));
            if (t.v == 0) continue;
            for (std::size_t j = col; j < n; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(t, a.at(col, j)));
        }
    }
    return d;
}

std::vector<Felt> wedge_minors_raw(const Mat& b) {
    const Field& f = b.field();
    const int k = static_cast<int>(b.rows());
    const int m = static_cast<int>(b.cols());
    const auto subsets = lex_subsets(m, k);
    std::vector<Felt> out;
    out.reserve(subsets.size());
    Mat sub(f, k, k);
    for (const auto& cols : subsets) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = b.at(i, cols[j]);
        out.push_back(det(sub));
    }
    return out;
}

ProjVec wedge_minors(const Mat& b) {
    if (rank(b) != b.rows()) throw RankDeficient("wedge of a rank-deficient basis");
    return canonical_projective(b.field(), wedge_minors_raw(b));
}

} // namespace ogc

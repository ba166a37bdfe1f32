/**************************************************************************
 * hadamard.cpp
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

#include "ogc/hadamard.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ogc {

int subset_index(std::uint32_t mask) { return static_cast<int>(mask); }

namespace {

// X < Y in the recursive order on subsets of M_r.
bool subset_less(std::uint32_t x, std::uint32_t y, int r) {
    if (r == 0) return false;
    const std::uint32_t bit = std::uint32_t(1) << (r - 1);
    const bool xb = x & bit, yb = y & bit;
    if (!xb && yb) return true;
    if (xb && !yb) return false;
    return subset_less(x & ~bit, y & ~bit, r - 1);
}

// Exact determinant of a small integer matrix (fraction-free Bareiss).
long long int_det(std::vector<std::vector<long long>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    long long prev = 1;
    long long sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace

std::vector<std::uint32_t> subset_order_by_recursion(int r) {
    std::vector<std::uint32_t> masks(std::size_t(1) << r);
    std::iota(masks.begin(), masks.end(), 0u);
    std::sort(masks.begin(), masks.end(),
              [r](std::uint32_t a, std::uint32_t b) { return subset_less(a, b, r); });
    return masks;
}

XiVector xi_from_cap(const CapFamily& fam, std::uint32_t s_mask) {
    if (!fam.is_truncated) throw NotTruncated("xi extraction needs a truncated family");
    const CapSpec& sp = fam.spec;
    const int r = sp.r;
    const int keep = fam.dim_truncated();
    const auto& rows = fam.truncated[s_mask].gen_int;

    XiVector xi;
    xi.S = s_mask;
    xi.comp.resize(std::size_t(1) << r);
    for (std::uint32_t t_mask = 0; t_mask < (std::uint32_t(1) << r); ++t_mask) {
        // columns T ∪ T' (plus 2n+1 for table 2), ascending; pair i
        // contributes either j_i or its companion M[tau[i]]
        std::vector<int> cols;
        for (int i = 0; i < r; ++i) {
            const bool pick_m = (t_mask >> sp.tau[i]) & 1;
            const int t = pick_m ? sp.M[sp.tau[i]] : sp.pairs[i].first;
            cols.push_back(t - 1);
            cols.push_back(t + sp.n - 1);
        }
        if (fam.table == 2) cols.push_back(2 * sp.n);
        std::sort(cols.begin(), cols.end());

        std::vector<std::vector<long long>> sub(keep, std::vector<long long>(keep));
        for (int i = 0; i < keep; ++i)
            for (int j = 0; j < keep; ++j) sub[i][j] = rows[i][cols[j]];
        const long long d = int_det(std::move(sub));
        if (d != 1 && d != -1)
            throw VerificationFailed("wedge component is not a sign");
        xi.comp[t_mask] = static_cast<std::int8_t>(d);
    }
    if (xi.comp[0] == -1)
        for (auto& c : xi.comp) c = static_cast<std::int8_t>(-c);
    return xi;
}

SignMatrix a_matrix_from_cap(const CapFamily& fam) {
    const int r = fam.spec.r;
    const int sz = 1 << r;
    SignMatrix a;
    a.r = r;
    a.e.resize(std::size_t(sz) * sz);
    const XiVector base = xi_from_cap(fam, 0);
    for (int s = 0; s < sz; ++s) {
        const XiVector xi = xi_from_cap(fam, static_cast<std::uint32_t>(s));
        for (int t = 0; t < sz; ++t)
            a.at(s, t) = static_cast<std::int8_t>(xi.comp[t] * base.comp[t]);
    }
    return a;
}

SignMatrix a_matrix_formula(int r) {
    const int sz = 1 << r;
    SignMatrix a;
    a.r = r;
    a.e.resize(std::size_t(sz) * sz);
    for (int s = 0; s < sz; ++s)
        for (int t = 0; t < sz; ++t)
            a.at(s, t) = (std::popcount(static_cast<unsigned>(s & t)) % 2 == 0) ? 1 : -1;
    return a;
}

bool is_hadamard(const SignMatrix& m) {
    const int sz = m.size();
    for (int i = 0; i < sz; ++i)
        for (int j = i; j < sz; ++j) {
            long long dot = 0;
            for (int c = 0; c < sz; ++c) dot += static_cast<int>(m.at(i, c)) * m.at(j, c);
            if (dot != (i == j ? sz : 0)) return false;
        }
    return true;
}

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b) {
    SignMatrix k;
    k.r = a.r + b.r;
    const int sa = a.size(), sb = b.size();
    k.e.resize(std::size_t(sa * sb) * (sa * sb));
    for (int i = 0; i < sa; ++i)
        for (int j = 0; j < sa; ++j)
            for (int x = 0; x < sb; ++x)
                for (int y = 0; y < sb; ++y)
                    k.at(i * sb + x, j * sb + y) =
                        static_cast<std::int8_t>(a.at(i, j) * b.at(x, y));
    return k;
}

SignMatrix sylvester(int r) {
    SignMatrix s1;
    s1.r = 1;
    s1.e = {1, 1, 1, -1};
    if (r == 1) return s1;
    SignMatrix s = s1;
    for (int i = 2; i <= r; ++i) s = kronecker(s, s1);
    return s;
}

DesignReport hadamard_design(const SignMatrix& m) {
    if (!is_hadamard(m)) throw NotHadamard("input is not Hadamard");
    const int sz = m.size();
    int one_row = -1, one_col = -1;
    for (int i = 0; i < sz && one_row < 0; ++i) {
        bool all = true;
        for (int j = 0; j < sz; ++j)
            if (m.at(i, j) != 1) { all = false; break; }
        if (all) one_row = i;
    }
    for (int j = 0; j < sz && one_col < 0; ++j) {
        bool all = true;
        for (int i = 0; i < sz; ++i)
            if (m.at(i, j) != 1) { all = false; break; }
        if (all) one_col = j;
    }
    if (one_row < 0 || one_col < 0)
        throw NotHadamard("matrix has no all-ones row and column to delete");

    const int v = sz - 1;
    std::vector<std::vector<int>> inc; // rows as blocks over v points
    for (int i = 0; i < sz; ++i) {
        if (i == one_row) continue;
        std::vector<int> row;
        for (int j = 0; j < sz; ++j) {
            if (j == one_col) continue;
            row.push_back(m.at(i, j) == 1 ? 1 : 0);
        }
        inc.push_back(std::move(row));
    }

    DesignReport rep;
    rep.v = v;
    rep.block_size = std::accumulate(inc[0].begin(), inc[0].end(), 0);
    bool uniform = true;
    for (const auto& row : inc)
        if (std::accumulate(row.begin(), row.end(), 0) != rep.block_size) uniform = false;

    int lambda = -1;
    bool constant = true;
    for (int a = 0; a < v && constant; ++a)
        for (int b = a + 1; b < v && constant; ++b) {
            int c = 0;
            for (const auto& row : inc) c += row[a] & row[b];
            if (lambda < 0) lambda = c;
            else if (c != lambda) constant = false;
        }
    rep.lambda = constant ? lambda : -1;
    rep.is_2design = uniform && constant && lambda >= 1;
    return rep;
}

LinearCode rm_code(const Field& gf2, int r) {
    if (gf2.q() != 2) throw Error("rm_code needs GF(2)");
    const int len = 1 << r;
    const int sz = 1 << r;
    Mat rows(gf2, sz + 1, len);
    for (int s = 0; s < sz; ++s)
        for (int t = 0; t < len; ++t)
            rows.at(s, t) = (std::popcount(static_cast<unsigned>(s & t)) % 2) ? gf2.one()
                                                                              : gf2.zero();
    for (int t = 0; t < len; ++t) rows.at(sz, t) = gf2.one();

    const RrefResult rr = rref(rows);
    LinearCode c;
    c.N = len;
    c.K = static_cast<int>(rr.rank);
    c.G = Mat(gf2, rr.rank, len);
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (int j = 0; j < len; ++j) c.G.at(i, j) = rr.mat.at(i, j);
    c.d_lower = 1;
    c.d_upper = len;
    const MinDistResult md = min_distance(gf2, c);
    c.d_exact = md.d;
    c.d_lower = c.d_upper = md.d;
    return c;
}

} // namespace ogc

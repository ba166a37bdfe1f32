/**************************************************************************
 * caps.cpp
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

#include "ogc/caps.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace ogc {

CapSpec make_cap_spec(const Field& f, int n, std::vector<int> J, std::vector<int> tau) {
    CapSpec s;
    s.n = n;
    s.fld = &f;
    std::sort(J.begin(), J.end());
    if (std::adjacent_find(J.begin(), J.end()) != J.end())
        throw InvalidJ("duplicate index in J");
    for (int j : J)
        if (j < 1 || j > 2 * n + 1) throw InvalidJ("index out of range");
    s.k = static_cast<int>(J.size());
    if (s.k < 1 || s.k > n) throw InvalidJ("need 1 <= |J| <= n");
    s.J = J;

    std::vector<bool> in_j(2 * n + 2, false);
    for (int j : J) in_j[j] = true;
    s.has_top = in_j[2 * n + 1];

    std::vector<bool> paired(2 * n + 2, false);
    for (int j = 1; j <= n; ++j)
        if (in_j[j] && in_j[j + n]) {
            s.pairs.emplace_back(j, j + n);
            paired[j] = paired[j + n] = true;
        }
    s.r = static_cast<int>(s.pairs.size());
    for (int j : J)
        if (!paired[j] && j != 2 * n + 1) s.jbar.push_back(j);

    // companions: indices of {1..n} hyperbolically disjoint from J
    std::vector<int> u;
    for (int i = 1; i <= n; ++i) {
        if (in_j[i] || in_j[i + n]) continue;
        u.push_back(i);
    }
    const int need = s.r + (s.has_top ? 1 : 0);
    if (static_cast<int>(u.size()) < need)
        throw InvalidJ("not enough orthogonal companion indices");
    s.M.assign(u.begin(), u.begin() + s.r);
    if (s.has_top) s.ell = u[s.r];

    if (tau.empty()) {
        s.tau.resize(s.r);
        for (int i = 0; i < s.r; ++i) s.tau[i] = i;
    } else {
        if (static_cast<int>(tau.size()) != s.r) throw InvalidJ("tau must permute the r pairs");
        std::vector<bool> seen(s.r, false);
        for (int t : tau) {
            if (t < 0 || t >= s.r || seen[t]) throw InvalidJ("tau is not a permutation");
            seen[t] = true;
        }
        s.tau = std::move(tau);
    }
    return s;
}

namespace {

std::vector<int> unit_row(int dim, int idx1, int sign = 1) {
    std::vector<int> v(dim, 0);
    v[idx1 - 1] = sign;
    return v;
}

Mat int_rows_to_mat(const Field& f, const std::vector<std::vector<int>>& rows) {
    Mat m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = f.from_int(rows[i][j]);
    return m;
}

} // namespace

CapFamily build_cap(const CapSpec& spec, int table) {
    const Field& f = *spec.fld;
    if (f.is_even_char()) throw EvenCharacteristic("cap construction needs odd q");
    const int auto_table = spec.has_top ? 2 : 1;
    if (table == 0) table = auto_table;
    if (table != auto_table) throw TableMismatch("table does not match membership of 2n+1 in J");

    const int n = spec.n;
    const int dim = 2 * n + 1;
    auto prime = [&](int x) { return x + n; }; // x' for x <= n

    CapFamily fam;
    fam.spec = spec;
    fam.table = table;

    PolarCtx polar(QuadForm::parabolic(f, n));
    const int count = 1 << spec.r;
    for (int s_mask = 0; s_mask < count; ++s_mask) {
        std::vector<std::vector<int>> rows;
        for (int i = 0; i < spec.r; ++i) {
            const int j = spec.pairs[i].first;
            const int m = spec.M[spec.tau[i]];
            const bool swapped = (s_mask >> spec.tau[i]) & 1;
            std::vector<int> row = unit_row(dim, j);
            if (swapped)
                row[prime(m) - 1] = -1; // e_j - e_{m'}
            else
                row[m - 1] = 1; // e_j + e_m
            rows.push_back(std::move(row));
        }
        for (int i = 0; i < spec.r; ++i) {
            const int jp = spec.pairs[i].second;
            const int m = spec.M[spec.tau[i]];
            const bool swapped = (s_mask >> spec.tau[i]) & 1;
            std::vector<int> row = unit_row(dim, jp);
            if (swapped)
                row[m - 1] = 1; // e_{j'} + e_m
            else
                row[prime(m) - 1] = -1; // e_{j'} - e_{m'}
            rows.push_back(std::move(row));
        }
        if (table == 2) {
            std::vector<int> row(dim, 0);
            row[spec.ell - 1] = 1;
            row[2 * n + 1 - 1] = 1;
            row[prime(spec.ell) - 1] = -1; // e_l + e_{2n+1} - e_{l'}
            rows.push_back(std::move(row));
        }
        for (int j : spec.jbar) rows.push_back(unit_row(dim, j));

        CapMember mem;
        mem.gen_int = rows;
        mem.gen = int_rows_to_mat(f, rows);
        mem.sub = make_subspace(mem.gen);
        if (mem.sub.basis.rows() != static_cast<std::size_t>(spec.k))
            throw RankDeficient("cap member is not k-dimensional");
        if (!polar.is_totally_singular(mem.sub))
            throw VerificationFailed("cap member is not totally singular");
        fam.members.push_back(std::move(mem));
    }
    return fam;
}

void truncate_cap(CapFamily& fam) {
    const Field& f = *fam.spec.fld;
    const int keep = fam.dim_truncated();
    PolarCtx polar(QuadForm::parabolic(f, fam.spec.n));
    fam.truncated.clear();
    for (const CapMember& m : fam.members) {
        CapMember t;
        t.gen_int.assign(m.gen_int.begin(), m.gen_int.begin() + keep);
        t.gen = int_rows_to_mat(f, t.gen_int);
        t.sub = make_subspace(t.gen);
        if (t.sub.basis.rows() != static_cast<std::size_t>(keep))
            throw RankDeficient("truncated member lost rank");
        if (!polar.is_totally_singular(t.sub))
            throw VerificationFailed("truncated member is not totally singular");
        fam.truncated.push_back(std::move(t));
    }
    fam.is_truncated = true;
}

PolarCapReport verify_polar_cap(const GrassCtx& ctx, const std::vector<Subspace>& points) {
    PolarCapReport rep;
    for (const Subspace& p : points) {
        if (p.basis.rows() != static_cast<std::size_t>(ctx.k) ||
            rank(p.basis) != static_cast<std::size_t>(ctx.k))
            throw DimMismatch("point of the wrong dimension");
        if (!ctx.polar.is_totally_singular(p))
            throw VerificationFailed("point is not in the geometry");
    }
    if (points.empty()) return rep;

    std::unordered_set<std::vector<std::uint16_t>, KeyHash> members;
    for (const Subspace& p : points) members.insert(p.basis.key());

    const bool has_lines = !(ctx.k == ctx.n && ctx.n == 1);
    rep.max_line_incidence = has_lines ? 1 : 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) throw Error("duplicate point");
            if (!collinear(ctx, points[i], points[j])) continue;
            std::vector<Subspace> line = line_points(ctx, points[i], points[j]);
            int hit = 0;
            for (const Subspace& z : line) hit += members.count(z.basis.key());
            if (hit > rep.max_line_incidence) {
                rep.max_line_incidence = hit;
                rep.violating_line = line;
            }
        }
    return rep;
}

ProjCapReport verify_projective_cap(const Field& f, const std::vector<ProjVec>& vectors,
                                    int threads) {
    const std::size_t n = vectors.size();
    std::unordered_map<std::vector<std::uint16_t>, std::size_t, KeyHash> index;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint16_t> key(vectors[i].coords.size());
        for (std::size_t j = 0; j < key.size(); ++j) key[j] = vectors[i].coords[j].v;
        if (!index.emplace(std::move(key), i).second) throw Error("duplicate projective point");
    }

    struct Hit {
        bool found = false;
        std::array<std::size_t, 3> t{};
    };
    const int nt = std::max(1, threads);
    std::vector<Hit> hits(nt);

    // a third point on the line of (i, j) is canonical(v_i + beta v_j)
    auto run = [&](int s) {
        Hit& h = hits[s];
        const int q = f.q();
        for (std::size_t i = s; i < n; i += nt) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (int b = 1; b < q; ++b) {
                    const Felt beta = f.elem(b);
                    std::vector<Felt> w(vectors[i].coords.size());
                    for (std::size_t c = 0; c < w.size(); ++c)
                        w[c] = f.add(vectors[i].coords[c], f.mul(beta, vectors[j].coords[c]));
                    bool zero = true;
                    for (const Felt& x : w)
                        if (x.v) { zero = false; break; }
                    if (zero) continue; // cannot happen for distinct canonical points
                    const ProjVec cv = canonical_projective(f, std::move(w));
                    std::vector<std::uint16_t> key(cv.coords.size());
                    for (std::size_t c = 0; c < key.size(); ++c) key[c] = cv.coords[c].v;
                    auto it = index.find(key);
                    if (it == index.end()) continue;
                    std::array<std::size_t, 3> t{i, j, it->second};
                    std::sort(t.begin(), t.end());
                    if (!h.found || t < h.t) {
                        h.found = true;
                        h.t = t;
                    }
                }
            }
        }
    };

    if (nt == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int s = 0; s < nt; ++s) pool.emplace_back(run, s);
        for (auto& t : pool) t.join();
    }

    ProjCapReport rep;
    for (const Hit& h : hits)
        if (h.found && (rep.ok || h.t < rep.violating)) {
            rep.ok = false;
            rep.violating = h.t;
        }
    return rep;
}

} // namespace ogc

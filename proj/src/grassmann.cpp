/**************************************************************************
 * grassmann.cpp
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

#include "ogc/grassmann.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ogc {

namespace {

std::uint64_t powu(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Visit the canonical coefficient vectors of GF(q)^m (first nonzero 1).
template <typename Fn>
void for_each_canonical_coeff(const Field& f, int m, Fn&& fn) {
    const int q = f.q();
    std::vector<Felt> c(m, f.zero());
    for (int lead = 0; lead < m; ++lead) {
        std::fill(c.begin(), c.end(), f.zero());
        c[lead] = f.one();
        while (true) {
            fn(c);
            int pos = m - 1;
            while (pos > lead && c[pos].v == static_cast<unsigned>(q - 1)) {
                c[pos] = f.zero();
                --pos;
            }
            if (pos == lead) break;
            c[pos] = f.elem(c[pos].v + 1);
        }
    }
}

std::vector<Felt> combine(const Field& f, const Mat& basis, const std::vector<Felt>& c) {
    std::vector<Felt> v(basis.cols(), f.zero());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        if (c[i].v == 0) continue;
        for (std::size_t j = 0; j < basis.cols(); ++j)
            v[j] = f.add(v[j], f.mul(c[i], basis.at(i, j)));
    }
    return v;
}

Mat stack_rows(const Mat& a, const std::vector<Felt>& v) {
    Mat m(a.field(), a.rows() + 1, a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(a.rows(), j) = v[j];
    return m;
}

Mat stack_mats(const Mat& a, const Mat& b) {
    Mat m(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

} // namespace

GrassCtx::GrassCtx(const Field& f, int n_, int k_)
    : n(n_), k(k_), fld(&f), polar(QuadForm::parabolic(f, n_)) {
    if (k < 1 || k > n) throw Error("require 1 <= k <= n");
}

std::uint64_t delta_point_closed_form(int n, int k, std::uint64_t q) {
    unsigned __int128 num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= powu(q, 2 * (n - i)) - 1;
        den *= powu(q, i + 1) - 1;
    }
    return static_cast<std::uint64_t>(num / den);
}

std::vector<Subspace> enumerate_delta(const GrassCtx& ctx, std::uint64_t cap) {
    return enumerate_totally_singular(ctx.polar, ctx.k, cap);
}

std::vector<Subspace> enumerate_subspaces(const Field& f, int m, int d) {
    if (d == 0) return {Subspace{Mat(f, 0, m), 0}};
    std::vector<Mat> level;
    for_each_canonical_coeff(f, m, [&](const std::vector<Felt>& v) {
        Mat b(f, 1, m);
        for (int j = 0; j < m; ++j) b.at(0, j) = v[j];
        level.push_back(std::move(b));
    });
    for (int t = 2; t <= d; ++t) {
        std::unordered_set<std::vector<std::uint16_t>, KeyHash> seen;
        std::vector<Mat> next;
        for (const Mat& u : level) {
            for_each_canonical_coeff(f, m, [&](const std::vector<Felt>& v) {
                Subspace cand = make_subspace(stack_rows(u, v));
                if (cand.basis.rows() != static_cast<std::size_t>(t)) return;
                auto key = cand.basis.key();
                if (seen.insert(std::move(key)).second) next.push_back(cand.basis);
            });
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(),
              [](const Mat& a, const Mat& b) { return a.key() < b.key(); });
    std::vector<Subspace> out;
    for (std::size_t i = 0; i < level.size(); ++i)
        out.push_back(Subspace{std::move(level[i]), static_cast<std::int32_t>(i)});
    return out;
}

std::vector<DeltaLine> enumerate_lines(const GrassCtx& ctx, const std::vector<Subspace>& pts) {
    const Field& f = ctx.field();
    const int dim = 2 * ctx.n + 1;

    std::unordered_map<std::vector<std::uint16_t>, std::int32_t, KeyHash> id_of;
    for (const Subspace& s : pts) id_of.emplace(s.basis.key(), s.id);

    std::vector<DeltaLine> lines;
    std::unordered_set<std::vector<std::uint16_t>, KeyHash> line_seen;

    auto push_line = [&](DeltaLine::Kind kind, std::vector<std::int32_t> ids) {
        std::sort(ids.begin(), ids.end());
        std::vector<std::uint16_t> key;
        for (std::int32_t i : ids) {
            key.push_back(static_cast<std::uint16_t>(i & 0xFFFF));
            key.push_back(static_cast<std::uint16_t>((i >> 16) & 0xFFFF));
        }
        if (line_seen.insert(std::move(key)).second)
            lines.push_back(DeltaLine{kind, std::move(ids)});
    };

    if (ctx.k < ctx.n) {
        // lines between a (k-1)-space and a totally singular (k+1)-space
        for (const Subspace& y : enumerate_totally_singular(ctx.polar, ctx.k + 1)) {
            for (const Subspace& xc : enumerate_subspaces(f, ctx.k + 1, ctx.k - 1)) {
                // carrier X = xc * Y inside V
                Mat xb(f, ctx.k - 1, dim);
                for (int i = 0; i < ctx.k - 1; ++i) {
                    const std::vector<Felt> row =
                        combine(f, y.basis, xc.basis.row(static_cast<std::size_t>(i)));
                    for (int j = 0; j < dim; ++j) xb.at(i, j) = row[j];
                }
                std::unordered_set<std::vector<std::uint16_t>, KeyHash> zs;
                std::vector<std::int32_t> ids;
                for_each_canonical_coeff(f, ctx.k + 1, [&](const std::vector<Felt>& c) {
                    const std::vector<Felt> w = combine(f, y.basis, c);
                    Subspace z = make_subspace(stack_rows(xb, w));
                    if (z.basis.rows() != static_cast<std::size_t>(ctx.k)) return;
                    auto key = z.basis.key();
                    if (zs.insert(key).second) ids.push_back(id_of.at(key));
                });
                push_line(DeltaLine::Kind::interior, std::move(ids));
            }
        }
    } else {
        if (ctx.n == 1) return {};
        // one conic line per totally singular (n-1)-space
        for (const Subspace& x : enumerate_totally_singular(ctx.polar, ctx.n - 1)) {
            const Subspace xp = ctx.polar.perp(x);
            std::unordered_set<std::vector<std::uint16_t>, KeyHash> zs;
            std::vector<std::int32_t> ids;
            for_each_canonical_coeff(f, static_cast<int>(xp.basis.rows()),
                                     [&](const std::vector<Felt>& c) {
                const std::vector<Felt> v = combine(f, xp.basis, c);
                if (!ctx.polar.is_singular_vector(v)) return;
                Subspace z = make_subspace(stack_rows(x.basis, v));
                if (z.basis.rows() != static_cast<std::size_t>(ctx.n)) return;
                if (!ctx.polar.is_totally_singular(z)) return;
                auto key = z.basis.key();
                if (zs.insert(key).second) ids.push_back(id_of.at(key));
            });
            push_line(DeltaLine::Kind::conic, std::move(ids));
        }
    }
    return lines;
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    const Field& f = a.basis.field();
    const std::size_t ka = a.basis.rows(), kb = b.basis.rows();
    const std::size_t dim = a.basis.cols();
    // solve alpha * A = beta * B via the kernel of [A^T | -B^T]
    Mat m(f, dim, ka + kb);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < ka; ++i) m.at(j, i) = a.basis.at(i, j);
        for (std::size_t i = 0; i < kb; ++i) m.at(j, ka + i) = f.neg(b.basis.at(i, j));
    }
    const Mat k = kernel(m);
    Mat vecs(f, k.cols(), dim);
    for (std::size_t c = 0; c < k.cols(); ++c)
        for (std::size_t j = 0; j < dim; ++j) {
            Felt acc = f.zero();
            for (std::size_t i = 0; i < ka; ++i)
                acc = f.add(acc, f.mul(k.at(i, c), a.basis.at(i, j)));
            vecs.at(c, j) = acc;
        }
    return make_subspace(vecs);
}

bool collinear(const GrassCtx& ctx, const Subspace& a, const Subspace& b) {
    if (a == b) throw Error("collinear is defined for distinct points");
    const Mat stacked = stack_mats(a.basis, b.basis);
    const std::size_t r = rank(stacked);
    const std::size_t inter = 2 * ctx.k - r;
    if (inter != static_cast<std::size_t>(ctx.k) - 1) return false;
    if (ctx.k == ctx.n) return true;
    return ctx.polar.is_totally_singular(make_subspace(stacked));
}

std::vector<Subspace> line_points(const GrassCtx& ctx, const Subspace& a, const Subspace& b) {
    const Field& f = ctx.field();
    std::vector<Subspace> out;
    std::unordered_set<std::vector<std::uint16_t>, KeyHash> seen;
    if (ctx.k < ctx.n) {
        const Subspace x = subspace_intersection(a, b);
        const Subspace y = make_subspace(stack_mats(a.basis, b.basis));
        for_each_canonical_coeff(f, static_cast<int>(y.basis.rows()),
                                 [&](const std::vector<Felt>& c) {
            const std::vector<Felt> w = combine(f, y.basis, c);
            Subspace z = make_subspace(stack_rows(x.basis, w));
            if (z.basis.rows() != static_cast<std::size_t>(ctx.k)) return;
            if (seen.insert(z.basis.key()).second) out.push_back(std::move(z));
        });
    } else {
        const Subspace x = subspace_intersection(a, b);
        const Subspace xp = ctx.polar.perp(x);
        for_each_canonical_coeff(f, static_cast<int>(xp.basis.rows()),
                                 [&](const std::vector<Felt>& c) {
            const std::vector<Felt> v = combine(f, xp.basis, c);
            if (!ctx.polar.is_singular_vector(v)) return;
            Subspace z = make_subspace(stack_rows(x.basis, v));
            if (z.basis.rows() != static_cast<std::size_t>(ctx.k)) return;
            if (!ctx.polar.is_totally_singular(z)) return;
            if (seen.insert(z.basis.key()).second) out.push_back(std::move(z));
        });
    }
    return out;
}

ProjSystem embed(const GrassCtx& ctx, const std::vector<Subspace>& pts) {
    ProjSystem sys;
    sys.q = ctx.field().q();
    sys.ambient_dim = static_cast<int>(binomial(2 * ctx.n + 1, ctx.k));
    std::unordered_set<std::vector<std::uint16_t>, KeyHash> seen;
    for (const Subspace& s : pts) {
        ProjVec v = wedge_minors(s.basis);
        std::vector<std::uint16_t> key(v.coords.size());
        for (std::size_t i = 0; i < key.size(); ++i) key[i] = v.coords[i].v;
        if (!seen.insert(std::move(key)).second)
            throw VerificationFailed("wedge image is not injective");
        sys.points.push_back(std::move(v));
    }
    return sys;
}

} // namespace ogc

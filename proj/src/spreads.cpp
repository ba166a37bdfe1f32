/**************************************************************************
 * spreads.cpp
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

#include "ogc/spreads.hpp"

#include <algorithm>

namespace ogc {

namespace {

std::uint64_t powu(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

struct Graph {
    int n = 0;
    std::vector<std::vector<std::uint64_t>> adj; // bitset rows

    bool edge(int i, int j) const { return (adj[i][j >> 6] >> (j & 63)) & 1; }
    void set_edge(int i, int j) {
        adj[i][j >> 6] |= std::uint64_t(1) << (j & 63);
        adj[j][i >> 6] |= std::uint64_t(1) << (i & 63);
    }
};

// Tomita-style maximum clique: candidates greedily colored, vertices
// expanded in decreasing color order.
struct CliqueSearch {
    const Graph& g;
    std::vector<int> best;
    std::vector<int> cur;

    explicit CliqueSearch(const Graph& gr) : g(gr) {}

    void expand(std::vector<int>& cand) {
        if (cand.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        // greedy coloring bound
        std::vector<int> color(cand.size());
        {
            std::vector<std::vector<int>> classes;
            for (std::size_t ci = 0; ci < cand.size(); ++ci) {
                const int v = cand[ci];
                std::size_t cls = 0;
                for (; cls < classes.size(); ++cls) {
                    bool conflict = false;
                    for (int u : classes[cls])
                        if (g.edge(u, v)) { conflict = true; break; }
                    if (!conflict) break;
                }
                if (cls == classes.size()) classes.emplace_back();
                classes[cls].push_back(v);
                color[ci] = static_cast<int>(cls) + 1;
            }
        }
        // expand in decreasing color; prune when bound cannot beat best
        std::vector<std::size_t> order(cand.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
        for (std::size_t oi = order.size(); oi-- > 0;) {
            const std::size_t ci = order[oi];
            if (cur.size() + color[ci] <= best.size()) return;
            const int v = cand[ci];
            std::vector<int> next;
            for (std::size_t cj = 0; cj < order.size(); ++cj) {
                const int u = cand[order[cj]];
                if (cj < oi && g.edge(v, u)) next.push_back(u);
            }
            cur.push_back(v);
            expand(next);
            cur.pop_back();
        }
    }
};

} // namespace

SpreadResult max_partial_spread(const Field& f, int m, SpreadMethod method,
                                std::size_t vertex_cap) {
    PolarCtx ctx(QuadForm::parabolic(f, m));
    const std::vector<Subspace> gens = enumerate_totally_singular(ctx, m);
    if (method == SpreadMethod::exact && gens.size() > vertex_cap)
        throw BudgetExceeded("generator count exceeds the clique vertex cap");

    const int nv = static_cast<int>(gens.size());
    Graph g;
    g.n = nv;
    g.adj.assign(nv, std::vector<std::uint64_t>((nv + 63) / 64, 0));
    const std::size_t full = 2 * static_cast<std::size_t>(m);
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) {
            Mat st(f, 2 * m, 2 * m + 1);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < 2 * m + 1; ++c) {
                    st.at(r, c) = gens[i].basis.at(r, c);
                    st.at(m + r, c) = gens[j].basis.at(r, c);
                }
            if (rank(st) == full) g.set_edge(i, j);
        }

    SpreadResult out;
    out.m = m;
    out.q = f.q();

    std::vector<int> chosen;
    if (method == SpreadMethod::greedy) {
        for (int v = 0; v < nv; ++v) {
            bool ok = true;
            for (int u : chosen)
                if (!g.edge(u, v)) { ok = false; break; }
            if (ok) chosen.push_back(v);
        }
        out.exact = false;
    } else {
        CliqueSearch cs(g);
        std::vector<int> all(nv);
        for (int i = 0; i < nv; ++i) all[i] = i;
        cs.expand(all);
        chosen = cs.best;
        out.exact = true;
    }

    out.size = static_cast<int>(chosen.size());
    std::sort(chosen.begin(), chosen.end());
    for (int v : chosen) out.witness.push_back(gens[v]);

    const std::uint64_t q = f.q();
    const std::uint64_t pts_per_gen = (powu(q, m) - 1) / (q - 1);
    const std::uint64_t quadric_pts = (powu(q, 2 * m) - 1) / (q - 1);
    out.is_spread = (static_cast<std::uint64_t>(out.size) * pts_per_gen == quadric_pts);
    return out;
}

} // namespace ogc

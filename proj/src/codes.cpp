/**************************************************************************
 * codes.cpp
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

#include "ogc/codes.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <unordered_set>

namespace ogc {

namespace {

std::uint64_t powu(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// q^K guarded against overflow; ~0 when it exceeds 2^63.
std::uint64_t message_count(int q, int K) {
    using u128 = unsigned __int128;
    u128 r = 1;
    const u128 lim = u128(1) << 63;
    for (int i = 0; i < K; ++i) {
        r *= static_cast<unsigned>(q);
        if (r > lim) return ~std::uint64_t(0);
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace

std::uint64_t binomial(int m, int k) {
    if (k < 0 || k > m) return 0;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= static_cast<unsigned>(m - k + i);
        r /= static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(r);
}

LinearCode code_from_system(const Field& f, const ProjSystem& s) {
    if (s.points.empty()) throw Error("empty projective system");
    const int N = static_cast<int>(s.points.size());
    Mat cols(f, s.ambient_dim, N);
    std::unordered_set<std::vector<std::uint16_t>, KeyHash> seen;
    for (int i = 0; i < N; ++i) {
        const auto& p = s.points[i];
        if (static_cast<int>(p.coords.size()) != s.ambient_dim)
            throw DimMismatch("point length mismatch");
        std::vector<std::uint16_t> key(p.coords.size());
        for (std::size_t j = 0; j < p.coords.size(); ++j) key[j] = p.coords[j].v;
        if (!seen.insert(std::move(key)).second) throw Error("duplicate point in system");
        for (int j = 0; j < s.ambient_dim; ++j) cols.at(j, i) = p.coords[j];
    }
    const RrefResult r = rref(cols);
    LinearCode c;
    c.N = N;
    c.K = static_cast<int>(r.rank);
    c.G = Mat(f, r.rank, N);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (int j = 0; j < N; ++j) c.G.at(i, j) = r.mat.at(i, j);
    c.d_lower = 1;
    c.d_upper = N;
    return c;
}

std::vector<std::uint16_t> message_at_gray_step(int q, int K, std::uint64_t t) {
    std::vector<std::uint16_t> a(K, 0);
    for (int i = 0; i < K; ++i) {
        a[i] = static_cast<std::uint16_t>(t % q);
        t /= q;
    }
    // reflected construction: an odd Gray digit reverses every lower sweep
    std::vector<std::uint16_t> g(K, 0);
    bool flip = false;
    for (int i = K - 1; i >= 0; --i) {
        g[i] = flip ? static_cast<std::uint16_t>(q - 1 - a[i]) : a[i];
        if (g[i] % 2) flip = !flip;
    }
    return g;
}

std::vector<Felt> codeword_dense(const Field& f, const Mat& G,
                                 const std::vector<std::uint16_t>& message) {
    const std::size_t K = G.rows(), N = G.cols();
    std::vector<Felt> cw(N, f.zero());
    for (std::size_t i = 0; i < K; ++i) {
        const Felt m = Felt{message[i]};
        if (m.v == 0) continue;
        for (std::size_t j = 0; j < N; ++j)
            cw[j] = f.add(cw[j], f.mul(m, G.at(i, j)));
    }
    return cw;
}

int hamming_weight(const std::vector<Felt>& v) {
    int w = 0;
    for (Felt x : v) w += (x.v != 0);
    return w;
}

namespace {

struct ShardBest {
    int d = -1;
    std::uint64_t step = 0;
};

// Binary scan over Gray steps [lo, hi); fn(step, weight) per visited
// nonzero message.
template <typename Fn>
void gray2_scan(const std::vector<std::vector<std::uint64_t>>& rows, int K, int nwords,
                std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
    if (lo >= hi) return;
    std::vector<std::uint64_t> cw(nwords, 0);
    const std::uint64_t m0 = lo ^ (lo >> 1);
    for (int i = 0; i < K; ++i)
        if ((m0 >> i) & 1)
            for (int w = 0; w < nwords; ++w) cw[w] ^= rows[i][w];
    auto weight = [&] {
        int s = 0;
        for (int w = 0; w < nwords; ++w) s += std::popcount(cw[w]);
        return s;
    };
    if (lo != 0) fn(lo, weight());
    for (std::uint64_t t = lo + 1; t < hi; ++t) {
        const int r = std::countr_zero(t);
        for (int w = 0; w < nwords; ++w) cw[w] ^= rows[r][w];
        fn(t, weight());
    }
}

// Mixed-radix scan over Gray steps [lo, hi) for q > 2.
template <typename Fn>
void grayq_scan(const Field& f, const Mat& G, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
    if (lo >= hi) return;
    const int q = f.q();
    const int K = static_cast<int>(G.rows());
    const int N = static_cast<int>(G.cols());

    std::vector<std::uint16_t> g = message_at_gray_step(q, K, lo);
    std::vector<Felt> cw = codeword_dense(f, G, g);
    int wt = hamming_weight(cw);

    // digit i sweeps upward exactly when no odd Gray digit sits above it
    std::vector<int> dir(K, 1);
    {
        bool flip = false;
        for (int i = K - 1; i >= 0; --i) {
            dir[i] = flip ? -1 : 1;
            if (g[i] % 2) flip = !flip;
        }
    }

    if (lo != 0) fn(lo, wt, g);
    for (std::uint64_t t = lo + 1; t < hi; ++t) {
        int i = 0;
        std::uint16_t before = 0;
        while (true) {
            const int cand = g[i] + dir[i];
            if (cand >= 0 && cand < q) {
                before = g[i];
                g[i] = static_cast<std::uint16_t>(cand);
                break;
            }
            dir[i] = -dir[i];
            ++i;
        }
        // one scaled row update; the scale is +-1 over prime fields
        const Felt step = f.sub(Felt{g[i]}, Felt{before});
        for (int j = 0; j < N; ++j) {
            const Felt gij = G.at(i, j);
            if (gij.v == 0) continue;
            const Felt prev = cw[j];
            cw[j] = f.add(prev, f.mul(step, gij));
            wt += (cw[j].v != 0) - (prev.v != 0);
        }
        fn(t, wt, g);
    }
}

std::vector<std::vector<std::uint64_t>> pack_rows(const Mat& G) {
    const int K = static_cast<int>(G.rows());
    const int N = static_cast<int>(G.cols());
    const int nwords = (N + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(K, std::vector<std::uint64_t>(nwords, 0));
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < N; ++j)
            if (G.at(i, j).v) rows[i][j >> 6] |= std::uint64_t(1) << (j & 63);
    return rows;
}

} // namespace

MinDistResult min_distance(const Field& f, const LinearCode& c, std::uint64_t budget, int threads) {
    const int q = f.q();
    const int K = c.K;
    const std::uint64_t total = message_count(q, K);
    if (total == ~std::uint64_t(0) || total - 1 > budget)
        throw BudgetExceeded("message space larger than the distance budget");

    const int nt = std::max(1, threads);
    std::vector<ShardBest> best(nt);

    auto run = [&](int s) {
        const std::uint64_t lo = 0 + (total)*s / nt;
        const std::uint64_t hi = (total) * (s + 1) / nt;
        ShardBest& b = best[s];
        if (q == 2) {
            const auto rows = pack_rows(c.G);
            const int nwords = static_cast<int>(rows.empty() ? 1 : rows[0].size());
            gray2_scan(rows, K, nwords, lo, hi, [&](std::uint64_t t, int w) {
                if (b.d < 0 || w < b.d) {
                    b.d = w;
                    b.step = t;
                }
            });
        } else {
            grayq_scan(f, c.G, lo, hi,
                       [&](std::uint64_t t, int w, const std::vector<std::uint16_t>&) {
                           if (b.d < 0 || w < b.d) {
                               b.d = w;
                               b.step = t;
                           }
                       });
        }
    };

    if (nt == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int s = 0; s < nt; ++s) pool.emplace_back(run, s);
        for (auto& t : pool) t.join();
    }

    ShardBest overall;
    for (const ShardBest& b : best) {
        if (b.d < 0) continue;
        if (overall.d < 0 || b.d < overall.d || (b.d == overall.d && b.step < overall.step))
            overall = b;
    }
    MinDistResult out;
    out.d = overall.d;
    out.steps = total - 1;
    out.witness = message_at_gray_step(q, K, overall.step);
    return out;
}

int min_distance_by_hyperplanes(const Field& f, const ProjSystem& s, std::uint64_t budget) {
    const LinearCode c = code_from_system(f, s);
    const int q = f.q();
    const int K = c.K, N = c.N;
    const std::uint64_t total = message_count(q, K);
    if (total == ~std::uint64_t(0) || total > budget)
        throw BudgetExceeded("hyperplane space larger than the budget");

    // canonical dual vectors: leading zeros, a 1, then free digits
    std::vector<Felt> m(K, f.zero());
    int best_section = -1;
    for (int lead = K - 1; lead >= 0; --lead) {
        std::fill(m.begin(), m.end(), f.zero());
        m[lead] = f.one();
        while (true) {
            int zeros = 0;
            for (int j = 0; j < N; ++j) {
                Felt acc = f.zero();
                for (int i = lead; i < K; ++i) {
                    const Felt gij = c.G.at(i, j);
                    if (gij.v && m[i].v) acc = f.add(acc, f.mul(m[i], gij));
                }
                zeros += (acc.v == 0);
            }
            best_section = std::max(best_section, zeros);
            int pos = K - 1;
            while (pos > lead && m[pos].v == static_cast<unsigned>(q - 1)) {
                m[pos] = f.zero();
                --pos;
            }
            if (pos == lead) break;
            m[pos] = f.elem(m[pos].v + 1);
        }
    }
    return N - best_section;
}

std::map<int, std::uint64_t> weight_enumerator(const Field& f, const LinearCode& c,
                                               std::uint64_t budget, int threads) {
    const int q = f.q();
    const int K = c.K;
    const std::uint64_t total = message_count(q, K);
    if (total == ~std::uint64_t(0) || total > budget)
        throw BudgetExceeded("message space larger than the weight budget");

    const int nt = std::max(1, threads);
    std::vector<std::map<int, std::uint64_t>> tables(nt);

    auto run = [&](int s) {
        const std::uint64_t lo = total * s / nt;
        const std::uint64_t hi = total * (s + 1) / nt;
        auto& tab = tables[s];
        if (q == 2) {
            const auto rows = pack_rows(c.G);
            const int nwords = static_cast<int>(rows.empty() ? 1 : rows[0].size());
            gray2_scan(rows, K, nwords, lo, hi, [&](std::uint64_t, int w) { ++tab[w]; });
        } else {
            grayq_scan(f, c.G, lo, hi,
                       [&](std::uint64_t, int w, const std::vector<std::uint16_t>&) { ++tab[w]; });
        }
    };

    if (nt == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int s = 0; s < nt; ++s) pool.emplace_back(run, s);
        for (auto& t : pool) t.join();
    }

    std::map<int, std::uint64_t> out;
    out[0] = 1; // the zero message
    for (const auto& tab : tables)
        for (const auto& [w, n] : tab) out[w] += n;
    return out;
}

std::uint64_t mr1_lower_bound(int n, int k, std::uint64_t q, std::uint64_t psi) {
    if (k < 1 || k >= n) throw Error("bound defined for 1 <= k < n");
    if (psi < 1) throw Error("psi must be positive");
    return psi * (powu(q, k * (n - k)) - 1) + 1;
}

int min_weight_upper_bound(const Field& f, const LinearCode& c, std::uint64_t prefix_steps) {
    int best = c.N;
    for (int i = 0; i < c.K; ++i) {
        int w = 0;
        for (int j = 0; j < c.N; ++j) w += (c.G.at(i, j).v != 0);
        best = std::min(best, w);
    }
    const std::uint64_t total = message_count(f.q(), c.K);
    const std::uint64_t hi = std::min<std::uint64_t>(prefix_steps + 1, total);
    if (f.q() == 2) {
        const auto rows = pack_rows(c.G);
        const int nwords = static_cast<int>(rows.empty() ? 1 : rows[0].size());
        gray2_scan(rows, c.K, nwords, 0, hi,
                   [&](std::uint64_t, int w) { best = std::min(best, w); });
    } else {
        grayq_scan(f, c.G, 0, hi,
                   [&](std::uint64_t, int w, const std::vector<std::uint16_t>&) {
                       best = std::min(best, w);
                   });
    }
    return best;
}

} // namespace ogc

/**************************************************************************
 * test_codes.cpp
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

#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "ogc/grassmann.hpp"

using namespace ogc;

namespace {

ProjSystem delta_system(const Field& f, int n, int k) {
    GrassCtx ctx(f, n, k);
    return embed(ctx, enumerate_delta(ctx));
}

// dense reference: weight table by evaluating every message directly
std::map<int, std::uint64_t> weights_by_dense_scan(const Field& f, const LinearCode& c) {
    std::map<int, std::uint64_t> tab;
    std::uint64_t total = 1;
    for (int i = 0; i < c.K; ++i) total *= f.q();
    for (std::uint64_t t = 0; t < total; ++t) {
        std::vector<std::uint16_t> msg(c.K);
        std::uint64_t r = t;
        for (int i = 0; i < c.K; ++i) {
            msg[i] = static_cast<std::uint16_t>(r % f.q());
            r /= f.q();
        }
        ++tab[hamming_weight(codeword_dense(f, c.G, msg))];
    }
    return tab;
}

ProjSystem random_system(const Field& f, int dim, int npts, std::mt19937& rng) {
    ProjSystem s;
    s.q = f.q();
    s.ambient_dim = dim;
    std::set<std::vector<std::uint16_t>> seen;
    while (static_cast<int>(s.points.size()) < npts) {
        std::vector<Felt> v(dim);
        bool zero = true;
        for (int i = 0; i < dim; ++i) {
            v[i] = f.elem(static_cast<int>(rng() % f.q()));
            zero = zero && (v[i].v == 0);
        }
        if (zero) continue;
        ProjVec c = canonical_projective(f, std::move(v));
        std::vector<std::uint16_t> key(c.coords.size());
        for (std::size_t i = 0; i < key.size(); ++i) key[i] = c.coords[i].v;
        if (seen.insert(key).second) s.points.push_back(std::move(c));
    }
    return s;
}

} // namespace

TEST_SUITE_BEGIN("codes");

TEST_CASE("generator construction") {
    Field f2(2, 1), f3(3, 1);

    const LinearCode c22 = code_from_system(f2, delta_system(f2, 2, 2));
    CHECK(c22.N == 15);
    CHECK(c22.K == 9);
    CHECK(rank(c22.G) == 9);

    const LinearCode c22q3 = code_from_system(f3, delta_system(f3, 2, 2));
    CHECK(c22q3.N == 40);
    CHECK(c22q3.K == 10);

    const LinearCode c12 = code_from_system(f3, delta_system(f3, 2, 1));
    CHECK(c12.N == 40);
    CHECK(c12.K == 5);

    ProjSystem dup;
    dup.q = 2;
    dup.ambient_dim = 2;
    dup.points = {ProjVec{{f2.one(), f2.zero()}, true}, ProjVec{{f2.one(), f2.zero()}, true}};
    CHECK_THROWS(code_from_system(f2, dup));
}

TEST_CASE("gray order visits every message, one digit at a time") {
    for (int q : {2, 3, 4, 5}) {
        const int K = 3;
        std::uint64_t total = 1;
        for (int i = 0; i < K; ++i) total *= q;
        std::set<std::vector<std::uint16_t>> seen;
        std::vector<std::uint16_t> prev;
        for (std::uint64_t t = 0; t < total; ++t) {
            const auto g = message_at_gray_step(q, K, t);
            CHECK(seen.insert(g).second);
            if (t > 0) {
                int changed = 0, delta = 0;
                for (int i = 0; i < K; ++i)
                    if (g[i] != prev[i]) {
                        ++changed;
                        delta = static_cast<int>(g[i]) - static_cast<int>(prev[i]);
                    }
                CHECK(changed == 1);
                CHECK((delta == 1 || delta == -1));
            }
            prev = g;
        }
        CHECK(seen.size() == total);
    }
}

TEST_CASE("consecutive codewords differ by one scaled generator row") {
    std::mt19937 rng(59);
    for (int q : {2, 3}) {
        Field f(q, 1);
        const ProjSystem s = random_system(f, 4, 7, rng);
        const LinearCode c = code_from_system(f, s);
        std::vector<Felt> prev = codeword_dense(f, c.G, message_at_gray_step(q, c.K, 0));
        std::uint64_t total = 1;
        for (int i = 0; i < c.K; ++i) total *= q;
        for (std::uint64_t t = 1; t < std::min<std::uint64_t>(total, 200); ++t) {
            const auto ga = message_at_gray_step(q, c.K, t - 1);
            const auto gb = message_at_gray_step(q, c.K, t);
            int row = -1;
            for (int i = 0; i < c.K; ++i)
                if (ga[i] != gb[i]) row = i;
            REQUIRE(row >= 0);
            const Felt scale = f.sub(Felt{gb[row]}, Felt{ga[row]});
            std::vector<Felt> next = codeword_dense(f, c.G, gb);
            for (int j = 0; j < c.N; ++j)
                CHECK(next[j] == f.add(prev[j], f.mul(scale, c.G.at(row, j))));
            prev = std::move(next);
        }
    }
}

TEST_CASE("known distances") {
    Field f2(2, 1), f3(3, 1);

    const LinearCode c12 = code_from_system(f2, delta_system(f2, 2, 1));
    CHECK(min_distance(f2, c12).d == 6);

    const LinearCode c22 = code_from_system(f2, delta_system(f2, 2, 2));
    CHECK(min_distance(f2, c22).d == 4);

    const LinearCode c22q3 = code_from_system(f3, delta_system(f3, 2, 2));
    const MinDistResult md = min_distance(f3, c22q3);
    CHECK(md.d == 18);
    CHECK(hamming_weight(codeword_dense(f3, c22q3.G, md.witness)) == md.d);

    // Singleton bound
    CHECK(md.d <= c22q3.N - c22q3.K + 1);
}

TEST_CASE("distance engine against a dense oracle on random codes") {
    std::mt19937 rng(97);
    for (int q : {2, 3, 4}) {
        Field f = (q == 4) ? Field(2, 2) : Field(q, 1);
        for (int trial = 0; trial < 6; ++trial) {
            const ProjSystem s = random_system(f, 4, 8, rng);
            const LinearCode c = code_from_system(f, s);
            const auto dense = weights_by_dense_scan(f, c);
            int dmin = c.N;
            for (const auto& [w, cnt] : dense)
                if (w > 0) dmin = std::min(dmin, w);
            CHECK(min_distance(f, c).d == dmin);
            CHECK(weight_enumerator(f, c) == dense);
        }
    }
}

TEST_CASE("weight tables of the rank-1 codes") {
    // weights split by the three hyperplane types of the quadric: the
    // q^2(q^2+1)/2 hyperbolic sections, the tangent section at each of
    // the N points, and the q^2(q^2-1)/2 elliptic sections, each carrying
    // q-1 scalar multiples
    Field f2(2, 1), f3(3, 1);
    const std::map<int, std::uint64_t> want2 = {{0, 1}, {6, 10}, {8, 15}, {10, 6}};
    CHECK(weight_enumerator(f2, code_from_system(f2, delta_system(f2, 2, 1))) == want2);
    const std::map<int, std::uint64_t> want3 = {{0, 1}, {24, 90}, {27, 80}, {30, 72}};
    CHECK(weight_enumerator(f3, code_from_system(f3, delta_system(f3, 2, 1))) == want3);
}

TEST_CASE("weight table of the rank-2 code over GF(3)") {
    // weight w <-> hyperplane section of size 40 - w; the 1560 words of
    // weight 18 are the 780 plane pairs of PG(3,3) times the two scalars
    Field f3(3, 1);
    const LinearCode c = code_from_system(f3, delta_system(f3, 2, 2));
    const std::map<int, std::uint64_t> want = {{0, 1},      {18, 1560},  {24, 21060},
                                               {27, 18800}, {30, 16848}, {36, 780}};
    CHECK(weight_enumerator(f3, c) == want);
}

TEST_CASE("sharded scans match single-threaded scans") {
    Field f3(3, 1);
    const LinearCode c = code_from_system(f3, delta_system(f3, 2, 2));
    const MinDistResult one = min_distance(f3, c, std::uint64_t(1) << 30, 1);
    const MinDistResult three = min_distance(f3, c, std::uint64_t(1) << 30, 3);
    CHECK(one.d == three.d);
    CHECK(one.witness == three.witness);
    CHECK(weight_enumerator(f3, c, std::uint64_t(1) << 30, 1) ==
          weight_enumerator(f3, c, std::uint64_t(1) << 30, 3));

    // more workers than messages leaves empty shards
    Field f2(2, 1);
    const LinearCode tiny = code_from_system(f2, delta_system(f2, 2, 1)); // K = 5
    CHECK(min_distance(f2, tiny, std::uint64_t(1) << 30, 64).d == 6);
    CHECK(weight_enumerator(f2, tiny, std::uint64_t(1) << 30, 64) ==
          weight_enumerator(f2, tiny));
}

TEST_CASE("hyperplane route equals the gray route") {
    Field f2(2, 1), f3(3, 1);
    CHECK(min_distance_by_hyperplanes(f2, delta_system(f2, 2, 1)) == 6);
    CHECK(min_distance_by_hyperplanes(f2, delta_system(f2, 2, 2)) == 4);

    std::mt19937 rng(131);
    int trials = 0;
    while (trials < 20) {
        const int q = (trials % 2) ? 3 : 2;
        const Field& f = (q == 2) ? f2 : f3;
        const ProjSystem s = random_system(f, 4, 6 + static_cast<int>(rng() % 5), rng);
        const LinearCode c = code_from_system(f, s);
        CHECK(min_distance(f, c).d == min_distance_by_hyperplanes(f, s));
        ++trials;
    }
}

TEST_CASE("maximum hyperplane section of the rank-1 system") {
    // for k = 1 the largest section is (q^{2n-1}-1)/(q-1) + q^{n-1}
    for (int q : {2, 3}) {
        Field f(q, 1);
        const ProjSystem s = delta_system(f, 2, 1);
        const LinearCode c = code_from_system(f, s);
        const int d = min_distance(f, c).d;
        const int max_section = c.N - d;
        const int want = (q * q * q - 1) / (q - 1) + q;
        CHECK(max_section == want);
    }
}

TEST_CASE("budget guards") {
    Field f2(2, 1);
    const LinearCode c = code_from_system(f2, delta_system(f2, 2, 2)); // K = 9
    CHECK_THROWS_AS(min_distance(f2, c, 100), BudgetExceeded);
    CHECK_THROWS_AS(weight_enumerator(f2, c, 100), BudgetExceeded);
    CHECK_THROWS_AS(min_distance_by_hyperplanes(f2, delta_system(f2, 2, 2), 100),
                    BudgetExceeded);
}

TEST_CASE("spread-based lower bound") {
    CHECK(mr1_lower_bound(3, 2, 2, 3) == 10);
    CHECK(mr1_lower_bound(2, 1, 3, 4) == 9);
    CHECK_THROWS_AS(mr1_lower_bound(2, 2, 3, 4), Error);
    CHECK_THROWS_AS(mr1_lower_bound(3, 2, 2, 0), Error);
}

TEST_CASE("prefix upper bound is a real codeword weight") {
    Field f3(3, 1);
    const LinearCode c = code_from_system(f3, delta_system(f3, 2, 2));
    const int ub = min_weight_upper_bound(f3, c, 1000);
    const int d = min_distance(f3, c).d;
    CHECK(ub >= d);
    CHECK(ub <= c.N);
}

TEST_SUITE_END();

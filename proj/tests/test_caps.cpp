/**************************************************************************
 * test_caps.cpp
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

#include <bit>

#include "ogc/caps.hpp"

using namespace ogc;

namespace {

bool subspace_contains(const Subspace& big, const Subspace& small) {
    const Field& f = big.basis.field();
    Mat st(f, big.basis.rows() + small.basis.rows(), big.basis.cols());
    for (std::size_t i = 0; i < big.basis.rows(); ++i)
        for (std::size_t j = 0; j < big.basis.cols(); ++j) st.at(i, j) = big.basis.at(i, j);
    for (std::size_t i = 0; i < small.basis.rows(); ++i)
        for (std::size_t j = 0; j < small.basis.cols(); ++j)
            st.at(big.basis.rows() + i, j) = small.basis.at(i, j);
    return rank(st) == big.basis.rows();
}

} // namespace

TEST_SUITE_BEGIN("caps");

TEST_CASE("index bookkeeping") {
    Field f3(3, 1);

    const CapSpec a = make_cap_spec(f3, 2, {1, 3});
    CHECK(a.r == 1);
    CHECK(a.pairs == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(a.M == std::vector<int>{2});
    CHECK(a.jbar.empty());
    CHECK_FALSE(a.has_top);

    const CapSpec b = make_cap_spec(f3, 3, {1, 4, 7});
    CHECK(b.r == 1);
    CHECK(b.has_top);
    CHECK(b.M == std::vector<int>{2});
    CHECK(b.ell == 3);

    const CapSpec c = make_cap_spec(f3, 4, {1, 2, 5, 6});
    CHECK(c.r == 2);
    CHECK(c.M == std::vector<int>{3, 4});

    CHECK_THROWS_AS(make_cap_spec(f3, 2, {1, 3, 5}), InvalidJ); // |J| > n
    CHECK_THROWS_AS(make_cap_spec(f3, 2, {1, 1}), InvalidJ);
    CHECK_THROWS_AS(make_cap_spec(f3, 2, {0, 3}), InvalidJ);
    CHECK_THROWS_AS(make_cap_spec(f3, 2, {1, 6}), InvalidJ);
}

TEST_CASE("table rows match the constructions") {
    Field f3(3, 1);

    const CapFamily fam = build_cap(make_cap_spec(f3, 2, {1, 3}));
    CHECK(fam.table == 1);
    REQUIRE(fam.members.size() == 2);
    CHECK(fam.members[0].gen_int ==
          std::vector<std::vector<int>>{{1, 1, 0, 0, 0}, {0, 0, 1, -1, 0}});
    CHECK(fam.members[1].gen_int ==
          std::vector<std::vector<int>>{{1, 0, 0, -1, 0}, {0, 1, 1, 0, 0}});
    // the two variants of a pair sum to the same vector, so the members
    // meet in the line spanned by e1 + e2 + e3 - e4
    Mat st(f3, 4, 5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 5; ++j) {
            st.at(i, j) = fam.members[0].sub.basis.at(i, j);
            st.at(2 + i, j) = fam.members[1].sub.basis.at(i, j);
        }
    CHECK(rank(st) == 3);
    const Subspace shared = subspace_intersection(fam.members[0].sub, fam.members[1].sub);
    REQUIRE(shared.basis.rows() == 1);
    Mat w(f3, 1, 5);
    w.at(0, 0) = f3.one();
    w.at(0, 1) = f3.one();
    w.at(0, 2) = f3.one();
    w.at(0, 3) = f3.from_int(-1);
    CHECK(shared.basis == make_subspace(w).basis);

    const CapFamily top = build_cap(make_cap_spec(f3, 3, {1, 4, 7}));
    CHECK(top.table == 2);
    CHECK(top.members[0].gen_int ==
          std::vector<std::vector<int>>{
              {1, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, -1, 0, 0}, {0, 0, 1, 0, 0, -1, 1}});
}

TEST_CASE("build guards") {
    Field f3(3, 1), f2(2, 1);
    CHECK_THROWS_AS(build_cap(make_cap_spec(f2, 2, {1, 3})), EvenCharacteristic);
    CHECK_THROWS_AS(build_cap(make_cap_spec(f3, 3, {1, 4, 7}), 1), TableMismatch);
    CHECK_THROWS_AS(build_cap(make_cap_spec(f3, 2, {1, 3}), 2), TableMismatch);
}

// Every member contains the vectors e_j + e_m + e_{j'} - e_{m'}: the two
// table variants of a pair sum to the same vector. Members whose index
// sets differ in d pairs therefore meet in dimension exactly k - d. For
// k < n the spans are never totally singular, so the family is still a
// cap of the geometry; for k = n members at index distance 1 share a
// (k-1)-space and are genuinely collinear.
TEST_CASE("members meet in dimension k minus the index distance") {
    struct Case {
        int n, q;
        std::vector<int> J;
    };
    for (const Case& cs : std::vector<Case>{
             {2, 3, {1, 3}}, {3, 3, {1, 4, 7}}, {4, 3, {1, 2, 5, 6}}, {2, 5, {1, 3}}}) {
        Field f(cs.q, 1);
        const CapSpec spec = make_cap_spec(f, cs.n, cs.J);
        const CapFamily fam = build_cap(spec);
        CHECK(fam.members.size() == std::size_t(1) << spec.r);

        GrassCtx ctx(f, cs.n, spec.k);
        for (std::size_t s = 0; s < fam.members.size(); ++s)
            for (std::size_t t = s + 1; t < fam.members.size(); ++t) {
                const std::uint32_t sym = static_cast<std::uint32_t>(s ^ t);
                const int dist = std::popcount(sym);
                const Subspace inter =
                    subspace_intersection(fam.members[s].sub, fam.members[t].sub);
                CHECK(inter.basis.rows() == static_cast<std::size_t>(spec.k - dist));

                // k = n here, so index distance 1 means collinear
                CHECK(collinear(ctx, fam.members[s].sub, fam.members[t].sub) == (dist == 1));

                // the witnessed swap pair stays outside one of the members
                int u = -1;
                for (int i = 0; i < spec.r; ++i)
                    if ((sym >> i) & 1) { u = i; break; }
                REQUIRE(u >= 0);
                Mat w(f, 2, 2 * cs.n + 1);
                const int j = spec.pairs[u].first, jp = spec.pairs[u].second;
                const int m = spec.M[u];
                w.at(0, j - 1) = f.one();
                w.at(0, m + cs.n - 1) = f.from_int(-1); // e_j - e_{m'}
                w.at(1, jp - 1) = f.one();
                w.at(1, m - 1) = f.one(); // e_{j'} + e_m
                const Subspace pair = make_subspace(w);
                const bool in_s = subspace_contains(fam.members[s].sub, pair);
                const bool in_t = subspace_contains(fam.members[t].sub, pair);
                CHECK_FALSE((in_s && in_t));
            }

        std::vector<Subspace> pts;
        for (const CapMember& m : fam.members) pts.push_back(m.sub);
        CHECK(verify_polar_cap(ctx, pts).max_line_incidence == (spec.r >= 1 ? 2 : 1));

        // the wedge images still contain no three collinear points
        const ProjSystem sys = embed(ctx, pts);
        CHECK(verify_projective_cap(f, sys.points).ok);
    }
}

TEST_CASE("families with k < n are caps") {
    struct Case {
        int n, q;
        std::vector<int> J;
    };
    for (const Case& cs :
         std::vector<Case>{{3, 3, {1, 4}}, {4, 3, {1, 5, 9}}, {3, 5, {1, 4}}}) {
        Field f(cs.q, 1);
        const CapSpec spec = make_cap_spec(f, cs.n, cs.J);
        REQUIRE(spec.k < cs.n);
        const CapFamily fam = build_cap(spec);
        GrassCtx ctx(f, cs.n, spec.k);
        std::vector<Subspace> pts;
        for (const CapMember& m : fam.members) pts.push_back(m.sub);
        for (std::size_t s = 0; s < pts.size(); ++s)
            for (std::size_t t = s + 1; t < pts.size(); ++t)
                CHECK_FALSE(collinear(ctx, pts[s], pts[t]));
        CHECK(verify_polar_cap(ctx, pts).max_line_incidence <= 1);
        const ProjSystem sys = embed(ctx, pts);
        CHECK(verify_projective_cap(f, sys.points).ok);
    }
}

TEST_CASE("members are fixed by canonicalization after construction") {
    Field f3(3, 1);
    const CapFamily fam = build_cap(make_cap_spec(f3, 4, {1, 2, 5, 6}));
    for (const CapMember& m : fam.members) {
        const Subspace again = make_subspace(m.sub.basis);
        CHECK(again.basis == m.sub.basis);
    }
}

TEST_CASE("truncation") {
    Field f3(3, 1);

    // k = 2r: truncation keeps everything
    CapFamily small = build_cap(make_cap_spec(f3, 2, {1, 3}));
    truncate_cap(small);
    for (std::size_t i = 0; i < small.members.size(); ++i)
        CHECK(small.truncated[i].sub == small.members[i].sub);

    // residual index dropped: members have dimension 3, truncations 2
    CapFamily mid = build_cap(make_cap_spec(f3, 3, {1, 3, 4}));
    CHECK(mid.spec.r == 1);
    CHECK(mid.spec.jbar == std::vector<int>{3});
    truncate_cap(mid);
    GrassCtx ctx2(f3, 3, 2);
    std::vector<Subspace> tpts;
    for (const CapMember& m : mid.truncated) {
        CHECK(m.sub.basis.rows() == 2);
        tpts.push_back(m.sub);
    }
    CHECK(verify_polar_cap(ctx2, tpts).max_line_incidence <= 1);

    // second construction with a residual index: truncations keep 2r+1 rows
    CapFamily top = build_cap(make_cap_spec(f3, 4, {1, 3, 5, 9}));
    CHECK(top.table == 2);
    CHECK(top.spec.r == 1);
    CHECK(top.spec.jbar == std::vector<int>{3});
    truncate_cap(top);
    GrassCtx ctx3(f3, 4, 3);
    std::vector<Subspace> upts;
    for (const CapMember& m : top.truncated) {
        CHECK(m.sub.basis.rows() == 3);
        upts.push_back(m.sub);
    }
    CHECK(verify_polar_cap(ctx3, upts).max_line_incidence <= 1);

    CHECK_THROWS_AS(verify_polar_cap(GrassCtx(f3, 3, 3),
                                     std::vector<Subspace>{mid.members[0].sub,
                                                           Subspace{Mat(f3, 3, 7), -1}}),
                    Error);
}

TEST_CASE("full point sets are not polar caps, single points are") {
    for (int q : {2, 3}) {
        Field f(q, 1);
        GrassCtx ctx(f, 2, 2);
        const auto pts = enumerate_delta(ctx);
        const PolarCapReport all = verify_polar_cap(ctx, pts);
        CHECK(all.max_line_incidence == q + 1);
        CHECK(all.violating_line.size() == static_cast<std::size_t>(q + 1));

        CHECK(verify_polar_cap(ctx, {pts[0]}).max_line_incidence == 1);
        CHECK(verify_polar_cap(ctx, {}).max_line_incidence == 0);
    }
}

TEST_CASE("projective cap checks") {
    Field f2(2, 1);

    // the dual polar image is a cap
    GrassCtx dual(f2, 2, 2);
    const auto dual_pts = enumerate_delta(dual);
    const ProjSystem dual_sys = embed(dual, dual_pts);
    CHECK(verify_projective_cap(f2, dual_sys.points).ok);
    CHECK(verify_projective_cap(f2, dual_sys.points, 3).ok);

    // three points on an interior line are collinear in the image
    GrassCtx low(f2, 3, 2);
    const auto pts = enumerate_delta(low);
    const ProjSystem sys = embed(low, pts);
    const auto lines = enumerate_lines(low, pts);
    REQUIRE(!lines.empty());
    std::vector<ProjVec> triple;
    for (int i = 0; i < 3; ++i) triple.push_back(sys.points[lines[0].points[i]]);
    const ProjCapReport rep = verify_projective_cap(f2, triple);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violating == std::array<std::size_t, 3>{0, 1, 2});

    CHECK_THROWS(verify_projective_cap(f2, {dual_sys.points[0], dual_sys.points[0]}));
}

TEST_CASE("a permuted companion assignment behaves like the default") {
    Field f3(3, 1);
    const CapSpec spec = make_cap_spec(f3, 4, {1, 2, 5, 6}, {1, 0});
    const CapFamily fam = build_cap(spec);
    GrassCtx ctx(f3, 4, 4);
    std::vector<Subspace> pts;
    for (const CapMember& m : fam.members) {
        CHECK(ctx.polar.is_totally_singular(m.sub));
        pts.push_back(m.sub);
    }
    CHECK(verify_polar_cap(ctx, pts).max_line_incidence == 2);
    const ProjSystem sys = embed(ctx, pts);
    CHECK(verify_projective_cap(f3, sys.points).ok);

    CHECK_THROWS_AS(make_cap_spec(f3, 4, {1, 2, 5, 6}, {0, 0}), InvalidJ);
}

TEST_SUITE_END();

/**************************************************************************
 * test_quadform.cpp
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

#include <random>

#include "ogc/quadform.hpp"

using namespace ogc;

namespace {

std::vector<Felt> unit(const Field& f, int dim, int i1) {
    std::vector<Felt> v(dim, f.zero());
    v[i1 - 1] = f.one();
    return v;
}

Subspace coordinate_subspace(const Field& f, int dim, const std::vector<int>& idx1) {
    Mat m(f, idx1.size(), dim);
    for (std::size_t i = 0; i < idx1.size(); ++i) m.at(i, idx1[i] - 1) = f.one();
    return make_subspace(m);
}

std::vector<Felt> random_vec(const Field& f, int dim, std::mt19937& rng) {
    std::vector<Felt> v(dim);
    for (int i = 0; i < dim; ++i) v[i] = f.elem(static_cast<int>(rng() % f.q()));
    return v;
}

} // namespace

TEST_SUITE_BEGIN("quadform");

TEST_CASE("evaluation of the standard forms") {
    Field f3(3, 1), f2(2, 1);

    const QuadForm p2 = QuadForm::parabolic(f3, 2); // x1x3 + x2x4 + x5^2
    CHECK(p2.eval(unit(f3, 5, 1)) == f3.zero());
    CHECK(p2.eval(unit(f3, 5, 5)) == f3.one());

    const QuadForm p1 = QuadForm::parabolic(f2, 1); // x1x2 + x3^2
    CHECK(p1.eval({f2.one(), f2.one(), f2.zero()}) == f2.one());

    const QuadForm h2 = QuadForm::hyperbolic(f3, 2); // x1x3 + x2x4
    CHECK(h2.eval({f3.one(), f3.zero(), f3.one(), f3.zero()}) == f3.one());
    CHECK(h2.eval(unit(f3, 4, 2)) == f3.zero());

    CHECK_THROWS_AS(p2.eval({f3.one()}), DimMismatch);
}

TEST_CASE("evaluation is homogeneous of degree 2") {
    std::mt19937 rng(3);
    for (int q : {2, 3, 5}) {
        Field f(q, 1);
        PolarCtx ctx(QuadForm::parabolic(f, 2));
        for (int i = 0; i < 50; ++i) {
            const std::vector<Felt> x = random_vec(f, 5, rng);
            const Felt lam = f.elem(static_cast<int>(rng() % q));
            std::vector<Felt> lx(5);
            for (int j = 0; j < 5; ++j) lx[j] = f.mul(lam, x[j]);
            CHECK(ctx.form().eval(lx) == f.mul(f.mul(lam, lam), ctx.form().eval(x)));
        }
    }
}

TEST_CASE("polarization") {
    std::mt19937 rng(17);
    for (int q : {2, 3, 5}) {
        Field f(q, 1);
        const int n = 2, dim = 2 * n + 1;
        PolarCtx ctx(QuadForm::parabolic(f, n));

        // hyperbolic index pairs polarize to 1
        for (int i = 1; i <= 2 * n; ++i) {
            const int ip = (i <= n) ? i + n : i - n;
            CHECK(ctx.polar(unit(f, dim, i), unit(f, dim, ip)) == f.one());
        }
        CHECK(ctx.polar(unit(f, dim, 1), unit(f, dim, 2)) == f.zero());

        const Felt two = f.from_int(2);
        for (int i = 0; i < 30; ++i) {
            const std::vector<Felt> x = random_vec(f, dim, rng);
            const std::vector<Felt> y = random_vec(f, dim, rng);
            CHECK(ctx.polar(x, y) == ctx.polar(y, x));
            CHECK(ctx.polar(x, x) == f.mul(two, ctx.form().eval(x)));
            // f(x,y) = eta(x+y) - eta(x) - eta(y)
            std::vector<Felt> s(dim);
            for (int j = 0; j < dim; ++j) s[j] = f.add(x[j], y[j]);
            const Felt direct = f.sub(f.sub(ctx.form().eval(s), ctx.form().eval(x)),
                                      ctx.form().eval(y));
            CHECK(ctx.polar(x, y) == direct);
        }
    }
}

TEST_CASE("perp") {
    Field f3(3, 1);
    const int n = 2, dim = 5;
    PolarCtx ctx(QuadForm::parabolic(f3, n));

    // odd characteristic: the form is nondegenerate, the radical is zero
    Mat whole = identity(f3, dim);
    CHECK(ctx.perp(make_subspace(whole)).basis.rows() == 0);

    const Subspace e1 = coordinate_subspace(f3, dim, {1});
    const Subspace p = ctx.perp(e1);
    CHECK(p.basis.rows() == 4);

    // in characteristic 2 the polarized form has a one-dimensional radical
    Field f2(2, 1);
    PolarCtx ctx2(QuadForm::parabolic(f2, n));
    CHECK(ctx2.perp(make_subspace(identity(f2, dim))).basis.rows() == 1);

    // perp(perp(s)) contains s, and perp reverses inclusion
    std::mt19937 rng(29);
    for (int i = 0; i < 20; ++i) {
        Mat m(f3, 2, dim);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < dim; ++c) m.at(r, c) = f3.elem(static_cast<int>(rng() % 3));
        const Subspace s = make_subspace(m);
        if (s.basis.rows() == 0) continue;
        const Subspace pp = ctx.perp(ctx.perp(s));
        Mat stacked(f3, pp.basis.rows() + s.basis.rows(), dim);
        for (std::size_t r = 0; r < pp.basis.rows(); ++r)
            for (int c = 0; c < dim; ++c) stacked.at(r, c) = pp.basis.at(r, c);
        for (std::size_t r = 0; r < s.basis.rows(); ++r)
            for (int c = 0; c < dim; ++c) stacked.at(pp.basis.rows() + r, c) = s.basis.at(r, c);
        CHECK(rank(stacked) == pp.basis.rows());

        // s ⊆ t implies perp(t) ⊆ perp(s)
        Mat ext(f3, s.basis.rows() + 1, dim);
        for (std::size_t r = 0; r < s.basis.rows(); ++r)
            for (int c = 0; c < dim; ++c) ext.at(r, c) = s.basis.at(r, c);
        for (int c = 0; c < dim; ++c) ext.at(s.basis.rows(), c) = f3.elem(static_cast<int>(rng() % 3));
        const Subspace t = make_subspace(ext);
        const Subspace ps = ctx.perp(s), pt = ctx.perp(t);
        Mat both(f3, ps.basis.rows() + pt.basis.rows(), dim);
        for (std::size_t r = 0; r < ps.basis.rows(); ++r)
            for (int c = 0; c < dim; ++c) both.at(r, c) = ps.basis.at(r, c);
        for (std::size_t r = 0; r < pt.basis.rows(); ++r)
            for (int c = 0; c < dim; ++c) both.at(ps.basis.rows() + r, c) = pt.basis.at(r, c);
        CHECK(rank(both) == ps.basis.rows());
    }
}

TEST_CASE("totally singular subspaces") {
    Field f3(3, 1);
    const int n = 2, dim = 5;
    PolarCtx ctx(QuadForm::parabolic(f3, n));

    CHECK(ctx.is_totally_singular(coordinate_subspace(f3, dim, {1, 2})));
    CHECK_FALSE(ctx.is_totally_singular(coordinate_subspace(f3, dim, {5})));

    // e1 + e3 has eta = 1
    Mat m(f3, 1, dim);
    m.at(0, 0) = f3.one();
    m.at(0, n) = f3.one();
    CHECK_FALSE(ctx.is_totally_singular(make_subspace(m)));

    // basis criterion agrees with the all-vectors criterion
    std::mt19937 rng(31);
    for (int qq : {2, 3}) {
        Field fq(qq, 1);
        PolarCtx cq(QuadForm::parabolic(fq, n));
        for (int i = 0; i < 60; ++i) {
            const int nrows = 2 + static_cast<int>(rng() % 2);
            Mat r(fq, nrows, dim);
            for (int a = 0; a < nrows; ++a)
                for (int b = 0; b < dim; ++b) r.at(a, b) = fq.elem(static_cast<int>(rng() % qq));
            const Subspace s = make_subspace(r);
            const int k = static_cast<int>(s.basis.rows());
            if (k == 0) continue;
            std::uint64_t combos = 1;
            for (int a = 0; a < k; ++a) combos *= qq;
            bool all = true;
            for (std::uint64_t t = 1; t < combos && all; ++t) {
                std::vector<Felt> v(dim, fq.zero());
                std::uint64_t rr = t;
                for (int a = 0; a < k; ++a) {
                    const Felt coef = fq.elem(static_cast<int>(rr % qq));
                    rr /= qq;
                    if (coef.v == 0) continue;
                    for (int b = 0; b < dim; ++b)
                        v[b] = fq.add(v[b], fq.mul(coef, s.basis.at(a, b)));
                }
                if (cq.form().eval(v).v != 0) all = false;
            }
            CHECK(cq.is_totally_singular(s) == all);
        }
    }
}

TEST_CASE("singular point counts") {
    struct Case {
        int n, q;
        std::uint64_t want;
    };
    for (const Case& c : {Case{1, 2, 3}, Case{2, 2, 15}, Case{2, 3, 40}}) {
        Field f(c.q, 1);
        PolarCtx ctx(QuadForm::parabolic(f, c.n));
        CHECK(singular_points(ctx).size() == c.want);
    }
}

TEST_CASE("Witt index is n") {
    for (int q : {2, 3}) {
        Field f(q, 1);
        for (int n : {1, 2}) {
            PolarCtx ctx(QuadForm::parabolic(f, n));
            CHECK(ctx.is_totally_singular(
                coordinate_subspace(f, 2 * n + 1, [&] {
                    std::vector<int> idx;
                    for (int i = 1; i <= n; ++i) idx.push_back(i);
                    return idx;
                }())));
            CHECK(enumerate_totally_singular(ctx, n + 1).empty());
        }
    }
}

TEST_CASE("hyperbolic generator counts") {
    Field f2(2, 1), f3(3, 1);
    CHECK(generator_count_hyperbolic(f2, 1) == 6);
    CHECK(generator_count_hyperbolic(f3, 1) == 8);
    CHECK(generator_count_hyperbolic(f2, 2) == 30);
    CHECK(hyperbolic_generator_closed_form(1, 2) == 6);
    CHECK(hyperbolic_generator_closed_form(1, 3) == 8);
    CHECK(hyperbolic_generator_closed_form(2, 2) == 30);
}

TEST_CASE("quadric intersection scan at q = 3") {
    Field f3(3, 1);
    const QuadricScan scan = scan_quadric_intersections(f3, 1);
    CHECK(scan.all.max_size == 12);
    CHECK(scan.all.max_size == odd_intersection_closed_form(1, 3));
    CHECK(scan.all.witness_splits);
    CHECK(scan.no_shared.max_size <= no_shared_generator_bound(1, 3));
    CHECK(no_shared_generator_bound(1, 3) == 8);

    // sharding the coefficient space does not change the outcome
    const QuadricScan sharded = scan_quadric_intersections(f3, 1, std::uint64_t(1) << 24, 3);
    CHECK(sharded.all.max_size == scan.all.max_size);
    CHECK(sharded.all.witness_coeffs == scan.all.witness_coeffs);
    CHECK(sharded.no_shared.max_size == scan.no_shared.max_size);
    CHECK(sharded.no_shared.witness_coeffs == scan.no_shared.witness_coeffs);

    CHECK_THROWS_AS(scan_quadric_intersections(f3, 1, 100), BudgetExceeded);
}

TEST_CASE("eigenvector counting formula") {
    Field f3(3, 1);

    // M = I, B = 0 makes the two quadrics coincide
    const FormulaCheck same = intersection_formula_check(identity(f3, 2), Mat(f3, 2, 2), 1);
    CHECK(same.equal);
    CHECK(same.lhs == 16); // (q+1)^2 points of the hyperbolic quadric
    CHECK(same.eigenvectors == 8);

    // companion of x^2 + 1, irreducible over GF(3): no eigenvectors
    Mat m(f3, 2, 2);
    m.at(0, 1) = f3.from_int(-1);
    m.at(1, 0) = f3.one();
    Mat b(f3, 2, 2);
    b.at(0, 0) = f3.one();
    const FormulaCheck none = intersection_formula_check(m, b, 1);
    CHECK(none.equal);
    CHECK(none.eigenvectors == 0);
    CHECK(none.eigenvectors_b0 == 0);

    std::mt19937 rng(41);
    for (int i = 0; i < 25; ++i) {
        const int q = (i % 2) ? 5 : 3;
        Field f(q, 1);
        Mat mm(f, 2, 2), bb(f, 2, 2);
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s) mm.at(r, s) = f.elem(static_cast<int>(rng() % q));
        for (int r = 0; r < 2; ++r)
            for (int s = r; s < 2; ++s) {
                const Felt x = f.elem(static_cast<int>(rng() % q));
                bb.at(r, s) = x;
                bb.at(s, r) = x;
            }
        CHECK(intersection_formula_check(mm, bb, 1).equal);
    }

    // larger blocks: 3x3 over GF(3) inside PG(5,3)
    Field f3b(3, 1);
    CHECK(intersection_formula_check(identity(f3b, 3), Mat(f3b, 3, 3), 2).equal);
    for (int i = 0; i < 5; ++i) {
        Mat mm(f3b, 3, 3), bb(f3b, 3, 3);
        for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s) mm.at(r, s) = f3b.elem(static_cast<int>(rng() % 3));
        for (int r = 0; r < 3; ++r)
            for (int s = r; s < 3; ++s) {
                const Felt x = f3b.elem(static_cast<int>(rng() % 3));
                bb.at(r, s) = x;
                bb.at(s, r) = x;
            }
        CHECK(intersection_formula_check(mm, bb, 2).equal);
    }

    Field f2(2, 1);
    CHECK_THROWS_AS(intersection_formula_check(identity(f2, 2), Mat(f2, 2, 2), 1),
                    EvenCharacteristic);
}

TEST_SUITE_END();

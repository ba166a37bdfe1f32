/**************************************************************************
 * acceptance.cpp
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

#include "ogc/acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "ogc/caps.hpp"
#include "ogc/codes.hpp"
#include "ogc/grassmann.hpp"
#include "ogc/hadamard.hpp"
#include "ogc/quadform.hpp"
#include "ogc/spreads.hpp"

namespace ogc {

namespace {

std::pair<int, int> factor_prime_power(int q) {
    for (int p = 2; p <= q; ++p) {
        if (q % p) continue;
        int e = 0, m = q;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (m != 1) throw Error("not a prime power");
        return {p, e};
    }
    throw Error("not a prime power");
}

struct Workspace {
    int threads = 1;
    std::map<int, std::unique_ptr<Field>> fields;
    std::map<std::tuple<int, int, int>, std::vector<Subspace>> deltas;
    std::map<std::tuple<int, int, int>, ProjSystem> systems;
    std::map<std::tuple<int, int, int>, LinearCode> codes;

    const Field& field(int q) {
        auto it = fields.find(q);
        if (it == fields.end()) {
            auto [p, e] = factor_prime_power(q);
            it = fields.emplace(q, std::make_unique<Field>(p, e)).first;
        }
        return *it->second;
    }

    const std::vector<Subspace>& delta(int n, int k, int q) {
        const auto key = std::make_tuple(n, k, q);
        auto it = deltas.find(key);
        if (it == deltas.end()) {
            GrassCtx ctx(field(q), n, k);
            it = deltas.emplace(key, enumerate_delta(ctx)).first;
        }
        return it->second;
    }

    const ProjSystem& system(int n, int k, int q) {
        const auto key = std::make_tuple(n, k, q);
        auto it = systems.find(key);
        if (it == systems.end()) {
            GrassCtx ctx(field(q), n, k);
            it = systems.emplace(key, embed(ctx, delta(n, k, q))).first;
        }
        return it->second;
    }

    const LinearCode& code(int n, int k, int q) {
        const auto key = std::make_tuple(n, k, q);
        auto it = codes.find(key);
        if (it == codes.end())
            it = codes.emplace(key, code_from_system(field(q), system(n, k, q))).first;
        return it->second;
    }
};

struct Check {
    bool ok = true;
    std::ostringstream out;

    void expect(bool cond, const std::string& what) {
        if (!out.str().empty()) out << "; ";
        out << what;
        if (!cond) {
            ok = false;
            out << " [FAILED]";
        }
    }

    void note(const std::string& what) {
        if (!out.str().empty()) out << "; ";
        out << what;
    }
};

const std::vector<std::tuple<int, int, int>> kNkqCases = {
    {2, 1, 2}, {2, 2, 2}, {2, 2, 3}, {3, 1, 2},
    {3, 2, 2}, {3, 3, 2}, {3, 3, 3}, {2, 2, 5},
};

std::string nkq(int n, int k, int q) {
    std::ostringstream s;
    s << "(" << n << "," << k << "," << q << ")";
    return s.str();
}

Check criterion_point_counts(Workspace& ws) {
    Check c;
    for (auto [n, k, q] : kNkqCases) {
        const std::uint64_t got = ws.delta(n, k, q).size();
        const std::uint64_t want = delta_point_closed_form(n, k, q);
        c.expect(got == want, nkq(n, k, q) + " points=" + std::to_string(got) +
                                  " expect=" + std::to_string(want));
    }
    return c;
}

Check criterion_dimensions(Workspace& ws) {
    Check c;
    for (auto [n, k, q] : kNkqCases) {
        const int K = ws.code(n, k, q).K;
        const bool even = ws.field(q).is_even_char();
        const std::uint64_t want =
            binomial(2 * n + 1, k) - (even ? binomial(2 * n + 1, k - 2) : 0);
        c.expect(static_cast<std::uint64_t>(K) == want,
                 nkq(n, k, q) + " K=" + std::to_string(K) + " expect=" + std::to_string(want));
    }
    return c;
}

void check_code_params(Check& c, Workspace& ws, int n, int k, int q, int N, int K, int d) {
    const LinearCode& code = ws.code(n, k, q);
    c.expect(code.N == N && code.K == K,
             nkq(n, k, q) + " [N,K]=[" + std::to_string(code.N) + "," + std::to_string(code.K) +
                 "] expect=[" + std::to_string(N) + "," + std::to_string(K) + "]");
    const MinDistResult md = min_distance(ws.field(q), code, std::uint64_t(1) << 30, ws.threads);
    c.expect(md.d == d, nkq(n, k, q) + " d=" + std::to_string(md.d) + " expect=" + std::to_string(d));
}

Check criterion_c12(Workspace& ws) {
    Check c;
    check_code_params(c, ws, 2, 1, 2, 15, 5, 6);
    check_code_params(c, ws, 2, 1, 3, 40, 5, 24);
    return c;
}

Check criterion_c22(Workspace& ws) {
    Check c;
    check_code_params(c, ws, 2, 2, 2, 15, 9, 4);
    check_code_params(c, ws, 2, 2, 3, 40, 10, 18);
    const auto weights = weight_enumerator(ws.field(3), ws.code(2, 2, 3));
    std::set<int> support;
    for (const auto& [w, cnt] : weights)
        if (w != 0) support.insert(w);
    const std::set<int> expect = {18, 24, 27, 30, 36};
    std::ostringstream s;
    for (int w : support) s << w << " ";
    c.expect(support == expect, "C(2,2) q=3 weight support = { " + s.str() + "}");
    std::uint64_t total = 0;
    for (const auto& [w, cnt] : weights) total += cnt;
    c.expect(total == 59049, "weight counts sum to 3^10");
    return c;
}

Check criterion_c33(Workspace& ws) {
    Check c;
    check_code_params(c, ws, 3, 3, 2, 135, 28, 32);
    return c;
}

Check criterion_duality(Workspace& ws) {
    Check c;
    for (auto [n, k, q] :
         std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {2, 1, 3}, {2, 2, 2}, {2, 2, 3}}) {
        const int d1 = min_distance(ws.field(q), ws.code(n, k, q)).d;
        const int d2 = min_distance_by_hyperplanes(ws.field(q), ws.system(n, k, q));
        c.expect(d1 == d2, nkq(n, k, q) + " gray=" + std::to_string(d1) +
                               " hyperplane=" + std::to_string(d2));
    }
    return c;
}

Check criterion_mr1(Workspace& ws) {
    Check c;
    for (auto [n, k, q] : std::vector<std::tuple<int, int, int>>{{3, 2, 2}, {2, 1, 3}}) {
        const SpreadResult sp = max_partial_spread(ws.field(q), n - k, SpreadMethod::exact);
        const std::uint64_t bound = mr1_lower_bound(n, k, q, sp.size);
        const MinDistResult md =
            min_distance(ws.field(q), ws.code(n, k, q), std::uint64_t(1) << 30, ws.threads);
        c.expect(static_cast<std::uint64_t>(md.d) >= bound,
                 nkq(n, k, q) + " d=" + std::to_string(md.d) + " >= bound=" +
                     std::to_string(bound) + " (psi=" + std::to_string(sp.size) + ")");
    }
    return c;
}

Check criterion_quadrics(Workspace& ws) {
    Check c;
    for (int q : {3, 5}) {
        const QuadricScan scan =
            scan_quadric_intersections(ws.field(q), 1, std::uint64_t(1) << 24, ws.threads);
        const std::uint64_t closed = odd_intersection_closed_form(1, q);
        c.expect(scan.all.max_size == closed && closed == 4ull * q,
                 "q=" + std::to_string(q) + " max=" + std::to_string(scan.all.max_size) +
                     " expect=4q=" + std::to_string(closed));
        c.expect(scan.all.witness_splits, "q=" + std::to_string(q) + " witness pencil splits");
        const std::uint64_t bound = no_shared_generator_bound(1, q);
        c.expect(scan.no_shared.max_size <= bound,
                 "q=" + std::to_string(q) + " no-shared max=" +
                     std::to_string(scan.no_shared.max_size) + " <= " + std::to_string(bound));
    }

    // eigenvector formula: the identity case, then randomized blocks
    {
        const Field& f = ws.field(3);
        const Mat id2 = identity(f, 2);
        Mat zero(f, 2, 2);
        const FormulaCheck fc = intersection_formula_check(id2, zero, 1);
        c.expect(fc.equal && fc.lhs == 16, "M=I B=0 q=3: both sides 16");
    }
    std::mt19937 rng(12345);
    int passed = 0;
    const int instances = 100;
    for (int i = 0; i < instances; ++i) {
        const int q = (i % 2) ? 5 : 3;
        const Field& f = ws.field(q);
        Mat m(f, 2, 2), b(f, 2, 2);
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s) m.at(r, s) = f.elem(static_cast<int>(rng() % q));
        for (int r = 0; r < 2; ++r)
            for (int s = r; s < 2; ++s) {
                const Felt x = f.elem(static_cast<int>(rng() % q));
                b.at(r, s) = x;
                b.at(s, r) = x;
            }
        if (intersection_formula_check(m, b, 1).equal) ++passed;
    }
    c.expect(passed == instances,
             "formula check on " + std::to_string(passed) + "/" + std::to_string(instances) +
                 " random (M,B)");
    return c;
}

Check criterion_caps(Workspace& ws) {
    Check c;
    struct Case {
        int n, q;
        std::vector<int> J;
    };
    for (const Case& cs : std::vector<Case>{
             {2, 3, {1, 3}}, {3, 3, {1, 4, 7}}, {4, 3, {1, 2, 5, 6}}, {2, 5, {1, 3}}}) {
        const Field& f = ws.field(cs.q);
        const CapSpec spec = make_cap_spec(f, cs.n, cs.J);
        const CapFamily fam = build_cap(spec);
        std::ostringstream name;
        name << "n=" << cs.n << " q=" << cs.q << " r=" << spec.r;
        c.expect(fam.members.size() == (std::size_t(1) << spec.r),
                 name.str() + " members=2^r");

        GrassCtx ctx(f, cs.n, spec.k);
        std::vector<Subspace> pts;
        for (const CapMember& m : fam.members) pts.push_back(m.sub);
        const PolarCapReport pr = verify_polar_cap(ctx, pts);
        c.expect(pr.max_line_incidence <= 1,
                 name.str() + " line incidence=" + std::to_string(pr.max_line_incidence));
        if (pr.max_line_incidence > 1)
            c.note("members at index distance 1 share a (k-1)-space, collinear when k=n");

        const ProjSystem sys = embed(ctx, pts);
        const ProjCapReport pj = verify_projective_cap(f, sys.points, ws.threads);
        c.expect(pj.ok, name.str() + " wedge image is a cap");
    }
    return c;
}

Check criterion_dual_polar_caps(Workspace& ws) {
    Check c;
    for (auto [n, k, q] : std::vector<std::tuple<int, int, int>>{{2, 2, 2}, {2, 2, 3}, {3, 3, 2}}) {
        const ProjSystem& sys = ws.system(n, k, q);
        const ProjCapReport rep = verify_projective_cap(ws.field(q), sys.points, ws.threads);
        c.expect(rep.ok, nkq(n, k, q) + " image of " + std::to_string(sys.points.size()) +
                             " points is a cap");
    }
    return c;
}

// evaluations of the affine functions a0 + sum a_i x_i on GF(2)^r
std::set<std::vector<std::uint16_t>> rm_oracle_codewords(int r) {
    const int len = 1 << r;
    std::set<std::vector<std::uint16_t>> words;
    for (std::uint32_t a = 0; a < (std::uint32_t(1) << (r + 1)); ++a) {
        const int a0 = a & 1;
        const std::uint32_t mask = a >> 1;
        std::vector<std::uint16_t> w(len);
        for (int t = 0; t < len; ++t)
            w[t] = static_cast<std::uint16_t>(
                (a0 + std::popcount(mask & static_cast<std::uint32_t>(t))) % 2);
        words.insert(std::move(w));
    }
    return words;
}

Check criterion_hadamard(Workspace& ws) {
    Check c;
    struct Case {
        int n, q, r;
        std::vector<int> J;
    };
    for (const Case& cs : std::vector<Case>{{2, 3, 1, {1, 3}},
                                            {2, 5, 1, {1, 3}},
                                            {4, 3, 2, {1, 2, 5, 6}},
                                            {4, 5, 2, {1, 2, 5, 6}}}) {
        const Field& f = ws.field(cs.q);
        CapFamily fam = build_cap(make_cap_spec(f, cs.n, cs.J));
        truncate_cap(fam);
        const SignMatrix got = a_matrix_from_cap(fam);
        c.expect(got == a_matrix_formula(cs.r), "cap matrix r=" + std::to_string(cs.r) +
                                                    " q=" + std::to_string(cs.q) +
                                                    " equals the sign formula");
    }
    for (int r = 1; r <= 6; ++r) {
        const SignMatrix a = a_matrix_formula(r);
        c.expect(a == sylvester(r) && is_hadamard(a),
                 "r=" + std::to_string(r) + " formula = Sylvester, Hadamard");
    }
    {
        const DesignReport d3 = hadamard_design(a_matrix_formula(3));
        c.expect(d3.is_2design && d3.v == 7 && d3.block_size == 3 && d3.lambda == 1,
                 "r=3 design 2-(7,3,1)");
        const DesignReport d4 = hadamard_design(a_matrix_formula(4));
        c.expect(d4.is_2design && d4.v == 15 && d4.block_size == 7 && d4.lambda == 3,
                 "r=4 design 2-(15,7,3)");
    }
    for (int r = 1; r <= 4; ++r) {
        const Field& f2 = ws.field(2);
        const LinearCode code = rm_code(f2, r);
        const bool params = code.N == (1 << r) && code.K == r + 1 &&
                            code.d_exact.value_or(0) == (1 << (r - 1));
        std::set<std::vector<std::uint16_t>> got;
        const std::uint64_t total = std::uint64_t(1) << code.K;
        for (std::uint64_t t = 0; t < total; ++t) {
            std::vector<std::uint16_t> msg(code.K);
            for (int i = 0; i < code.K; ++i) msg[i] = (t >> i) & 1;
            const std::vector<Felt> cw = codeword_dense(f2, code.G, msg);
            std::vector<std::uint16_t> w(cw.size());
            for (std::size_t i = 0; i < cw.size(); ++i) w[i] = cw[i].v;
            got.insert(std::move(w));
        }
        c.expect(params && got == rm_oracle_codewords(r),
                 "r=" + std::to_string(r) + " code matches the affine evaluation code");
    }
    return c;
}

Check criterion_bounds_only(Workspace& ws) {
    Check c;
    // past-budget codes keep consistent bounds instead of exact distances
    {
        const LinearCode& code = ws.code(3, 3, 3);
        c.expect(code.N == 1120 && code.K == 35, "C(3,3) q=3 is [1120,35]");
        bool over_budget = false;
        try {
            min_distance(ws.field(3), code);
        } catch (const BudgetExceeded&) {
            over_budget = true;
        }
        c.expect(over_budget, "3^35 messages rejected by the budget");
        const int upper = min_weight_upper_bound(ws.field(3), code, 1 << 16);
        c.expect(1 <= upper && upper <= code.N - code.K + 1,
                 "d bounds 1 <= " + std::to_string(upper) + " <= Singleton " +
                     std::to_string(code.N - code.K + 1));
    }
    {
        const LinearCode& code = ws.code(3, 2, 3);
        c.expect(code.N == 3640 && code.K == 21, "C(2,3) q=3 is [3640,21]");
        bool over_budget = false;
        try {
            min_distance(ws.field(3), code);
        } catch (const BudgetExceeded&) {
            over_budget = true;
        }
        c.expect(over_budget, "3^21 messages rejected by the budget");
        const SpreadResult sp = max_partial_spread(ws.field(3), 1, SpreadMethod::exact);
        const std::uint64_t lower = mr1_lower_bound(3, 2, 3, sp.size);
        const int upper = min_weight_upper_bound(ws.field(3), code, 1 << 16);
        c.expect(lower <= static_cast<std::uint64_t>(upper) &&
                     upper <= code.N - code.K + 1,
                 "bounds " + std::to_string(lower) + " <= " + std::to_string(upper) +
                     " <= " + std::to_string(code.N - code.K + 1));
    }
    return c;
}

} // namespace

std::vector<CriterionResult> run_acceptance(int threads) {
    Workspace ws;
    ws.threads = threads;

    const std::vector<std::pair<std::string, std::function<Check(Workspace&)>>> table = {
        {"point counts match the closed form", criterion_point_counts},
        {"code dimensions match the binomial ranks", criterion_dimensions},
        {"C(1,2) parameters", criterion_c12},
        {"C(2,2) parameters and weight support", criterion_c22},
        {"C(3,3) q=2 parameters", criterion_c33},
        {"distance agrees with the hyperplane scan", criterion_duality},
        {"spread bound holds for k < n", criterion_mr1},
        {"quadric intersection maxima and formula", criterion_quadrics},
        {"cap families are polar and projective caps", criterion_caps},
        {"dual polar images are projective caps", criterion_dual_polar_caps},
        {"Hadamard, Sylvester, design, first-order code", criterion_hadamard},
        {"past-budget codes keep consistent bounds", criterion_bounds_only},
    };

    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        CriterionResult r;
        r.id = static_cast<int>(i + 1);
        r.name = table[i].first;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            Check c = table[i].second(ws);
            r.pass = c.ok;
            r.detail = c.out.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace ogc

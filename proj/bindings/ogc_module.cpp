/**************************************************************************
 * ogc_module.cpp
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

#include <memory>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ogc/acceptance.hpp"
#include "ogc/caps.hpp"
#include "ogc/codes.hpp"
#include "ogc/grassmann.hpp"
#include "ogc/hadamard.hpp"
#include "ogc/quadform.hpp"
#include "ogc/spreads.hpp"

namespace py = pybind11;
using namespace ogc;

namespace {

std::pair<int, int> factor_prime_power(int q) {
    for (int p = 2; p <= q; ++p) {
        if (q % p) continue;
        int e = 0, m = q;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (m != 1) throw Error("q must be a prime power");
        return {p, e};
    }
    throw Error("q must be a prime power");
}

std::unique_ptr<Field> field_for(int q) {
    auto [p, e] = factor_prime_power(q);
    return std::make_unique<Field>(p, e);
}

std::vector<std::vector<int>> basis_rows(const Mat& m) {
    std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j).v;
    return rows;
}

std::vector<std::vector<int>> sign_rows(const SignMatrix& a) {
    std::vector<std::vector<int>> rows(a.size(), std::vector<int>(a.size()));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) rows[i][j] = a.at(i, j);
    return rows;
}

SignMatrix sign_from_rows(const std::vector<std::vector<int>>& rows) {
    SignMatrix a;
    int r = 0;
    while ((1 << r) < static_cast<int>(rows.size())) ++r;
    if ((1 << r) != static_cast<int>(rows.size()))
        throw Error("matrix order must be a power of two");
    a.r = r;
    a.e.resize(rows.size() * rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw Error("matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[i][j] != 1 && rows[i][j] != -1) throw Error("entries must be +-1");
            a.at(static_cast<int>(i), static_cast<int>(j)) =
                static_cast<std::int8_t>(rows[i][j]);
        }
    }
    return a;
}

} // namespace

PYBIND11_MODULE(_ogc, m) {
    m.doc() = "orthogonal Grassmannian codes, caps and Hadamard matrices";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    py::register_exception<VerificationFailed>(m, "VerificationFailed");

    py::class_<Field>(m, "Field")
        .def(py::init<int, int>(), py::arg("p"), py::arg("e") = 1)
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("e", &Field::e)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("modulus", &Field::modulus)
        .def_property_readonly("is_even_char", &Field::is_even_char)
        .def("add", [](const Field& f, int a, int b) { return f.add(f.elem(a), f.elem(b)).v; })
        .def("sub", [](const Field& f, int a, int b) { return f.sub(f.elem(a), f.elem(b)).v; })
        .def("mul", [](const Field& f, int a, int b) { return f.mul(f.elem(a), f.elem(b)).v; })
        .def("neg", [](const Field& f, int a) { return f.neg(f.elem(a)).v; })
        .def("inv", [](const Field& f, int a) { return f.inv(f.elem(a)).v; })
        .def("pow", [](const Field& f, int a, long long n) { return f.pow(f.elem(a), n).v; });

    m.def("delta_count_formula", &delta_point_closed_form, py::arg("n"), py::arg("k"),
          py::arg("q"));

    m.def(
        "delta_points",
        [](int n, int k, int q, std::uint64_t cap) {
            auto f = field_for(q);
            GrassCtx ctx(*f, n, k);
            std::vector<std::vector<std::vector<int>>> out;
            for (const Subspace& s : enumerate_delta(ctx, cap))
                out.push_back(basis_rows(s.basis));
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("cap") = 1000000,
        "totally singular k-subspaces as basis matrices, sorted canonically");

    m.def(
        "code_report",
        [](int n, int k, int q, const std::string& mindist, std::uint64_t budget, bool weights,
           int threads) {
            auto f = field_for(q);
            GrassCtx ctx(*f, n, k);
            const ProjSystem sys = embed(ctx, enumerate_delta(ctx));
            const LinearCode code = code_from_system(*f, sys);
            py::dict out;
            out["n"] = n;
            out["k"] = k;
            out["q"] = q;
            out["N"] = code.N;
            out["K"] = code.K;
            if (mindist == "exact") {
                const MinDistResult md = min_distance(*f, code, budget, threads);
                out["d_exact"] = md.d;
                out["witness_message"] = md.witness;
            } else if (mindist == "bound") {
                int d_lower = 1;
                if (k < n) {
                    const SpreadResult sp = max_partial_spread(*f, n - k, SpreadMethod::exact);
                    d_lower = static_cast<int>(mr1_lower_bound(n, k, q, sp.size));
                    out["psi"] = sp.size;
                }
                out["d_lower"] = d_lower;
                out["d_upper"] = min_weight_upper_bound(*f, code, 1 << 16);
            }
            if (weights) {
                py::dict w;
                for (const auto& [wt, count] : weight_enumerator(*f, code, budget, threads))
                    w[py::int_(wt)] = count;
                out["weights"] = w;
            }
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("mindist") = "exact",
        py::arg("budget") = std::uint64_t(1) << 30, py::arg("weights") = false,
        py::arg("threads") = 1);

    m.def(
        "hyperplane_distance",
        [](int n, int k, int q, std::uint64_t budget) {
            auto f = field_for(q);
            GrassCtx ctx(*f, n, k);
            return min_distance_by_hyperplanes(*f, embed(ctx, enumerate_delta(ctx)), budget);
        },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("budget") = std::uint64_t(1) << 30,
        "minimum distance through the hyperplane-section route");

    m.def(
        "cap_family",
        [](int n, int q, const std::vector<int>& J, bool truncate, bool verify, int threads) {
            auto f = field_for(q);
            const CapSpec spec = make_cap_spec(*f, n, J);
            CapFamily fam = build_cap(spec);
            if (truncate) truncate_cap(fam);
            py::dict out;
            out["r"] = spec.r;
            out["k"] = spec.k;
            out["table"] = fam.table;
            std::vector<std::vector<std::vector<int>>> members;
            for (const CapMember& mm : fam.members) members.push_back(basis_rows(mm.sub.basis));
            out["members"] = members;
            if (truncate) {
                std::vector<std::vector<std::vector<int>>> tr;
                for (const CapMember& mm : fam.truncated) tr.push_back(basis_rows(mm.sub.basis));
                out["truncated"] = tr;
            }
            if (verify) {
                GrassCtx ctx(*f, n, spec.k);
                std::vector<Subspace> pts;
                for (const CapMember& mm : fam.members) pts.push_back(mm.sub);
                const PolarCapReport pr = verify_polar_cap(ctx, pts);
                const ProjCapReport pj = verify_projective_cap(*f, embed(ctx, pts).points, threads);
                out["max_line_incidence"] = pr.max_line_incidence;
                out["polar_cap_ok"] = pr.max_line_incidence <= 1;
                out["projective_cap_ok"] = pj.ok;
            }
            return out;
        },
        py::arg("n"), py::arg("q"), py::arg("J"), py::arg("truncate") = false,
        py::arg("verify") = false, py::arg("threads") = 1);

    m.def("a_matrix_formula", [](int r) { return sign_rows(a_matrix_formula(r)); }, py::arg("r"));
    m.def("sylvester_matrix", [](int r) { return sign_rows(sylvester(r)); }, py::arg("r"));
    m.def(
        "a_matrix_from_cap",
        [](int n, int q, const std::vector<int>& J) {
            auto f = field_for(q);
            CapFamily fam = build_cap(make_cap_spec(*f, n, J));
            truncate_cap(fam);
            return sign_rows(a_matrix_from_cap(fam));
        },
        py::arg("n"), py::arg("q"), py::arg("J"));
    m.def(
        "is_hadamard",
        [](const std::vector<std::vector<int>>& rows) { return is_hadamard(sign_from_rows(rows)); },
        py::arg("rows"));
    m.def(
        "hadamard_design_params",
        [](const std::vector<std::vector<int>>& rows) {
            const DesignReport d = hadamard_design(sign_from_rows(rows));
            py::dict out;
            out["v"] = d.v;
            out["block_size"] = d.block_size;
            out["lambda"] = d.lambda;
            out["is_2design"] = d.is_2design;
            return out;
        },
        py::arg("rows"));
    m.def(
        "rm_code_params",
        [](int r) {
            Field f2(2, 1);
            const LinearCode c = rm_code(f2, r);
            py::dict out;
            out["N"] = c.N;
            out["K"] = c.K;
            out["d"] = c.d_exact.value_or(0);
            return out;
        },
        py::arg("r"));

    m.def(
        "quadric_scan",
        [](int n, int q, std::uint64_t budget, int threads) {
            auto f = field_for(q);
            const QuadricScan scan = scan_quadric_intersections(*f, n, budget, threads);
            py::dict out;
            out["max_all"] = scan.all.max_size;
            out["witness_splits"] = scan.all.witness_splits;
            out["max_no_shared_generator"] = scan.no_shared.max_size;
            if (!f->is_even_char()) {
                out["closed_form"] = odd_intersection_closed_form(n, q);
                out["no_shared_bound"] = no_shared_generator_bound(n, q);
            }
            return out;
        },
        py::arg("n"), py::arg("q"), py::arg("budget") = std::uint64_t(1) << 24,
        py::arg("threads") = 1);

    m.def(
        "max_partial_spread",
        [](int m_, int q, const std::string& method, std::size_t vertex_cap) {
            auto f = field_for(q);
            const SpreadResult r = max_partial_spread(
                *f, m_, method == "greedy" ? SpreadMethod::greedy : SpreadMethod::exact,
                vertex_cap);
            py::dict out;
            out["m"] = r.m;
            out["q"] = r.q;
            out["size"] = r.size;
            out["exact"] = r.exact;
            out["is_spread"] = r.is_spread;
            return out;
        },
        py::arg("m"), py::arg("q"), py::arg("method") = "exact", py::arg("vertex_cap") = 5000);

    m.def(
        "run_acceptance",
        [](int threads) {
            py::list out;
            for (const CriterionResult& r : run_acceptance(threads)) {
                py::dict d;
                d["id"] = r.id;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                d["ms"] = r.ms;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("threads") = 1, "the full desk verification table");
}

/**************************************************************************
 * ogc.cpp
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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ogc/acceptance.hpp"
#include "ogc/caps.hpp"
#include "ogc/codes.hpp"
#include "ogc/grassmann.hpp"
#include "ogc/hadamard.hpp"
#include "ogc/quadform.hpp"
#include "ogc/spreads.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::pair<int, int> factor_prime_power(int q) {
    for (int p = 2; p <= q; ++p) {
        if (q % p) continue;
        int e = 0, m = q;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (m != 1) throw ogc::Error("q must be a prime power");
        return {p, e};
    }
    throw ogc::Error("q must be a prime power");
}

fs::path cache_dir() {
    if (const char* env = std::getenv("OGC_CACHE")) return fs::path(env);
    return fs::path(".ogc-cache");
}

json flat_basis(const ogc::Subspace& s) {
    json a = json::array();
    for (std::size_t i = 0; i < s.basis.rows(); ++i)
        for (std::size_t j = 0; j < s.basis.cols(); ++j) a.push_back(s.basis.at(i, j).v);
    return a;
}

json basis_rows(const ogc::Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).v);
        rows.push_back(std::move(row));
    }
    return rows;
}

json delta_payload(int n, int k, int q, const std::vector<ogc::Subspace>& pts) {
    json points = json::array();
    for (const ogc::Subspace& s : pts) points.push_back(flat_basis(s));
    return json{{"schema", 1}, {"n", n}, {"k", k}, {"q", q},
                {"count", pts.size()}, {"points", std::move(points)}};
}

std::vector<ogc::Subspace> delta_from_payload(const ogc::Field& f, const json& j) {
    const int n = j.at("n"), k = j.at("k");
    const int dim = 2 * n + 1;
    std::vector<ogc::Subspace> out;
    std::int32_t id = 0;
    for (const auto& flat : j.at("points")) {
        ogc::Mat m(f, k, dim);
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < dim; ++c)
                m.at(i, c) = f.elem(flat.at(static_cast<std::size_t>(i) * dim + c).get<int>());
        out.push_back(ogc::Subspace{std::move(m), id++});
    }
    return out;
}

// points from cache when allowed, enumerating (and optionally cross
// checking the cache) otherwise
std::vector<ogc::Subspace> load_delta(const ogc::Field& f, int n, int k, bool no_cache,
                                      int& cache_hits, bool& checksum_checked) {
    ogc::GrassCtx ctx(f, n, k);
    const fs::path dir = cache_dir();
    const fs::path file =
        dir / ("delta-n" + std::to_string(n) + "-k" + std::to_string(k) + "-q" +
               std::to_string(f.q()) + ".json");

    if (!no_cache && fs::exists(file)) {
        std::ifstream in(file);
        json j;
        in >> j;
        ++cache_hits;
        return delta_from_payload(f, j);
    }

    std::vector<ogc::Subspace> pts = ogc::enumerate_delta(ctx);
    if (no_cache && fs::exists(file)) {
        std::ifstream in(file);
        json j;
        in >> j;
        if (delta_payload(n, k, f.q(), pts) != j)
            throw ogc::VerificationFailed("cache content differs from a fresh enumeration");
        checksum_checked = true;
    }
    if (!no_cache) {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (!ec) {
            std::ofstream out(file);
            out << delta_payload(n, k, f.q(), pts).dump() << "\n";
        }
    }
    return pts;
}

struct Report {
    std::string command;
    json parameters = json::object();
    json results = json::object();
    json artifacts = json::array();
    int cache_hits = 0;
    bool verification_failed = false;
};

void emit(const Report& rep, double ms, const std::string& json_file) {
    json out{{"schema", 1},
             {"command", rep.command},
             {"parameters", rep.parameters},
             {"results", rep.results},
             {"runtime_ms", ms},
             {"cache_hits", rep.cache_hits},
             {"artifacts", rep.artifacts}};
    if (json_file.empty()) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ofstream f(json_file);
        f << out.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal Grassmannian codes, caps and Hadamard matrices"};
    app.require_subcommand(1);

    int threads = 1;
    bool no_cache = false;
    std::string json_file;
    app.add_option("--threads", threads, "worker threads");
    app.add_flag("--no-cache", no_cache, "skip the enumeration cache, cross-check it if present");
    app.add_option("--json", json_file, "write the run report to a file");

    // enum
    auto* cmd_enum = app.add_subcommand("enum", "enumerate the point set");
    int en = 2, ek = 1, eq = 2;
    std::string enum_out;
    cmd_enum->add_option("--n", en, "rank")->required();
    cmd_enum->add_option("--k", ek, "subspace dimension")->required();
    cmd_enum->add_option("--q", eq, "field order")->required();
    cmd_enum->add_option("--out", enum_out, "write the point payload to a file");

    // code
    auto* cmd_code = app.add_subcommand("code", "build the linear code");
    int cn = 2, ck = 1, cq = 2;
    std::string emit_generator, mindist = "exact";
    bool want_weights = false;
    std::uint64_t budget = std::uint64_t(1) << 30;
    cmd_code->add_option("--n", cn)->required();
    cmd_code->add_option("--k", ck)->required();
    cmd_code->add_option("--q", cq)->required();
    cmd_code->add_option("--emit-generator", emit_generator, "write the generator matrix");
    cmd_code->add_option("--mindist", mindist)->check(CLI::IsMember({"exact", "bound"}));
    cmd_code->add_flag("--weights", want_weights, "full weight table");
    cmd_code->add_option("--budget", budget, "message budget");

    // cap
    auto* cmd_cap = app.add_subcommand("cap", "build a cap family");
    int capn = 2, capq = 3, cap_table = 0;
    std::vector<int> capJ;
    std::string table_str = "auto";
    bool cap_truncate = false, cap_verify = false;
    cmd_cap->add_option("--n", capn)->required();
    cmd_cap->add_option("--q", capq)->required();
    cmd_cap->add_option("--J", capJ, "index set, comma separated")->required()->delimiter(',');
    cmd_cap->add_option("--table", table_str)->check(CLI::IsMember({"auto", "1", "2"}));
    cmd_cap->add_flag("--truncate", cap_truncate);
    cmd_cap->add_flag("--verify", cap_verify);

    // hadamard
    auto* cmd_had = app.add_subcommand("hadamard", "sign matrices and their checks");
    int hr = 0;
    std::vector<int> from_cap;
    std::vector<std::string> checks;
    std::string had_out;
    cmd_had->add_option("--r", hr, "rank parameter");
    cmd_had->add_option("--from-cap", from_cap, "n,q,J... build the matrix from a cap family")
        ->delimiter(',');
    cmd_had->add_option("--check", checks, "checks to run")
        ->delimiter(',')
        ->check(CLI::IsMember({"sylvester", "design", "rm", "hadamard"}));
    cmd_had->add_option("--out", had_out, "write the matrix as a +-1 grid");

    // quadrics
    auto* cmd_quad = app.add_subcommand("quadrics", "intersection maxima with the hyperbolic quadric");
    int qn = 1, qq = 3;
    std::string mode = "all";
    std::uint64_t qbudget = std::uint64_t(1) << 24;
    cmd_quad->add_option("--n", qn)->required();
    cmd_quad->add_option("--q", qq)->required();
    cmd_quad->add_option("--mode", mode)->check(CLI::IsMember({"all", "no-shared"}));
    cmd_quad->add_option("--budget", qbudget, "coefficient space budget");

    // spread
    auto* cmd_spread = app.add_subcommand("spread", "maximum partial spreads");
    int sm = 1, sq = 2;
    std::string method = "exact";
    std::size_t vertex_cap = 5000;
    cmd_spread->add_option("--m", sm)->required();
    cmd_spread->add_option("--q", sq)->required();
    cmd_spread->add_option("--method", method)->check(CLI::IsMember({"exact", "greedy"}));
    cmd_spread->add_option("--vertex-cap", vertex_cap, "clique search vertex cap");

    // verify-all
    auto* cmd_verify = app.add_subcommand("verify-all", "run the whole verification table");
    std::string suite = "desk";
    cmd_verify->add_option("--suite", suite)->check(CLI::IsMember({"desk"}));

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    Report rep;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (*cmd_enum) {
            rep.command = "enum";
            rep.parameters = {{"n", en}, {"k", ek}, {"q", eq}, {"no_cache", no_cache}};
            auto [p, e] = factor_prime_power(eq);
            ogc::Field f(p, e);
            bool checked = false;
            const auto pts = load_delta(f, en, ek, no_cache, rep.cache_hits, checked);
            json payload = delta_payload(en, ek, eq, pts);
            if (checked) rep.results["cache_checksum_ok"] = true;
            if (enum_out.empty()) {
                rep.results.update(payload);
            } else {
                std::ofstream out(enum_out);
                out << payload.dump(2) << "\n";
                rep.artifacts.push_back(enum_out);
                rep.results = {{"schema", 1}, {"n", en}, {"k", ek}, {"q", eq},
                               {"count", pts.size()}};
            }
        } else if (*cmd_code) {
            rep.command = "code";
            rep.parameters = {{"n", cn},           {"k", ck},       {"q", cq},
                              {"mindist", mindist}, {"budget", budget},
                              {"weights", want_weights}};
            auto [p, e] = factor_prime_power(cq);
            ogc::Field f(p, e);
            bool checked = false;
            const auto pts = load_delta(f, cn, ck, no_cache, rep.cache_hits, checked);
            ogc::GrassCtx ctx(f, cn, ck);
            const ogc::ProjSystem sys = ogc::embed(ctx, pts);
            ogc::LinearCode code = ogc::code_from_system(f, sys);
            rep.results = {{"schema", 1}, {"n", cn}, {"k", ck}, {"q", cq},
                           {"N", code.N}, {"K", code.K}};
            if (mindist == "exact") {
                const ogc::MinDistResult md = ogc::min_distance(f, code, budget, threads);
                code.d_exact = md.d;
                rep.results["d_exact"] = md.d;
                rep.results["witness_message"] = md.witness;
            } else {
                int d_lower = 1;
                if (ck < cn) {
                    const ogc::SpreadResult sp =
                        ogc::max_partial_spread(f, cn - ck, ogc::SpreadMethod::exact);
                    d_lower = static_cast<int>(ogc::mr1_lower_bound(cn, ck, cq, sp.size));
                    rep.results["psi"] = sp.size;
                }
                const int d_upper = ogc::min_weight_upper_bound(f, code, 1 << 16);
                rep.results["d_lower"] = d_lower;
                rep.results["d_upper"] = d_upper;
            }
            if (want_weights) {
                json w = json::object();
                for (const auto& [wt, count] : ogc::weight_enumerator(f, code, budget, threads))
                    w[std::to_string(wt)] = count;
                rep.results["weights"] = std::move(w);
            }
            if (!emit_generator.empty()) {
                std::ofstream out(emit_generator);
                out << cq << " " << code.N << " " << code.K << "\n";
                for (int i = 0; i < code.K; ++i) {
                    for (int j = 0; j < code.N; ++j)
                        out << (j ? " " : "") << code.G.at(i, j).v;
                    out << "\n";
                }
                rep.artifacts.push_back(emit_generator);
            }
        } else if (*cmd_cap) {
            rep.command = "cap";
            rep.parameters = {{"n", capn}, {"q", capq}, {"J", capJ},
                              {"table", table_str}, {"truncate", cap_truncate},
                              {"verify", cap_verify}};
            auto [p, e] = factor_prime_power(capq);
            ogc::Field f(p, e);
            cap_table = (table_str == "auto") ? 0 : std::stoi(table_str);
            const ogc::CapSpec spec = ogc::make_cap_spec(f, capn, capJ);
            ogc::CapFamily fam = ogc::build_cap(spec, cap_table);
            if (cap_truncate) ogc::truncate_cap(fam);

            json members = json::array();
            for (const auto& m : fam.members) members.push_back(basis_rows(m.sub.basis));
            rep.results = {{"schema", 1},   {"r", spec.r}, {"k", spec.k},
                           {"table", fam.table}, {"members", std::move(members)}};
            if (cap_truncate) {
                json tr = json::array();
                for (const auto& m : fam.truncated) tr.push_back(basis_rows(m.sub.basis));
                rep.results["truncated"] = std::move(tr);
            }
            if (cap_verify) {
                ogc::GrassCtx ctx(f, capn, spec.k);
                std::vector<ogc::Subspace> pts;
                for (const auto& m : fam.members) pts.push_back(m.sub);
                const ogc::PolarCapReport pr = ogc::verify_polar_cap(ctx, pts);
                const ogc::ProjSystem sys = ogc::embed(ctx, pts);
                const ogc::ProjCapReport pj = ogc::verify_projective_cap(f, sys.points, threads);
                rep.results["max_line_incidence"] = pr.max_line_incidence;
                rep.results["polar_cap_ok"] = (pr.max_line_incidence <= 1);
                rep.results["projective_cap_ok"] = pj.ok;
                if (pr.max_line_incidence > 1 || !pj.ok) rep.verification_failed = true;
            }
        } else if (*cmd_had) {
            rep.command = "hadamard";
            rep.parameters = {{"r", hr}, {"from_cap", from_cap}, {"check", checks}};
            ogc::SignMatrix a;
            std::unique_ptr<ogc::Field> f;
            if (!from_cap.empty()) {
                if (from_cap.size() < 3) throw ogc::Error("--from-cap needs n,q,J...");
                const int n = from_cap[0], q = from_cap[1];
                const std::vector<int> J(from_cap.begin() + 2, from_cap.end());
                auto [p, e] = factor_prime_power(q);
                f = std::make_unique<ogc::Field>(p, e);
                ogc::CapFamily fam = ogc::build_cap(ogc::make_cap_spec(*f, n, J));
                ogc::truncate_cap(fam);
                a = ogc::a_matrix_from_cap(fam);
                if (hr != 0 && hr != a.r) throw ogc::Error("--r disagrees with the cap family");
                rep.results["matrix_matches_formula"] = (a == ogc::a_matrix_formula(a.r));
            } else {
                if (hr < 1) throw ogc::Error("--r or --from-cap is required");
                if (hr > 10) throw ogc::BudgetExceeded("r beyond the matrix budget");
                a = ogc::a_matrix_formula(hr);
            }
            rep.results["schema"] = 1;
            rep.results["r"] = a.r;
            json checks_out = json::object();
            for (const std::string& c : checks) {
                if (c == "hadamard") {
                    checks_out["hadamard"] = ogc::is_hadamard(a);
                } else if (c == "sylvester") {
                    checks_out["sylvester"] = (a == ogc::sylvester(a.r));
                } else if (c == "design") {
                    const ogc::DesignReport d = ogc::hadamard_design(a);
                    checks_out["design"] =
                        json{{"v", d.v}, {"block_size", d.block_size}, {"lambda", d.lambda},
                             {"is_2design", d.is_2design},
                             {"ok", a.r >= 3 ? d.is_2design && d.v == (1 << a.r) - 1 &&
                                                   d.block_size == (1 << (a.r - 1)) - 1 &&
                                                   d.lambda == (1 << (a.r - 2)) - 1
                                             : d.lambda == 0}};
                } else if (c == "rm") {
                    ogc::Field f2(2, 1);
                    const ogc::LinearCode code = ogc::rm_code(f2, a.r);
                    checks_out["rm"] = json{{"N", code.N},
                                            {"K", code.K},
                                            {"d", code.d_exact.value_or(0)},
                                            {"ok", code.N == (1 << a.r) && code.K == a.r + 1 &&
                                                       code.d_exact.value_or(0) ==
                                                           (1 << (a.r - 1))}};
                }
            }
            for (const auto& [name, val] : checks_out.items()) {
                const bool ok = val.is_boolean() ? val.get<bool>() : val.at("ok").get<bool>();
                if (!ok) rep.verification_failed = true;
            }
            if (rep.results.contains("matrix_matches_formula") &&
                !rep.results["matrix_matches_formula"].get<bool>())
                rep.verification_failed = true;
            rep.results["checks"] = std::move(checks_out);
            if (!had_out.empty()) {
                std::ofstream out(had_out);
                for (int i = 0; i < a.size(); ++i) {
                    for (int j = 0; j < a.size(); ++j)
                        out << (j ? " " : "") << static_cast<int>(a.at(i, j));
                    out << "\n";
                }
                rep.artifacts.push_back(had_out);
            }
        } else if (*cmd_quad) {
            rep.command = "quadrics";
            rep.parameters = {{"n", qn}, {"q", qq}, {"mode", mode}, {"budget", qbudget}};
            auto [p, e] = factor_prime_power(qq);
            ogc::Field f(p, e);
            const ogc::QuadricScan scan =
                ogc::scan_quadric_intersections(f, qn, qbudget, threads);
            const bool odd = !f.is_even_char();
            if (mode == "all") {
                const std::uint64_t formula = odd ? ogc::odd_intersection_closed_form(qn, qq) : 0;
                rep.results = {{"schema", 1},
                               {"max", scan.all.max_size},
                               {"witness_coeffs", scan.all.witness_coeffs},
                               {"witness_splits", scan.all.witness_splits}};
                if (odd) {
                    rep.results["formula_value"] = formula;
                    rep.results["match"] = (scan.all.max_size == formula);
                    if (scan.all.max_size != formula) rep.verification_failed = true;
                }
            } else {
                const std::uint64_t bound = ogc::no_shared_generator_bound(qn, qq);
                rep.results = {{"schema", 1},
                               {"max", scan.no_shared.max_size},
                               {"witness_coeffs", scan.no_shared.witness_coeffs},
                               {"formula_value", bound},
                               {"match", scan.no_shared.max_size <= bound}};
                if (scan.no_shared.max_size > bound) rep.verification_failed = true;
            }
        } else if (*cmd_spread) {
            rep.command = "spread";
            rep.parameters = {{"m", sm}, {"q", sq}, {"method", method}};
            auto [p, e] = factor_prime_power(sq);
            ogc::Field f(p, e);
            const ogc::SpreadResult r = ogc::max_partial_spread(
                f, sm, method == "exact" ? ogc::SpreadMethod::exact : ogc::SpreadMethod::greedy,
                vertex_cap);
            std::uint64_t even_form = 1, partition_form = 1;
            for (int i = 0; i < sm + 1; ++i) even_form *= sq;
            for (int i = 0; i < sm; ++i) partition_form *= sq;
            rep.results = {{"schema", 1},
                           {"m", r.m},
                           {"q", r.q},
                           {"size", r.size},
                           {"exact", r.exact},
                           {"is_spread", r.is_spread},
                           {"closed_form_candidates",
                            {{"q_pow_m_plus_1_plus_1", even_form + 1},
                             {"q_pow_m_plus_1", partition_form + 1}}}};
        } else if (*cmd_verify) {
            rep.command = "verify-all";
            rep.parameters = {{"suite", suite}, {"threads", threads}};
            const auto results = ogc::run_acceptance(threads);
            json arr = json::array();
            bool all = true;
            for (const auto& r : results) {
                std::cerr << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": "
                          << r.name << " — " << r.detail << "\n";
                arr.push_back({{"id", r.id},
                               {"name", r.name},
                               {"pass", r.pass},
                               {"detail", r.detail},
                               {"ms", r.ms}});
                all = all && r.pass;
            }
            rep.results = {{"schema", 1}, {"criteria", std::move(arr)}, {"all_pass", all}};
            if (!all) rep.verification_failed = true;
        }
    } catch (const ogc::VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 2;
    } catch (const ogc::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const auto t1 = std::chrono::steady_clock::now();
    emit(rep, std::chrono::duration<double, std::milli>(t1 - t0).count(), json_file);
    return rep.verification_failed ? 2 : 0;
}

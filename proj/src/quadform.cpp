/**************************************************************************
 * quadform.cpp
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

#include "ogc/quadform.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace ogc {

namespace {

std::uint64_t powu(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Visit every canonical projective vector of GF(q)^dim: leading zeros,
// then a 1, then free coordinates run as an odometer.
template <typename Fn>
void for_each_projective_point(const Field& f, int dim, Fn&& fn) {
    const int q = f.q();
    std::vector<Felt> v(dim, f.zero());
    for (int lead = 0; lead < dim; ++lead) {
        std::fill(v.begin(), v.end(), f.zero());
        v[lead] = f.one();
        while (true) {
            fn(v);
            int pos = dim - 1;
            while (pos > lead && v[pos].v == static_cast<unsigned>(q - 1)) {
                v[pos] = f.zero();
                --pos;
            }
            if (pos == lead) break;
            v[pos] = f.elem(v[pos].v + 1);
        }
    }
}

} // namespace

QuadForm::QuadForm(const Field& f, int dim)
    : f_(&f), dim_(dim), coef_(static_cast<std::size_t>(dim) * (dim + 1) / 2, f.zero()) {}

int QuadForm::tri_index(int i, int j) const {
    // packed upper triangle, row-major over pairs i <= j
    return i * dim_ - i * (i - 1) / 2 + (j - i);
}

QuadForm QuadForm::parabolic(const Field& f, int n) {
    QuadForm qf(f, 2 * n + 1);
    for (int i = 0; i < n; ++i) qf.set_coeff(i, n + i, f.one());
    qf.set_coeff(2 * n, 2 * n, f.one());
    return qf;
}

QuadForm QuadForm::hyperbolic(const Field& f, int m) {
    QuadForm qf(f, 2 * m);
    for (int i = 0; i < m; ++i) qf.set_coeff(i, m + i, f.one());
    return qf;
}

Felt QuadForm::eval(const std::vector<Felt>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimMismatch("eval: wrong vector length");
    const Field& f = *f_;
    Felt acc = f.zero();
    int t = 0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j, ++t) {
            const Felt c = coef_[t];
            if (c.v == 0) continue;
            acc = f.add(acc, f.mul(c, f.mul(x[i], x[j])));
        }
    return acc;
}

PolarCtx::PolarCtx(QuadForm form) : form_(std::move(form)), gram_(form_.field(), form_.dim(), form_.dim()) {
    const Field& f = form_.field();
    const int d = form_.dim();
    for (int i = 0; i < d; ++i) {
        gram_.at(i, i) = f.add(form_.coeff(i, i), form_.coeff(i, i));
        for (int j = i + 1; j < d; ++j) {
            gram_.at(i, j) = form_.coeff(i, j);
            gram_.at(j, i) = form_.coeff(i, j);
        }
    }
}

Felt PolarCtx::polar(const std::vector<Felt>& x, const std::vector<Felt>& y) const {
    const Field& f = field();
    const int d = dim();
    if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
        throw DimMismatch("polar: wrong vector length");
    Felt acc = f.zero();
    for (int i = 0; i < d; ++i) {
        if (x[i].v == 0) continue;
        Felt row = f.zero();
        for (int j = 0; j < d; ++j) {
            const Felt g = gram_.at(i, j);
            if (g.v == 0 || y[j].v == 0) continue;
            row = f.add(row, f.mul(g, y[j]));
        }
        acc = f.add(acc, f.mul(x[i], row));
    }
    return acc;
}

bool PolarCtx::is_singular_vector(const std::vector<Felt>& x) const {
    return form_.eval(x).v == 0;
}

bool PolarCtx::is_totally_singular(const Subspace& s) const {
    const std::size_t k = s.basis.rows();
    std::vector<std::vector<Felt>> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = s.basis.row(i);
    for (std::size_t i = 0; i < k; ++i) {
        if (!is_singular_vector(rows[i])) return false;
        for (std::size_t j = i + 1; j < k; ++j)
            if (polar(rows[i], rows[j]).v != 0) return false;
    }
    return true;
}

Subspace PolarCtx::perp(const Subspace& s) const {
    // constraints f(v, u) = 0, one row (G u)^T per basis vector u
    Mat c = mat_mul(s.basis, gram_);
    Mat k = kernel(c);
    return make_subspace(k.transpose());
}

std::vector<ProjVec> singular_points(const PolarCtx& ctx) {
    std::vector<ProjVec> out;
    for_each_projective_point(ctx.field(), ctx.dim(), [&](const std::vector<Felt>& v) {
        if (ctx.is_singular_vector(v)) out.push_back(ProjVec{v, true});
    });
    return out;
}

std::vector<Subspace> enumerate_totally_singular(const PolarCtx& ctx, int k, std::uint64_t cap) {
    const Field& f = ctx.field();
    const int dim = ctx.dim();
    const int q = f.q();

    std::vector<Mat> level;
    for (const ProjVec& pt : singular_points(ctx)) {
        Mat b(f, 1, dim);
        for (int j = 0; j < dim; ++j) b.at(0, j) = pt.coords[j];
        level.push_back(std::move(b));
    }
    if (cap && level.size() > cap) throw BudgetExceeded("totally singular enumeration over cap");

    for (int d = 2; d <= k; ++d) {
        std::unordered_set<std::vector<std::uint16_t>, KeyHash> seen;
        std::vector<Mat> next;
        std::vector<Felt> v(dim);
        for (const Mat& u : level) {
            const Subspace pp = ctx.perp(Subspace{u, -1});
            const int pr = static_cast<int>(pp.basis.rows());
            // canonical combinations of the perp basis rows
            std::vector<Felt> c(pr, f.zero());
            for (int lead = 0; lead < pr; ++lead) {
                std::fill(c.begin(), c.end(), f.zero());
                c[lead] = f.one();
                while (true) {
                    std::fill(v.begin(), v.end(), f.zero());
                    for (int i = lead; i < pr; ++i) {
                        if (c[i].v == 0) continue;
                        for (int j = 0; j < dim; ++j)
                            v[j] = f.add(v[j], f.mul(c[i], pp.basis.at(i, j)));
                    }
                    if (ctx.is_singular_vector(v)) {
                        Mat stacked(f, u.rows() + 1, dim);
                        for (std::size_t i = 0; i < u.rows(); ++i)
                            for (int j = 0; j < dim; ++j) stacked.at(i, j) = u.at(i, j);
                        for (int j = 0; j < dim; ++j) stacked.at(u.rows(), j) = v[j];
                        Subspace cand = make_subspace(stacked);
                        if (cand.basis.rows() == static_cast<std::size_t>(d)) {
                            auto key = cand.basis.key();
                            if (seen.insert(std::move(key)).second) {
                                next.push_back(cand.basis);
                                if (cap && next.size() > cap)
                                    throw BudgetExceeded("totally singular enumeration over cap");
                            }
                        }
                    }
                    int pos = pr - 1;
                    while (pos > lead && c[pos].v == static_cast<unsigned>(q - 1)) {
                        c[pos] = f.zero();
                        --pos;
                    }
                    if (pos == lead) break;
                    c[pos] = f.elem(c[pos].v + 1);
                }
            }
        }
        level = std::move(next);
    }

    std::sort(level.begin(), level.end(),
              [](const Mat& a, const Mat& b) { return a.key() < b.key(); });
    std::vector<Subspace> out;
    out.reserve(level.size());
    for (std::size_t i = 0; i < level.size(); ++i)
        out.push_back(Subspace{std::move(level[i]), static_cast<std::int32_t>(i)});
    return out;
}

std::uint64_t generator_count_hyperbolic(const Field& f, int n) {
    PolarCtx ctx(QuadForm::hyperbolic(f, n + 1));
    return enumerate_totally_singular(ctx, n + 1).size();
}

std::uint64_t hyperbolic_generator_closed_form(int n, std::uint64_t q) {
    std::uint64_t r = 2;
    for (int i = 1; i <= n; ++i) r *= powu(q, i) + 1;
    return r;
}

std::uint64_t odd_intersection_closed_form(int n, std::uint64_t q) {
    const std::uint64_t num = 2 * powu(q, 2 * n) - powu(q, 2 * n - 1) + 2 * powu(q, n + 1) -
                              3 * powu(q, n) + powu(q, n - 1) - 1;
    return num / (q - 1);
}

std::uint64_t no_shared_generator_bound(int n, std::uint64_t q) {
    return (2 * powu(q, n) - powu(q, n - 1) - 1) * (powu(q, n) + 1) / (q - 1);
}

namespace {

// Zero-pattern bitmask over an indexed point list.
struct Bitset {
    std::vector<std::uint64_t> w;
    explicit Bitset(std::size_t n) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear() { std::fill(w.begin(), w.end(), 0); }
    bool contains(const Bitset& sub) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if ((w[i] & sub.w[i]) != sub.w[i]) return false;
        return true;
    }
};

struct ScanShard {
    std::uint64_t best_all = 0, idx_all = 0;
    std::vector<std::uint16_t> wit_all;
    std::uint64_t best_ns = 0, idx_ns = 0;
    std::vector<std::uint16_t> wit_ns;
    bool any_all = false, any_ns = false;
};

// Does the pencil of w and the hyperbolic form contain a quadric whose
// zero set is the union of two distinct hyperplanes?
bool pencil_splits(const Field& f, int dim, const std::vector<std::uint16_t>& w,
                   const QuadForm& qp) {
    const int q = f.q();
    const std::uint64_t hyp_pts = (powu(q, dim - 1) - 1) / (q - 1);
    const std::uint64_t meet_pts = (powu(q, dim - 2) - 1) / (q - 1);
    for (int l = 0; l < q; ++l) {
        const Felt lam = f.elem(l);
        QuadForm r(f, dim);
        {
            int t = 0;
            for (int i = 0; i < dim; ++i)
                for (int j = i; j < dim; ++j, ++t)
                    r.set_coeff(i, j, f.sub(Felt{w[t]}, f.mul(lam, qp.coeff(i, j))));
        }
        bool all_zero = true;
        for (Felt c : r.coeffs())
            if (c.v != 0) { all_zero = false; break; }
        if (all_zero) continue;

        std::vector<std::vector<Felt>> zset;
        for_each_projective_point(f, dim, [&](const std::vector<Felt>& v) {
            if (r.eval(v).v == 0) zset.push_back(v);
        });
        if (zset.size() != 2 * hyp_pts - meet_pts) continue;

        // hyperplanes fully inside the zero set
        int contained = 0;
        for_each_projective_point(f, dim, [&](const std::vector<Felt>& h) {
            std::uint64_t onh = 0;
            for (const auto& z : zset) {
                Felt s = f.zero();
                for (int j = 0; j < dim; ++j) s = f.add(s, f.mul(h[j], z[j]));
                if (s.v == 0) ++onh;
            }
            if (onh == hyp_pts) ++contained;
        });
        if (contained == 2) return true;
    }
    return false;
}

} // namespace

QuadricScan scan_quadric_intersections(const Field& f, int n, std::uint64_t budget, int threads) {
    const int dim = 2 * n + 2;
    const int q = f.q();
    const int T = dim * (dim + 1) / 2;

    unsigned __int128 tot = 0;
    {
        unsigned __int128 pw = 1;
        for (int i = 0; i < T; ++i) pw *= q;
        tot = (pw - 1) / (q - 1);
    }
    if (tot > budget) throw BudgetExceeded("quadric coefficient space over budget");
    const std::uint64_t total = static_cast<std::uint64_t>(tot);

    const QuadForm qplus = QuadForm::hyperbolic(f, n + 1);
    PolarCtx ctx(qplus);
    const std::vector<ProjVec> pts = singular_points(ctx);
    const std::size_t np = pts.size();

    // monomial values x_i x_j per point, packed like the coefficients
    std::vector<std::vector<std::uint32_t>> mon(np, std::vector<std::uint32_t>(T));
    for (std::size_t pi = 0; pi < np; ++pi) {
        int t = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j, ++t)
                mon[pi][t] = f.mul(pts[pi].coords[i], pts[pi].coords[j]).v;
    }

    std::unordered_map<std::vector<std::uint16_t>, std::size_t, KeyHash> pt_index;
    for (std::size_t pi = 0; pi < np; ++pi) {
        std::vector<std::uint16_t> k(dim);
        for (int j = 0; j < dim; ++j) k[j] = pts[pi].coords[j].v;
        pt_index.emplace(std::move(k), pi);
    }

    // generators of Q+ as point bitmasks
    std::vector<Bitset> gens;
    for (const Subspace& g : enumerate_totally_singular(ctx, n + 1)) {
        Bitset mask(np);
        for_each_projective_point(f, n + 1, [&](const std::vector<Felt>& c) {
            std::vector<std::uint16_t> key(dim, 0);
            std::vector<Felt> v(dim, f.zero());
            for (int i = 0; i < n + 1; ++i) {
                if (c[i].v == 0) continue;
                for (int j = 0; j < dim; ++j)
                    v[j] = f.add(v[j], f.mul(c[i], g.basis.at(i, j)));
            }
            ProjVec cv = canonical_projective(f, v);
            for (int j = 0; j < dim; ++j) key[j] = cv.coords[j].v;
            mask.set(pt_index.at(key));
        });
        gens.push_back(std::move(mask));
    }

    // canonical coefficient vector of Q+ itself, to be skipped
    std::vector<std::uint16_t> qp_key(T);
    {
        ProjVec c = canonical_projective(f, qplus.coeffs());
        for (int t = 0; t < T; ++t) qp_key[t] = c.coords[t].v;
    }

    const bool prime_field = (f.e() == 1);

    auto run_shard = [&](std::uint64_t lo, std::uint64_t hi, ScanShard& sh) {
        if (lo >= hi) return;
        // decode lo into (lead, free digits)
        int lead = 0;
        std::uint64_t rem = lo;
        while (true) {
            const std::uint64_t block = powu(q, T - 1 - lead);
            if (rem < block) break;
            rem -= block;
            ++lead;
        }
        std::vector<std::uint16_t> c(T, 0);
        c[lead] = 1;
        for (int pos = T - 1; pos > lead; --pos) {
            c[pos] = static_cast<std::uint16_t>(rem % q);
            rem /= q;
        }

        Bitset zmask(np);
        std::vector<Felt> cf(T);
        for (std::uint64_t g = lo; g < hi; ++g) {
            if (!std::equal(c.begin(), c.end(), qp_key.begin())) {
                zmask.clear();
                std::uint64_t zc = 0;
                if (prime_field) {
                    for (std::size_t pi = 0; pi < np; ++pi) {
                        std::uint64_t s = 0;
                        const std::uint32_t* m = mon[pi].data();
                        for (int t = 0; t < T; ++t) s += std::uint64_t(c[t]) * m[t];
                        if (s % q == 0) {
                            zmask.set(pi);
                            ++zc;
                        }
                    }
                } else {
                    for (int t = 0; t < T; ++t) cf[t] = Felt{c[t]};
                    for (std::size_t pi = 0; pi < np; ++pi) {
                        Felt s = f.zero();
                        for (int t = 0; t < T; ++t)
                            if (cf[t].v && mon[pi][t])
                                s = f.add(s, f.mul(cf[t], Felt{static_cast<std::uint16_t>(mon[pi][t])}));
                        if (s.v == 0) {
                            zmask.set(pi);
                            ++zc;
                        }
                    }
                }
                if (!sh.any_all || zc > sh.best_all) {
                    sh.any_all = true;
                    sh.best_all = zc;
                    sh.idx_all = g;
                    sh.wit_all = c;
                }
                bool shares = false;
                for (const Bitset& gm : gens)
                    if (zmask.contains(gm)) { shares = true; break; }
                if (!shares && (!sh.any_ns || zc > sh.best_ns)) {
                    sh.any_ns = true;
                    sh.best_ns = zc;
                    sh.idx_ns = g;
                    sh.wit_ns = c;
                }
            }
            // advance the canonical odometer
            int pos = T - 1;
            while (pos > lead && c[pos] == q - 1) {
                c[pos] = 0;
                --pos;
            }
            if (pos == lead) {
                c[lead] = 0;
                ++lead;
                if (lead < T) c[lead] = 1;
            } else {
                ++c[pos];
            }
        }
    };

    const int nt = std::max(1, threads);
    std::vector<ScanShard> shards(nt);
    if (nt == 1) {
        run_shard(0, total, shards[0]);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nt; ++i) {
            const std::uint64_t lo = total * i / nt;
            const std::uint64_t hi = total * (i + 1) / nt;
            pool.emplace_back(run_shard, lo, hi, std::ref(shards[i]));
        }
        for (auto& t : pool) t.join();
    }

    QuadricScan out;
    out.quadrics_scanned = total - 1;
    bool aa = false, an = false;
    std::uint64_t ia = 0, in = 0;
    for (const ScanShard& sh : shards) {
        if (sh.any_all && (!aa || sh.best_all > out.all.max_size ||
                           (sh.best_all == out.all.max_size && sh.idx_all < ia))) {
            aa = true;
            out.all.max_size = sh.best_all;
            out.all.witness_coeffs = sh.wit_all;
            ia = sh.idx_all;
        }
        if (sh.any_ns && (!an || sh.best_ns > out.no_shared.max_size ||
                          (sh.best_ns == out.no_shared.max_size && sh.idx_ns < in))) {
            an = true;
            out.no_shared.max_size = sh.best_ns;
            out.no_shared.witness_coeffs = sh.wit_ns;
            in = sh.idx_ns;
        }
    }
    if (aa) out.all.witness_splits = pencil_splits(f, dim, out.all.witness_coeffs, qplus);
    if (an) out.no_shared.witness_splits = pencil_splits(f, dim, out.no_shared.witness_coeffs, qplus);
    return out;
}

FormulaCheck intersection_formula_check(const Mat& M, const Mat& B, int n) {
    const Field& f = M.field();
    const int m = n + 1;
    if (static_cast<int>(M.rows()) != m || static_cast<int>(M.cols()) != m ||
        static_cast<int>(B.rows()) != m || static_cast<int>(B.cols()) != m)
        throw DimMismatch("formula check expects (n+1)-square blocks");
    if (f.is_even_char()) throw EvenCharacteristic("formula check requires odd q");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (B.at(i, j) != B.at(j, i)) throw DimMismatch("B must be symmetric");

    const std::uint64_t q = f.q();
    const int dim = 2 * m;

    // lhs: points on both X^T Y = 0 and 2 X^T M Y + Y^T B Y = 0
    std::uint64_t lhs = 0;
    const Felt two = f.from_int(2);
    for_each_projective_point(f, dim, [&](const std::vector<Felt>& z) {
        Felt xy = f.zero();
        for (int i = 0; i < m; ++i) xy = f.add(xy, f.mul(z[i], z[m + i]));
        if (xy.v != 0) return;
        Felt s = f.zero();
        for (int i = 0; i < m; ++i) {
            if (z[i].v == 0) continue;
            Felt row = f.zero();
            for (int j = 0; j < m; ++j) row = f.add(row, f.mul(M.at(i, j), z[m + j]));
            s = f.add(s, f.mul(z[i], row));
        }
        s = f.mul(two, s);
        for (int i = 0; i < m; ++i) {
            if (z[m + i].v == 0) continue;
            Felt row = f.zero();
            for (int j = 0; j < m; ++j) row = f.add(row, f.mul(B.at(i, j), z[m + j]));
            s = f.add(s, f.mul(z[m + i], row));
        }
        if (s.v == 0) ++lhs;
    });

    // rhs: count eigenvectors of M, splitting off those with Y^T B Y = 0
    std::uint64_t nvec = 0, n0 = 0;
    std::vector<Felt> y(m), my(m);
    std::vector<int> digits(m, 0);
    const std::uint64_t ym = powu(q, m);
    for (std::uint64_t t = 1; t < ym; ++t) {
        std::uint64_t r = t;
        for (int i = 0; i < m; ++i) {
            y[i] = f.elem(static_cast<int>(r % q));
            r /= q;
        }
        for (int i = 0; i < m; ++i) {
            Felt s = f.zero();
            for (int j = 0; j < m; ++j) s = f.add(s, f.mul(M.at(i, j), y[j]));
            my[i] = s;
        }
        int lead = -1;
        for (int i = 0; i < m; ++i)
            if (y[i].v != 0) { lead = i; break; }
        const Felt lam = f.mul(my[lead], f.inv(y[lead]));
        bool eigen = true;
        for (int i = 0; i < m; ++i)
            if (my[i] != f.mul(lam, y[i])) { eigen = false; break; }
        if (!eigen) continue;
        ++nvec;
        Felt yby = f.zero();
        for (int i = 0; i < m; ++i) {
            if (y[i].v == 0) continue;
            Felt row = f.zero();
            for (int j = 0; j < m; ++j) row = f.add(row, f.mul(B.at(i, j), y[j]));
            yby = f.add(yby, f.mul(y[i], row));
        }
        if (yby.v == 0) ++n0;
    }

    const std::uint64_t numer =
        powu(q, n - 1) * (powu(q, n + 1) - nvec - 1) + powu(q, n) * n0 + powu(q, n + 1) - 1;
    FormulaCheck out;
    out.lhs = lhs;
    out.rhs = numer / (q - 1);
    out.eigenvectors = nvec;
    out.eigenvectors_b0 = n0;
    out.equal = (numer % (q - 1) == 0) && (out.lhs == out.rhs);
    return out;
}

} // namespace ogc

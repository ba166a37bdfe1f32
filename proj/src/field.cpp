/**************************************************************************
 * field.cpp
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

#include "ogc/field.hpp"

#include <algorithm>
#include <string>

namespace ogc {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over GF(p): coefficient vectors, constant term first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_from_index(int idx, int p, int len) {
    Poly a(len, 0);
    for (int i = 0; i < len; ++i) {
        a[i] = idx % p;
        idx /= p;
    }
    return a;
}

int index_from_poly(const Poly& a, int p) {
    int idx = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        idx = idx * p + a[i];
    return idx;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    const int lead_inv = [&] {
        // m is monic in every call site, kept general anyway
        int l = m.back(), r = 1;
        while ((l * r) % p != 1) ++r;
        return r;
    }();
    while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        const int f = (a.back() * lead_inv) % p;
        for (int i = 0; i <= dm; ++i) {
            int& c = a[da - dm + i];
            c = ((c - f * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

bool poly_divides(const Poly& d, const Poly& a, int p) {
    return poly_mod(a, d, p).empty();
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, int p) {
    const int df = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= df; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int t = 0; t < count; ++t) {
            Poly g = poly_from_index(t, p, d);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

} // namespace

Field::Field(int p, int e) : p_(p), e_(e) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw TooLarge("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 65536) throw TooLarge("p^e exceeds 2^16");
    }
    q_ = static_cast<int>(q);

    // Lexicographically least monic irreducible, scanning coefficient
    // tuples (c_{e-1},...,c_0) in ascending order.
    if (e == 1) {
        modulus_ = {0, 1};
    } else {
        int found = -1;
        int count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (int t = 0; t < count; ++t) {
            Poly f(e + 1, 0);
            int rem = t;
            for (int i = e - 1; i >= 0; --i) {
                // t packs c_{e-1} as the most significant digit
                int pw = 1;
                for (int j = 0; j < i; ++j) pw *= p;
                f[i] = (rem / pw) % p;
            }
            f[e] = 1;
            if (is_irreducible(f, p)) {
                modulus_ = f;
                found = t;
                break;
            }
        }
        if (found < 0) throw NoIrreducibleFound("no monic irreducible of degree " + std::to_string(e));
    }

    // Element index <-> coefficient vector is the base-p digit expansion.
    auto raw_mul = [&](int a, int b) {
        Poly pa = poly_from_index(a, p_, e_);
        Poly pb = poly_from_index(b, p_, e_);
        Poly c = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
        c.resize(e_, 0);
        return index_from_poly(c, p_);
    };
    auto raw_add = [&](int a, int b) {
        Poly pa = poly_from_index(a, p_, e_);
        Poly pb = poly_from_index(b, p_, e_);
        for (int i = 0; i < e_; ++i) pa[i] = (pa[i] + pb[i]) % p_;
        return index_from_poly(pa, p_);
    };

    const int m = q_ - 1;
    log_.assign(q_, kNone);
    alog_.assign(2 * m, 0);

    if (q_ == 2) {
        log_[1] = 0;
        alog_[0] = 1;
        alog_[1] = 1;
    } else {
        // Least primitive element, found by computing the full power
        // sequence and bailing out on an early return to 1.
        int gen = -1;
        for (int g = 2; g < q_; ++g) {
            int x = 1;
            bool primitive = true;
            for (int k = 1; k < m; ++k) {
                x = raw_mul(x, g);
                if (x == 1) { primitive = false; break; }
            }
            if (primitive && raw_mul(x, g) == 1) {
                gen = g;
                break;
            }
        }
        if (gen < 0) throw NoIrreducibleFound("no generator found; modulus not irreducible?");
        int x = 1;
        for (int k = 0; k < m; ++k) {
            alog_[k] = static_cast<std::uint16_t>(x);
            alog_[k + m] = static_cast<std::uint16_t>(x);
            log_[x] = static_cast<std::uint16_t>(k);
            x = raw_mul(x, gen);
        }
    }

    for (int x = 1; x < q_; ++x)
        if (log_[x] == kNone || alog_[log_[x]] != x)
            throw NoIrreducibleFound("log/antilog tables inconsistent");

    zech_.assign(m, kNone);
    for (int k = 0; k < m; ++k) {
        const int s = raw_add(1, alog_[k]);
        zech_[k] = (s == 0) ? kNone : log_[s];
    }
    neg_shift_ = (p_ == 2) ? 0 : static_cast<std::uint16_t>(m / 2);
}

Felt Field::from_int(long long c) const {
    long long r = c % p_;
    if (r < 0) r += p_;
    return {static_cast<std::uint16_t>(r)};
}

Felt Field::elem(int index) const {
    if (index < 0 || index >= q_) throw Error("element index out of range");
    return {static_cast<std::uint16_t>(index)};
}

Felt Field::add(Felt a, Felt b) const {
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    const int m = q_ - 1;
    const int k = log_[a.v];
    const int l = log_[b.v];
    int d = l - k;
    if (d < 0) d += m;
    const std::uint16_t z = zech_[d];
    if (z == kNone) return {0};
    return {alog_[k + z]};
}

Felt Field::neg(Felt a) const {
    if (p_ == 2 || a.v == 0) return a;
    return {alog_[log_[a.v] + neg_shift_]};
}

Felt Field::mul(Felt a, Felt b) const {
    if (a.v == 0 || b.v == 0) return {0};
    return {alog_[log_[a.v] + log_[b.v]]};
}

Felt Field::inv(Felt a) const {
    if (a.v == 0) throw DivisionByZero("inv(0)");
    const int m = q_ - 1;
    return {alog_[(m - log_[a.v]) % m]};
}

Felt Field::pow(Felt a, long long n) const {
    const int m = q_ - 1;
    if (a.v == 0) {
        if (n == 0) return one();
        if (n < 0) throw DivisionByZero("0 to a negative power");
        return {0};
    }
    long long r = n % m;
    if (r < 0) r += m;
    return {alog_[(static_cast<long long>(log_[a.v]) * r) % m]};
}

int Field::log(Felt a) const {
    if (a.v == 0) throw DivisionByZero("log(0)");
    return log_[a.v];
}

Felt Field::antilog(int k) const {
    const int m = q_ - 1;
    int r = k % m;
    if (r < 0) r += m;
    return {alog_[r]};
}

} // namespace ogc

/**************************************************************************
 * field.hpp
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

#pragma once

#include <cstdint>
#include <vector>

#include "ogc/errors.hpp"

namespace ogc {

/// One element of a finite field, encoded as an index in [0, q).
/// 0 is the zero element; otherwise the index packs the polynomial
/// coefficients base p (constant term least significant).
struct Felt {
    std::uint16_t v = 0;

    friend constexpr bool operator==(Felt a, Felt b) { return a.v == b.v; }
    friend constexpr bool operator!=(Felt a, Felt b) { return a.v != b.v; }
    friend constexpr bool operator<(Felt a, Felt b) { return a.v < b.v; }
};

/// GF(p^e) with log/antilog (Zech) tables, immutable after construction.
///
/// The modulus is the lexicographically least monic irreducible polynomial
/// of degree e over GF(p), coefficients compared from the highest power
/// down, so element encodings are reproducible across runs.
class Field {
public:
    Field(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    bool is_even_char() const { return p_ == 2; }

    /// Modulus coefficients c0..c_e (monic, c_e = 1). For e = 1 this is x.
    const std::vector<int>& modulus() const { return modulus_; }

    Felt zero() const { return {0}; }
    Felt one() const { return {1}; }

    /// The constant element c mod p (negative c allowed).
    Felt from_int(long long c) const;

    /// Bounds-checked element from its index.
    Felt elem(int index) const;

    Felt add(Felt a, Felt b) const;
    Felt sub(Felt a, Felt b) const { return add(a, neg(b)); }
    Felt neg(Felt a) const;
    Felt mul(Felt a, Felt b) const;
    Felt inv(Felt a) const;
    Felt pow(Felt a, long long n) const;

    /// Discrete log base the stored generator; a must be nonzero.
    int log(Felt a) const;
    /// Generator raised to k, k in [0, q-1).
    Felt antilog(int k) const;

private:
    int p_, e_, q_;
    std::vector<int> modulus_;
    std::vector<std::uint16_t> log_;   // log_[x.v], x != 0
    std::vector<std::uint16_t> alog_;  // length 2(q-1) so products skip the mod
    std::vector<std::uint16_t> zech_;  // zech_[k] = log(1 + g^k), kNone if zero
    std::uint16_t neg_shift_ = 0;      // log(-1); 0 in characteristic 2

    static constexpr std::uint16_t kNone = 0xFFFF;
};

} // namespace ogc

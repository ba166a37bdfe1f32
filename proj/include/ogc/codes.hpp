/**************************************************************************
 * codes.hpp
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
#include <map>
#include <optional>
#include <vector>

#include "ogc/linalg.hpp"

namespace ogc {

/// Deduplicated list of canonical projective points spanning the code.
struct ProjSystem {
    int q = 0;
    int ambient_dim = 0;
    std::vector<ProjVec> points;
};

struct LinearCode {
    Mat G; // K x N, the nonzero rows of the RREF of the point-column matrix
    int N = 0;
    int K = 0;
    std::optional<int> d_exact;
    int d_lower = 1;
    int d_upper = 0;
    std::optional<std::map<int, std::uint64_t>> weights;
};

/// Stack the point coordinates as columns and keep the independent rows.
LinearCode code_from_system(const Field& f, const ProjSystem& s);

struct MinDistResult {
    int d = 0;
    std::vector<std::uint16_t> witness; // message digits, least significant first
    std::uint64_t steps = 0;
};

/// Exact minimum weight over the q^K - 1 nonzero messages. Binary codes
/// run a bit-packed Gray scan (one row XOR + popcount per step); q > 2
/// runs a mixed-radix Gray scan (one row add or subtract per step).
/// Sharding across threads does not change the result: ties on the
/// witness break by global Gray visitation order.
MinDistResult min_distance(const Field& f, const LinearCode& c,
                           std::uint64_t budget = std::uint64_t(1) << 30,
                           int threads = 1);

/// Minimum of N - |section| over the hyperplanes of the span; must agree
/// with min_distance. Computed by direct dot products per dual vector,
/// independent of the Gray engines.
int min_distance_by_hyperplanes(const Field& f, const ProjSystem& s,
                                std::uint64_t budget = std::uint64_t(1) << 30);

/// Full weight -> count table over all q^K messages.
std::map<int, std::uint64_t> weight_enumerator(const Field& f, const LinearCode& c,
                                               std::uint64_t budget = std::uint64_t(1) << 30,
                                               int threads = 1);

/// psi * (q^{k(n-k)} - 1) + 1, defined for 1 <= k < n.
std::uint64_t mr1_lower_bound(int n, int k, std::uint64_t q, std::uint64_t psi);

/// Least weight seen among the generator rows and a Gray prefix of the
/// message space; a deterministic upper bound for codes past the budget.
int min_weight_upper_bound(const Field& f, const LinearCode& c, std::uint64_t prefix_steps);

/// Message digits visited at step t of the reflected Gray scan (digit 0
/// fastest). Step 0 is the zero message.
std::vector<std::uint16_t> message_at_gray_step(int q, int K, std::uint64_t t);

/// m * G evaluated densely.
std::vector<Felt> codeword_dense(const Field& f, const Mat& G,
                                 const std::vector<std::uint16_t>& message);

int hamming_weight(const std::vector<Felt>& v);

std::uint64_t binomial(int m, int k);

} // namespace ogc

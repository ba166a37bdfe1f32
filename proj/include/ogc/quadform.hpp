/**************************************************************************
 * quadform.hpp
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

#include "ogc/linalg.hpp"

namespace ogc {

/// Quadratic form eta(x) = sum_{i<=j} a_ij x_i x_j, stored as the packed
/// upper triangle of coefficients.
class QuadForm {
public:
    QuadForm(const Field& f, int dim);

    /// sum_{i=1..n} x_i x_{n+i} + x_{2n+1}^2 on 2n+1 coordinates.
    static QuadForm parabolic(const Field& f, int n);

    /// sum_{i=1..m} x_i x_{m+i} on 2m coordinates.
    static QuadForm hyperbolic(const Field& f, int m);

    int dim() const { return dim_; }
    const Field& field() const { return *f_; }

    Felt coeff(int i, int j) const { return coef_[tri_index(i, j)]; }
    void set_coeff(int i, int j, Felt c) { coef_[tri_index(i, j)] = c; }

    /// Packed coefficients, row-major over pairs i <= j.
    const std::vector<Felt>& coeffs() const { return coef_; }

    Felt eval(const std::vector<Felt>& x) const;

    int tri_index(int i, int j) const;

private:
    const Field* f_;
    int dim_;
    std::vector<Felt> coef_;
};

/// A quadratic form together with its polarization
/// f(x,y) = eta(x+y) - eta(x) - eta(y), held as a Gram matrix.
class PolarCtx {
public:
    explicit PolarCtx(QuadForm form);

    const QuadForm& form() const { return form_; }
    const Field& field() const { return form_.field(); }
    int dim() const { return form_.dim(); }
    const Mat& gram() const { return gram_; }

    Felt polar(const std::vector<Felt>& x, const std::vector<Felt>& y) const;

    bool is_singular_vector(const std::vector<Felt>& x) const;

    /// eta(b) = 0 on every basis vector and f = 0 on every basis pair.
    bool is_totally_singular(const Subspace& s) const;

    /// {v : f(v,u) = 0 for all u in s}.
    Subspace perp(const Subspace& s) const;

private:
    QuadForm form_;
    Mat gram_;
};

/// All projective points with eta = 0, in canonical-vector order.
std::vector<ProjVec> singular_points(const PolarCtx& ctx);

/// All totally singular k-subspaces, sorted by canonical basis matrix,
/// ids assigned in sorted order. Throws BudgetExceeded past the cap.
std::vector<Subspace> enumerate_totally_singular(const PolarCtx& ctx, int k,
                                                 std::uint64_t cap = 1000000);

/// Count of maximal totally singular subspaces of the hyperbolic form on
/// 2n+2 coordinates, by enumeration.
std::uint64_t generator_count_hyperbolic(const Field& f, int n);

/// 2(q+1)(q^2+1)...(q^n+1)
std::uint64_t hyperbolic_generator_closed_form(int n, std::uint64_t q);

/// (2q^{2n} - q^{2n-1} + 2q^{n+1} - 3q^n + q^{n-1} - 1)/(q - 1)
std::uint64_t odd_intersection_closed_form(int n, std::uint64_t q);

/// (2q^n - q^{n-1} - 1)(q^n + 1)/(q - 1)
std::uint64_t no_shared_generator_bound(int n, std::uint64_t q);

struct IntersectionResult {
    std::uint64_t max_size = 0;
    std::vector<std::uint16_t> witness_coeffs; // canonical, packed upper triangle
    bool witness_splits = false; // some Q - lambda*Q+ is two distinct hyperplanes
};

struct QuadricScan {
    IntersectionResult all;
    IntersectionResult no_shared;
    std::uint64_t quadrics_scanned = 0;
};

/// Exhaustive maximum of |Q ∩ Q+| over projectively deduplicated quadrics
/// Q != Q+ of PG(2n+1,q), tracked both over all quadrics and over those
/// containing no generator of Q+. The result is independent of the thread
/// count.
QuadricScan scan_quadric_intersections(const Field& f, int n,
                                       std::uint64_t budget = 1ull << 24,
                                       int threads = 1);

struct FormulaCheck {
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    std::uint64_t eigenvectors = 0;
    std::uint64_t eigenvectors_b0 = 0;
    bool equal = false;
};

/// Point count of the quadric with block matrix [[0,M],[M^T,B]] against
/// the eigenvector counting formula, both inside the hyperbolic quadric
/// X^T Y = 0 of PG(2n+1,q), q odd. B must be symmetric.
FormulaCheck intersection_formula_check(const Mat& M, const Mat& B, int n);

} // namespace ogc

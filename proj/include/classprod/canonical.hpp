/*
   Copyright 2026 The classprod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file canonical.hpp
 * @brief Rational canonical form over GF(q): invariant factors (the GL
 *        similarity label), block arrangements for the trace-bound engine,
 *        and explicit similarity transforms.
 */

#ifndef CLASSPROD_CANONICAL_HPP
#define CLASSPROD_CANONICAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace classprod {

/// Invariant factors f_1 | f_2 | ... | f_t (monic, degree >= 1), whose
/// degrees sum to n. Equal ClassIds <=> GL-conjugate matrices.
struct ClassId {
    std::vector<Poly> invariant_factors;

    /// Serialized key: each factor's coefficient list in parentheses,
    /// e.g. "(1,1)(2,0,1)".
    std::string key() const {
        std::string out;
        for (const auto& f : invariant_factors) out += "(" + to_literal(f) + ")";
        return out;
    }

    const Poly& minimal_polynomial() const { return invariant_factors.back(); }

    Poly characteristic_polynomial() const {
        Poly c = Poly::constant(invariant_factors.front().field(), invariant_factors.front().field().one());
        for (const auto& f : invariant_factors) c = c * f;
        return c;
    }

    friend bool operator==(const ClassId& a, const ClassId& b) { return a.invariant_factors == b.invariant_factors; }

    friend bool operator<(const ClassId& a, const ClassId& b) {
        const auto& x = a.invariant_factors;
        const auto& y = b.invariant_factors;
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), poly_less);
    }
};

namespace detail {

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Diagonal of the Smith normal form of a square polynomial matrix,
/// made monic, in divisibility order.
inline std::vector<Poly> smith_diagonal(PolyMatrix M) {
    const std::size_t n = M.size();
    std::vector<Poly> diag;
    for (std::size_t k = 0; k < n; ++k) {
        while (true) {
            // smallest-degree nonzero entry of the trailing block becomes the pivot
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (!M[i][j].is_zero() && (pi == n || M[i][j].degree() < M[pi][pj].degree())) {
                        pi = i;
                        pj = j;
                    }
            if (pi == n) {
                for (std::size_t r = k; r < n; ++r) diag.push_back(M[r][r]);
                return diag;
            }
            std::swap(M[k], M[pi]);
            for (auto& row : M) std::swap(row[k], row[pj]);

            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (M[i][k].is_zero()) continue;
                auto [quot, rem] = divmod(M[i][k], M[k][k]);
                for (std::size_t j = k; j < n; ++j) M[i][j] = M[i][j] - quot * M[k][j];
                if (!M[i][k].is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (M[k][j].is_zero()) continue;
                auto [quot, rem] = divmod(M[k][j], M[k][k]);
                for (std::size_t i = k; i < n; ++i) M[i][j] = M[i][j] - quot * M[i][k];
                if (!M[k][j].is_zero()) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide the whole trailing block.
            std::size_t bad = n;
            for (std::size_t i = k + 1; i < n && bad == n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!(M[i][j] % M[k][k]).is_zero()) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            for (std::size_t j = k; j < n; ++j) M[k][j] = M[k][j] + M[bad][j];
        }
        diag.push_back(M[k][k].monic());
    }
    return diag;
}

}  // namespace detail

/// Invariant factors of A from the Smith normal form of xI - A over GF(q)[x].
inline ClassId class_id(const Mat& A) {
    const Field& F = A.field();
    const std::size_t n = A.n();
    detail::PolyMatrix M(n, std::vector<Poly>(n, Poly(F)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                M[i][j] = Poly(F, {F.neg(A(i, j)), F.one()});
            else
                M[i][j] = Poly(F, {F.neg(A(i, j))});
        }
    ClassId id;
    for (auto& f : detail::smith_diagonal(std::move(M)))
        if (f.degree() >= 1) id.invariant_factors.push_back(std::move(f));
    return id;
}

/// Direct sum of the companion matrices of the invariant factors.
inline Mat rational_canonical_form(const ClassId& id) {
    std::vector<Mat> blocks;
    for (const auto& f : id.invariant_factors) blocks.push_back(companion(f));
    return direct_sum(blocks);
}

inline Mat rational_canonical_form(const Mat& A) { return rational_canonical_form(class_id(A)); }

/// Last block of an arrangement: a companion block of degree >= 2.
struct CompanionTail {
    Poly poly;  // x^r + a_{r-1} x^{r-1} + ... + a_0

    std::size_t degree() const { return static_cast<std::size_t>(poly.degree()); }
    /// a_i
    Felt coeff(std::size_t i) const { return poly.coeff(i); }
};

/// Which pair of distinct eigenvalues ends a diagonal arrangement.
enum class TailChoice { smallest, largest };

/// A block-diagonal matrix similar to the source, laid out so that its last
/// summand is either a companion block of degree >= 2 or a diagonal pair
/// diag(u, v) with u != v.
struct RcfArrangement {
    std::vector<Mat> blocks;
    Mat matrix;
    std::variant<CompanionTail, DiagPair> tail;

    bool has_companion_tail() const { return std::holds_alternative<CompanionTail>(tail); }
    const CompanionTail& companion_tail() const { return std::get<CompanionTail>(tail); }
    const DiagPair& diag_tail() const { return std::get<DiagPair>(tail); }

    /// r (or s): degree of the last block, 1 for a diagonal tail.
    std::size_t last_block_degree() const { return has_companion_tail() ? companion_tail().degree() : 1; }
};

/// Eigenvalues with multiplicity when A is diagonalizable over its own field;
/// nothing otherwise. Sorted ascending by encoding.
inline std::optional<std::vector<Felt>> split_eigenvalues(const ClassId& id) {
    const Poly& minpoly = id.minimal_polynomial();
    auto rs = roots(minpoly);
    if (static_cast<int>(rs.size()) != minpoly.degree()) return std::nullopt;
    std::vector<Felt> eig;
    for (Felt lambda : rs)
        for (const auto& f : id.invariant_factors)
            if (f.eval(lambda).v == 0) eig.push_back(lambda);
    std::sort(eig.begin(), eig.end());
    return eig;
}

/// Non-scalar A -> block arrangement with the last summand suited to the
/// trace formulas. Diagonalizable matrices become diagonal with two distinct
/// eigenvalues last (the two smallest encodings by default); all others use
/// the invariant-factor blocks, whose last block (the minimal polynomial) has
/// the highest degree, which is >= 2.
inline RcfArrangement arrange_for_hypothesis(const Mat& A, TailChoice choice = TailChoice::smallest) {
    if (is_scalar(A)) throw std::invalid_argument("scalar matrix has no arrangement (central case)");
    const Field& F = A.field();
    const ClassId id = class_id(A);

    if (auto eig = split_eigenvalues(id)) {
        std::vector<Felt> distinct = *eig;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        DiagPair pair = choice == TailChoice::smallest ? DiagPair{distinct[0], distinct[1]}
                                                       : DiagPair{distinct.rbegin()[0], distinct.rbegin()[1]};
        std::vector<Felt> head = *eig;
        head.erase(std::find(head.begin(), head.end(), pair.u));
        head.erase(std::find(head.begin(), head.end(), pair.v));
        std::vector<Mat> blocks;
        std::vector<Felt> diag;
        for (Felt h : head) {
            blocks.push_back(companion(Poly::linear(F, h)));
            diag.push_back(h);
        }
        blocks.push_back(companion(Poly::linear(F, pair.u)));
        blocks.push_back(companion(Poly::linear(F, pair.v)));
        diag.push_back(pair.u);
        diag.push_back(pair.v);
        return {std::move(blocks), Mat::diagonal(F, diag), pair};
    }

    std::vector<Mat> blocks;
    for (const auto& f : id.invariant_factors) blocks.push_back(companion(f));
    Mat M = direct_sum(blocks);
    return {std::move(blocks), std::move(M), CompanionTail{id.minimal_polynomial()}};
}

namespace detail {

/// Basis of {P : A P = P B}, each element as a row-major n*n vector.
inline std::vector<std::vector<Felt>> intertwiner_basis(const Mat& A, const Mat& B) {
    A.check(B);
    const Field& F = A.field();
    const std::size_t n = A.n();
    const std::size_t N = n * n;
    std::vector<Felt> sys(N * N, F.zero());
    // equation (i, j): sum_k A_ik P_kj - sum_k P_ik B_kj = 0; unknown P_ab at a*n+b
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                auto& x = sys[row * N + k * n + j];
                x = F.add(x, A(i, k));
                auto& y = sys[row * N + i * n + k];
                y = F.sub(y, B(k, j));
            }
        }
    return nullspace(F, N, N, std::move(sys));
}

}  // namespace detail

/// An invertible P with P^{-1} A P = B, or nothing when A and B are not
/// similar. Among the first candidates found, one with det P equal to
/// preferred_det is returned when available.
inline std::optional<Mat> similarity_transform(const Mat& A, const Mat& B, std::uint64_t seed = 1,
                                               std::optional<Felt> preferred_det = std::nullopt) {
    A.check(B);
    if (!(class_id(A) == class_id(B))) return std::nullopt;
    const Field& F = A.field();
    const std::size_t n = A.n();
    const auto basis = detail::intertwiner_basis(A, B);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, F.q() - 1);
    std::optional<Mat> first;
    int found = 0;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<Felt> e(n * n, F.zero());
        for (const auto& v : basis) {
            const Felt c{pick(rng)};
            if (c.v == 0) continue;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = F.add(e[i], F.mul(c, v[i]));
        }
        Mat P(F, n, std::move(e));
        const Felt d = det(P);
        if (d.v == 0) continue;
        if (!preferred_det || d == *preferred_det) return P;
        if (!first) first = P;
        if (++found >= 64) break;
    }
    if (!first) throw std::logic_error("no invertible intertwiner found for similar matrices");
    return first;
}

}  // namespace classprod

#endif  // CLASSPROD_CANONICAL_HPP

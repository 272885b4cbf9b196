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

#include <gtest/gtest.h>

#include <random>

#include "classprod/canonical.hpp"
#include "support.hpp"

using namespace classprod;

TEST(Canonical, ClassIdExamples) {
    const Field F = parse_field("3^1");
    EXPECT_EQ(class_id(Mat::identity(F, 2)).key(), "(2,1)(2,1)");
    EXPECT_EQ(class_id(parse_matrix(F, "1,1;0,1")).key(), "(1,1,1)");  // (x - 1)^2 = x^2 + x + 1 mod 3
    EXPECT_EQ(class_id(parse_matrix(F, "1,0;0,2")).key(), "(2,0,1)");  // x^2 - 1
}

TEST(Canonical, InvariantFactorsDivideAndMultiplyToCharpoly) {
    std::mt19937_64 rng(3);
    for (const auto& lit : test::small_fields()) {
        const Field F = parse_field(lit);
        const auto O = test::oracle_of(F);
        for (std::size_t n = 1; n <= 4; ++n)
            for (int t = 0; t < 25; ++t) {
                const Mat A = test::random_matrix(F, n, rng);
                const ClassId id = class_id(A);
                std::size_t total = 0;
                for (std::size_t i = 0; i < id.invariant_factors.size(); ++i) {
                    EXPECT_TRUE(id.invariant_factors[i].is_monic());
                    total += static_cast<std::size_t>(id.invariant_factors[i].degree());
                    if (i) {
                        EXPECT_TRUE((id.invariant_factors[i] % id.invariant_factors[i - 1]).is_zero());
                    }
                }
                EXPECT_EQ(total, n);
                // charpoly(t) = det(tI - A) at every field point, Leibniz oracle
                const Poly chi = id.characteristic_polynomial();
                for (std::uint32_t x = 0; x < F.q(); ++x) {
                    auto M = test::oracle_of(A);
                    for (auto& e : M.e) e = O.neg(e);
                    for (std::size_t i = 0; i < n; ++i) M(i, i) = O.add(M(i, i), x);
                    EXPECT_EQ(chi.eval(Felt{x}).v, oracle::det(O, M));
                }
                // minimal polynomial annihilates A
                const Poly& mu = id.minimal_polynomial();
                Mat acc(F, n), power = Mat::identity(F, n);
                for (int k = 0; k <= mu.degree(); ++k, power = power * A)
                    acc = acc + Mat::scalar(F, n, mu.coeff(static_cast<std::size_t>(k))) * power;
                EXPECT_EQ(acc, Mat(F, n));
                EXPECT_EQ(class_id(rational_canonical_form(id)), id);
            }
    }
}

TEST(Canonical, ConjugationInvariance) {
    std::mt19937_64 rng(9);
    for (const auto& lit : test::small_fields()) {
        const Field F = parse_field(lit);
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = 2 + t % 3;
            const Mat A = test::random_matrix(F, n, rng);
            const Mat U = test::random_invertible(F, n, rng);
            EXPECT_EQ(class_id(conjugate(A, U)), class_id(A));
        }
    }
}

TEST(Canonical, SimilarityTransformIsExplicit) {
    std::mt19937_64 rng(21);
    for (const auto& lit : test::small_fields()) {
        const Field F = parse_field(lit);
        for (int t = 0; t < 30; ++t) {
            const std::size_t n = 2 + t % 3;
            const Mat A = test::random_matrix(F, n, rng);
            const Mat B = conjugate(A, test::random_invertible(F, n, rng));
            const auto P = similarity_transform(A, B, static_cast<std::uint64_t>(t));
            ASSERT_TRUE(P.has_value());
            EXPECT_EQ(conjugate(A, *P), B);
        }
    }
    const Field F = parse_field("3^1");
    EXPECT_FALSE(similarity_transform(parse_matrix(F, "1,1;0,1"), Mat::identity(F, 2)).has_value());
}

TEST(Canonical, PreferredDeterminantIsHonoured) {
    const Field F = parse_field("5^1");
    const Mat A = parse_matrix(F, "1,2;3,4");
    const Mat R = rational_canonical_form(A);
    for (std::uint32_t d = 1; d < 5; ++d) {
        const auto P = similarity_transform(A, R, 1, Felt{d});
        ASSERT_TRUE(P);
        EXPECT_EQ(det(*P).v, d);
        EXPECT_EQ(conjugate(A, *P), R);
    }
}

TEST(Canonical, ArrangementDiagonalTail) {
    const Field F = parse_field("3^1");
    const Mat A = Mat::diagonal(F, {Felt{2}, Felt{1}, Felt{1}});
    const auto arr = arrange_for_hypothesis(A);
    ASSERT_FALSE(arr.has_companion_tail());
    EXPECT_EQ(arr.diag_tail().u.v, 1u);
    EXPECT_EQ(arr.diag_tail().v.v, 2u);
    EXPECT_EQ(to_literal(arr.matrix), "1,0,0;0,1,0;0,0,2");
    const auto big = arrange_for_hypothesis(Mat::diagonal(F, {Felt{0}, Felt{1}, Felt{2}}), TailChoice::largest);
    EXPECT_EQ(big.diag_tail().u.v, 2u);
    EXPECT_EQ(big.diag_tail().v.v, 1u);
    EXPECT_EQ(class_id(big.matrix), class_id(Mat::diagonal(F, {Felt{0}, Felt{1}, Felt{2}})));
}

TEST(Canonical, ArrangementCompanionTail) {
    const Field F = parse_field("3^1");
    const auto arr = arrange_for_hypothesis(parse_matrix(F, "1,1,0;0,1,0;0,0,1"));
    ASSERT_TRUE(arr.has_companion_tail());
    EXPECT_EQ(arr.last_block_degree(), 2u);
    EXPECT_EQ(to_literal(arr.companion_tail().poly), "1,1,1");
    EXPECT_EQ(to_literal(arr.matrix), "1,0,0;0,0,2;0,1,2");
    EXPECT_THROW(arrange_for_hypothesis(Mat::scalar(F, 2, Felt{2})), std::invalid_argument);
}

TEST(Canonical, ArrangementIsSimilarToSource) {
    std::mt19937_64 rng(4);
    for (const auto& lit : test::small_fields()) {
        const Field F = parse_field(lit);
        for (int t = 0; t < 40; ++t) {
            const Mat A = test::random_matrix(F, 2 + t % 3, rng);
            if (is_scalar(A)) continue;
            const auto arr = arrange_for_hypothesis(A);
            EXPECT_EQ(class_id(arr.matrix), class_id(A));
            if (arr.has_companion_tail()) {
                EXPECT_GE(arr.last_block_degree(), 2u);
            } else {
                EXPECT_NE(arr.diag_tail().u, arr.diag_tail().v);
            }
        }
    }
}

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

#include "classprod/poly.hpp"
#include "support.hpp"

using namespace classprod;

TEST(Poly, LiteralRoundTrip) {
    const Field F = parse_field("3^1");
    const Poly f = parse_poly(F, "1,0,1");
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(to_literal(f), "1,0,1");
    EXPECT_EQ(to_literal(parse_poly(F, "2,1,0")), "2,1");  // trailing zeros drop
    EXPECT_THROW(parse_poly(F, "1,3"), std::invalid_argument);
    EXPECT_TRUE(Poly(F).is_zero());
    EXPECT_EQ(Poly(F).degree(), -1);
}

TEST(Poly, DivisionIdentity) {
    std::mt19937_64 rng(11);
    for (const auto& lit : test::small_fields()) {
        const Field F = parse_field(lit);
        std::uniform_int_distribution<std::uint32_t> pick(0, F.q() - 1);
        for (int t = 0; t < 200; ++t) {
            std::vector<Felt> a(1 + t % 6), b(1 + t % 3);
            for (auto& x : a) x = Felt{pick(rng)};
            for (auto& x : b) x = Felt{pick(rng)};
            const Poly f(F, a), g(F, b);
            if (g.is_zero()) continue;
            const auto [quot, rem] = divmod(f, g);
            EXPECT_EQ(quot * g + rem, f);
            EXPECT_LT(rem.degree(), g.degree());
        }
    }
}

TEST(Poly, GcdDividesBoth) {
    const Field F = parse_field("5^1");
    const Poly a = Poly::linear(F, Felt{1}) * Poly::linear(F, Felt{2}) * Poly::linear(F, Felt{3});
    const Poly b = Poly::linear(F, Felt{2}) * Poly::linear(F, Felt{4});
    const Poly g = gcd(a, b);
    EXPECT_EQ(g, Poly::linear(F, Felt{2}));
    EXPECT_TRUE((a % g).is_zero());
}

TEST(Poly, RootsByEvaluation) {
    const Field F = parse_field("7^1");
    const Poly f = Poly::linear(F, Felt{5}) * Poly::linear(F, Felt{1}) * parse_poly(F, "1,0,1");
    EXPECT_EQ(roots(f), (std::vector<Felt>{Felt{1}, Felt{5}}));
}

TEST(Poly, IrreducibleCountsMatchNecklaceFormula) {
    // number of monic irreducibles of degree d over GF(q): (1/d) sum_{k | d} mu(k) q^(d/k)
    struct Case {
        const char* field;
        int degree;
        std::uint64_t expected;
    };
    for (const auto& c : {Case{"2^1", 2, 1}, Case{"2^1", 3, 2}, Case{"2^1", 4, 3}, Case{"3^1", 2, 3},
                          Case{"3^1", 3, 8}, Case{"2^2", 2, 6}, Case{"5^1", 2, 10}}) {
        const Field F = parse_field(c.field);
        std::uint64_t count = 0;
        for (std::uint64_t i = 0; i < count_monic(F, c.degree); ++i)
            count += is_irreducible(monic_from_index(F, c.degree, i)) ? 1 : 0;
        EXPECT_EQ(count, c.expected) << c.field << " degree " << c.degree;
    }
}

TEST(Poly, IrreducibleRejectsBadInput) {
    const Field F = parse_field("3^1");
    EXPECT_THROW(is_irreducible(parse_poly(F, "1")), std::invalid_argument);
    EXPECT_THROW(is_irreducible(parse_poly(F, "1,2")), std::invalid_argument);
}

TEST(Poly, OrderIsDegreeThenCoefficients) {
    const Field F = parse_field("3^1");
    EXPECT_TRUE(poly_less(parse_poly(F, "2,1"), parse_poly(F, "0,0,1")));
    EXPECT_TRUE(poly_less(parse_poly(F, "0,1,1"), parse_poly(F, "1,0,1")));
    EXPECT_FALSE(poly_less(parse_poly(F, "1,0,1"), parse_poly(F, "1,0,1")));
}

TEST(Poly, WIrreducibleForEvenFields) {
    for (const std::string lit : {"2^2", "2^3", "2^4"}) {
        const Field F = parse_field(lit);
        const Felt w = find_w_irreducible(F);
        EXPECT_TRUE(is_irreducible(Poly(F, {F.one(), F.neg(w), F.one()}))) << lit;
        for (std::uint32_t v = 0; v < w.v; ++v)
            EXPECT_FALSE(is_irreducible(Poly(F, {F.one(), F.neg(Felt{v}), F.one()}))) << lit;
    }
    EXPECT_THROW(find_w_irreducible(parse_field("2^1")), std::invalid_argument);
    EXPECT_THROW(find_w_irreducible(parse_field("3^1")), std::invalid_argument);
}

TEST(Poly, MixedFieldsAreRejected) {
    const Field F = parse_field("3^1"), G = parse_field("5^1");
    EXPECT_THROW(parse_poly(F, "1,1") * parse_poly(G, "1,1"), FieldMismatch);
}

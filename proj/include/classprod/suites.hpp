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
 * @file suites.hpp
 * @brief Seeded self-check suites for the closed forms and counting helpers.
 *
 * Each suite compares a closed form against direct matrix conjugation, or a
 * counting helper against its guaranteed floor, and counts disagreements.
 */

#ifndef CLASSPROD_SUITES_HPP
#define CLASSPROD_SUITES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "matrix.hpp"

namespace classprod {

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    bool exhaustive = false;
    std::string first_mismatch;
};

inline const std::array<std::string, 5>& suite_names() {
    static const std::array<std::string, 5> names{"fieldsize", "xysoln", "generalcase", "main1", "main2"};
    return names;
}

namespace detail {

inline SuiteResult new_result(std::string name, std::uint64_t trials, std::uint64_t seed) {
    SuiteResult r;
    r.suite = std::move(name);
    r.trials = trials;
    r.seed = seed;
    return r;
}

class InstanceGen {
public:
    InstanceGen(const Field& F, std::uint64_t seed) : F_(F), rng_(seed) {}

    Felt any() { return Felt{std::uniform_int_distribution<std::uint32_t>(0, F_.q() - 1)(rng_)}; }
    Felt nonzero() { return Felt{std::uniform_int_distribution<std::uint32_t>(1, F_.q() - 1)(rng_)}; }
    std::size_t size(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

    /// a_0..a_{r-1}
    std::vector<Felt> coeffs(std::size_t r) {
        std::vector<Felt> a(r);
        for (auto& x : a) x = any();
        return a;
    }

    Mat companion_of(const std::vector<Felt>& a) {
        std::vector<Felt> c = a;
        c.push_back(F_.one());
        return companion(Poly(F_, c));
    }

    Mat square(std::size_t h) {
        std::vector<Felt> e(h * h);
        for (auto& x : e) x = any();
        return Mat(F_, h, std::move(e));
    }

    /// random h x h head (+) tail; h = 0 gives the tail alone.
    Mat headed(std::size_t h, const Mat& tail) { return h == 0 ? tail : direct_sum({square(h), tail}); }

    /// Invertible 2x2 block.
    Block2 block() {
        while (true) {
            Block2 D{any(), any(), any(), any()};
            if (detail::det2(F_, D).encoding() != 0) return D;
        }
    }

    /// Block with ad - bc = 1: a random invertible block with its first row
    /// divided by the determinant.
    Block2 det_one_block() {
        Block2 D = block();
        const Felt w = detail::det2(F_, D).felt();
        D.a = F_.div(D.a, w);
        D.b = F_.div(D.b, w);
        return D;
    }

    DiagPair distinct_pair() {
        const Felt u = any();
        Felt v = any();
        while (v == u) v = any();
        return {u, v};
    }

private:
    const Field& F_;
    std::mt19937_64 rng_;
};

inline ConjugatorSpec spec_of(std::size_t n, const Block2& D) { return ConjugatorSpec::general(n, D.a, D.b, D.c, D.d); }

inline std::string describe(const Mat& M, const Mat& N, const Block2& D) {
    return "M=" + to_literal(M) + " N=" + to_literal(N) + " D=" + std::to_string(D.a.v) + "," + std::to_string(D.b.v) +
           ";" + std::to_string(D.c.v) + "," + std::to_string(D.d.v);
}

class Tally {
public:
    explicit Tally(SuiteResult& r) : r_(r) {}
    void check(bool ok, const std::function<std::string()>& what) {
        ++r_.checked;
        if (ok) return;
        if (r_.mismatches++ == 0) r_.first_mismatch = what();
    }

private:
    SuiteResult& r_;
};

inline Felt direct_trace(const Mat& M, const Mat& N, const ConjugatorSpec& spec) {
    return trace(conjugate(M, build_conjugator(M.field(), spec)) * N);
}

}  // namespace detail

/// quad_image_size against its floor: exhaustive over (a != 0, b, c) when
/// q^3 <= 10^6, otherwise `trials` random triples.
inline SuiteResult run_fieldsize_suite(const Field& F, std::uint64_t trials, std::uint64_t seed) {
    SuiteResult r = detail::new_result("fieldsize", trials, seed);
    detail::Tally tally(r);
    auto one = [&](Felt a, Felt b, Felt c) {
        bool ok = true;
        try {
            quad_image_size(F, a, b, c);
        } catch (const std::logic_error&) {
            ok = false;
        }
        tally.check(ok, [&] { return "a=" + std::to_string(a.v) + " b=" + std::to_string(b.v) + " c=" + std::to_string(c.v); });
    };
    const std::uint64_t q = F.q();
    if (q * q * q <= 1'000'000) {
        r.exhaustive = true;
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; ++c) one(Felt{a}, Felt{b}, Felt{c});
        return r;
    }
    detail::InstanceGen gen(F, seed);
    for (std::uint64_t t = 0; t < trials; ++t) one(gen.nonzero(), gen.any(), gen.any());
    return r;
}

/// count_solvable_f against q - 1 on `trials` random coefficient tuples; on
/// each tuple the direct solver must find a checked solution exactly for the
/// solvable values of f (skipped for even q with a != 0).
inline SuiteResult run_xysoln_suite(const Field& F, std::uint64_t trials, std::uint64_t seed) {
    SuiteResult r = detail::new_result("xysoln", trials, seed);
    detail::Tally tally(r);
    detail::InstanceGen gen(F, seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Felt a = gen.any(), b = gen.any(), c = gen.any(), d = gen.any(), e = gen.any();
        auto tuple = [&] {
            return "a=" + std::to_string(a.v) + " b=" + std::to_string(b.v) + " c=" + std::to_string(c.v) +
                   " d=" + std::to_string(d.v) + " e=" + std::to_string(e.v);
        };
        SolvableCount sc;
        bool ok = true;
        try {
            sc = count_solvable_f(F, a, b, c, d, e);
        } catch (const std::logic_error&) {
            ok = false;
        }
        tally.check(ok, tuple);
        if (!ok || (F.is_even() && a.v != 0)) continue;
        for (std::uint32_t f = 0; f < F.q(); ++f) {
            const auto sol = solve_xysoln(F, a, b, c, d, e, Felt{f});
            const bool solvable = sc.witnesses.count(f) > 0;
            const bool good = sol ? solvable && sol->first.v != 0 &&
                                        xysoln_lhs(F, a, b, c, d, e, Felt{f}, sol->first, sol->second).v == 0
                                  : !solvable;
            tally.check(good, [&] { return tuple() + " f=" + std::to_string(f); });
        }
    }
    return r;
}

/// conjugated_companion against direct conjugation, r in [2, 6].
inline SuiteResult run_generalcase_suite(const Field& F, std::uint64_t trials, std::uint64_t seed) {
    SuiteResult r = detail::new_result("generalcase", trials, seed);
    detail::Tally tally(r);
    detail::InstanceGen gen(F, seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::size_t deg = gen.size(2, 6);
        const Mat R = gen.companion_of(gen.coeffs(deg));
        const Block2 D = gen.block();
        const auto spec = detail::spec_of(deg, D);
        tally.check(conjugated_companion(R, spec) == conjugate(R, build_conjugator(F, spec)),
                    [&] { return detail::describe(R, R, D); });
    }
    return r;
}

/// Trace closed forms for a companion tail against a companion or diagonal
/// tail, cycling through the three cases, each with a general invertible
/// block and an affine block; heads are arbitrary square matrices.
inline SuiteResult run_main1_suite(const Field& F, std::uint64_t trials, std::uint64_t seed) {
    SuiteResult r = detail::new_result("main1", trials, seed);
    detail::Tally tally(r);
    detail::InstanceGen gen(F, seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const int which = static_cast<int>(t % 3);
        const std::size_t deg_r = which == 1 ? 2 : gen.size(which == 0 ? 3 : 2, 5);
        const std::size_t deg_s = which == 2 ? 2 : gen.size(which == 0 ? 3 : 2, 5);
        const std::size_t n = std::max(deg_r, deg_s) + gen.size(0, 1);
        const auto a = gen.coeffs(deg_r);
        const Mat M = gen.headed(n - deg_r, gen.companion_of(a));
        std::vector<Felt> b;
        DiagPair uv{};
        if (which == 2)
            uv = gen.distinct_pair();
        else
            b = gen.coeffs(deg_s);
        const Mat N = which == 2 ? gen.headed(n - 2, Mat::diagonal(F, {uv.u, uv.v}))
                                 : gen.headed(n - deg_s, gen.companion_of(b));
        const Felt base = trace(M * N);

        const Block2 D = gen.block();
        const auto gspec = detail::spec_of(n, D);
        Felt closed;
        if (which == 0) closed = closed_form::main1_i(F, a, b, D, base);
        else if (which == 1) closed = closed_form::main1_ii(F, a, b, D, base);
        else closed = closed_form::main1_iii(F, a, uv, D, base);
        tally.check(closed == detail::direct_trace(M, N, gspec), [&] { return detail::describe(M, N, D); });

        const Felt x = gen.nonzero(), y = gen.any();
        const auto aspec = ConjugatorSpec::affine(F, n, x, y);
        if (which == 0) closed = closed_form::main1_i_affine(F, a, b, x, y, base);
        else if (which == 1) closed = closed_form::main1_ii_affine(F, a, b, x, y, base);
        else closed = closed_form::main1_iii_affine(F, uv, x, y, base);
        tally.check(closed == detail::direct_trace(M, N, aspec),
                    [&] { return detail::describe(M, N, Block2{x, y, F.zero(), F.one()}); });
    }
    return r;
}

/// Trace closed forms for two diagonal tails, with a random det-one block
/// and with the [[x, x-1], [1, 1]] family.
inline SuiteResult run_main2_suite(const Field& F, std::uint64_t trials, std::uint64_t seed) {
    SuiteResult r = detail::new_result("main2", trials, seed);
    detail::Tally tally(r);
    detail::InstanceGen gen(F, seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::size_t n = gen.size(2, 4);
        const DiagPair p1 = gen.distinct_pair(), p2 = gen.distinct_pair();
        const Mat C = gen.headed(n - 2, Mat::diagonal(F, {p1.u, p1.v}));
        const Mat N = gen.headed(n - 2, Mat::diagonal(F, {p2.u, p2.v}));
        const Felt base = trace(C * N);

        const Block2 D = gen.det_one_block();
        tally.check(closed_form::main2(F, p1, p2, D, base) ==
                        detail::direct_trace(C, N, ConjugatorSpec::detone(n, D.a, D.b, D.c, D.d)),
                    [&] { return detail::describe(C, N, D); });

        const Felt x = gen.any();
        const Felt xm1 = F.sub(x, F.one());
        tally.check(closed_form::main2_detone(F, p1, p2, x, base) ==
                        detail::direct_trace(C, N, ConjugatorSpec::detone(n, x, xm1, F.one(), F.one())),
                    [&] { return detail::describe(C, N, Block2{x, xm1, F.one(), F.one()}); });
    }
    return r;
}

inline SuiteResult run_suite(const std::string& name, const Field& F, std::uint64_t trials, std::uint64_t seed) {
    if (name == "fieldsize") return run_fieldsize_suite(F, trials, seed);
    if (name == "xysoln") return run_xysoln_suite(F, trials, seed);
    if (name == "generalcase") return run_generalcase_suite(F, trials, seed);
    if (name == "main1") return run_main1_suite(F, trials, seed);
    if (name == "main2") return run_main2_suite(F, trials, seed);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace classprod

#endif  // CLASSPROD_SUITES_HPP

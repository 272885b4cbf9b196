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
 * @file bounds.hpp
 * @brief Certified lower bounds on eta(A^G B^G) from trace sets, without
 *        enumerating the group.
 *
 * Matrices in one conjugacy class share a trace, so k distinct traces among
 * elements of A^G B^G force at least k classes. The engine brings A and B
 * to block form M = M11 (+) R, N = N11 (+) S (see arrange_for_hypothesis)
 * and sweeps conjugators E = I (+) D acting on the last two coordinates:
 *
 *   family            D                         guaranteed distinct traces
 *   E(x, y), x != 0   [[x, y], [0, 1]]          q - 1
 *   E(x0, y)          [[x0, y], [0, 1]]         ceil(q/2); q for a diagonal N
 *   det-one           [[x, x-1], [1, 1]]        q (both tails diagonal)
 *
 * Each trace is evaluated twice: by its closed form in the tail
 * coefficients, and directly as trace(conjugate(M, E) * N). A disagreement
 * is a logic error; a trace is never reported without its checked witness.
 *
 * In SL(n,q) the block forms are reached by GL-similarities P_A, P_B that
 * need not have the same determinant, so the sweep is taken at the fixed
 * x0 = det(P_B)/det(P_A). The group element that realizes a witness is
 * g = P_A E P_B^{-1}, which then has determinant 1, and A^g B has the
 * reported trace.
 */

#ifndef CLASSPROD_BOUNDS_HPP
#define CLASSPROD_BOUNDS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "field.hpp"
#include "group.hpp"
#include "matrix.hpp"

namespace classprod {

// ---------------------------------------------------------------------------
// Counting helpers

/// |{a i^2 + b i + c : i in F}| by enumeration, a != 0. At least ceil(q/2);
/// exactly q when q is even and b = 0.
inline std::uint64_t quad_image_size(const Field& F, Felt a, Felt b, Felt c) {
    if (a.v == 0) throw std::invalid_argument("quad_image_size needs a != 0");
    std::vector<char> hit(F.q(), 0);
    std::uint64_t size = 0;
    for (std::uint32_t i = 0; i < F.q(); ++i) {
        const Elem x = F(Felt{i});
        const Felt v = (F(a) * x * x + F(b) * x + F(c)).felt();
        if (!hit[v.v]) {
            hit[v.v] = 1;
            ++size;
        }
    }
    if (size < static_cast<std::uint64_t>(ceil_half(F.q())))
        throw std::logic_error("quadratic image below ceil(q/2)");
    if (F.is_even() && b.v == 0 && size != F.q()) throw std::logic_error("even-q quadratic image is not all of F");
    return size;
}

struct SolvableCount {
    std::uint64_t count = 0;
    /// f -> one solution (x, y), x != 0, of a x^2 - y^2 + b x y + c y + (d - f) x + e = 0
    std::map<std::uint32_t, std::pair<Felt, Felt>> witnesses;
};

/// Values f for which a x^2 - y^2 + bxy + cy + (d - f)x + e = 0 has a solution
/// with x != 0, collected as f = (a x^2 - y^2 + bxy + cy + e)/x + d over all
/// (x, y). At least q - 1 of them exist.
inline SolvableCount count_solvable_f(const Field& F, Felt a, Felt b, Felt c, Felt d, Felt e) {
    SolvableCount out;
    for (std::uint32_t xi = 1; xi < F.q(); ++xi)
        for (std::uint32_t yi = 0; yi < F.q(); ++yi) {
            const Elem x = F(Felt{xi}), y = F(Felt{yi});
            const Elem f = (F(a) * x * x - y * y + F(b) * x * y + F(c) * y + F(e)) / x + F(d);
            out.witnesses.try_emplace(f.encoding(), x.felt(), y.felt());
        }
    out.count = out.witnesses.size();
    if (out.count + 1 < F.q()) throw std::logic_error("fewer than q - 1 solvable values of f");
    return out;
}

/// Left-hand side of a x^2 - y^2 + bxy + cy + (d - f)x + e.
inline Felt xysoln_lhs(const Field& F, Felt a, Felt b, Felt c, Felt d, Felt e, Felt f, Felt x, Felt y) {
    const Elem X = F(x), Y = F(y);
    return (F(a) * X * X - Y * Y + F(b) * X * Y + F(c) * Y + (F(d) - F(f)) * X + F(e)).felt();
}

/// A solution (x, y), x != 0, of a x^2 - y^2 + bxy + cy + (d - f)x + e = 0,
/// solving for x for each y: linearly when a = 0, by the quadratic formula
/// with discriminant (by + d - f)^2 - 4a(e + cy - y^2) otherwise (odd q only).
inline std::optional<std::pair<Felt, Felt>> solve_xysoln(const Field& F, Felt a, Felt b, Felt c, Felt d, Felt e,
                                                         Felt f) {
    if (a.v != 0 && F.is_even()) throw std::domain_error("discriminant solver needs odd characteristic");
    for (std::uint32_t yi = 0; yi < F.q(); ++yi) {
        const Elem y = F(Felt{yi});
        const Elem lin = F(b) * y + F(d) - F(f);     // coefficient of x
        const Elem cst = F(e) + F(c) * y - y * y;  // constant term
        if (a.v == 0) {
            if (!lin.is_zero()) {
                const Elem x = -cst / lin;
                if (!x.is_zero()) return std::pair{x.felt(), y.felt()};
            } else if (cst.is_zero()) {
                return std::pair{F.one(), y.felt()};
            }
            continue;
        }
        const Elem delta = lin * lin - F(4) * F(a) * cst;
        const auto root = F.sqrt(delta.felt());
        if (!root) continue;
        for (const Elem s : {F(*root), -F(*root)}) {
            const Elem x = (-lin + s) / (F(2) * F(a));
            if (!x.is_zero()) return std::pair{x.felt(), y.felt()};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Closed forms

/// 2x2 block D = [[a, b], [c, d]].
struct Block2 {
    Felt a, b, c, d;
};

namespace detail {

/// Coefficients a_0..a_{r-1} of a companion block (last column negated).
inline std::vector<Felt> companion_coeffs(const Mat& R) {
    const Field& F = R.field();
    const std::size_t r = R.n();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j + 1 < r; ++j)
            if (R(i, j) != (i == j + 1 ? F.one() : F.zero()))
                throw std::invalid_argument("matrix is not a companion block");
    std::vector<Felt> a(r);
    for (std::size_t i = 0; i < r; ++i) a[i] = F.neg(R(i, r - 1));
    return a;
}

inline Elem det2(const Field& F, const Block2& D) { return F(D.a) * F(D.d) - F(D.b) * F(D.c); }

}  // namespace detail

/// R^E for a companion block R of degree r >= 2 and E = I_{r-2} (+) D, built
/// entry by entry from the closed form (first r-2 rows: R with its last two
/// columns multiplied by D's rows; last two rows through D^{-1}).
inline Mat conjugated_companion(const Mat& R, const ConjugatorSpec& spec) {
    const Field& F = R.field();
    if (R.n() < 2) throw std::invalid_argument("conjugated_companion needs degree >= 2");
    if (spec.n != R.n()) throw std::invalid_argument("conjugator dimension must match the block");
    spec.validate(F);
    const auto coef = detail::companion_coeffs(R);
    const std::size_t r = R.n();
    const Elem a = F(spec.a), b = F(spec.b), c = F(spec.c), d = F(spec.d);
    const Elem w = a * d - b * c;
    auto A = [&](std::size_t i) { return F(coef[i]); };

    Mat out(F, r);
    auto put = [&](std::size_t i, std::size_t j, Elem v) { out(i, j) = v.felt(); };
    const Elem ar2 = A(r - 2), ar1 = A(r - 1);
    if (r == 2) {
        put(0, 0, (-A(0) * c * d - a * b + A(1) * b * c) / w);
        put(0, 1, (-A(0) * d * d - b * b + A(1) * b * d) / w);
        put(1, 0, (A(0) * c * c + a * a - a * A(1) * c) / w);
        put(1, 1, (A(0) * c * d + a * b - a * A(1) * d) / w);
        return out;
    }
    for (std::size_t i = 1; i + 2 < r; ++i) out(i, i - 1) = F.one();
    for (std::size_t i = 0; i + 2 < r; ++i) {
        put(i, r - 2, -A(i) * c);
        put(i, r - 1, -A(i) * d);
    }
    put(r - 2, r - 3, d / w);
    put(r - 2, r - 2, (-ar2 * c * d - a * b + ar1 * b * c) / w);
    put(r - 2, r - 1, (-ar2 * d * d - b * b + ar1 * b * d) / w);
    put(r - 1, r - 3, -c / w);
    put(r - 1, r - 2, (ar2 * c * c + a * a - a * ar1 * c) / w);
    put(r - 1, r - 1, (ar2 * c * d + a * b - a * ar1 * d) / w);
    return out;
}

/// Trace closed forms. `a` holds the tail coefficients a_0..a_{r-1} of M,
/// `b` those of N (b_0..b_{s-1}); `base` is Trace(MN).
namespace closed_form {

/// r > 2, s > 2, general D.
inline Felt main1_i(const Field& F, const std::vector<Felt>& a, const std::vector<Felt>& b, const Block2& D,
                    Felt base) {
    const std::size_t r = a.size(), s = b.size();
    if (r < 3 || s < 3) throw std::invalid_argument("case i needs r > 2 and s > 2");
    const Elem A3 = F(a[r - 3]), A2 = F(a[r - 2]), A1 = F(a[r - 1]);
    const Elem B3 = F(b[s - 3]), B2 = F(b[s - 2]), B1 = F(b[s - 1]);
    const Elem da = F(D.a), db = F(D.b), dc = F(D.c), dd = F(D.d);
    const Elem w = detail::det2(F, D);
    const Elem inner = -A2 * dd * dd - db * db + A1 * db * dd + B3 * dc - A2 * B2 * dc * dc - da * da * B2 +
                       da * A1 * B2 * dc - A2 * B1 * dc * dd - da * db * B1 + da * A1 * B1 * dd;
    return (F(base) - A3 * dc + A2 + B2 - A1 * B1 + inner / w).felt();
}

/// r > 2, s > 2, D = D(x, y).
inline Felt main1_i_affine(const Field& F, const std::vector<Felt>& a, const std::vector<Felt>& b, Felt x, Felt y,
                           Felt base) {
    const std::size_t r = a.size(), s = b.size();
    const Elem X = F(x), Y = F(y);
    const Elem A2 = F(a[r - 2]), A1 = F(a[r - 1]), B2 = F(b[s - 2]), B1 = F(b[s - 1]);
    return ((-B2 * X * X - Y * Y - B1 * X * Y + A1 * Y - A2) / X + A2 + B2 + F(base)).felt();
}

/// r = 2, s >= 2, general D.
inline Felt main1_ii(const Field& F, const std::vector<Felt>& a, const std::vector<Felt>& b, const Block2& D,
                     Felt base) {
    const std::size_t s = b.size();
    if (a.size() != 2 || s < 2) throw std::invalid_argument("case ii needs r = 2 and s >= 2");
    const Elem A0 = F(a[0]), A1 = F(a[1]), B2 = F(b[s - 2]), B1 = F(b[s - 1]);
    const Elem da = F(D.a), db = F(D.b), dc = F(D.c), dd = F(D.d);
    const Elem w = detail::det2(F, D);
    const Elem inner = -A0 * dd * dd - db * db + A1 * db * dd - B2 * (A0 * dc * dc + da * da - da * A1 * dc) -
                       B1 * (A0 * dc * dd + da * db - da * A1 * dd);
    return (F(base) + A0 + B2 - A1 * B1 + inner / w).felt();
}

/// r = 2, s >= 2, D = D(x, y).
inline Felt main1_ii_affine(const Field& F, const std::vector<Felt>& a, const std::vector<Felt>& b, Felt x, Felt y,
                            Felt base) {
    const std::size_t s = b.size();
    const Elem X = F(x), Y = F(y);
    const Elem A0 = F(a[0]), A1 = F(a[1]), B2 = F(b[s - 2]), B1 = F(b[s - 1]);
    return ((-B2 * X * X - Y * Y - B1 * X * Y + A1 * Y - A0) / X + A0 + B2 + F(base)).felt();
}

/// r >= 2 against a diagonal tail diag(u, v), general D. The a_{r-1} v term
/// stands outside the 1/w factor: it comes from the -a_{r-1} already on R's
/// diagonal.
inline Felt main1_iii(const Field& F, const std::vector<Felt>& a, const DiagPair& uv, const Block2& D, Felt base) {
    const std::size_t r = a.size();
    if (r < 2) throw std::invalid_argument("case iii needs r >= 2");
    const Elem A2 = F(a[r - 2]), A1 = F(a[r - 1]), u = F(uv.u), v = F(uv.v);
    const Elem da = F(D.a), db = F(D.b), dc = F(D.c), dd = F(D.d);
    const Elem w = detail::det2(F, D);
    return (F(base) + u / w * (-A2 * dc * dd - da * db + A1 * db * dc) +
            v / w * (A2 * dc * dd + da * db - da * A1 * dd) + v * A1)
        .felt();
}

/// r >= 2 against diag(u, v), D = D(x, y): the shift is y(v - u) for every x.
inline Felt main1_iii_affine(const Field& F, const DiagPair& uv, Felt /*x*/, Felt y, Felt base) {
    return (F(y) * (F(uv.v) - F(uv.u)) + F(base)).felt();
}

/// Both tails diagonal, ad - bc = 1.
inline Felt main2(const Field& F, const DiagPair& p1, const DiagPair& p2, const Block2& D, Felt base) {
    if (detail::det2(F, D) != F(1)) throw std::invalid_argument("main2 closed form needs ad - bc = 1");
    const Elem u1 = F(p1.u), v1 = F(p1.v), u2 = F(p2.u), v2 = F(p2.v);
    const Elem ad = F(D.a) * F(D.d), bc = F(D.b) * F(D.c);
    return (F(base) - u1 * u2 - v1 * v2 + u2 * (ad * u1 - bc * v1) + v2 * (ad * v1 - bc * u1)).felt();
}

/// Both tails diagonal with ad = x, bc = x - 1.
inline Felt main2_detone(const Field& F, const DiagPair& p1, const DiagPair& p2, Felt x, Felt base) {
    const Elem k = (F(p1.u) - F(p1.v)) * (F(p2.u) - F(p2.v));
    return (F(x) * k + (F(base) - k)).felt();
}

}  // namespace closed_form

// ---------------------------------------------------------------------------
// Trace sweeps

enum class LemmaPath { main1_i, main1_ii, main1_iii, main2 };

inline std::string to_string(LemmaPath p) {
    switch (p) {
        case LemmaPath::main1_i: return "main1-i";
        case LemmaPath::main1_ii: return "main1-ii";
        case LemmaPath::main1_iii: return "main1-iii";
        case LemmaPath::main2: return "main2";
    }
    return "?";
}

enum class ConjugatorFamily {
    affine_all,      // E(x, y), x != 0
    affine_fixed_x,  // E(x0, y)
    detone,          // ad = x, bc = x - 1 (block scaled by diag(x0, 1))
};

inline std::string family_name(ConjugatorFamily f, Felt x0) {
    switch (f) {
        case ConjugatorFamily::affine_all: return "E(x,y),x!=0";
        case ConjugatorFamily::affine_fixed_x: return "E(" + std::to_string(x0.v) + ",y)";
        case ConjugatorFamily::detone:
            return x0.v == 1 ? "detone(ad=x,bc=x-1)" : "diag(" + std::to_string(x0.v) + ",1)*detone(ad=x,bc=x-1)";
    }
    return "?";
}

struct TraceWitness {
    Felt trace;
    ConjugatorSpec conjugator;
};

struct TraceSetReport {
    std::vector<Felt> traces;  // ascending
    std::uint64_t size = 0;
    ConjugatorFamily family = ConjugatorFamily::affine_all;
    Felt fixed_x{1};
    LemmaPath lemma_path = LemmaPath::main1_i;
    std::uint64_t floor = 0;  // guaranteed minimum for this path and family
    std::vector<TraceWitness> witnesses;  // one per trace, same order
};

inline LemmaPath lemma_path_for(const RcfArrangement& M, const RcfArrangement& N) {
    if (M.has_companion_tail() && N.has_companion_tail()) {
        const auto r = M.last_block_degree(), s = N.last_block_degree();
        if (r > 2 && s > 2) return LemmaPath::main1_i;
        if (r == 2) return LemmaPath::main1_ii;
        throw std::invalid_argument("r > 2 with s = 2 has no direct case; swap the operands");
    }
    if (M.has_companion_tail()) return LemmaPath::main1_iii;
    if (N.has_companion_tail()) throw std::invalid_argument("diagonal M against a companion N; swap the operands");
    return LemmaPath::main2;
}

/// Sweeps the conjugator family over M and N, evaluates each trace of
/// M^E N in closed form, checks it against direct conjugation and returns
/// the distinct traces with one witness each.
inline TraceSetReport trace_sweep(const RcfArrangement& M, const RcfArrangement& N, ConjugatorFamily family,
                                  Felt fixed_x = Felt{1}) {
    const Mat& Mm = M.matrix;
    const Mat& Nm = N.matrix;
    Mm.check(Nm);
    const Field& F = Mm.field();
    const std::size_t n = Mm.n();
    if (n < 2) throw std::invalid_argument("trace sweep needs n >= 2");
    if (fixed_x.v == 0 || fixed_x.v >= F.q()) throw std::invalid_argument("fixed x must be a nonzero element");

    TraceSetReport rep;
    rep.lemma_path = lemma_path_for(M, N);
    rep.family = family;
    rep.fixed_x = fixed_x;
    const bool diag_pair_path = rep.lemma_path == LemmaPath::main2;
    if (diag_pair_path != (family == ConjugatorFamily::detone))
        throw std::invalid_argument("conjugator family does not match the lemma path");

    const Felt base = trace(Mm * Nm);
    std::vector<Felt> a, b;
    if (M.has_companion_tail()) a = M.companion_tail().poly.coeffs(), a.pop_back();
    if (N.has_companion_tail()) b = N.companion_tail().poly.coeffs(), b.pop_back();

    std::map<std::uint32_t, ConjugatorSpec> found;
    auto record = [&](Felt closed, const ConjugatorSpec& spec) {
        const Mat E = build_conjugator(F, spec);
        const Felt direct = trace(conjugate(Mm, E) * Nm);
        if (direct != closed)
            throw std::logic_error("closed-form trace " + std::to_string(closed.v) + " disagrees with direct value " +
                                   std::to_string(direct.v) + " (" + to_string(rep.lemma_path) + ")");
        found.try_emplace(closed.v, spec);
    };

    auto affine_value = [&](Felt x, Felt y) {
        switch (rep.lemma_path) {
            case LemmaPath::main1_i: return closed_form::main1_i_affine(F, a, b, x, y, base);
            case LemmaPath::main1_ii: return closed_form::main1_ii_affine(F, a, b, x, y, base);
            default: return closed_form::main1_iii_affine(F, N.diag_tail(), x, y, base);
        }
    };

    switch (family) {
        case ConjugatorFamily::affine_all:
            for (std::uint32_t x = 1; x < F.q(); ++x)
                for (std::uint32_t y = 0; y < F.q(); ++y)
                    record(affine_value(Felt{x}, Felt{y}), ConjugatorSpec::affine(F, n, Felt{x}, Felt{y}));
            rep.floor = rep.lemma_path == LemmaPath::main1_iii ? F.q() : F.q() - 1;
            break;
        case ConjugatorFamily::affine_fixed_x:
            for (std::uint32_t y = 0; y < F.q(); ++y)
                record(affine_value(fixed_x, Felt{y}), ConjugatorSpec::affine(F, n, fixed_x, Felt{y}));
            rep.floor = rep.lemma_path == LemmaPath::main1_iii ? F.q() : static_cast<std::uint64_t>(ceil_half(F.q()));
            break;
        case ConjugatorFamily::detone:
            for (std::uint32_t xi = 0; xi < F.q(); ++xi) {
                const Elem x = F(Felt{xi});
                // D = [[x, x-1], [1, 1]] has det 1; the diag(x0, 1) factor
                // commutes with diag(u, v) and leaves the trace unchanged.
                const Elem x0 = F(fixed_x);
                const Felt closed = closed_form::main2_detone(F, M.diag_tail(), N.diag_tail(), x.felt(), base);
                const Felt da = (x0 * x).felt(), db = (x0 * (x - F(1))).felt();
                const auto spec = fixed_x == F.one() ? ConjugatorSpec::detone(n, da, db, F.one(), F.one())
                                                     : ConjugatorSpec::general(n, da, db, F.one(), F.one());
                record(closed, spec);
            }
            rep.floor = F.q();
            break;
    }

    for (const auto& [t, spec] : found) {
        rep.traces.push_back(Felt{t});
        rep.witnesses.push_back({Felt{t}, spec});
    }
    rep.size = rep.traces.size();
    if (rep.size < rep.floor)
        throw std::logic_error("trace set of size " + std::to_string(rep.size) + " is below the guaranteed " +
                               std::to_string(rep.floor));
    return rep;
}

// ---------------------------------------------------------------------------
// Certified bounds

struct Certificate {
    EtaReport report;  // bound fields only
    TraceSetReport traces;
    bool swapped = false;  // operands exchanged: traces come from B^G A^G
    Mat first_transform;   // P with P^{-1} first P = first arrangement
    Mat second_transform;
    std::vector<Mat> group_conjugators;  // g = P_first E P_second^{-1}, one per trace
};

/// Lower bound on eta(A^G B^G) for non-central A, B in the group, with
/// the operands' arrangements chosen as in the proofs: companion tails
/// first (cases i and ii, swapping operands so that the r = 2 block leads),
/// a companion tail against a diagonal one (case iii), and two diagonal
/// tails (main2).
inline Certificate certify(const Mat& A, const Mat& B, const GroupSpec& group, std::uint64_t seed = 1,
                           TailChoice choice = TailChoice::smallest) {
    if (!group.contains(A) || !group.contains(B))
        throw std::invalid_argument("matrix is not an element of " + group.name());
    if (is_central(A, group.family) || is_central(B, group.family))
        throw std::invalid_argument("central operand: the product is a single class");
    const Field& F = group.field;

    RcfArrangement arr_a = arrange_for_hypothesis(A, choice);
    RcfArrangement arr_b = arrange_for_hypothesis(B, choice);
    bool swapped = false;
    if (arr_a.has_companion_tail() && arr_b.has_companion_tail()) {
        if (arr_a.last_block_degree() > 2 && arr_b.last_block_degree() == 2) swapped = true;
    } else if (!arr_a.has_companion_tail() && arr_b.has_companion_tail()) {
        swapped = true;
    }
    const Mat& first = swapped ? B : A;
    const Mat& second = swapped ? A : B;
    const RcfArrangement& M = swapped ? arr_b : arr_a;
    const RcfArrangement& N = swapped ? arr_a : arr_b;

    Mat P1 = *similarity_transform(first, M.matrix, seed);
    Mat P2 = *similarity_transform(second, N.matrix, seed + 1, det(P1));

    const LemmaPath path = lemma_path_for(M, N);
    Felt x0 = F.one();
    ConjugatorFamily family;
    if (group.family == GroupFamily::SL) x0 = F.div(det(P2), det(P1));
    if (path == LemmaPath::main2)
        family = ConjugatorFamily::detone;
    else if (path == LemmaPath::main1_iii || group.family == GroupFamily::SL)
        family = ConjugatorFamily::affine_fixed_x;
    else
        family = ConjugatorFamily::affine_all;

    TraceSetReport ts = trace_sweep(M, N, family, x0);

    const Mat P2inv = inverse(P2);
    std::vector<Mat> gs;
    for (const auto& w : ts.witnesses) {
        Mat g = P1 * build_conjugator(F, w.conjugator) * P2inv;
        if (!group.contains(g)) throw std::logic_error("witness conjugator is not in " + group.name());
        if (trace(conjugate(first, g) * second) != w.trace)
            throw std::logic_error("group witness does not reproduce its trace");
        gs.push_back(std::move(g));
    }

    Certificate cert{{}, std::move(ts), swapped, std::move(P1), std::move(P2), std::move(gs)};
    cert.report.lower_bound = cert.traces.size;
    cert.report.trace_set_size = cert.traces.size;
    cert.report.bound_path = to_string(cert.traces.lemma_path) + (swapped ? "+swap" : "");
    cert.report.class_a = class_id(A).key();
    cert.report.class_b = class_id(B).key();
    return cert;
}

inline EtaReport certified_lower_bound(const Mat& A, const Mat& B, const GroupSpec& group, std::uint64_t seed = 1) {
    return certify(A, B, group, seed).report;
}

/// The bound every non-central pair is guaranteed: q - 1 in GL, ceil(q/2)
/// in SL.
inline std::uint64_t guaranteed_floor(const GroupSpec& group) {
    return group.family == GroupFamily::GL ? group.field.q() - 1 : static_cast<std::uint64_t>(ceil_half(group.field.q()));
}

}  // namespace classprod

#endif  // CLASSPROD_BOUNDS_HPP

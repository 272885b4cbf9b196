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
 * @file matrix.hpp
 * @brief Dense square matrices over GF(q) and the structured constructors
 *        used by the bound engine.
 *
 * Conventions that the trace formulas in bounds.hpp rely on:
 * - companion(x^r + a_{r-1} x^{r-1} + ... + a_0) has ones on the
 *   subdiagonal and -a_0, ..., -a_{r-1} down the last column;
 * - every 2x2 conjugator block sits in the last two coordinates;
 * - conjugate(A, U) = U^{-1} A U.
 */

#ifndef CLASSPROD_MATRIX_HPP
#define CLASSPROD_MATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "poly.hpp"

namespace classprod {

enum class GroupFamily { GL, SL };

inline std::string to_string(GroupFamily f) { return f == GroupFamily::GL ? "GL" : "SL"; }

inline GroupFamily parse_group_family(const std::string& s) {
    if (s == "GL") return GroupFamily::GL;
    if (s == "SL") return GroupFamily::SL;
    throw std::invalid_argument("group family must be GL or SL: '" + s + "'");
}

/// Dense n x n matrix, row-major.
class Mat {
   public:
    Mat(Field field, std::size_t n) : field_(std::move(field)), n_(n), e_(n * n) {
        if (n == 0) throw std::invalid_argument("matrix dimension must be >= 1");
    }

    Mat(Field field, std::size_t n, std::vector<Felt> entries)
        : field_(std::move(field)), n_(n), e_(std::move(entries)) {
        if (n == 0) throw std::invalid_argument("matrix dimension must be >= 1");
        if (e_.size() != n * n) throw std::invalid_argument("matrix needs n*n entries");
        for (auto a : e_)
            if (a.v >= field_.q()) throw std::out_of_range("matrix entry outside [0, q)");
    }

    static Mat identity(const Field& field, std::size_t n) {
        Mat I(field, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = field.one();
        return I;
    }

    static Mat scalar(const Field& field, std::size_t n, Felt a) {
        Mat S(field, n);
        for (std::size_t i = 0; i < n; ++i) S(i, i) = a;
        return S;
    }

    static Mat diagonal(const Field& field, const std::vector<Felt>& d) {
        Mat D(field, d.size());
        for (std::size_t i = 0; i < d.size(); ++i) D(i, i) = d[i];
        return D;
    }

    const Field& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }

    Felt& operator()(std::size_t i, std::size_t j) noexcept { return e_[i * n_ + j]; }
    Felt operator()(std::size_t i, std::size_t j) const noexcept { return e_[i * n_ + j]; }

    std::span<const Felt> entries() const noexcept { return e_; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.n_ == b.n_ && a.field_ == b.field_ && a.e_ == b.e_;
    }

    void check(const Mat& other) const {
        if (!(field_ == other.field_)) throw FieldMismatch();
        if (n_ != other.n_) throw std::invalid_argument("matrix dimension mismatch");
    }

   private:
    Field field_;
    std::size_t n_;
    std::vector<Felt> e_;
};

inline Mat operator*(const Mat& A, const Mat& B) {
    A.check(B);
    const Field& F = A.field();
    const std::size_t n = A.n();
    Mat C(F, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Felt a = A(i, k);
            if (a.v == 0) continue;
            for (std::size_t j = 0; j < n; ++j) C(i, j) = F.add(C(i, j), F.mul(a, B(k, j)));
        }
    return C;
}

inline Mat operator+(const Mat& A, const Mat& B) {
    A.check(B);
    Mat C(A.field(), A.n());
    for (std::size_t i = 0; i < A.n(); ++i)
        for (std::size_t j = 0; j < A.n(); ++j) C(i, j) = A.field().add(A(i, j), B(i, j));
    return C;
}

inline Mat operator-(const Mat& A, const Mat& B) {
    A.check(B);
    Mat C(A.field(), A.n());
    for (std::size_t i = 0; i < A.n(); ++i)
        for (std::size_t j = 0; j < A.n(); ++j) C(i, j) = A.field().sub(A(i, j), B(i, j));
    return C;
}

inline Felt trace(const Mat& A) {
    Felt t = A.field().zero();
    for (std::size_t i = 0; i < A.n(); ++i) t = A.field().add(t, A(i, i));
    return t;
}

inline Felt det(const Mat& A) {
    const Field& F = A.field();
    const std::size_t n = A.n();
    Mat W = A;
    Felt d = F.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && W(piv, c).v == 0) ++piv;
        if (piv == n) return F.zero();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(W(piv, j), W(c, j));
            d = F.neg(d);
        }
        d = F.mul(d, W(c, c));
        const Felt inv = F.inv(W(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (W(i, c).v == 0) continue;
            const Felt f = F.mul(W(i, c), inv);
            for (std::size_t j = c; j < n; ++j) W(i, j) = F.sub(W(i, j), F.mul(f, W(c, j)));
        }
    }
    return d;
}

/// Gauss-Jordan inverse; nothing for a singular matrix.
inline std::optional<Mat> try_inverse(const Mat& A) {
    const Field& F = A.field();
    const std::size_t n = A.n();
    Mat W = A;
    Mat R = Mat::identity(F, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && W(piv, c).v == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(W(piv, j), W(c, j));
                std::swap(R(piv, j), R(c, j));
            }
        const Felt inv = F.inv(W(c, c));
        for (std::size_t j = 0; j < n; ++j) {
            W(c, j) = F.mul(W(c, j), inv);
            R(c, j) = F.mul(R(c, j), inv);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || W(i, c).v == 0) continue;
            const Felt f = W(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                W(i, j) = F.sub(W(i, j), F.mul(f, W(c, j)));
                R(i, j) = F.sub(R(i, j), F.mul(f, R(c, j)));
            }
        }
    }
    return R;
}

inline Mat inverse(const Mat& A) {
    auto R = try_inverse(A);
    if (!R) throw std::domain_error("matrix is singular");
    return *std::move(R);
}

/// U^{-1} A U
inline Mat conjugate(const Mat& A, const Mat& U) {
    A.check(U);
    return inverse(U) * A * U;
}

inline bool is_scalar(const Mat& A) {
    for (std::size_t i = 0; i < A.n(); ++i)
        for (std::size_t j = 0; j < A.n(); ++j)
            if (i == j ? A(i, j) != A(0, 0) : A(i, j).v != 0) return false;
    return true;
}

inline bool in_group(const Mat& A, GroupFamily family) {
    const Felt d = det(A);
    return family == GroupFamily::GL ? d.v != 0 : d == A.field().one();
}

/// The centre of GL(n,q) and of SL(n,q) is the set of scalar matrices it
/// contains; for SL a scalar aI lies in the group exactly when a^n = 1.
inline bool is_central(const Mat& A, GroupFamily family) {
    if (!is_scalar(A)) return false;
    return family == GroupFamily::GL ? A(0, 0).v != 0 : A.field().pow(A(0, 0), A.n()) == A.field().one();
}

/// Companion matrix of a monic polynomial of degree r >= 1.
inline Mat companion(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("companion matrix needs degree >= 1");
    if (!f.is_monic()) throw std::invalid_argument("companion matrix needs a monic polynomial");
    const Field& F = f.field();
    const auto r = static_cast<std::size_t>(f.degree());
    Mat R(F, r);
    for (std::size_t i = 1; i < r; ++i) R(i, i - 1) = F.one();
    for (std::size_t i = 0; i < r; ++i) R(i, r - 1) = F.neg(f.coeff(i));
    return R;
}

/// Block-diagonal assembly, blocks in list order.
inline Mat direct_sum(std::span<const Mat> blocks) {
    if (blocks.empty()) throw std::invalid_argument("direct sum of an empty list");
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!(b.field() == blocks[0].field())) throw FieldMismatch();
        n += b.n();
    }
    Mat S(blocks[0].field(), n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.n(); ++i)
            for (std::size_t j = 0; j < b.n(); ++j) S(off + i, off + j) = b(i, j);
        off += b.n();
    }
    return S;
}

inline Mat direct_sum(std::initializer_list<Mat> blocks) {
    return direct_sum(std::span<const Mat>(blocks.begin(), blocks.size()));
}

/// Two distinct diagonal entries placed in the last two coordinates.
struct DiagPair {
    Felt u;
    Felt v;

    void validate() const {
        if (u == v) throw std::invalid_argument("diagonal pair needs u != v");
    }
};

/// The 2x2 block D of a conjugator E = I (+) D, embedded at the end of an
/// n x n identity.
struct ConjugatorSpec {
    enum class Kind { general, affine, detone };

    Kind kind = Kind::general;
    Felt a, b, c, d;
    std::size_t n = 2;

    /// D = [[a, b], [c, d]] with ad - bc != 0.
    static ConjugatorSpec general(std::size_t n, Felt a, Felt b, Felt c, Felt d) {
        return {Kind::general, a, b, c, d, n};
    }

    /// D(x, y) = [[x, y], [0, 1]], x != 0.
    static ConjugatorSpec affine(const Field& F, std::size_t n, Felt x, Felt y) {
        return {Kind::affine, x, y, F.zero(), F.one(), n};
    }

    /// D = [[a, b], [c, d]] with ad - bc = 1.
    static ConjugatorSpec detone(std::size_t n, Felt a, Felt b, Felt c, Felt d) {
        return {Kind::detone, a, b, c, d, n};
    }

    Felt determinant(const Field& F) const { return F.sub(F.mul(a, d), F.mul(b, c)); }

    void validate(const Field& F) const {
        if (n < 2) throw std::invalid_argument("conjugator needs dimension >= 2");
        for (Felt e : {a, b, c, d})
            if (e.v >= F.q()) throw std::out_of_range("conjugator entry outside [0, q)");
        if (determinant(F).v == 0) throw std::invalid_argument("conjugator block is singular (w = 0)");
        if (kind == Kind::affine && (a.v == 0 || c.v != 0 || d != F.one()))
            throw std::invalid_argument("affine conjugator needs the form [[x, y], [0, 1]] with x != 0");
        if (kind == Kind::detone && determinant(F) != F.one())
            throw std::invalid_argument("det-one conjugator needs ad - bc = 1");
    }
};

inline Mat build_conjugator(const Field& F, const ConjugatorSpec& spec) {
    spec.validate(F);
    Mat E = Mat::identity(F, spec.n);
    const std::size_t k = spec.n - 2;
    E(k, k) = spec.a;
    E(k, k + 1) = spec.b;
    E(k + 1, k) = spec.c;
    E(k + 1, k + 1) = spec.d;
    return E;
}

/// Rows separated by ';', entries by ','; e.g. "1,1;0,1".
inline Mat parse_matrix(const Field& field, const std::string& literal) {
    std::vector<std::vector<Felt>> rows;
    std::stringstream ss(literal);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<Felt> r;
        std::stringstream rs(row);
        std::string item;
        while (std::getline(rs, item, ',')) r.push_back(parse_element(field, item));
        rows.push_back(std::move(r));
    }
    const std::size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("empty matrix literal");
    std::vector<Felt> e;
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("matrix literal is not square: '" + literal + "'");
        e.insert(e.end(), r.begin(), r.end());
    }
    return Mat(field, n, std::move(e));
}

inline std::string to_literal(const Mat& A) {
    std::string out;
    for (std::size_t i = 0; i < A.n(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < A.n(); ++j) {
            if (j) out += ',';
            out += std::to_string(A(i, j).v);
        }
    }
    return out;
}

namespace detail {

/// Basis of the right nullspace of a rows x cols matrix (row-major).
inline std::vector<std::vector<Felt>> nullspace(const Field& F, std::size_t rows, std::size_t cols,
                                                std::vector<Felt> a) {
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c].v == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const Felt inv = F.inv(a[r * cols + c]);
        for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = F.mul(a[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i * cols + c].v == 0) continue;
            const Felt f = a[i * cols + c];
            for (std::size_t j = 0; j < cols; ++j)
                a[i * cols + j] = F.sub(a[i * cols + j], F.mul(f, a[r * cols + j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Felt>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Felt> v(cols, F.zero());
        v[free] = F.one();
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = F.neg(a[i * cols + free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

}  // namespace classprod

#endif  // CLASSPROD_MATRIX_HPP

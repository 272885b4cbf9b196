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
 * @file field.hpp
 * @brief Exact arithmetic in GF(p^m), q = p^m <= 2^16.
 *
 * Elements are encoded as integers in [0, q): the base-p digits of the
 * encoding, least significant first, are the coefficients of the canonical
 * polynomial representative modulo the field modulus. This encoding is the
 * interchange format for every literal and report in the library.
 *
 * A Field is a cheap handle onto immutable lookup tables (log/antilog,
 * negation, square roots, and an addition table for small q), so copies can
 * be passed around and shared across threads freely.
 *
 * Fields are built by make_field() / make_field_with_modulus() in poly.hpp,
 * which own the irreducibility check of the modulus.
 */

#ifndef CLASSPROD_FIELD_HPP
#define CLASSPROD_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace classprod {

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Thrown for operands that come from two different fields.
class FieldMismatch : public std::invalid_argument {
   public:
    FieldMismatch() : std::invalid_argument("operands belong to different fields") {}
};

/// A field element in its base-p integer encoding.
struct Felt {
    std::uint32_t v = 0;

    constexpr Felt() = default;
    constexpr explicit Felt(std::uint32_t value) : v(value) {}

    friend constexpr auto operator<=>(Felt, Felt) = default;
};

class Field;
class Elem;

namespace detail {

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

struct FieldTables {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;  // monic, low degree first, size m + 1
    std::vector<std::uint32_t> pow_p;    // p^0 .. p^m

    std::vector<std::uint32_t> exp;  // exp[i] = g^i, i in [0, 2(q-1))
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<std::uint32_t> neg;
    std::vector<std::uint16_t> add_table;  // q*q entries when q <= 256
    std::vector<std::int32_t> root;        // canonical square root or -1
    std::uint32_t generator = 1;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p == 2) return a ^ b;
        if (m == 1) {
            std::uint32_t s = a + b;
            return s >= p ? s - p : s;
        }
        if (!add_table.empty()) return add_table[a * q + b];
        return add_digitwise(a, b);
    }

    std::uint32_t add_digitwise(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t out = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            std::uint32_t d = (a % p + b % p) % p;
            out += d * pow_p[i];
            a /= p;
            b /= p;
        }
        return out;
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp[log[a] + log[b]];
    }

    std::uint32_t inv(std::uint32_t a) const { return exp[(q - 1 - log[a]) % (q - 1)]; }

    // Slow path used while the tables are being built: polynomial product
    // reduced by the modulus, coefficients mod p.
    std::uint32_t mul_reference(std::uint32_t a, std::uint32_t b) const {
        if (m == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
        std::vector<std::uint64_t> prod(2 * m - 1, 0);
        std::vector<std::uint32_t> da(m), db(m);
        for (std::uint32_t i = 0; i < m; ++i) {
            da[i] = a % p;
            a /= p;
            db[i] = b % p;
            b /= p;
        }
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
        for (std::uint32_t k = 2 * m - 1; k-- > m;) {
            std::uint64_t c = prod[k];
            if (c == 0) continue;
            // x^k = x^(k-m) * x^m and x^m = -(modulus low part)
            for (std::uint32_t i = 0; i < m; ++i)
                prod[k - m + i] = (prod[k - m + i] + c * (p - modulus[i]) % p) % p;
            prod[k] = 0;
        }
        std::uint32_t out = 0;
        for (std::uint32_t i = 0; i < m; ++i) out += static_cast<std::uint32_t>(prod[i]) * pow_p[i];
        return out;
    }

    std::uint32_t pow_reference(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t result = 1;
        while (e > 0) {
            if (e & 1) result = mul_reference(result, a);
            a = mul_reference(a, a);
            e >>= 1;
        }
        return result;
    }

    void build() {
        pow_p.assign(m + 1, 1);
        for (std::uint32_t i = 1; i <= m; ++i) pow_p[i] = pow_p[i - 1] * p;

        neg.resize(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            std::uint32_t out = 0, x = a;
            for (std::uint32_t i = 0; i < m; ++i) {
                std::uint32_t d = x % p;
                x /= p;
                out += ((p - d) % p) * pow_p[i];
            }
            neg[a] = out;
        }
        if (p != 2 && m > 1 && q <= 256) {
            add_table.resize(std::size_t{q} * q);
            for (std::uint32_t a = 0; a < q; ++a)
                for (std::uint32_t b = 0; b < q; ++b)
                    add_table[a * q + b] = static_cast<std::uint16_t>(add_digitwise(a, b));
        }

        // Primitive element: g^((q-1)/l) != 1 for every prime l | q-1.
        const std::uint32_t order = q - 1;
        const auto factors = prime_factors(order);
        generator = 0;
        for (std::uint32_t g = 1; g < q && generator == 0; ++g) {
            bool primitive = true;
            for (auto l : factors)
                if (pow_reference(g, order / l) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) generator = g;
        }
        if (generator == 0) throw std::logic_error("field modulus is not irreducible");

        exp.resize(2 * std::size_t{order} + 1);
        log.assign(q, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp[i] = x;
            log[x] = i;
            x = mul_reference(x, generator);
        }
        if (x != 1) throw std::logic_error("field modulus is not irreducible");
        for (std::uint32_t i = order; i < exp.size(); ++i) exp[i] = exp[i - order];

        // Descending y leaves the smaller of +-y; for p = 2 squaring is a
        // bijection and every element gets its unique root.
        root.assign(q, -1);
        for (std::uint32_t y = q; y-- > 0;) root[mul(y, y)] = static_cast<std::int32_t>(y);
    }
};

}  // namespace detail

/// Handle to an immutable finite field GF(p^m).
class Field {
   public:
    /// Builds the tables for GF(p^m) with the given monic modulus (low
    /// degree first). The caller is responsible for irreducibility; use
    /// make_field_with_modulus() for a checked construction.
    static Field from_irreducible_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
        if (!detail::is_prime(p)) throw std::invalid_argument("characteristic must be prime");
        if (modulus.size() < 2 || modulus.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree >= 1");
        auto t = std::make_shared<detail::FieldTables>();
        t->p = p;
        t->m = static_cast<std::uint32_t>(modulus.size() - 1);
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < t->m; ++i) {
            q *= p;
            if (q > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^16");
        }
        for (auto c : modulus)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        t->q = static_cast<std::uint32_t>(q);
        t->modulus = std::move(modulus);
        t->build();
        return Field(std::move(t));
    }

    std::uint32_t p() const noexcept { return t_->p; }
    std::uint32_t m() const noexcept { return t_->m; }
    std::uint32_t q() const noexcept { return t_->q; }
    bool is_even() const noexcept { return t_->p == 2; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return t_->modulus; }

    /// "p^m"
    std::string literal() const { return std::to_string(p()) + "^" + std::to_string(m()); }

    Felt zero() const noexcept { return Felt{0}; }
    Felt one() const noexcept { return Felt{1}; }
    Felt generator() const noexcept { return Felt{t_->generator}; }

    /// Checked conversion of an encoding.
    Felt element(std::uint64_t encoding) const {
        if (encoding >= q()) throw std::out_of_range("element encoding outside [0, q)");
        return Felt{static_cast<std::uint32_t>(encoding)};
    }

    /// Image of an integer in the prime subfield.
    Felt from_int(std::int64_t k) const {
        std::int64_t r = k % static_cast<std::int64_t>(p());
        if (r < 0) r += p();
        return Felt{static_cast<std::uint32_t>(r)};
    }

    /// Coefficient vector (length m, low degree first) of an element.
    std::vector<std::uint32_t> decode(Felt a) const {
        std::vector<std::uint32_t> out(m());
        std::uint32_t x = a.v;
        for (auto& d : out) {
            d = x % p();
            x /= p();
        }
        return out;
    }

    Felt encode(const std::vector<std::uint32_t>& digits) const {
        if (digits.size() != m()) throw std::invalid_argument("coefficient vector must have length m");
        std::uint32_t out = 0;
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (digits[i] >= p()) throw std::invalid_argument("coefficient out of range");
            out = out * p() + digits[i];
        }
        return Felt{out};
    }

    Felt add(Felt a, Felt b) const noexcept { return Felt{t_->add(a.v, b.v)}; }
    Felt neg(Felt a) const noexcept { return Felt{t_->neg[a.v]}; }
    Felt sub(Felt a, Felt b) const noexcept { return Felt{t_->add(a.v, t_->neg[b.v])}; }
    Felt mul(Felt a, Felt b) const noexcept { return Felt{t_->mul(a.v, b.v)}; }

    Felt inv(Felt a) const {
        if (a.v == 0) throw std::domain_error("inverse of zero");
        return Felt{t_->inv(a.v)};
    }

    Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }

    Felt pow(Felt a, std::uint64_t e) const noexcept {
        if (e == 0) return one();
        if (a.v == 0) return zero();
        return Felt{t_->exp[(std::uint64_t{t_->log[a.v]} * e) % (q() - 1)]};
    }

    bool is_square(Felt a) const noexcept { return t_->root[a.v] >= 0; }

    /// Canonical square root: the smaller encoding of the two roots (odd q),
    /// the unique root a^(q/2) (even q), or nothing for a non-square.
    std::optional<Felt> sqrt(Felt a) const noexcept {
        auto r = t_->root[a.v];
        if (r < 0) return std::nullopt;
        return Felt{static_cast<std::uint32_t>(r)};
    }

    /// Wraps an element for operator-based arithmetic.
    Elem operator()(Felt a) const;
    Elem operator()(std::int64_t k) const;

    /// Fields are equal when characteristic and modulus agree.
    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
    }

    const detail::FieldTables* tables() const noexcept { return t_.get(); }

   private:
    explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}

    std::shared_ptr<const detail::FieldTables> t_;
};

/// Field element bound to its field, for formula-style code.
class Elem {
   public:
    Elem(const detail::FieldTables* f, Felt v) : f_(f), v_(v) {}

    Felt felt() const noexcept { return v_; }
    std::uint32_t encoding() const noexcept { return v_.v; }
    bool is_zero() const noexcept { return v_.v == 0; }

    friend Elem operator+(Elem a, Elem b) { return {a.check(b), Felt{a.f_->add(a.v_.v, b.v_.v)}}; }
    friend Elem operator-(Elem a, Elem b) { return {a.check(b), Felt{a.f_->add(a.v_.v, a.f_->neg[b.v_.v])}}; }
    friend Elem operator*(Elem a, Elem b) { return {a.check(b), Felt{a.f_->mul(a.v_.v, b.v_.v)}}; }
    friend Elem operator/(Elem a, Elem b) {
        a.check(b);
        if (b.v_.v == 0) throw std::domain_error("division by zero");
        return {a.f_, Felt{a.f_->mul(a.v_.v, a.f_->inv(b.v_.v))}};
    }
    Elem operator-() const { return {f_, Felt{f_->neg[v_.v]}}; }
    Elem& operator+=(Elem b) { return *this = *this + b; }
    Elem& operator-=(Elem b) { return *this = *this - b; }
    Elem& operator*=(Elem b) { return *this = *this * b; }

    friend bool operator==(Elem a, Elem b) {
        a.check(b);
        return a.v_ == b.v_;
    }

   private:
    const detail::FieldTables* check(const Elem& o) const {
        if (f_ != o.f_ && (f_->p != o.f_->p || f_->modulus != o.f_->modulus)) throw FieldMismatch();
        return f_;
    }

    const detail::FieldTables* f_;
    Felt v_;
};

inline Elem Field::operator()(Felt a) const { return Elem(t_.get(), element(a.v)); }
inline Elem Field::operator()(std::int64_t k) const { return Elem(t_.get(), from_int(k)); }

/// Parses "p^m" into (p, m). Validation of p and m happens at construction.
inline std::pair<std::uint32_t, std::uint32_t> parse_field_literal(const std::string& text) {
    auto caret = text.find('^');
    if (caret == std::string::npos || caret == 0 || caret + 1 == text.size())
        throw std::invalid_argument("field literal must look like p^m: '" + text + "'");
    auto parse_uint = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
            throw std::invalid_argument("field literal must look like p^m: '" + text + "'");
        return static_cast<std::uint32_t>(std::stoul(s));
    };
    return {parse_uint(text.substr(0, caret)), parse_uint(text.substr(caret + 1))};
}

/// Parses a decimal element encoding in [0, q).
inline Felt parse_element(const Field& field, const std::string& text) {
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty element literal");
    auto s = text.substr(first, last - first + 1);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
        throw std::invalid_argument("element literal must be a decimal encoding: '" + text + "'");
    auto value = std::stoull(s);
    if (value >= field.q()) throw std::invalid_argument("element literal outside [0, q): '" + text + "'");
    return Felt{static_cast<std::uint32_t>(value)};
}

inline int ceil_half(std::uint32_t q) { return static_cast<int>((q + 1) / 2); }

}  // namespace classprod

#endif  // CLASSPROD_FIELD_HPP

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

#ifndef CLASSPROD_POLY_HPP
#define CLASSPROD_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace classprod {

/// Dense univariate polynomial over a finite field, low degree first.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
   public:
    explicit Poly(Field field) : field_(std::move(field)) {}

    Poly(Field field, std::vector<Felt> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        for (auto a : c_)
            if (a.v >= field_.q()) throw std::out_of_range("polynomial coefficient outside [0, q)");
        trim();
    }

    static Poly constant(const Field& field, Felt a) { return Poly(field, {a}); }

    /// x - root
    static Poly linear(const Field& field, Felt root) { return Poly(field, {field.neg(root), field.one()}); }

    static Poly monomial(const Field& field, Felt a, std::size_t degree) {
        std::vector<Felt> c(degree + 1, field.zero());
        c[degree] = a;
        return Poly(field, std::move(c));
    }

    const Field& field() const noexcept { return field_; }
    const std::vector<Felt>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == field_.one(); }
    Felt lead() const noexcept { return c_.empty() ? field_.zero() : c_.back(); }
    Felt coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : field_.zero(); }

    Poly monic() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no monic associate");
        return scaled(field_.inv(lead()));
    }

    Poly scaled(Felt a) const {
        std::vector<Felt> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = field_.mul(c_[i], a);
        return Poly(field_, std::move(c));
    }

    Felt eval(Felt x) const noexcept {
        Felt acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
        return acc;
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        f.check(g);
        std::vector<Felt> c(std::max(f.c_.size(), g.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.field_.add(f.coeff(i), g.coeff(i));
        return Poly(f.field_, std::move(c));
    }

    friend Poly operator-(const Poly& f, const Poly& g) {
        f.check(g);
        std::vector<Felt> c(std::max(f.c_.size(), g.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.field_.sub(f.coeff(i), g.coeff(i));
        return Poly(f.field_, std::move(c));
    }

    Poly operator-() const { return scaled(field_.neg(field_.one())); }

    friend Poly operator*(const Poly& f, const Poly& g) {
        f.check(g);
        if (f.is_zero() || g.is_zero()) return Poly(f.field_);
        std::vector<Felt> c(f.c_.size() + g.c_.size() - 1, f.field_.zero());
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i].v == 0) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j)
                c[i + j] = f.field_.add(c[i + j], f.field_.mul(f.c_[i], g.c_[j]));
        }
        return Poly(f.field_, std::move(c));
    }

    friend bool operator==(const Poly& f, const Poly& g) { return f.field_ == g.field_ && f.c_ == g.c_; }

    void check(const Poly& other) const {
        if (!(field_ == other.field_)) throw FieldMismatch();
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().v == 0) c_.pop_back();
    }

    Field field_;
    std::vector<Felt> c_;
};

/// f = quotient * g + remainder with deg remainder < deg g.
inline std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    f.check(g);
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& F = f.field();
    std::vector<Felt> r = f.coeffs();
    const int dg = g.degree();
    if (f.degree() < dg) return {Poly(F), f};
    std::vector<Felt> quot(static_cast<std::size_t>(f.degree() - dg + 1), F.zero());
    const Felt lead_inv = F.inv(g.lead());
    for (int k = f.degree(); k >= dg; --k) {
        Felt c = r[static_cast<std::size_t>(k)];
        if (c.v == 0) continue;
        Felt t = F.mul(c, lead_inv);
        quot[static_cast<std::size_t>(k - dg)] = t;
        for (int i = 0; i <= dg; ++i) {
            auto idx = static_cast<std::size_t>(k - dg + i);
            r[idx] = F.sub(r[idx], F.mul(t, g.coeffs()[static_cast<std::size_t>(i)]));
        }
    }
    r.resize(static_cast<std::size_t>(dg));
    return {Poly(F, std::move(quot)), Poly(F, std::move(r))};
}

inline Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly f, Poly g) {
    f.check(g);
    while (!g.is_zero()) {
        Poly r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return f.is_zero() ? f : f.monic();
}

/// Total order used for every deterministic tie-break: degree first, then
/// coefficient encodings compared lexicographically from the constant term.
inline bool poly_less(const Poly& f, const Poly& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-q digits of index (constant term least significant).
inline Poly monic_from_index(const Field& field, std::size_t degree, std::uint64_t index) {
    std::vector<Felt> c(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) {
        c[i] = Felt{static_cast<std::uint32_t>(index % field.q())};
        index /= field.q();
    }
    c[degree] = field.one();
    return Poly(field, std::move(c));
}

inline std::uint64_t count_monic(const Field& field, std::size_t degree) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < degree; ++i) n *= field.q();
    return n;
}

/// All roots of f in the field, ascending by encoding (brute force).
inline std::vector<Felt> roots(const Poly& f) {
    std::vector<Felt> out;
    if (f.is_zero()) throw std::domain_error("every element is a root of the zero polynomial");
    for (std::uint32_t a = 0; a < f.field().q(); ++a)
        if (f.eval(Felt{a}).v == 0) out.push_back(Felt{a});
    return out;
}

/// Irreducibility by exhaustive trial division against every monic
/// polynomial of degree 1 .. deg f / 2. Linear divisors are tested by root
/// evaluation, which is the same division with the remainder read off
/// directly.
inline bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("irreducibility needs a polynomial of degree >= 1");
    if (!f.is_monic()) throw std::invalid_argument("irreducibility test expects a monic polynomial");
    const auto n = static_cast<std::size_t>(f.degree());
    if (n == 1) return true;
    for (std::uint32_t a = 0; a < f.field().q(); ++a)
        if (f.eval(Felt{a}).v == 0) return false;
    for (std::size_t d = 2; d <= n / 2; ++d) {
        const auto count = count_monic(f.field(), d);
        for (std::uint64_t i = 0; i < count; ++i)
            if ((f % monic_from_index(f.field(), d, i)).is_zero()) return false;
    }
    return true;
}

/// Smallest-encoded w with x^2 - w x + 1 irreducible, for even q >= 4.
inline Felt find_w_irreducible(const Field& field) {
    if (!field.is_even() || field.q() < 4)
        throw std::invalid_argument("find_w_irreducible needs q = 2^m with m > 1");
    for (std::uint32_t w = 0; w < field.q(); ++w) {
        Poly f(field, {field.one(), field.neg(Felt{w}), field.one()});
        if (is_irreducible(f)) return Felt{w};
    }
    throw std::logic_error("no irreducible x^2 - wx + 1 found");
}

namespace detail {

inline Field prime_field(std::uint32_t p) { return Field::from_irreducible_modulus(p, {0, 1}); }

inline void check_field_parameters(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) throw std::invalid_argument("field order p^m exceeds 2^16");
    }
}

}  // namespace detail

/// GF(p^m) with an explicit modulus (monic, low degree first), checked for
/// irreducibility over Z/p.
inline Field make_field_with_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
    detail::check_field_parameters(p, static_cast<std::uint32_t>(modulus.size() - 1));
    const Field base = detail::prime_field(p);
    std::vector<Felt> c;
    for (auto a : modulus) {
        if (a >= p) throw std::invalid_argument("modulus coefficient out of range");
        c.push_back(Felt{a});
    }
    Poly f(base, std::move(c));
    if (!f.is_monic() || f.degree() != static_cast<int>(modulus.size() - 1))
        throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(f)) throw std::invalid_argument("modulus is reducible over Z/p");
    return Field::from_irreducible_modulus(p, modulus);
}

/// GF(p^m) with the deterministic modulus: the smallest monic irreducible of
/// degree m, coefficient vectors compared lexicographically starting from the
/// constant term. For m = 1 this is x itself and arithmetic is mod p.
inline Field make_field(std::uint32_t p, std::uint32_t m) {
    detail::check_field_parameters(p, m);
    if (m == 1) return detail::prime_field(p);
    const Field base = detail::prime_field(p);
    const auto count = count_monic(base, m);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        // c_0 is the most significant digit of idx.
        std::vector<Felt> c(m + 1);
        std::uint64_t x = idx;
        for (std::uint32_t i = m; i-- > 0;) {
            c[i] = Felt{static_cast<std::uint32_t>(x % p)};
            x /= p;
        }
        c[m] = base.one();
        Poly f(base, c);
        if (f.coeff(0).v == 0) continue;
        if (is_irreducible(f)) {
            std::vector<std::uint32_t> modulus;
            for (auto a : c) modulus.push_back(a.v);
            return Field::from_irreducible_modulus(p, std::move(modulus));
        }
    }
    throw std::logic_error("no irreducible modulus found");
}

inline Field parse_field(const std::string& literal) {
    auto [p, m] = parse_field_literal(literal);
    return make_field(p, m);
}

/// Comma-separated coefficient encodings, low degree first: "1,0,1" = x^2+1.
inline Poly parse_poly(const Field& field, const std::string& literal) {
    std::vector<Felt> c;
    std::stringstream ss(literal);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_element(field, item));
    if (c.empty()) throw std::invalid_argument("empty polynomial literal");
    return Poly(field, std::move(c));
}

inline std::string to_literal(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.coeffs()[i].v);
    }
    return out;
}

}  // namespace classprod

#endif  // CLASSPROD_POLY_HPP

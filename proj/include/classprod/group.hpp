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
 * @file group.hpp
 * @brief Exhaustive engine for GL(n,q) and SL(n,q): element enumeration,
 *        conjugacy classes, exact eta(A^G B^G) and the min(G) scan.
 *
 * Elements are stored as 64-bit codes (entry (i,j) is the base-q digit at
 * position i*n+j) sorted ascending, so an element's index is a binary
 * search away.
 *
 * Classes are the connected components of the conjugation action of a
 * generating set (elementary transvections I + t^k E_ij, plus
 * diag(g, 1, ..., 1) for GL with g primitive), found with union-find. For
 * groups up to kClosureCheckLimit elements every class is then checked
 * against orbit-stabilizer with a brute-force centralizer.
 *
 * eta(A^G B^G) is the number of classes met by {X B : X in A^G}: every
 * product X Y with X in A^G, Y in B^G is conjugate to one of these.
 */

#ifndef CLASSPROD_GROUP_HPP
#define CLASSPROD_GROUP_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace classprod {

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;
inline constexpr std::uint64_t kClosureCheckLimit = 100'000;

/// The requested group is larger than the configured element budget.
class BudgetExceeded : public std::runtime_error {
   public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// |GL(n,q)| = prod_{i<n} (q^n - q^i), |SL(n,q)| = |GL(n,q)| / (q - 1);
/// saturates at UINT64_MAX.
inline std::uint64_t group_order(GroupFamily family, std::size_t n, std::uint32_t q) {
    __extension__ typedef unsigned __int128 u128;
    constexpr u128 cap = std::numeric_limits<std::uint64_t>::max();
    u128 qn = 1;
    for (std::size_t i = 0; i < n; ++i) {
        qn *= q;
        if (qn > cap) return std::numeric_limits<std::uint64_t>::max();
    }
    u128 order = 1, qi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        order *= (qn - qi);
        if (order > cap * (q - 1)) return std::numeric_limits<std::uint64_t>::max();
        qi *= q;
    }
    if (family == GroupFamily::SL) order /= (q - 1);
    return order > cap ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(order);
}

struct GroupSpec {
    GroupFamily family;
    std::size_t n;
    Field field;
    std::uint64_t order;

    static GroupSpec make(GroupFamily family, std::size_t n, Field field) {
        if (n < 2) throw std::invalid_argument("group dimension must be >= 2");
        const auto order = group_order(family, n, field.q());
        return {family, n, std::move(field), order};
    }

    /// e.g. "GL(2,9)"
    std::string name() const {
        return to_string(family) + "(" + std::to_string(n) + "," + std::to_string(field.q()) + ")";
    }

    bool contains(const Mat& A) const { return A.n() == n && A.field() == field && in_group(A, family); }
};

namespace detail {

inline constexpr std::size_t kMaxKernelDim = 6;

using Packed = std::array<std::uint32_t, kMaxKernelDim * kMaxKernelDim>;

/// Fixed-capacity matrix arithmetic on raw encodings, for the enumeration
/// loops.
class Kernel {
   public:
    Kernel(const Field& field, std::size_t n) : f_(field.tables()), n_(n), q_(field.q()) {}

    std::size_t n() const { return n_; }

    std::uint64_t code(const Packed& a) const {
        std::uint64_t c = 0;
        for (std::size_t i = n_ * n_; i-- > 0;) c = c * q_ + a[i];
        return c;
    }

    Packed decode(std::uint64_t c) const {
        Packed a{};
        for (std::size_t i = 0; i < n_ * n_; ++i) {
            a[i] = static_cast<std::uint32_t>(c % q_);
            c /= q_;
        }
        return a;
    }

    Packed pack(const Mat& A) const {
        Packed a{};
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) a[i * n_ + j] = A(i, j).v;
        return a;
    }

    Mat unpack(const Field& field, const Packed& a) const {
        std::vector<Felt> e(n_ * n_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = Felt{a[i]};
        return Mat(field, n_, std::move(e));
    }

    Packed mul(const Packed& a, const Packed& b) const {
        Packed c{};
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const std::uint32_t x = a[i * n_ + k];
                if (x == 0) continue;
                for (std::size_t j = 0; j < n_; ++j) c[i * n_ + j] = f_->add(c[i * n_ + j], f_->mul(x, b[k * n_ + j]));
            }
        return c;
    }

    bool equal(const Packed& a, const Packed& b) const {
        return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n_ * n_), b.begin());
    }

   private:
    const detail::FieldTables* f_;
    std::size_t n_;
    std::uint32_t q_;
};

class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
    }

   private:
    std::vector<std::uint32_t> parent_;
};

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < count && !failed; i = next++) fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

inline void check_enumerable(const GroupSpec& spec, std::uint64_t budget) {
    if (spec.order > budget)
        throw BudgetExceeded(spec.name() + " has " +
                             (spec.order == std::numeric_limits<std::uint64_t>::max() ? std::string("too many")
                                                                                      : std::to_string(spec.order)) +
                             " elements, over the budget of " + std::to_string(budget));
    double bits = static_cast<double>(spec.n * spec.n) * std::log2(static_cast<double>(spec.field.q()));
    if (spec.n > kMaxKernelDim || bits > 63.0)
        throw BudgetExceeded(spec.name() + " is beyond the enumeration kernel");
}

}  // namespace detail

/// Streams every element of the group exactly once (rows chosen one at a
/// time outside the span of the previous rows; SL keeps det = 1).
inline void enumerate_group(const GroupSpec& spec, std::uint64_t budget, const std::function<void(const Mat&)>& visit) {
    detail::check_enumerable(spec, budget);
    const Field& F = spec.field;
    const std::size_t n = spec.n;
    const std::uint32_t q = F.q();
    std::uint64_t vectors = 1;
    for (std::size_t i = 0; i < n; ++i) vectors *= q;

    std::vector<Felt> rows(n * n);
    // Echelon basis of the rows placed so far; each vector is 1 at its pivot
    // and 0 at the pivots of earlier vectors, so reducing in insertion order
    // is exact.
    std::vector<std::vector<Felt>> basis;
    std::vector<std::size_t> pivots;

    std::function<void(std::size_t)> place = [&](std::size_t k) {
        if (k == n) {
            Mat A(F, n, rows);
            if (spec.family == GroupFamily::SL && det(A) != F.one()) return;
            visit(A);
            return;
        }
        for (std::uint64_t code = 0; code < vectors; ++code) {
            std::vector<Felt> v(n);
            std::uint64_t c = code;
            for (std::size_t j = 0; j < n; ++j) {
                v[j] = Felt{static_cast<std::uint32_t>(c % q)};
                c /= q;
            }
            std::vector<Felt> r = v;
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const Felt f = r[pivots[b]];
                if (f.v == 0) continue;
                for (std::size_t j = 0; j < n; ++j) r[j] = F.sub(r[j], F.mul(f, basis[b][j]));
            }
            auto piv = std::find_if(r.begin(), r.end(), [](Felt x) { return x.v != 0; });
            if (piv == r.end()) continue;
            const auto pc = static_cast<std::size_t>(piv - r.begin());
            const Felt inv = F.inv(*piv);
            for (auto& x : r) x = F.mul(x, inv);
            basis.push_back(std::move(r));
            pivots.push_back(pc);
            std::copy(v.begin(), v.end(), rows.begin() + static_cast<std::ptrdiff_t>(k * n));
            place(k + 1);
            basis.pop_back();
            pivots.pop_back();
        }
    };
    place(0);
}

/// The enumerated group, as sorted element codes.
class GroupTable {
   public:
    static GroupTable enumerate(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget) {
        detail::check_enumerable(spec, budget);
        GroupTable g(spec);
        g.codes_.reserve(spec.order);
        enumerate_group(spec, budget, [&](const Mat& A) { g.codes_.push_back(g.kernel_.code(g.kernel_.pack(A))); });
        std::sort(g.codes_.begin(), g.codes_.end());
        if (g.codes_.size() != spec.order)
            throw std::logic_error("enumerated " + std::to_string(g.codes_.size()) + " elements of " + spec.name() +
                                   ", expected " + std::to_string(spec.order));
        return g;
    }

    const GroupSpec& spec() const noexcept { return spec_; }
    const detail::Kernel& kernel() const noexcept { return kernel_; }
    std::size_t size() const noexcept { return codes_.size(); }
    std::uint64_t code(std::size_t i) const { return codes_[i]; }
    const std::vector<std::uint64_t>& codes() const noexcept { return codes_; }

    Mat element(std::size_t i) const { return kernel_.unpack(spec_.field, kernel_.decode(codes_[i])); }

    std::optional<std::uint32_t> index_of_code(std::uint64_t c) const {
        auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
        if (it == codes_.end() || *it != c) return std::nullopt;
        return static_cast<std::uint32_t>(it - codes_.begin());
    }

    std::optional<std::uint32_t> index_of(const Mat& A) const {
        if (A.n() != spec_.n || !(A.field() == spec_.field)) return std::nullopt;
        return index_of_code(kernel_.code(kernel_.pack(A)));
    }

   private:
    explicit GroupTable(const GroupSpec& spec) : spec_(spec), kernel_(spec.field, spec.n) {}

    GroupSpec spec_;
    detail::Kernel kernel_;
    std::vector<std::uint64_t> codes_;
};

struct ConjugacyClass {
    Mat representative;  // member with the smallest code
    std::uint64_t size = 0;
    std::uint64_t centralizer_order = 0;
    ClassId class_id;
    std::string key;  // ClassId key; SL appends "/k" to tell split classes apart
    bool central = false;
    std::vector<std::uint32_t> members;  // element indices, ascending
};

/// Conjugation generators: transvections I + t^k E_ij for an additive
/// basis {t^k} of the field (these generate SL), plus diag(g, 1, ..., 1)
/// for GL.
inline std::vector<Mat> conjugation_generators(const GroupSpec& spec) {
    const Field& F = spec.field;
    std::vector<Mat> gens;
    std::uint32_t basis_elem = 1;
    for (std::uint32_t k = 0; k < F.m(); ++k, basis_elem *= F.p())
        for (std::size_t i = 0; i < spec.n; ++i)
            for (std::size_t j = 0; j < spec.n; ++j) {
                if (i == j) continue;
                Mat T = Mat::identity(F, spec.n);
                T(i, j) = Felt{basis_elem};
                gens.push_back(T);
            }
    if (spec.family == GroupFamily::GL && F.q() > 2) {
        Mat D = Mat::identity(F, spec.n);
        D(0, 0) = F.generator();
        gens.push_back(D);
    }
    return gens;
}

class ClassTable {
   public:
    static ClassTable compute(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget, unsigned threads = 1) {
        ClassTable t(GroupTable::enumerate(spec, budget));
        t.build(threads);
        return t;
    }

    const GroupSpec& spec() const noexcept { return group_.spec(); }
    const GroupTable& group() const noexcept { return group_; }
    const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }

    std::uint32_t class_of_index(std::uint32_t element) const { return class_of_[element]; }

    std::optional<std::uint32_t> class_of(const Mat& A) const {
        auto idx = group_.index_of(A);
        if (!idx) return std::nullopt;
        return class_of_[*idx];
    }

    std::vector<std::uint32_t> noncentral_classes() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t c = 0; c < classes_.size(); ++c)
            if (!classes_[c].central) out.push_back(c);
        return out;
    }

   private:
    explicit ClassTable(GroupTable g) : group_(std::move(g)) {}

    void build(unsigned threads) {
        const auto& K = group_.kernel();
        const GroupSpec& spec = group_.spec();
        const std::size_t N = group_.size();

        std::vector<std::pair<detail::Packed, detail::Packed>> gens;
        for (const auto& s : conjugation_generators(spec)) gens.emplace_back(K.pack(inverse(s)), K.pack(s));

        detail::DisjointSets dsu(N);
        for (std::size_t i = 0; i < N; ++i) {
            const auto X = K.decode(group_.code(i));
            for (const auto& [sinv, s] : gens) {
                auto j = group_.index_of_code(K.code(K.mul(K.mul(sinv, X), s)));
                if (!j) throw std::logic_error("conjugate left the group");
                dsu.unite(static_cast<std::uint32_t>(i), *j);
            }
        }

        std::map<std::uint32_t, std::vector<std::uint32_t>> components;
        for (std::uint32_t i = 0; i < N; ++i) components[dsu.find(i)].push_back(i);

        for (auto& [root, members] : components) {
            ConjugacyClass c{group_.element(members.front()), members.size(), 0, {}, {}, false, std::move(members)};
            c.class_id = class_id(c.representative);
            c.central = is_central(c.representative, spec.family);
            classes_.push_back(std::move(c));
        }
        std::stable_sort(classes_.begin(), classes_.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
            if (a.class_id == b.class_id) return a.members.front() < b.members.front();
            return a.class_id < b.class_id;
        });
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            classes_[c].key = classes_[c].class_id.key();
            if (spec.family == GroupFamily::SL) {
                std::size_t k = 0;
                for (std::size_t d = c; d > 0 && classes_[d - 1].class_id == classes_[c].class_id; --d) ++k;
                classes_[c].key += "/" + std::to_string(k);
            }
        }

        class_of_.assign(N, 0);
        for (std::uint32_t c = 0; c < classes_.size(); ++c)
            for (auto e : classes_[c].members) class_of_[e] = c;

        verify_orbit_stabilizer(threads);
    }

    // |class| * |C_G(rep)| = |G| for every class: brute-force centralizers
    // up to kClosureCheckLimit elements, derived values above it.
    void verify_orbit_stabilizer(unsigned threads) {
        const auto& K = group_.kernel();
        const std::size_t N = group_.size();
        if (N > kClosureCheckLimit) {
            for (auto& c : classes_) {
                if (N % c.size != 0) throw std::logic_error("class size does not divide the group order");
                c.centralizer_order = N / c.size;
            }
            return;
        }
        std::vector<detail::Packed> elems(N);
        for (std::size_t i = 0; i < N; ++i) elems[i] = K.decode(group_.code(i));
        detail::parallel_for(classes_.size(), threads, [&](std::size_t ci) {
            auto& c = classes_[ci];
            const auto A = K.pack(c.representative);
            std::uint64_t cent = 0;
            for (const auto& U : elems)
                if (K.equal(K.mul(A, U), K.mul(U, A))) ++cent;
            c.centralizer_order = cent;
        });
        for (const auto& c : classes_)
            if (c.size * c.centralizer_order != N)
                throw std::logic_error("orbit-stabilizer check failed for class " + c.key);
    }

    GroupTable group_;
    std::vector<ConjugacyClass> classes_;
    std::vector<std::uint32_t> class_of_;
};

inline ClassTable conjugacy_classes(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget,
                                    unsigned threads = 1) {
    return ClassTable::compute(spec, budget, threads);
}

/// Exact and certified information about one product of classes.
struct EtaReport {
    std::optional<std::uint64_t> eta_exact;
    std::optional<std::uint64_t> lower_bound;
    std::string bound_path;
    std::optional<std::uint64_t> trace_set_size;
    std::string class_a;
    std::string class_b;
};

/// Number of classes met by A^G B^G, for class indices a and b.
inline std::uint64_t eta_of_classes(const ClassTable& table, std::uint32_t a, std::uint32_t b) {
    const auto& K = table.group().kernel();
    const auto& cls = table.classes();
    const auto B = K.pack(cls[b].representative);
    std::vector<char> seen(cls.size(), 0);
    std::uint64_t count = 0;
    for (auto x : cls[a].members) {
        const auto prod = K.mul(K.decode(table.group().code(x)), B);
        auto idx = table.group().index_of_code(K.code(prod));
        if (!idx) throw std::logic_error("product left the group");
        auto c = table.class_of_index(*idx);
        if (!seen[c]) {
            seen[c] = 1;
            ++count;
        }
    }
    return count;
}

inline EtaReport eta_exact(const ClassTable& table, const Mat& A, const Mat& B) {
    const auto ca = table.class_of(A);
    const auto cb = table.class_of(B);
    if (!ca || !cb) throw std::invalid_argument("matrix is not an element of " + table.spec().name());
    EtaReport r;
    r.eta_exact = eta_of_classes(table, *ca, *cb);
    r.class_a = table.classes()[*ca].key;
    r.class_b = table.classes()[*cb].key;
    return r;
}

struct EtaEntry {
    std::uint32_t class_a;
    std::uint32_t class_b;
    std::uint64_t eta;
};

struct MinScanResult {
    std::uint64_t min = 0;
    std::uint32_t argmin_a = 0;
    std::uint32_t argmin_b = 0;
    std::vector<EtaEntry> table;  // unordered pairs a <= b of non-central classes
};

/// min(G) over unordered pairs of non-central classes (the product of two
/// classes is independent of their order).
inline MinScanResult min_scan(const ClassTable& table, unsigned threads = 1) {
    const auto nc = table.noncentral_classes();
    if (nc.empty()) throw std::invalid_argument(table.spec().name() + " has no non-central class");
    MinScanResult res;
    for (std::size_t i = 0; i < nc.size(); ++i)
        for (std::size_t j = i; j < nc.size(); ++j) res.table.push_back({nc[i], nc[j], 0});
    detail::parallel_for(res.table.size(), threads, [&](std::size_t k) {
        auto& e = res.table[k];
        e.eta = eta_of_classes(table, e.class_a, e.class_b);
    });
    auto best = std::min_element(res.table.begin(), res.table.end(),
                                 [](const EtaEntry& x, const EtaEntry& y) { return x.eta < y.eta; });
    res.min = best->eta;
    res.argmin_a = best->class_a;
    res.argmin_b = best->class_b;
    return res;
}

}  // namespace classprod

#endif  // CLASSPROD_GROUP_HPP

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

#ifndef CLASSPROD_TESTS_SUPPORT_HPP
#define CLASSPROD_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "classprod/field.hpp"
#include "classprod/matrix.hpp"
#include "classprod/poly.hpp"
#include "oracles.hpp"

namespace test {

inline oracle::Field oracle_of(const classprod::Field& F) { return oracle::Field(F.p(), F.modulus()); }

inline oracle::Mat oracle_of(const classprod::Mat& A) {
    oracle::Mat M{A.n(), {}};
    for (classprod::Felt x : A.entries()) M.e.push_back(x.v);
    return M;
}

inline classprod::Mat from_oracle(const classprod::Field& F, const oracle::Mat& M) {
    std::vector<classprod::Felt> e;
    for (auto x : M.e) e.push_back(classprod::Felt{x});
    return classprod::Mat(F, M.n, std::move(e));
}

/// Field literals for every q <= 9.
inline const std::vector<std::string>& small_fields() {
    static const std::vector<std::string> f{"2^1", "3^1", "2^2", "5^1", "7^1", "2^3", "3^2"};
    return f;
}

inline classprod::Mat random_matrix(const classprod::Field& F, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, F.q() - 1);
    std::vector<classprod::Felt> e(n * n);
    for (auto& x : e) x = classprod::Felt{pick(rng)};
    return classprod::Mat(F, n, std::move(e));
}

inline classprod::Mat random_invertible(const classprod::Field& F, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        auto A = random_matrix(F, n, rng);
        if (classprod::det(A).v != 0) return A;
    }
}

}  // namespace test

#endif  // CLASSPROD_TESTS_SUPPORT_HPP

/**************************************************************************
 * test_simplex.cpp
 *
 * Copyright 2026 The simplexgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <simplexgraph/graph.hpp>
#include <simplexgraph/simplex.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

using namespace simplexgraph;

namespace {

using Codewords = std::set<Vec>;

// Simplex codes found without RREF backtracking: every k-tuple of weight q^(k-1)
// vectors whose span has q^k elements, all nonzero of that weight.
std::set<Codewords> brute_force_codes(const Field& f, unsigned k)
{
    const std::size_t n = gaussian_bracket(k, f.q());
    const std::size_t w = checked_pow(f.q(), k - 1);
    std::vector<Vec> heavy;
    for (const auto& v : all_vectors(f, n))
        if (weight(v) == w && normalized(f, v) == v)
            heavy.push_back(v);
    std::set<Codewords> out;
    std::vector<std::size_t> idx(k, 0);
    auto span_of = [&](const std::vector<std::size_t>& pick) {
        Codewords s;
        for (const auto& c : all_vectors(f, k)) {
            Vec v(n, 0);
            for (unsigned r = 0; r < k; ++r)
                vec_axpy(f, c[r], heavy[pick[r]], v);
            s.insert(v);
        }
        return s;
    };
    std::function<void(unsigned, std::size_t)> rec = [&](unsigned depth, std::size_t start) {
        if (depth == k) {
            auto s = span_of(idx);
            if (s.size() != checked_pow(f.q(), k))
                return;
            for (const auto& v : s)
                if (weight(v) != 0 && weight(v) != w)
                    return;
            out.insert(std::move(s));
            return;
        }
        for (std::size_t i = start; i < heavy.size(); ++i) {
            idx[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return out;
}

Codewords codewords(const Field& f, const SubspaceKey& key)
{
    Codewords s;
    for_each_combination(f, key.basis(), [&](const Vec&, const Vec& v) { s.insert(v); });
    return s;
}

} // namespace

TEST(Counting, GaussianBracket)
{
    EXPECT_EQ(gaussian_bracket(0, 5), 0u);
    EXPECT_EQ(gaussian_bracket(1, 5), 1u);
    EXPECT_EQ(gaussian_bracket(3, 2), 7u);
    EXPECT_EQ(gaussian_bracket(3, 3), 13u);
    EXPECT_EQ(gaussian_bracket(5, 3), 121u);
    EXPECT_EQ(gaussian_bracket(4, 2), 15u);
}

TEST(Counting, GlOrder)
{
    EXPECT_EQ(gl_order(2, 2), 6);
    EXPECT_EQ(gl_order(2, 3), 48);
    EXPECT_EQ(gl_order(3, 2), 168);
}

TEST(Counting, CodeCountValues)
{
    EXPECT_EQ(count_simplex(2, 2), 1);
    EXPECT_EQ(count_simplex(2, 3), 8);
    EXPECT_EQ(count_simplex(3, 2), 30);
    EXPECT_EQ(count_simplex(2, 4), 162);
    EXPECT_EQ(count_simplex(2, 5), 6144);
    EXPECT_EQ(count_simplex(4, 2), 64864800);
    EXPECT_EQ(count_simplex(3, 3), BigInt("4541644800"));
}

TEST(Counting, ExtensionCountValues)
{
    EXPECT_EQ(count_extensions(3, 3, 1), 322560);
    EXPECT_EQ(count_extensions(3, 3, 2), 144);
    EXPECT_EQ(count_extensions(4, 2, 1), 151200);
    EXPECT_EQ(count_extensions(4, 2, 2), 864);
    EXPECT_EQ(count_extensions(4, 2, 3), 16);
    EXPECT_EQ(count_extensions(2, 3, 0), 8);
    EXPECT_EQ(count_extensions(3, 2, 2), 2);
    EXPECT_EQ(count_extensions(2, 4, 1), 6);
    for (unsigned k = 2; k <= 4; ++k)
        for (unsigned q : {2u, 3u, 4u, 5u})
            EXPECT_EQ(count_extensions(k, q, 0), count_simplex(k, q));
}

TEST(Counting, StarSizeMatchesFactorialFormula)
{
    // (q!)^([k-1]_q) / q^(k-1)
    for (unsigned k = 2; k <= 4; ++k)
        for (unsigned q : {2u, 3u, 4u, 5u}) {
            BigInt qf = factorial(q);
            BigInt expected = big_pow(qf, gaussian_bracket(k - 1, q)) / big_pow(q, k - 1);
            EXPECT_EQ(count_extensions(k, q, k - 1), expected) << k << " " << q;
        }
}

TEST(Simplex, StandardCodeIsEquidistant)
{
    for (auto [k, q] : {std::pair{2u, 3u}, {3u, 2u}, {3u, 3u}, {2u, 7u}, {4u, 2u}}) {
        const Field f = make_field_of_order(q);
        const auto c = standard_simplex(f, k);
        const auto d = weight_distribution(f, c.key);
        ASSERT_EQ(d.size(), 1u);
        EXPECT_EQ(d.begin()->first, checked_pow(q, k - 1));
        EXPECT_EQ(d.begin()->second, checked_pow(q, k) - 1);
    }
}

TEST(Simplex, IsSimplexRejects)
{
    const Field f(3, 1);
    EXPECT_TRUE(is_simplex(f, Matrix::from_rows({{0, 1, 1, 1}, {1, 0, 1, 2}})));
    EXPECT_FALSE(is_simplex(f, Matrix::from_rows({{0, 1, 1, 2}, {1, 0, 1, 2}})));
    EXPECT_FALSE(is_simplex(f, Matrix::from_rows({{0, 1, 1}, {1, 0, 1}})));
    EXPECT_THROW(make_simplex_code(f, Matrix::from_rows({{0, 1, 1, 2}, {1, 0, 1, 2}})), std::invalid_argument);
}

TEST(Simplex, ConditionStarExamples)
{
    const Field f(3, 1);
    const auto w = check_condition_star_m(f, Matrix::from_rows({{0, 1, 1, 1}}), 2);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->zero_columns, (std::vector<std::size_t>{0}));
    EXPECT_EQ(w->proportionality_classes.size(), 1u);
    EXPECT_FALSE(check_condition_star_m(f, Matrix::from_rows({{1, 1, 1, 1}}), 2));
    EXPECT_TRUE(check_condition_star_m(f, Matrix::from_rows({{0, 1, 2, 1}}), 2).has_value());
    EXPECT_THROW(check_condition_star_m(f, Matrix::from_rows({{0, 1, 1}}), 2), std::invalid_argument);
    EXPECT_THROW(check_condition_star_m(f, Matrix::from_rows({{0, 1, 1, 1}, {0, 2, 2, 2}}), 2),
                 std::invalid_argument);
    EXPECT_TRUE(check_condition_star_m(f, Matrix(0, 4), 2).has_value());
}

TEST(Simplex, SubcodesOfSimplexCodesSatisfyCondition)
{
    std::mt19937_64 rng(1);
    for (auto [k, q] : {std::pair{3u, 3u}, {4u, 2u}, {2u, 5u}, {3u, 4u}}) {
        const Field f = make_field_of_order(q);
        for (int trial = 0; trial < 20; ++trial) {
            const auto code = random_simplex_code(f, k, rng);
            for (unsigned m = 0; m <= k; ++m)
                EXPECT_TRUE(is_subcode_of_simplex(f, random_subcode(f, code, m, rng), k));
        }
    }
}

TEST(Simplex, ExtendContainsSubcode)
{
    std::mt19937_64 rng(2);
    for (auto [k, q] : {std::pair{3u, 3u}, {4u, 2u}, {2u, 5u}}) {
        const Field f = make_field_of_order(q);
        for (int trial = 0; trial < 10; ++trial) {
            const auto code = random_simplex_code(f, k, rng);
            for (unsigned m = 1; m < k; ++m) {
                const Matrix s = random_subcode(f, code, m, rng);
                const auto ext = extend_to_simplex(f, s, k);
                EXPECT_TRUE(ext.key.contains(f, SubspaceKey(f, s)));
            }
        }
    }
    const Field f(3, 1);
    EXPECT_THROW(extend_to_simplex(f, Matrix::from_rows({{1, 1, 1, 1}}), 2), std::invalid_argument);
}

TEST(Simplex, RrefBacktrackingMatchesBruteForce)
{
    for (auto [k, q] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}}) {
        const Field f = make_field_of_order(q);
        const auto oracle = brute_force_codes(f, k);
        std::set<Codewords> found;
        std::size_t calls = 0;
        for_each_simplex_rref(f, k, [&](const Matrix& m) {
            ++calls;
            found.insert(codewords(f, SubspaceKey(f, m)));
        });
        EXPECT_EQ(calls, found.size());
        EXPECT_EQ(found, oracle) << k << " " << q;
        EXPECT_EQ(BigInt(oracle.size()), count_simplex(k, q));
    }
}

TEST(Simplex, ExtensionsMatchBruteForce)
{
    for (auto [k, q] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 4u}}) {
        const Field f = make_field_of_order(q);
        const auto oracle = brute_force_codes(f, k);
        std::mt19937_64 rng(k * 10 + q);
        for (unsigned m = 0; m < k; ++m)
            for (int trial = 0; trial < 5; ++trial) {
                const auto code = random_simplex_code(f, k, rng);
                const Matrix s = random_subcode(f, code, m, rng);
                const Codewords sub = m == 0 ? Codewords{Vec(code.key.ambient(), 0)} : codewords(f, SubspaceKey(f, s));
                std::size_t expected = 0;
                for (const auto& c : oracle)
                    expected += std::includes(c.begin(), c.end(), sub.begin(), sub.end());
                const auto ext = enumerate_extensions(f, s, k);
                EXPECT_EQ(ext.size(), expected);
                EXPECT_EQ(BigInt(expected), count_extensions(k, q, m));
                for (const auto& e : ext)
                    EXPECT_TRUE(oracle.count(codewords(f, e.key)));
            }
    }
}

TEST(Simplex, SmallExtensionCounts)
{
    // stars of a point: 2 codes in (3,2) through a 2-space, 6 in (2,4), 1 in (2,2)
    {
        const Field f(2, 1);
        const auto c = standard_simplex(f, 3);
        EXPECT_EQ(enumerate_extensions(f, c.generator().without_row(2), 3).size(), 2u);
    }
    {
        const Field f(2, 2);
        const auto c = standard_simplex(f, 2);
        EXPECT_EQ(enumerate_extensions(f, c.generator().without_row(1), 2).size(), 6u);
    }
    {
        const Field f(2, 1);
        const auto c = standard_simplex(f, 2);
        EXPECT_EQ(enumerate_extensions(f, c.generator().without_row(1), 2).size(), 1u);
    }
}

TEST(Simplex, ExtensionBudget)
{
    const Field f(2, 1);
    EXPECT_THROW(enumerate_extensions(f, Matrix(0, 15), 4, 1000), budget_exceeded);
    EXPECT_THROW(count_extensions_by_enumeration(f, Matrix(0, 15), 4, 1000), budget_exceeded);
}

TEST(Simplex, DisjointPairs)
{
    std::mt19937_64 rng(4);
    for (auto [k, q] : {std::pair{3u, 2u}, {2u, 3u}, {4u, 2u}, {3u, 3u}, {2u, 4u}, {2u, 5u}}) {
        const Field f = make_field_of_order(q);
        for (unsigned m = 0; m < k; ++m)
            for (int trial = 0; trial < 3; ++trial) {
                const auto code = random_simplex_code(f, k, rng);
                const Matrix s = random_subcode(f, code, m, rng);
                const auto [a, b] = disjoint_pair(f, s, k);
                EXPECT_EQ(intersection_dim(f, a.key, b.key), m) << k << " " << q << " m=" << m;
                if (m > 0) {
                    EXPECT_TRUE(a.key.contains(f, SubspaceKey(f, s)));
                    EXPECT_TRUE(b.key.contains(f, SubspaceKey(f, s)));
                }
            }
    }
    const Field f2(2, 1);
    EXPECT_THROW(disjoint_pair(f2, Matrix(0, 3), 2), unsupported_parameters);
    EXPECT_THROW(disjoint_pair(f2, Matrix::from_rows({{0, 1, 1}}), 2), unsupported_parameters);
}

TEST(Simplex, WeightVarietyExhaustive)
{
    for (auto [k, q] : {std::pair{3u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 2u}}) {
        const Field f = make_field_of_order(q);
        const std::size_t n = gaussian_bracket(k, q);
        const std::size_t w = checked_pow(q, k - 1);
        for (const auto& v : all_vectors(f, n)) {
            if (weight(v) == 0)
                continue;
            const auto r = weight_variety_residuals(f, v, k);
            const bool vanish = std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
            EXPECT_EQ(vanish, weight(v) == w);
        }
    }
}

TEST(Simplex, SubcodesEnumeration)
{
    const Field f(3, 1);
    const auto c = standard_simplex(f, 3);
    EXPECT_EQ(subcodes(f, c, 1).size(), 13u);
    EXPECT_EQ(subcodes(f, c, 2).size(), 13u);
    EXPECT_EQ(subcodes(f, c, 0).size(), 1u);
    for (const auto& s : subcodes(f, c, 2))
        EXPECT_TRUE(is_subcode_of_simplex(f, s.basis(), 3));
}

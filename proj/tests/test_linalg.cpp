/**************************************************************************
 * test_linalg.cpp
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

#include <simplexgraph/linalg.hpp>
#include <simplexgraph/monomial.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace simplexgraph;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng)
{
    std::uniform_int_distribution<unsigned> pick(0, f.q() - 1);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = static_cast<Elem>(pick(rng));
    return m;
}

// every vector of the row space, by brute force
std::set<Vec> span_set(const Field& f, const Matrix& m)
{
    std::set<Vec> out;
    const auto coeffs = all_vectors(f, m.rows());
    for (const auto& c : coeffs) {
        Vec v(m.cols(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                v[j] = f.add(v[j], f.mul(c[r], m(r, j)));
        out.insert(v);
    }
    return out;
}

} // namespace

TEST(Linalg, RrefSmallExample)
{
    const Field f(3, 1);
    const Matrix m = Matrix::from_rows({{1, 2, 0, 1}, {2, 1, 1, 0}, {0, 0, 1, 1}});
    const auto res = rref(f, m);
    EXPECT_EQ(res.rank, 2u);
    EXPECT_EQ(res.pivots, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(res.reduced.row_vec(0), (Vec{1, 2, 0, 1}));
    EXPECT_EQ(res.reduced.row_vec(1), (Vec{0, 0, 1, 1}));
    EXPECT_EQ(res.reduced.row_vec(2), (Vec{0, 0, 0, 0}));
}

TEST(Linalg, RankMatchesSpanSize)
{
    std::mt19937_64 rng(7);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const Field f = make_field_of_order(q);
        for (int trial = 0; trial < 30; ++trial) {
            const Matrix m = random_matrix(f, 3, 5, rng);
            EXPECT_EQ(span_set(f, m).size(), checked_pow(q, static_cast<unsigned>(rank(f, m))));
        }
    }
}

TEST(Linalg, KeyEqualityIsSpanEquality)
{
    std::mt19937_64 rng(11);
    const Field f(2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix a = random_matrix(f, 2, 4, rng);
        const Matrix b = random_matrix(f, 2, 4, rng);
        const SubspaceKey ka(f, a), kb(f, b);
        EXPECT_EQ(ka == kb, span_set(f, a) == span_set(f, b));
        for (const auto& v : span_set(f, a))
            EXPECT_TRUE(ka.contains(f, v));
        EXPECT_EQ(kb.contains(f, ka), [&] {
            auto sb = span_set(f, b);
            for (const auto& v : span_set(f, a))
                if (!sb.count(v))
                    return false;
            return true;
        }());
    }
}

TEST(Linalg, IntersectionAndSumAgreeWithSets)
{
    std::mt19937_64 rng(3);
    const Field f(3, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const SubspaceKey a(f, random_matrix(f, 2, 4, rng));
        const SubspaceKey b(f, random_matrix(f, 3, 4, rng));
        std::set<Vec> sa = span_set(f, a.basis()), sb = span_set(f, b.basis()), common;
        for (const auto& v : sa)
            if (sb.count(v))
                common.insert(v);
        const auto meet = subspace_intersection(f, a, b);
        EXPECT_EQ(meet.dim(), intersection_dim(f, a, b));
        EXPECT_EQ(checked_pow(3, static_cast<unsigned>(meet.dim())), common.size());
        if (meet.dim() > 0) {
            EXPECT_EQ(span_set(f, meet.basis()), common);
        }
        EXPECT_EQ(subspace_sum(f, a, b).dim() + meet.dim(), a.dim() + b.dim());
    }
}

TEST(Linalg, WeightAndDistance)
{
    const Field f(5, 1);
    EXPECT_EQ(weight(Vec{0, 1, 0, 4, 2}), 3u);
    EXPECT_EQ(hamming_distance(f, Vec{0, 1, 2}, Vec{0, 3, 2}), 1u);
    EXPECT_EQ(normalized(f, Vec{0, 3, 1}), (Vec{0, 1, 2}));
    EXPECT_EQ(normalized(f, Vec{0, 0}), (Vec{0, 0}));
}

TEST(Linalg, ColumnsAdmissible)
{
    const Field f(3, 1);
    EXPECT_TRUE(columns_admissible(f, Matrix::from_rows({{0, 1, 1, 1}, {1, 0, 1, 2}})));
    EXPECT_FALSE(columns_admissible(f, Matrix::from_rows({{0, 1, 2, 1}, {1, 0, 0, 2}})));
    EXPECT_FALSE(columns_admissible(f, Matrix::from_rows({{0, 1, 0, 1}, {1, 0, 0, 2}})));
}

TEST(Linalg, GaussianBinomial)
{
    EXPECT_EQ(gaussian_binomial(4, 2, 2), 35u);
    EXPECT_EQ(gaussian_binomial(4, 1, 3), 40u);
    EXPECT_EQ(gaussian_binomial(4, 2, 3), 130u);
    EXPECT_EQ(gaussian_binomial(6, 3, 2), 1395u);
    EXPECT_EQ(gaussian_binomial(5, 0, 7), 1u);
    EXPECT_EQ(gaussian_binomial(3, 4, 2), 0u);
}

TEST(Linalg, SubspaceIterationCountsAndDistinct)
{
    for (auto [n, d, q] : {std::tuple{4u, 2u, 2u}, {4u, 2u, 3u}, {5u, 3u, 2u}, {3u, 1u, 4u}}) {
        const Field f = make_field_of_order(q);
        std::set<SubspaceKey> seen;
        std::size_t calls = 0;
        for_each_subspace(f, n, d, [&](const Matrix& m) {
            ++calls;
            const SubspaceKey key(f, m);
            EXPECT_EQ(key.basis(), m);
            seen.insert(key);
        });
        EXPECT_EQ(calls, gaussian_binomial(n, d, q));
        EXPECT_EQ(seen.size(), calls);
    }
}

TEST(Linalg, NormalizedVectorsInLexOrder)
{
    const Field f(3, 1);
    const auto v = normalized_vectors(f, 2);
    EXPECT_EQ(v, (std::vector<Vec>{{0, 1}, {1, 0}, {1, 1}, {1, 2}}));
    EXPECT_EQ(normalized_vectors(f, 3).size(), 13u);
}

TEST(Linalg, TextRoundTrip)
{
    std::mt19937_64 rng(5);
    for (unsigned q : {2u, 4u, 9u, 25u}) {
        const Field f = make_field_of_order(q);
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix m = random_matrix(f, 1 + trial % 4, 1 + trial % 7, rng);
            const auto parsed = matrix_from_text(matrix_to_text(f, m));
            EXPECT_EQ(parsed.p, f.p());
            EXPECT_EQ(parsed.m, f.m());
            EXPECT_EQ(parsed.matrix, m);
        }
    }
    EXPECT_THROW(matrix_from_text("2 1 1 2\n0 2\n"), std::invalid_argument);
    EXPECT_THROW(matrix_from_text("2 1 2 2\n0 1\n"), std::invalid_argument);
    EXPECT_THROW(matrix_from_text("x"), std::invalid_argument);
}

TEST(Linalg, WeightDistributionOfRepetition)
{
    const Field f(3, 1);
    const auto d = weight_distribution(f, SubspaceKey(f, Matrix::from_rows({{1, 1, 1}})));
    EXPECT_EQ(d, (std::map<std::size_t, std::uint64_t>{{3, 2}}));
    EXPECT_THROW(weight_distribution(f, SubspaceKey(f, Matrix::from_rows({{1, 1, 1}})), 2), budget_exceeded);
}

TEST(Monomial, MatchColumnsRecoversRandomMap)
{
    std::mt19937_64 rng(9);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const Field f = make_field_of_order(q);
        for (int trial = 0; trial < 30; ++trial) {
            const Matrix m = random_matrix(f, 2, 6, rng);
            const auto map = random_monomial(f, 6, rng);
            map.validate();
            const Matrix image = apply(f, map, m);
            const auto found = match_columns(f, m, image);
            ASSERT_TRUE(found.has_value());
            found->validate();
            EXPECT_EQ(apply(f, *found, m), image);
            const auto back = apply(f, inverse(f, map), image);
            EXPECT_EQ(back, m);
            EXPECT_EQ(apply(f, compose(f, inverse(f, map), map), m), m);
            for (std::size_t r = 0; r < m.rows(); ++r)
                EXPECT_EQ(weight(image.row(r)), weight(m.row(r)));
        }
    }
}

TEST(Monomial, MatchColumnsRejectsDifferentColumnSets)
{
    const Field f(3, 1);
    EXPECT_FALSE(match_columns(f, Matrix::from_rows({{1, 0}}), Matrix::from_rows({{1, 1}})).has_value());
}

/**************************************************************************
 * tops.hpp
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

// Explicit tops of the simplex code graph.
//
// Each construction produces a (k+1) x n matrix M whose first three rows
// v1, v2, v3 span a 3-space and whose remaining k-2 rows span a common subcode
// C. Deleting one of v1, v2, v3 leaves a generator matrix of a simplex code
// X_i; the X_i are pairwise adjacent and the maximal clique containing them is
// the set of simplex codes inside the row space S of M.

#pragma once

#include "graph.hpp"
#include "linalg.hpp"
#include "simplex.hpp"

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace simplexgraph {

using ScalarPair = std::pair<Elem, Elem>;

struct TopConstruction {
    enum class Kind { k2, binary, general };

    Kind kind = Kind::general;
    unsigned k = 0;
    unsigned q = 0;
    Field field;
    Matrix generator;  // rows v1, v2, v3 followed by a basis of C
    Vec v1, v2, v3;
    SubspaceKey common;  // C, dimension k-2
    SubspaceKey span;    // S, dimension k+1
    std::vector<ScalarPair> scalars;  // (a_i, b_i), i = 0..[k-2]_q; general kind only
    std::array<SimplexCode, 3> codes;  // X_i = row space of M without v_i

    explicit TopConstruction(Field f) : field(std::move(f)) {}
};

inline const char* to_string(TopConstruction::Kind k)
{
    switch (k) {
    case TopConstruction::Kind::k2:
        return "k2";
    case TopConstruction::Kind::binary:
        return "binary";
    case TopConstruction::Kind::general:
        return "general";
    }
    return "?";
}

namespace detail {

inline void finish_construction(TopConstruction& tc)
{
    const Field& f = tc.field;
    const Matrix& m = tc.generator;
    tc.v1 = m.row_vec(0);
    tc.v2 = m.row_vec(1);
    tc.v3 = m.row_vec(2);
    Matrix c(0, m.cols());
    for (std::size_t r = 3; r < m.rows(); ++r)
        c.append_row(m.row(r));
    tc.common = c.rows() == 0 ? SubspaceKey::zero(m.cols()) : SubspaceKey(f, c);
    tc.span = SubspaceKey(f, m);
    if (tc.span.dim() != tc.k + 1)
        throw std::logic_error("construction rows are linearly dependent");
    for (std::size_t i = 0; i < 3; ++i) {
        Matrix g = m.without_row(i);
        if (!is_simplex(f, g))
            throw std::logic_error(std::string("deleting row ") + std::to_string(i + 1) +
                                   " does not leave a simplex generator matrix");
        tc.codes[i] = SimplexCode{tc.k, SubspaceKey(f, g)};
    }
}

} // namespace detail

/// k = 2, q >= 5: x = (0,1,...,1), y = (1,0,α^0,...,α^(q-2)),
/// z = (1, 1, g(1+α^0), g(1+α^-1), ..., g(1+α^-(q-2))) with g(t) = 1/t and g(0) = 0.
inline TopConstruction construct_top_k2(const Field& f)
{
    const unsigned q = f.q();
    if (q < 5)
        throw unsupported_parameters("the k = 2 top construction needs q >= 5");
    const std::size_t n = q + 1;
    auto g = [&](Elem t) -> Elem { return t == 0 ? Elem{0} : f.inv(t); };
    Vec x(n, 1), y(n, 0), z(n, 0);
    x[0] = 0;
    y[0] = 1;
    y[1] = 0;
    z[0] = 1;
    z[1] = g(f.add(1, 0));
    for (unsigned i = 0; i + 1 < q; ++i) {
        y[2 + i] = f.alpha_pow(i);
        z[2 + i] = g(f.add(1, f.alpha_pow(-static_cast<long long>(i))));
    }
    TopConstruction tc(f);
    tc.kind = TopConstruction::Kind::k2;
    tc.k = 2;
    tc.q = q;
    tc.generator = Matrix::from_rows({x, y, z});
    detail::finish_construction(tc);
    return tc;
}

/// q = 2, k >= 4: M = [A B ... B; 0 D_1 ... D_N] with N = 2^(k-2) - 1 and D_i the 4-fold
/// repetition of the i-th nonzero vector of F_2^(k-2) in lexicographic order.
inline TopConstruction construct_top_binary(const Field& f, unsigned k)
{
    if (f.q() != 2)
        throw unsupported_parameters("the binary top construction needs q = 2");
    if (k < 4)
        throw unsupported_parameters("the binary top construction needs k >= 4");
    const auto ws = normalized_vectors(f, k - 2);  // over F_2: all nonzero vectors
    const std::size_t n = gaussian_bracket(k, 2);
    const Elem a[3][3] = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    const Elem b[3][4] = {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}};
    Matrix m(k + 1, n);
    for (unsigned r = 0; r < 3; ++r)
        for (unsigned c = 0; c < 3; ++c)
            m(r, c) = a[r][c];
    std::size_t col = 3;
    for (const auto& w : ws) {
        for (unsigned c = 0; c < 4; ++c, ++col) {
            for (unsigned r = 0; r < 3; ++r)
                m(r, col) = b[r][c];
            for (unsigned r = 0; r < k - 2; ++r)
                m(3 + r, col) = w[r];
        }
    }
    TopConstruction tc(f);
    tc.kind = TopConstruction::Kind::binary;
    tc.k = k;
    tc.q = 2;
    tc.generator = std::move(m);
    detail::finish_construction(tc);
    return tc;
}

/// Condition (I): at least two of the pairs differ.
inline bool scalars_satisfy_I(const std::vector<ScalarPair>& s)
{
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] != s[0])
            return true;
    return false;
}

/// Condition (II): every pair after the first differs from the first.
inline bool scalars_satisfy_II(const std::vector<ScalarPair>& s)
{
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == s[0])
            return false;
    return true;
}

/// The simplex code <x, y> used by the general construction: its generator columns are
/// the normalized vectors of F^2 in lexicographic order.
inline std::pair<Vec, Vec> base_plane(const Field& f)
{
    const auto pts = normalized_vectors(f, 2);
    Vec x, y;
    for (const auto& p : pts) {
        x.push_back(p[0]);
        y.push_back(p[1]);
    }
    return {x, y};
}

/// q >= 3, k >= 3: M = [A_{a0,b0} B_{a1,b1} ... B_{aN,bN}; 0 D_1 ... D_N], N = [k-2]_q,
/// where A_{a,b} = [x; y; ax+by] and B_{a,b} = [A, αA, ..., α^(q-2)A, 0].
inline TopConstruction construct_top_general(const Field& f, unsigned k, const std::vector<ScalarPair>& scalars)
{
    const unsigned q = f.q();
    if (q < 3 || k < 3)
        throw unsupported_parameters("the general top construction needs q >= 3 and k >= 3");
    const std::size_t count = gaussian_bracket(k - 2, q);
    if (scalars.size() != count + 1)
        throw std::invalid_argument("expected " + std::to_string(count + 1) + " scalar pairs, got " +
                                    std::to_string(scalars.size()));
    for (const auto& [a, b] : scalars)
        if (a == 0 || b == 0 || a >= q || b >= q)
            throw std::invalid_argument("scalars must be nonzero field elements");
    if (!scalars_satisfy_I(scalars))
        throw std::invalid_argument("scalar pairs must not all coincide");

    const auto [x, y] = base_plane(f);
    const std::size_t n = gaussian_bracket(k, q);
    auto a_block = [&](const ScalarPair& ab) {
        Vec third(x.size());
        for (std::size_t j = 0; j < x.size(); ++j)
            third[j] = f.add(f.mul(ab.first, x[j]), f.mul(ab.second, y[j]));
        return std::array<Vec, 3>{x, y, third};
    };
    const auto ws = normalized_vectors(f, k - 2);
    Matrix m(k + 1, n);
    std::size_t col = 0;
    {
        const auto a0 = a_block(scalars[0]);
        for (std::size_t j = 0; j < x.size(); ++j, ++col)
            for (unsigned r = 0; r < 3; ++r)
                m(r, col) = a0[r][j];
    }
    for (std::size_t i = 0; i < count; ++i) {
        const auto ai = a_block(scalars[i + 1]);
        const std::size_t start = col;
        for (unsigned t = 0; t + 1 < q; ++t) {
            const Elem s = f.alpha_pow(t);
            for (std::size_t j = 0; j < x.size(); ++j, ++col)
                for (unsigned r = 0; r < 3; ++r)
                    m(r, col) = f.mul(s, ai[r][j]);
        }
        ++col;  // zero column of B
        for (std::size_t c = start; c < col; ++c)
            for (unsigned r = 0; r + 2 < k; ++r)
                m(3 + r, c) = ws[i][r];
    }
    TopConstruction tc(f);
    tc.kind = TopConstruction::Kind::general;
    tc.k = k;
    tc.q = q;
    tc.scalars = scalars;
    tc.generator = std::move(m);
    detail::finish_construction(tc);
    return tc;
}

/// Vector with coordinates (c1, c2, c3) in the basis v1, v2, v3.
inline Vec combine(const TopConstruction& tc, Elem c1, Elem c2, Elem c3)
{
    const Field& f = tc.field;
    Vec out(tc.v1.size(), 0);
    vec_axpy(f, c1, tc.v1, out);
    vec_axpy(f, c2, tc.v2, out);
    vec_axpy(f, c3, tc.v3, out);
    return out;
}

/// The 1-spaces of <v1,v2,v3> spanned by a_i v1 + b_i v2 - v3 over the distinct scalar
/// pairs, as normalized vectors (sorted). Only for the general construction.
inline std::vector<Vec> bad_directions(const TopConstruction& tc)
{
    if (tc.kind != TopConstruction::Kind::general)
        throw std::invalid_argument("bad directions are defined for the general construction");
    const Field& f = tc.field;
    std::set<Vec> out;
    for (const auto& [a, b] : tc.scalars)
        out.insert(normalized(f, combine(tc, a, b, f.neg(1))));
    return {out.begin(), out.end()};
}

/// Directions of <v1,v2,v3> whose weight differs from q^(k-1), by direct weight testing.
inline std::vector<Vec> heavy_or_light_directions(const TopConstruction& tc)
{
    const Field& f = tc.field;
    const std::size_t w = checked_pow(tc.q, tc.k - 1);
    std::vector<Vec> out;
    for (const auto& c : normalized_vectors(f, 3)) {
        Vec v = combine(tc, c[0], c[1], c[2]);
        if (weight(v) != w)
            out.push_back(normalized(f, std::move(v)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct TopSize {
    std::vector<SimplexCode> members;  // from the direct scan
    std::size_t direct_count = 0;       // k-subspaces of S that are simplex codes
    std::size_t plane_count = 0;        // C + admissible planes of <v1,v2,v3>
    std::size_t size() const { return members.size(); }
};

/// Simplex codes inside S counted two ways: (a) scanning every k-subspace of S;
/// (b) as C + P over the planes P of <v1,v2,v3> avoiding every bad direction. Throws
/// std::logic_error if the two disagree. With require_II the scalars must satisfy (II).
inline TopSize top_size(const TopConstruction& tc, bool require_II = false)
{
    const Field& f = tc.field;
    if (require_II && tc.kind == TopConstruction::Kind::general && !scalars_satisfy_II(tc.scalars))
        throw std::invalid_argument("scalar pairs violate condition (II)");
    TopSize out;
    out.members = top_members(f, tc.span, tc.k);
    out.direct_count = out.members.size();

    const auto bad = tc.kind == TopConstruction::Kind::general ? bad_directions(tc) : heavy_or_light_directions(tc);
    const std::set<Vec> bad_set(bad.begin(), bad.end());
    Matrix three = Matrix::from_rows({tc.v1, tc.v2, tc.v3});
    std::vector<SimplexCode> via_planes;
    for_each_subspace(f, 3, 2, [&](const Matrix& coeffs) {
        const Matrix plane = multiply(f, coeffs, three);
        bool ok = true;
        for (const auto& c : normalized_vectors(f, 2)) {
            if (bad_set.count(normalized(f, combine_rows(f, c, plane)))) {
                ok = false;
                break;
            }
        }
        if (!ok)
            return;
        Matrix g = plane.stacked(tc.common.basis());
        via_planes.push_back(SimplexCode{tc.k, SubspaceKey(f, g)});
    });
    std::sort(via_planes.begin(), via_planes.end());
    out.plane_count = via_planes.size();
    if (via_planes != out.members)
        throw std::logic_error("direct top scan (" + std::to_string(out.direct_count) + ") and plane count (" +
                               std::to_string(out.plane_count) + ") disagree");
    return out;
}

/// Scalar pairs covering every nonzero (a, b) and satisfying (II): index 0 takes the first
/// pair in encoding order, later indices cycle through the remaining pairs.
inline std::vector<ScalarPair> covering_scalars(const Field& f, unsigned k)
{
    std::vector<ScalarPair> pairs;
    for (unsigned a = 1; a < f.q(); ++a)
        for (unsigned b = 1; b < f.q(); ++b)
            pairs.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
    const std::size_t count = gaussian_bracket(k - 2, f.q());
    std::vector<ScalarPair> out{pairs[0]};
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(pairs[1 + i % (pairs.size() - 1)]);
    return out;
}

/// Top with exactly three members; needs k >= 5, q >= 3 and (q-1)^2 < [k-2]_q.
inline TopConstruction three_element_top(const Field& f, unsigned k)
{
    const unsigned q = f.q();
    if (k < 5 || q < 3)
        throw unsupported_parameters("three-element tops need k >= 5 and q >= 3");
    if (static_cast<std::uint64_t>(q - 1) * (q - 1) >= gaussian_bracket(k - 2, q))
        throw unsupported_parameters("three-element tops need (q-1)^2 < [k-2]_q");
    return construct_top_general(f, k, covering_scalars(f, k));
}

/// Every vector of <C, a0 v1 + b0 v2 - v3> outside C has weight q^(k-1) - q (exhaustive).
inline bool offset_weights_hold(const TopConstruction& tc)
{
    const Field& f = tc.field;
    const auto [a0, b0] = tc.scalars.at(0);
    const Vec u = combine(tc, a0, b0, f.neg(1));
    const std::size_t target = checked_pow(tc.q, tc.k - 1) - tc.q;
    Matrix basis = Matrix::from_rows({u}).stacked(tc.common.basis());
    bool ok = true;
    for_each_combination(f, basis, [&](const Vec& coeffs, const Vec& v) {
        if (coeffs[0] != 0 && weight(v) != target)
            ok = false;
    });
    return ok;
}

/// For every v in <v1,v2,v3> of weight q^(k-1), all nonzero vectors of <C, v> have that
/// weight (exhaustive).
inline bool extension_weights_hold(const TopConstruction& tc)
{
    const Field& f = tc.field;
    const std::size_t w = checked_pow(tc.q, tc.k - 1);
    for (const auto& c : normalized_vectors(f, 3)) {
        const Vec v = combine(tc, c[0], c[1], c[2]);
        if (weight(v) != w)
            continue;
        Matrix basis = Matrix::from_rows({v}).stacked(tc.common.basis());
        bool ok = true;
        for_each_combination(f, basis, [&](const Vec&, const Vec& x) {
            const std::size_t wt = weight(x);
            if (wt != 0 && wt != w)
                ok = false;
        });
        if (!ok)
            return false;
    }
    return true;
}

/// Every direction of <v1,v2,v3> outside bad_directions lies in some <v_i, v_j>.
inline bool good_directions_in_pairwise_spans(const TopConstruction& tc)
{
    const Field& f = tc.field;
    const auto bad = bad_directions(tc);
    const std::set<Vec> bad_set(bad.begin(), bad.end());
    for (const auto& c : normalized_vectors(f, 3)) {
        if (bad_set.count(normalized(f, combine(tc, c[0], c[1], c[2]))))
            continue;
        if (c[0] != 0 && c[1] != 0 && c[2] != 0)
            return false;
    }
    return true;
}

/// Record of the k = 2, q >= 4 example where the simplex codes inside <x,y,z> form a proper
/// part of the star of <x>.
struct NonTopEvidence {
    Vec x, y, z;
    std::vector<SimplexCode> top;   // simplex codes inside <x,y,z>
    std::vector<SimplexCode> star;  // simplex codes through <x>
    bool nonempty = false;
    bool subset = false;
    bool proper = false;
    bool maximal = true;
    struct Witness {
        unsigned i, j, t;
        bool proportional;
    };
    std::vector<Witness> witnesses;
    bool holds() const
    {
        bool w = std::all_of(witnesses.begin(), witnesses.end(), [](const Witness& x) { return x.proportional; });
        return nonempty && subset && proper && !maximal && w;
    }
};

inline NonTopEvidence nontop_example(const Field& f, std::uint64_t budget = default_budget())
{
    const unsigned q = f.q();
    if (q < 4)
        throw unsupported_parameters("the non-top example needs q >= 4");
    const std::size_t n = q + 1;
    NonTopEvidence ev;
    ev.x.assign(n, 0);
    ev.y.assign(n, 1);
    ev.z.assign(n, 0);
    ev.x[1] = 1;
    ev.y[1] = 0;
    ev.z[0] = 1;
    for (unsigned t = 0; t + 1 < q; ++t) {
        ev.x[2 + t] = f.alpha_pow(t);
        ev.z[2 + t] = f.primitive();
    }
    const SubspaceKey span(f, Matrix::from_rows({ev.x, ev.y, ev.z}));
    if (span.dim() != 3)
        throw std::logic_error("x, y, z are linearly dependent");
    ev.top = top_members(f, span, 2);
    ev.star = star_members(f, SubspaceKey(f, Matrix::from_rows({ev.x})), 2, budget);
    ev.nonempty = !ev.top.empty();
    ev.subset = std::includes(ev.star.begin(), ev.star.end(), ev.top.begin(), ev.top.end());
    ev.proper = ev.subset && ev.top.size() < ev.star.size();
    // a clique strictly inside the star is never maximal
    if (ev.nonempty)
        ev.maximal = classify_maximal_clique(f, 2, ev.top, budget).kind != CliqueKind::not_maximal;

    for (unsigned i = 0; i + 1 < q; ++i)
        for (unsigned j = 0; j + 1 < q; ++j) {
            if (i == j)
                continue;
            const Elem ai = f.alpha_pow(i);
            const Elem aj = f.alpha_pow(j);
            const Elem rhs = f.div(f.mul(ai, f.sub(f.alpha_pow(j + 1), aj)), f.sub(aj, ai));
            const unsigned t = f.log(rhs);
            const Vec r1 = vec_add(f, ev.x, vec_scale(f, aj, ev.z));
            const Vec r2 = vec_add(f, ev.x, vec_scale(f, ai, ev.y));
            // first column against column t+3 (1-based)
            const Elem det = f.sub(f.mul(r1[0], r2[t + 2]), f.mul(r2[0], r1[t + 2]));
            ev.witnesses.push_back({i, j, t, det == 0});
        }
    return ev;
}

} // namespace simplexgraph

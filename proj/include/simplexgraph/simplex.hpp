/**************************************************************************
 * simplex.hpp
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

// Simplex codes and their subcodes.
//
// A q-ary simplex code of dimension k is a k-dimensional subspace of F^n,
// n = [k]_q, whose generator matrix has nonzero, pairwise non-proportional
// columns. An m-dimensional code X is a subcode of some simplex code iff a
// generator matrix of X has exactly [k-m]_q zero columns and every nonzero
// column is proportional to exactly q^(k-m) columns (itself included). This
// header recognizes that condition, extends such subcodes to simplex codes
// and enumerates all extensions.

#pragma once

#include "common.hpp"
#include "linalg.hpp"
#include "monomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

namespace simplexgraph {

using BigInt = boost::multiprecision::cpp_int;

/// [k]_q = (q^k - 1) / (q - 1).
inline std::uint64_t gaussian_bracket(unsigned k, std::uint64_t q)
{
    std::uint64_t s = 0;
    std::uint64_t t = 1;
    for (unsigned i = 0; i < k; ++i) {
        s += t;
        if (i + 1 < k)
            t = checked_pow(q, i + 1);
    }
    return s;
}

inline BigInt factorial(std::uint64_t n)
{
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline BigInt big_pow(BigInt b, std::uint64_t e)
{
    BigInt r = 1;
    for (std::uint64_t i = 0; i < e; ++i)
        r *= b;
    return r;
}

/// |GL(k, q)| = (q^k - 1)(q^k - q)...(q^k - q^(k-1)).
inline BigInt gl_order(unsigned k, std::uint64_t q)
{
    BigInt qk = big_pow(q, k);
    BigInt r = 1;
    BigInt qi = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= qk - qi;
        qi *= q;
    }
    return r;
}

/// Number of q-ary simplex codes of dimension k: n!(q-1)^n / |GL(k,q)|.
inline BigInt count_simplex(unsigned k, std::uint64_t q)
{
    const std::uint64_t n = gaussian_bracket(k, q);
    return factorial(n) * big_pow(q - 1, n) / gl_order(k, q);
}

/// Number of simplex codes containing a fixed m-dimensional subcode.
inline BigInt count_extensions(unsigned k, std::uint64_t q, unsigned m)
{
    if (m > k)
        throw std::invalid_argument("subcode dimension exceeds k");
    const unsigned s = k - m;
    const std::uint64_t bs = gaussian_bracket(s, q);
    const std::uint64_t qs = checked_pow(q, s);
    BigInt num = factorial(bs) * big_pow(q - 1, bs) * big_pow(factorial(qs), gaussian_bracket(m, q));
    BigInt den = gl_order(s, q) * big_pow(q, static_cast<std::uint64_t>(m) * s);
    if (num % den != 0)
        throw std::logic_error("extension count is not an integer");
    return num / den;
}

/// A simplex code, identified by the canonical basis of its row space.
struct SimplexCode {
    unsigned k = 0;
    SubspaceKey key;

    const Matrix& generator() const { return key.basis(); }
    friend bool operator==(const SimplexCode& a, const SimplexCode& b) { return a.key == b.key; }
    friend bool operator<(const SimplexCode& a, const SimplexCode& b) { return a.key < b.key; }
};

/// Rows independent, [rows]_q columns, nonzero pairwise non-proportional columns.
inline bool is_simplex(const Field& f, const Matrix& m)
{
    if (m.rows() < 1)
        return false;
    if (m.cols() != gaussian_bracket(static_cast<unsigned>(m.rows()), f.q()))
        return false;
    if (!columns_admissible(f, m))
        return false;
    return rank(f, m) == m.rows();
}

inline SimplexCode make_simplex_code(const Field& f, const Matrix& m)
{
    if (!is_simplex(f, m))
        throw std::invalid_argument("matrix does not generate a simplex code");
    return SimplexCode{static_cast<unsigned>(m.rows()), SubspaceKey(f, m)};
}

/// Simplex code whose generator columns are all normalized vectors of F^k in lexicographic order.
inline SimplexCode standard_simplex(const Field& f, unsigned k)
{
    const auto pts = normalized_vectors(f, k);
    Matrix g(k, pts.size());
    for (std::size_t c = 0; c < pts.size(); ++c)
        for (unsigned r = 0; r < k; ++r)
            g(r, c) = pts[c][r];
    return make_simplex_code(f, g);
}

/// Evidence that a code satisfies the subcode condition for some k.
struct SubcodeWitness {
    unsigned k = 0;
    unsigned m = 0;
    SubspaceKey key;
    std::vector<std::size_t> zero_columns;
    /// Columns grouped by their normalized form, groups ordered by first column index.
    std::vector<std::vector<std::size_t>> proportionality_classes;
    /// Normalized column shared by each class.
    std::vector<Vec> class_points;
    /// column j of the input equals column_scalars[j] * its class point (0 for zero columns).
    Vec column_scalars;
};

/// Checks the subcode condition for an m x n generator matrix with n = [k]_q.
/// Returns nullopt when the condition fails. Throws for rank-deficient input or wrong length.
inline std::optional<SubcodeWitness> check_condition_star_m(const Field& f, const Matrix& m, unsigned k)
{
    const std::size_t n = gaussian_bracket(k, f.q());
    if (m.cols() != n)
        throw std::invalid_argument("generator length " + std::to_string(m.cols()) + " is not [k]_q = " +
                                    std::to_string(n));
    const unsigned dim = static_cast<unsigned>(m.rows());
    if (dim > k)
        return std::nullopt;
    if (dim > 0 && rank(f, m) != dim)
        throw std::invalid_argument("generator matrix is rank deficient");

    SubcodeWitness w;
    w.k = k;
    w.m = dim;
    w.key = dim == 0 ? SubspaceKey::zero(n) : SubspaceKey(f, m);
    w.column_scalars.assign(n, 0);
    std::map<Vec, std::size_t> class_of;
    for (std::size_t c = 0; c < n; ++c) {
        Vec col = m.column(c);
        const Elem s = normalize_in_place(f, col);
        if (s == 0) {
            w.zero_columns.push_back(c);
            continue;
        }
        w.column_scalars[c] = s;
        auto [it, inserted] = class_of.emplace(col, w.proportionality_classes.size());
        if (inserted) {
            w.proportionality_classes.emplace_back();
            w.class_points.push_back(col);
        }
        w.proportionality_classes[it->second].push_back(c);
    }
    const std::uint64_t zeros = gaussian_bracket(k - dim, f.q());
    const std::uint64_t class_size = checked_pow(f.q(), k - dim);
    if (w.zero_columns.size() != zeros)
        return std::nullopt;
    if (w.proportionality_classes.size() != gaussian_bracket(dim, f.q()))
        return std::nullopt;
    for (const auto& cls : w.proportionality_classes)
        if (cls.size() != class_size)
            return std::nullopt;
    return w;
}

inline bool is_subcode_of_simplex(const Field& f, const Matrix& m, unsigned k)
{
    return check_condition_star_m(f, m, k).has_value();
}

namespace detail {

inline SubcodeWitness require_witness(const Field& f, const Matrix& s, unsigned k)
{
    auto w = check_condition_star_m(f, s, k);
    if (!w)
        throw std::invalid_argument("matrix does not generate a subcode of a simplex code");
    return *w;
}

// Writes rows m..k-1 of out: zero columns receive zero_images (one vector of F^(k-m)
// per zero column, in order); class columns receive scalar * class_images[class][position].
inline void write_extension(Matrix& out, std::size_t first_row, const SubcodeWitness& w,
                            const std::vector<Vec>& zero_images,
                            const std::vector<std::vector<const Vec*>>& class_images, const Field& f)
{
    for (std::size_t i = 0; i < w.zero_columns.size(); ++i)
        for (std::size_t r = 0; r < zero_images[i].size(); ++r)
            out(first_row + r, w.zero_columns[i]) = zero_images[i][r];
    for (std::size_t c = 0; c < w.proportionality_classes.size(); ++c) {
        const auto& cls = w.proportionality_classes[c];
        for (std::size_t i = 0; i < cls.size(); ++i) {
            const Vec& img = *class_images[c][i];
            const Elem lambda = w.column_scalars[cls[i]];
            for (std::size_t r = 0; r < img.size(); ++r)
                out(first_row + r, cls[i]) = f.mul(lambda, img[r]);
        }
    }
}

} // namespace detail

/// Extends a subcode generator matrix s (m rows satisfying the subcode condition) to a
/// k x n generator matrix of a simplex code whose first m rows are s. Zero columns take
/// the normalized vectors of F^(k-m) in lexicographic order; inside each proportionality
/// class, columns in index order take lambda_j * w for w running over F^(k-m) lexicographically.
inline Matrix extend_to_simplex_matrix(const Field& f, const Matrix& s, unsigned k)
{
    const SubcodeWitness w = detail::require_witness(f, s, k);
    const unsigned rest = k - w.m;
    const std::size_t n = gaussian_bracket(k, f.q());
    Matrix out(k, n);
    for (std::size_t r = 0; r < s.rows(); ++r)
        std::copy(s.row(r).begin(), s.row(r).end(), out.row(r).begin());
    if (rest == 0)
        return out;
    const auto zero_images = normalized_vectors(f, rest);
    const auto all = all_vectors(f, rest);
    std::vector<std::vector<const Vec*>> class_images(w.proportionality_classes.size());
    for (std::size_t c = 0; c < class_images.size(); ++c)
        for (std::size_t i = 0; i < all.size(); ++i)
            class_images[c].push_back(&all[i]);
    detail::write_extension(out, w.m, w, zero_images, class_images, f);
    return out;
}

inline SimplexCode extend_to_simplex(const Field& f, const Matrix& s, unsigned k)
{
    return make_simplex_code(f, extend_to_simplex_matrix(f, s, k));
}

/// Calls fn(matrix) for every k x [k]_q generator matrix in reduced row echelon form whose
/// columns are nonzero and pairwise non-proportional: one matrix per simplex code.
/// Columns are filled left to right; each is either the next pivot e_r or an unused
/// projective point inside the span of the pivots placed so far.
template <typename Fn>
void for_each_simplex_rref(const Field& f, unsigned k, Fn&& fn)
{
    const std::size_t n = gaussian_bracket(k, f.q());
    const std::size_t q = f.q();
    const std::size_t space = checked_pow(q, k);
    // vectors of F^k encoded base q, coordinate 0 most significant
    auto encode = [&](const Vec& v) {
        std::size_t code = 0;
        for (Elem e : v)
            code = code * q + e;
        return code;
    };
    std::vector<std::uint32_t> point_of(space, 0);
    std::size_t npoints = 0;
    for (const auto& v : normalized_vectors(f, k)) {
        for (Elem s = 1; s < q; ++s)
            point_of[encode(vec_scale(f, s, v))] = static_cast<std::uint32_t>(npoints);
        ++npoints;
    }
    // candidates_[r]: nonzero vectors supported on the first r coordinates
    std::vector<std::vector<std::pair<Vec, std::uint32_t>>> candidates(k + 1);
    for (const auto& v : all_vectors(f, k)) {
        std::size_t last = k;
        while (last > 0 && v[last - 1] == 0)
            --last;
        if (last == 0)
            continue;
        for (unsigned r = static_cast<unsigned>(last); r <= k; ++r)
            candidates[r].emplace_back(v, point_of[encode(v)]);
    }
    std::vector<Vec> unit(k, Vec(k, 0));
    for (unsigned r = 0; r < k; ++r)
        unit[r][r] = 1;

    Matrix m(k, n);
    std::vector<char> used(npoints, 0);
    auto set_column = [&](std::size_t j, const Vec& v) {
        for (unsigned r = 0; r < k; ++r)
            m(r, j) = v[r];
    };
    auto rec = [&](auto&& self, std::size_t j, unsigned r) -> void {
        if (j == n) {
            if (r == k)
                fn(std::as_const(m));
            return;
        }
        const std::size_t remaining = n - j;
        if (remaining < k - r)
            return;
        if (r < k) {
            const std::uint32_t pt = point_of[encode(unit[r])];
            set_column(j, unit[r]);
            used[pt] = 1;
            self(self, j + 1, r + 1);
            used[pt] = 0;
        }
        if (remaining > k - r) {
            for (const auto& [v, pt] : candidates[r]) {
                if (used[pt])
                    continue;
                set_column(j, v);
                used[pt] = 1;
                self(self, j + 1, r);
                used[pt] = 0;
            }
        }
    };
    rec(rec, 0, 0);
}

/// Calls fn(matrix) once for every simplex code containing the row space of s, where the
/// k x n matrix has the row-reduced form of s as its first m rows. Each code is visited
/// through a single normal form of its extension: the extension block restricted to the
/// zero columns of s is in reduced row echelon form and vanishes on the pivot columns of s.
template <typename Fn>
void for_each_extension(const Field& f, const Matrix& s, unsigned k, Fn&& fn)
{
    const auto first = check_condition_star_m(f, s, k);
    if (!first)
        throw std::invalid_argument("matrix does not generate a subcode of a simplex code");
    const std::size_t n = gaussian_bracket(k, f.q());
    Matrix base(0, n);
    std::vector<std::size_t> pivots;
    if (first->m > 0) {
        auto red = rref(f, s);
        for (std::size_t r = 0; r < red.rank; ++r)
            base.append_row(red.reduced.row(r));
        pivots = red.pivots;
    }
    const SubcodeWitness w = first->m > 0 ? *check_condition_star_m(f, base, k) : *first;
    const unsigned rest = k - w.m;
    Matrix out(k, n);
    for (std::size_t r = 0; r < base.rows(); ++r)
        std::copy(base.row(r).begin(), base.row(r).end(), out.row(r).begin());
    if (rest == 0) {
        fn(std::as_const(out));
        return;
    }

    const auto all = all_vectors(f, rest);  // all[0] is the zero vector
    // per class: the column forced to zero (a pivot of s) or none
    const std::size_t nclasses = w.proportionality_classes.size();
    std::vector<std::optional<std::size_t>> pinned(nclasses);
    for (std::size_t c = 0; c < nclasses; ++c) {
        const auto& cls = w.proportionality_classes[c];
        for (std::size_t i = 0; i < cls.size(); ++i)
            if (std::find(pivots.begin(), pivots.end(), cls[i]) != pivots.end())
                pinned[c] = i;
    }
    // perms[c]: indices into all[] for the unpinned columns of class c
    std::vector<std::vector<std::size_t>> perms(nclasses);
    for (std::size_t c = 0; c < nclasses; ++c)
        for (std::size_t t = pinned[c] ? 1 : 0; t < all.size(); ++t)
            perms[c].push_back(t);

    auto write_class = [&](std::size_t c) {
        const auto& cls = w.proportionality_classes[c];
        std::size_t next = 0;
        for (std::size_t i = 0; i < cls.size(); ++i) {
            const Vec& img = (pinned[c] && *pinned[c] == i) ? all[0] : all[perms[c][next++]];
            const Elem lambda = w.column_scalars[cls[i]];
            for (unsigned r = 0; r < rest; ++r)
                out(w.m + r, cls[i]) = f.mul(lambda, img[r]);
        }
    };

    auto classes_rec = [&](auto&& self, std::size_t c) -> void {
        if (c == nclasses) {
            fn(std::as_const(out));
            return;
        }
        std::sort(perms[c].begin(), perms[c].end());
        do {
            write_class(c);
            self(self, c + 1);
        } while (std::next_permutation(perms[c].begin(), perms[c].end()));
    };

    for_each_simplex_rref(f, rest, [&](const Matrix& zero_block) {
        for (std::size_t i = 0; i < w.zero_columns.size(); ++i)
            for (unsigned r = 0; r < rest; ++r)
                out(w.m + r, w.zero_columns[i]) = zero_block(r, i);
        classes_rec(classes_rec, 0);
    });
}

/// All distinct simplex codes containing the row space of s, sorted by key.
inline std::vector<SimplexCode> enumerate_extensions(const Field& f, const Matrix& s, unsigned k,
                                                     std::uint64_t budget = default_budget())
{
    const unsigned m = s.rows() == 0 ? 0 : static_cast<unsigned>(rank(f, s));
    const BigInt expected = count_extensions(k, f.q(), std::min(m, k));
    if (expected > budget)
        throw budget_exceeded("extension enumeration: " + expected.str() + " codes exceed budget " +
                              std::to_string(budget));
    std::unordered_set<SubspaceKey, SubspaceKeyHash> seen;
    for_each_extension(f, s, k, [&](const Matrix& g) { seen.insert(SubspaceKey(f, g)); });
    std::vector<SimplexCode> out;
    out.reserve(seen.size());
    for (const auto& key : seen)
        out.push_back(SimplexCode{k, key});
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of normal-form extensions visited, without materializing keys.
inline std::uint64_t count_extensions_by_enumeration(const Field& f, const Matrix& s, unsigned k,
                                                     std::uint64_t budget = default_budget())
{
    std::uint64_t count = 0;
    for_each_extension(f, s, k, [&](const Matrix&) {
        if (++count > budget)
            throw budget_exceeded("extension count exceeds budget " + std::to_string(budget));
    });
    return count;
}

/// Two simplex codes intersecting exactly in the row space of s.
/// Uses the explicit unit-vector swap when q^(k-1) > k - m + 1 and the parameters are not
/// (q,k) in {(2,3),(3,2)}; searches the extension set otherwise.
inline std::pair<SimplexCode, SimplexCode> disjoint_pair(const Field& f, const Matrix& s, unsigned k,
                                                         std::uint64_t budget = default_budget())
{
    const std::uint64_t q = f.q();
    if (q == 2 && k == 2)
        throw unsupported_parameters("only one binary simplex code of dimension 2 exists");
    const SubcodeWitness w = detail::require_witness(f, s, k);
    const unsigned m = w.m;
    if (m >= k)
        throw std::invalid_argument("subcode must have dimension below k");
    const unsigned rest = k - m;
    const bool quadric = (q == 2 && k == 3) || (q == 3 && k == 2);
    const bool guard = checked_pow(q, k - 1) > rest + 1;

    auto search = [&]() -> std::pair<SimplexCode, SimplexCode> {
        const auto codes = enumerate_extensions(f, s, k, budget);
        for (std::size_t i = 0; i < codes.size(); ++i)
            for (std::size_t j = i + 1; j < codes.size(); ++j)
                if (intersection_dim(f, codes[i].key, codes[j].key) == m)
                    return {codes[i], codes[j]};
        throw std::logic_error("no pair of simplex codes meets exactly in the subcode");
    };
    if (rest == 1 || quadric || !guard)
        return search();

    // rest >= 2: the first rest+1 zero columns carry v = (1,1,0,...,0) and the unit
    // vectors; the two codes differ by moving v from the first to the last of them.
    const std::size_t n = gaussian_bracket(k, q);
    const auto pts = normalized_vectors(f, rest);
    Vec v(rest, 0);
    v[0] = 1;
    v[1] = 1;
    std::vector<Vec> units;
    for (unsigned i = 0; i < rest; ++i) {
        Vec e(rest, 0);
        e[i] = 1;
        units.push_back(e);
    }
    std::vector<Vec> others;
    for (const auto& p : pts)
        if (p != v && std::find(units.begin(), units.end(), p) == units.end())
            others.push_back(p);

    std::vector<Vec> first_images{v};
    first_images.insert(first_images.end(), units.begin(), units.end());
    first_images.insert(first_images.end(), others.begin(), others.end());
    std::vector<Vec> second_images(units.begin(), units.end());
    second_images.push_back(v);
    second_images.insert(second_images.end(), others.begin(), others.end());

    const auto all = all_vectors(f, rest);
    std::vector<std::vector<const Vec*>> class_images(w.proportionality_classes.size());
    for (auto& ci : class_images)
        for (const auto& a : all)
            ci.push_back(&a);

    auto build = [&](const std::vector<Vec>& zero_images) {
        Matrix g(k, n);
        for (std::size_t r = 0; r < s.rows(); ++r)
            std::copy(s.row(r).begin(), s.row(r).end(), g.row(r).begin());
        detail::write_extension(g, m, w, zero_images, class_images, f);
        return make_simplex_code(f, g);
    };
    auto a = build(first_images);
    auto b = build(second_images);
    if (intersection_dim(f, a.key, b.key) != m)
        throw std::logic_error("constructed simplex codes do not meet exactly in the subcode");
    return {a, b};
}

/// Values of e_{p^j}(x_1^(q-1), ..., x_n^(q-1)) for j = 0 .. m(k-1)-1, q = p^m.
/// For nonzero v they all vanish iff weight(v) = q^(k-1).
inline Vec weight_variety_residuals(const Field& f, std::span<const Elem> v, unsigned k)
{
    if (v.size() != gaussian_bracket(k, f.q()))
        throw std::invalid_argument("vector length is not [k]_q");
    const unsigned count = f.m() * (k - 1);
    if (count == 0)
        return {};
    const std::uint64_t max_degree = checked_pow(f.p(), count - 1);
    // elementary symmetric polynomials e_0..e_D of y_i = x_i^(q-1)
    Vec e(max_degree + 1, 0);
    e[0] = 1;
    for (Elem x : v) {
        const Elem y = f.pow(x, f.q() - 1);
        if (y == 0)
            continue;
        for (std::uint64_t d = max_degree; d >= 1; --d)
            e[d] = f.add(e[d], f.mul(e[d - 1], y));
    }
    Vec out;
    std::uint64_t deg = 1;
    for (unsigned j = 0; j < count; ++j) {
        out.push_back(e[deg]);
        deg *= f.p();
    }
    return out;
}

/// Random simplex code: a random monomial image of the standard one.
template <typename Rng>
SimplexCode random_simplex_code(const Field& f, unsigned k, Rng& rng)
{
    const auto base = standard_simplex(f, k);
    const auto map = random_monomial(f, base.key.ambient(), rng);
    return SimplexCode{k, apply(f, map, base.key)};
}

/// Random m x k matrix of rank m.
template <typename Rng>
Matrix random_full_rank(const Field& f, std::size_t m, std::size_t k, Rng& rng)
{
    std::uniform_int_distribution<unsigned> pick(0, f.q() - 1);
    while (true) {
        Matrix a(m, k);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < k; ++c)
                a(r, c) = static_cast<Elem>(pick(rng));
        if (rank(f, a) == m)
            return a;
    }
}

/// Generator matrix of a random m-dimensional subcode of code.
template <typename Rng>
Matrix random_subcode(const Field& f, const SimplexCode& code, unsigned m, Rng& rng)
{
    if (m == 0)
        return Matrix(0, code.key.ambient());
    return multiply(f, random_full_rank(f, m, code.k, rng), code.generator());
}

/// Every m-dimensional subcode of code, as row-reduced generator matrices.
inline std::vector<SubspaceKey> subcodes(const Field& f, const SimplexCode& code, unsigned m)
{
    std::vector<SubspaceKey> out;
    if (m == 0) {
        out.push_back(SubspaceKey::zero(code.key.ambient()));
        return out;
    }
    for_each_subspace(f, code.k, m, [&](const Matrix& coeffs) {
        out.emplace_back(f, multiply(f, coeffs, code.generator()));
    });
    return out;
}

} // namespace simplexgraph

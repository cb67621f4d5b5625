/**************************************************************************
 * geometry.hpp
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

// Point-line geometry S(k,q). Points are 1-dimensional subcodes of simplex
// codes (normalized vectors of weight q^(k-1)); lines are 2-dimensional ones.
// A point counts as collinear with itself, so X is always inside perp(perp(X)).

#pragma once

#include "common.hpp"
#include "monomial.hpp"
#include "simplex.hpp"
#include "tops.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace simplexgraph {

inline bool geometry_supported(unsigned k, unsigned q)
{
    if (k == 2)
        return q >= 2 && q <= 7;
    return (k == 3 && (q == 2 || q == 3)) || (k == 4 && q == 2);
}

/// Every nonzero vector of <u, v> has weight w.
inline bool span_equidistant(const Field& f, std::span<const Elem> u, std::span<const Elem> v, std::size_t w)
{
    if (weight(u) != w || weight(v) != w)
        return false;
    Vec t(u.size());
    for (unsigned c = 1; c < f.q(); ++c) {
        for (std::size_t i = 0; i < u.size(); ++i)
            t[i] = f.add(u[i], f.mul(static_cast<Elem>(c), v[i]));
        if (weight(t) != w)
            return false;
    }
    return true;
}

/// The line through two distinct points, if every nonzero combination has weight q^(k-1).
inline std::optional<SubspaceKey> collinear(const Field& f, unsigned k, const Vec& p, const Vec& q)
{
    if (p.size() != q.size())
        throw std::invalid_argument("points of different lengths");
    if (normalized(f, p) == normalized(f, q))
        throw std::invalid_argument("collinear() needs two distinct points");
    if (!span_equidistant(f, p, q, checked_pow(f.q(), k - 1)))
        return std::nullopt;
    return SubspaceKey(f, Matrix::from_rows({p, q}));
}

class Geometry {
public:
    /// Enumerates all points of S(k,q). Throws unsupported_parameters outside the supported
    /// set unless allow_any, and budget_exceeded when the point count is too large.
    Geometry(Field f, unsigned k, bool allow_any = false, std::uint64_t budget = default_budget())
        : field_(std::move(f)), k_(k)
    {
        const unsigned q = field_.q();
        if (k < 2)
            throw unsupported_parameters("geometry needs k >= 2");
        if (!allow_any && !geometry_supported(k, q))
            throw unsupported_parameters("geometry S(" + std::to_string(k) + "," + std::to_string(q) +
                                         ") is outside the supported parameter set");
        n_ = gaussian_bracket(k, q);
        w_ = checked_pow(q, k - 1);
        const BigInt count = expected_point_count();
        if (count > budget)
            throw budget_exceeded("geometry universe has " + count.str() + " points, budget " +
                                  std::to_string(budget));
        points_.reserve(static_cast<std::size_t>(count));
        enumerate();
        std::sort(points_.begin(), points_.end());
    }

    const Field& field() const { return field_; }
    unsigned k() const { return k_; }
    std::size_t n() const { return n_; }
    std::size_t point_weight() const { return w_; }
    const std::vector<Vec>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    /// C(n, w) (q-1)^(w-1)
    BigInt expected_point_count() const
    {
        BigInt c = 1;
        for (std::size_t i = 0; i < w_; ++i)
            c = c * (n_ - i) / (i + 1);
        return c * big_pow(field_.q() - 1, w_ - 1);
    }

    std::optional<std::size_t> index_of(const Vec& v) const
    {
        const Vec key = normalized(field_, v);
        auto it = std::lower_bound(points_.begin(), points_.end(), key);
        if (it == points_.end() || *it != key)
            return std::nullopt;
        return static_cast<std::size_t>(it - points_.begin());
    }

    /// Collinear or equal.
    bool related(std::size_t a, std::size_t b) const
    {
        return a == b || span_equidistant(field_, points_[a], points_[b], w_);
    }

private:
    void enumerate()
    {
        const unsigned q = field_.q();
        std::vector<std::size_t> support(w_);
        std::iota(support.begin(), support.end(), 0);
        Vec digits(w_, 1);
        while (true) {
            // first support coordinate fixed to 1, the rest run over all nonzero values
            std::fill(digits.begin(), digits.end(), 1);
            while (true) {
                Vec v(n_, 0);
                for (std::size_t i = 0; i < w_; ++i)
                    v[support[i]] = digits[i];
                points_.push_back(std::move(v));
                std::size_t j = w_;
                bool carry = true;
                while (carry && j > 1) {
                    --j;
                    if (++digits[j] == q) {
                        digits[j] = 1;
                    } else {
                        carry = false;
                    }
                }
                if (carry)
                    break;
            }
            std::size_t i = w_;
            while (i > 0 && support[i - 1] == n_ - w_ + i - 1)
                --i;
            if (i == 0)
                return;
            ++support[i - 1];
            for (std::size_t j = i; j < w_; ++j)
                support[j] = support[j - 1] + 1;
        }
    }

    Field field_;
    unsigned k_;
    std::size_t n_ = 0;
    std::size_t w_ = 0;
    std::vector<Vec> points_;
};

/// Indices of points related to every point of pts (sorted).
inline std::vector<std::size_t> perp(const Geometry& g, const std::vector<std::size_t>& pts)
{
    const std::size_t total = g.size();
    const unsigned workers = std::max(1u, std::min<unsigned>(max_threads(), 64));
    const std::size_t block = (total + workers - 1) / workers;
    std::vector<std::vector<std::size_t>> parts(workers);
    parallel_for(workers, [&](std::size_t w) {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(total, lo + block);
        for (std::size_t r = lo; r < hi; ++r) {
            bool ok = true;
            for (auto p : pts) {
                if (!g.related(r, p)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                parts[w].push_back(r);
        }
    });
    std::vector<std::size_t> out;
    for (auto& part : parts)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

inline std::vector<std::size_t> double_perp(const Geometry& g, std::size_t p, std::size_t q)
{
    return perp(g, perp(g, {p, q}));
}

/// Points on a line (sorted indices).
inline std::vector<std::size_t> line_points(const Geometry& g, const SubspaceKey& line)
{
    std::vector<std::size_t> out;
    for (const auto& c : normalized_vectors(g.field(), line.dim())) {
        auto idx = g.index_of(combine_rows(g.field(), c, line.basis()));
        if (!idx)
            throw std::invalid_argument("line contains a vector that is not a point");
        out.push_back(*idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Uniform point P, then a uniform point collinear with P and distinct from it.
template <typename Rng>
std::pair<std::size_t, std::size_t> sample_collinear_pair(const Geometry& g, Rng& rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    while (true) {
        const std::size_t p = pick(rng);
        std::vector<std::size_t> nb;
        for (std::size_t r = 0; r < g.size(); ++r)
            if (r != p && g.related(p, r))
                nb.push_back(r);
        if (nb.empty())
            continue;
        std::uniform_int_distribution<std::size_t> pick_nb(0, nb.size() - 1);
        return {p, nb[pick_nb(rng)]};
    }
}

/// No point outside the code is collinear with all of the code's points.
inline bool is_maximal_singular(const Geometry& g, const SimplexCode& code)
{
    std::vector<std::size_t> members;
    for (const auto& c : normalized_vectors(g.field(), code.k)) {
        auto idx = g.index_of(combine_rows(g.field(), c, code.generator()));
        if (!idx)
            throw std::invalid_argument("code vector is not a point");
        members.push_back(*idx);
    }
    std::sort(members.begin(), members.end());
    return perp(g, members) == members;
}

/// Parameters where explicit tops exist: k = 2 and q >= 5, q = 2 and k >= 4, or k >= 3 and q >= 3.
inline bool separation_supported(unsigned k, unsigned q)
{
    return (k == 2 && q >= 5) || (q == 2 && k >= 4) || (k >= 3 && q >= 3);
}

struct SeparatingVector {
    Vec z;
    bool via_transfer = false;  // false when the exhaustive fallback produced z
};

/// <z, x+ay> is not a 2-dimensional subcode of a simplex code.
inline bool separates(const Field& f, unsigned k, const Vec& x, const Vec& y, Elem a, const Vec& z)
{
    const std::size_t w = checked_pow(f.q(), k - 1);
    if (!span_equidistant(f, x, z, w) || !span_equidistant(f, y, z, w))
        return false;
    const Vec target = vec_add(f, x, vec_scale(f, a, y));
    if (normalized(f, target) == normalized(f, z))
        return false;
    return !span_equidistant(f, z, target, w);
}

/// A vector z with <x,z> and <y,z> subcodes of simplex codes but <z, x+ay> not one.
inline SeparatingVector separating_vector(const Field& f, unsigned k, const Vec& x, const Vec& y, Elem a,
                                          std::uint64_t budget = default_budget())
{
    const unsigned q = f.q();
    if (!separation_supported(k, q))
        throw unsupported_parameters("no separating vector construction for these parameters");
    if (a == 0)
        throw std::invalid_argument("a must be nonzero");
    if (x.size() != gaussian_bracket(k, q) || y.size() != x.size())
        throw std::invalid_argument("vectors have the wrong length");
    const Matrix xy = Matrix::from_rows({x, y});
    if (rank(f, xy) != 2 || !check_condition_star_m(f, xy, k))
        throw std::invalid_argument("<x,y> is not a 2-dimensional subcode of a simplex code");

    std::optional<TopConstruction> tc;
    Elem preferred = 1;
    if (k == 2) {
        tc = construct_top_k2(f);
    } else if (q == 2) {
        tc = construct_top_binary(f, k);
    } else {
        std::vector<ScalarPair> s(gaussian_bracket(k - 2, q) + 1, ScalarPair{1, f.primitive()});
        s[0] = {1, 1};
        tc = construct_top_general(f, k, s);
        preferred = f.div(s[0].second, s[0].first);
    }
    const Vec& x1 = tc->v1;
    const Vec& y1 = tc->v2;
    const Vec& z1 = tc->v3;

    std::vector<Elem> candidates{preferred};
    for (unsigned c = 1; c < q; ++c)
        if (c != preferred)
            candidates.push_back(static_cast<Elem>(c));
    for (Elem a1 : candidates) {
        if (!separates(f, k, x1, y1, a1, z1))
            continue;
        // x' -> x, y' -> (a/a') y carries x' + a'y' to x + ay
        const Matrix from = Matrix::from_rows({x1, y1});
        const Matrix to = Matrix::from_rows({x, vec_scale(f, f.div(a, a1), y)});
        auto map = match_columns(f, from, to);
        if (!map)
            break;
        Vec z = apply(f, *map, z1);
        if (separates(f, k, x, y, a, z))
            return {std::move(z), true};
        break;
    }

    if (!geometry_supported(k, q))
        throw std::logic_error("monomial transfer failed and the universe is too large to search");
    Geometry g(f, k, false, budget);
    for (const auto& z : g.points())
        if (separates(f, k, x, y, a, z))
            return {z, false};
    throw std::logic_error("no separating vector exists");
}

} // namespace simplexgraph

/**************************************************************************
 * monomial.hpp
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

#pragma once

#include "linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace simplexgraph {

/// Coordinate permutation composed with nonzero per-coordinate scaling.
/// Acts on vectors by y[perm[i]] = scalars[i] * x[i].
struct MonomialMap {
    std::vector<std::size_t> perm;
    Vec scalars;

    static MonomialMap identity(std::size_t n)
    {
        MonomialMap m;
        m.perm.resize(n);
        std::iota(m.perm.begin(), m.perm.end(), 0);
        m.scalars.assign(n, 1);
        return m;
    }

    std::size_t size() const { return perm.size(); }

    void validate() const
    {
        if (perm.size() != scalars.size())
            throw std::invalid_argument("monomial map: permutation and scalar lengths differ");
        std::vector<bool> seen(perm.size(), false);
        for (auto p : perm) {
            if (p >= perm.size() || seen[p])
                throw std::invalid_argument("monomial map: not a permutation");
            seen[p] = true;
        }
        for (Elem s : scalars)
            if (s == 0)
                throw std::invalid_argument("monomial map: zero scalar");
    }

    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

inline Vec apply(const Field& f, const MonomialMap& map, std::span<const Elem> x)
{
    if (x.size() != map.size())
        throw std::invalid_argument("monomial map length mismatch");
    Vec y(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        y[map.perm[i]] = f.mul(map.scalars[i], x[i]);
    return y;
}

inline Matrix apply(const Field& f, const MonomialMap& map, const Matrix& m)
{
    Matrix out(0, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.append_row(apply(f, map, m.row(r)));
    return out;
}

inline SubspaceKey apply(const Field& f, const MonomialMap& map, const SubspaceKey& key)
{
    if (key.dim() == 0)
        return SubspaceKey::zero(key.ambient());
    return SubspaceKey(f, apply(f, map, key.basis()));
}

/// outer ∘ inner
inline MonomialMap compose(const Field& f, const MonomialMap& outer, const MonomialMap& inner)
{
    if (outer.size() != inner.size())
        throw std::invalid_argument("composing monomial maps of different lengths");
    MonomialMap out;
    out.perm.resize(inner.size());
    out.scalars.resize(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) {
        const std::size_t mid = inner.perm[i];
        out.perm[i] = outer.perm[mid];
        out.scalars[i] = f.mul(outer.scalars[mid], inner.scalars[i]);
    }
    return out;
}

inline MonomialMap inverse(const Field& f, const MonomialMap& map)
{
    MonomialMap out;
    out.perm.resize(map.size());
    out.scalars.resize(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
        out.perm[map.perm[i]] = i;
        out.scalars[map.perm[i]] = f.inv(map.scalars[i]);
    }
    return out;
}

template <typename Rng>
MonomialMap random_monomial(const Field& f, std::size_t n, Rng& rng)
{
    MonomialMap m = MonomialMap::identity(n);
    std::shuffle(m.perm.begin(), m.perm.end(), rng);
    std::uniform_int_distribution<unsigned> pick(1, f.q() - 1);
    for (auto& s : m.scalars)
        s = static_cast<Elem>(pick(rng));
    return m;
}

/// Finds a monomial map sending row r of from to row r of to, i.e. with
/// to[:, perm[j]] = scalars[j] * from[:, j], by matching columns up to scalars.
/// Returns nullopt when the column multisets differ projectively.
inline std::optional<MonomialMap> match_columns(const Field& f, const Matrix& from, const Matrix& to)
{
    if (from.rows() != to.rows() || from.cols() != to.cols())
        return std::nullopt;
    const std::size_t n = from.cols();
    // bucket target columns by their normalized form
    std::map<Vec, std::vector<std::pair<std::size_t, Elem>>> targets;
    for (std::size_t c = n; c-- > 0;) {
        Vec col = to.column(c);
        const Elem s = normalize_in_place(f, col);
        targets[col].emplace_back(c, s);
    }
    MonomialMap map;
    map.perm.resize(n);
    map.scalars.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        Vec col = from.column(c);
        const Elem s = normalize_in_place(f, col);
        auto it = targets.find(col);
        if (it == targets.end() || it->second.empty())
            return std::nullopt;
        auto [dst, t] = it->second.back();
        it->second.pop_back();
        map.perm[c] = dst;
        // to_col = t * norm, from_col = s * norm; zero columns map with scalar 1
        map.scalars[c] = s == 0 ? Elem{1} : f.div(t, s);
    }
    return map;
}

} // namespace simplexgraph

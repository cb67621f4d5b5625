/**************************************************************************
 * isomorphism.hpp
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

// Small undirected graphs and isomorphism search by individualization and
// color refinement.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace simplexgraph {

struct SimpleGraph {
    std::vector<std::vector<std::uint32_t>> adj;

    explicit SimpleGraph(std::size_t n = 0) : adj(n) {}

    std::size_t size() const { return adj.size(); }

    void add_edge(std::uint32_t a, std::uint32_t b)
    {
        if (a == b)
            throw std::invalid_argument("self loop");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    void finalize()
    {
        for (auto& nb : adj) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
    }

    bool has_edge(std::uint32_t a, std::uint32_t b) const
    {
        return std::binary_search(adj[a].begin(), adj[a].end(), b);
    }

    std::size_t edge_count() const
    {
        std::size_t e = 0;
        for (const auto& nb : adj)
            e += nb.size();
        return e / 2;
    }
};

inline SimpleGraph complete_bipartite(std::size_t a, std::size_t b)
{
    SimpleGraph g(a + b);
    for (std::uint32_t i = 0; i < a; ++i)
        for (std::uint32_t j = 0; j < b; ++j)
            g.add_edge(i, static_cast<std::uint32_t>(a + j));
    g.finalize();
    return g;
}

/// Two-coloring if the graph is bipartite.
inline std::optional<std::vector<int>> bipartition(const SimpleGraph& g)
{
    std::vector<int> side(g.size(), -1);
    for (std::uint32_t s = 0; s < g.size(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::queue<std::uint32_t> todo;
        todo.push(s);
        while (!todo.empty()) {
            auto u = todo.front();
            todo.pop();
            for (auto v : g.adj[u]) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    todo.push(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

/// Degree if every vertex has the same degree.
inline std::optional<std::size_t> regular_degree(const SimpleGraph& g)
{
    if (g.size() == 0)
        return 0;
    const std::size_t d = g.adj[0].size();
    for (const auto& nb : g.adj)
        if (nb.size() != d)
            return std::nullopt;
    return d;
}

inline bool is_isomorphism(const SimpleGraph& a, const SimpleGraph& b, const std::vector<std::uint32_t>& map)
{
    if (a.size() != b.size() || map.size() != a.size() || a.edge_count() != b.edge_count())
        return false;
    std::vector<bool> hit(b.size(), false);
    for (auto m : map) {
        if (m >= b.size() || hit[m])
            return false;
        hit[m] = true;
    }
    for (std::uint32_t u = 0; u < a.size(); ++u)
        for (auto v : a.adj[u])
            if (!b.has_edge(map[u], map[v]))
                return false;
    return true;
}

namespace detail {

// Refines a coloring of the disjoint union of a and b to the coarsest equitable one.
// Colors are relabeled jointly so they stay comparable across the two graphs.
inline std::vector<std::uint32_t> refine(const SimpleGraph& a, const SimpleGraph& b, std::vector<std::uint32_t> color)
{
    const std::size_t na = a.size();
    auto neighbors = [&](std::size_t v) -> const std::vector<std::uint32_t>& {
        return v < na ? a.adj[v] : b.adj[v - na];
    };
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> sig_id;
        std::vector<std::vector<std::uint32_t>> sigs(color.size());
        for (std::size_t v = 0; v < color.size(); ++v) {
            auto& s = sigs[v];
            s.push_back(color[v]);
            const std::size_t offset = v < na ? 0 : na;
            std::vector<std::uint32_t> nc;
            for (auto u : neighbors(v))
                nc.push_back(color[u + offset]);
            std::sort(nc.begin(), nc.end());
            s.insert(s.end(), nc.begin(), nc.end());
            sig_id.emplace(s, 0);
        }
        std::uint32_t next = 0;
        for (auto& [sig, id] : sig_id)
            id = next++;
        for (std::size_t v = 0; v < color.size(); ++v)
            color[v] = sig_id[sigs[v]];
        if (sig_id.size() == classes)
            return color;
        classes = sig_id.size();
    }
}

inline std::optional<std::vector<std::uint32_t>> search(const SimpleGraph& a, const SimpleGraph& b,
                                                        std::vector<std::uint32_t> color)
{
    color = refine(a, b, std::move(color));
    const std::size_t n = a.size();
    std::map<std::uint32_t, std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> cells;
    for (std::uint32_t v = 0; v < n; ++v)
        cells[color[v]].first.push_back(v);
    for (std::uint32_t v = 0; v < n; ++v)
        cells[color[n + v]].second.push_back(v);
    const std::vector<std::uint32_t>* target_cell_a = nullptr;
    const std::vector<std::uint32_t>* target_cell_b = nullptr;
    for (const auto& [c, cell] : cells) {
        if (cell.first.size() != cell.second.size())
            return std::nullopt;
        if (cell.first.size() > 1 && (!target_cell_a || cell.first.size() < target_cell_a->size())) {
            target_cell_a = &cell.first;
            target_cell_b = &cell.second;
        }
    }
    if (!target_cell_a) {
        std::vector<std::uint32_t> map(n);
        for (const auto& [c, cell] : cells)
            map[cell.first[0]] = cell.second[0];
        if (is_isomorphism(a, b, map))
            return map;
        return std::nullopt;
    }
    const std::uint32_t fresh = static_cast<std::uint32_t>(2 * n + 1);
    const std::uint32_t v = target_cell_a->front();
    for (auto w : *target_cell_b) {
        auto trial = color;
        trial[v] = fresh;
        trial[n + w] = fresh;
        if (auto found = search(a, b, std::move(trial)))
            return found;
    }
    return std::nullopt;
}

} // namespace detail

/// An isomorphism a -> b (map[u] is the image of u), or nullopt.
inline std::optional<std::vector<std::uint32_t>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b)
{
    if (a.size() != b.size() || a.edge_count() != b.edge_count())
        return std::nullopt;
    return detail::search(a, b, std::vector<std::uint32_t>(2 * a.size(), 0));
}

} // namespace simplexgraph

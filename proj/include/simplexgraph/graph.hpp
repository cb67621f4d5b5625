/**************************************************************************
 * graph.hpp
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

// The graph of simplex codes: vertices are the q-ary simplex codes of dimension
// k, two codes are adjacent when they meet in a (k-1)-dimensional subspace.
// Stars collect the codes through a common (k-1)-space, tops the codes inside a
// common (k+1)-space.

#pragma once

#include "common.hpp"
#include "isomorphism.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "simplex.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace simplexgraph {

/// Parameters for which the whole graph is built by default.
inline bool full_enumeration_supported(unsigned k, unsigned q)
{
    static const std::set<std::pair<unsigned, unsigned>> supported{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {2, 5}};
    return supported.count({k, q}) > 0;
}

struct CodeGraph {
    unsigned k = 0;
    unsigned q = 0;
    std::size_t n = 0;
    Field field;
    std::vector<SimplexCode> vertices;                 // sorted by key
    std::vector<std::vector<std::uint32_t>> adjacency;  // sorted neighbor lists
    std::unordered_map<SubspaceKey, std::uint32_t, SubspaceKeyHash> index;

    explicit CodeGraph(Field f) : field(std::move(f)) {}

    std::size_t size() const { return vertices.size(); }

    std::optional<std::uint32_t> find(const SubspaceKey& key) const
    {
        auto it = index.find(key);
        if (it == index.end())
            return std::nullopt;
        return it->second;
    }

    bool adjacent(std::uint32_t a, std::uint32_t b) const
    {
        return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b);
    }

    std::size_t edge_count() const
    {
        std::size_t e = 0;
        for (const auto& nb : adjacency)
            e += nb.size();
        return e / 2;
    }

    SimpleGraph as_simple() const
    {
        SimpleGraph g(vertices.size());
        g.adj = adjacency;
        return g;
    }
};

/// Hyperplanes (k-1 subspaces) of a code.
inline std::vector<SubspaceKey> hyperplanes(const Field& f, const SimplexCode& code)
{
    std::vector<SubspaceKey> out;
    if (code.k == 1) {
        out.push_back(SubspaceKey::zero(code.key.ambient()));
        return out;
    }
    for_each_subspace(f, code.k, code.k - 1, [&](const Matrix& coeffs) {
        out.emplace_back(f, multiply(f, coeffs, code.generator()));
    });
    return out;
}

/// Builds the full graph by enumerating reduced generator matrices of simplex codes.
/// Throws unsupported_parameters outside the default set unless allow_any is true.
inline CodeGraph build_graph(const Field& f, unsigned k, bool allow_any = false,
                             std::uint64_t budget = default_budget())
{
    if (k < 2)
        throw std::invalid_argument("simplex code graphs need k >= 2");
    if (!allow_any && !full_enumeration_supported(k, f.q()))
        throw unsupported_parameters("full graph for (k,q) = (" + std::to_string(k) + "," +
                                     std::to_string(f.q()) + ") is not supported without an override");
    const BigInt expected = count_simplex(k, f.q());
    if (expected > budget)
        throw budget_exceeded("graph has " + expected.str() + " vertices, above budget " + std::to_string(budget));

    CodeGraph g(f);
    g.k = k;
    g.q = f.q();
    g.n = gaussian_bracket(k, f.q());
    for_each_simplex_rref(f, k, [&](const Matrix& m) { g.vertices.push_back(SimplexCode{k, SubspaceKey(f, m)}); });
    std::sort(g.vertices.begin(), g.vertices.end());
    for (std::uint32_t i = 0; i < g.vertices.size(); ++i)
        g.index.emplace(g.vertices[i].key, i);

    // two distinct codes are adjacent iff they share a hyperplane, and then share exactly one
    std::unordered_map<SubspaceKey, std::vector<std::uint32_t>, SubspaceKeyHash> through;
    for (std::uint32_t i = 0; i < g.vertices.size(); ++i)
        for (auto& h : hyperplanes(f, g.vertices[i]))
            through[std::move(h)].push_back(i);
    g.adjacency.assign(g.vertices.size(), {});
    for (const auto& [h, members] : through)
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                g.adjacency[members[a]].push_back(members[b]);
                g.adjacency[members[b]].push_back(members[a]);
            }
    for (auto& nb : g.adjacency)
        std::sort(nb.begin(), nb.end());
    return g;
}

/// BFS distances from source; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const CodeGraph& g, std::uint32_t source)
{
    std::vector<int> dist(g.size(), -1);
    std::queue<std::uint32_t> todo;
    dist[source] = 0;
    todo.push(source);
    while (!todo.empty()) {
        auto u = todo.front();
        todo.pop();
        for (auto v : g.adjacency[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                todo.push(v);
            }
    }
    return dist;
}

inline bool is_connected(const CodeGraph& g)
{
    if (g.size() == 0)
        return true;
    const auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

/// Largest BFS distance over all sources; nullopt when disconnected.
inline std::optional<int> diameter(const CodeGraph& g)
{
    int best = 0;
    for (std::uint32_t s = 0; s < g.size(); ++s) {
        const auto d = bfs_distances(g, s);
        for (int x : d) {
            if (x < 0)
                return std::nullopt;
            best = std::max(best, x);
        }
    }
    return best;
}

struct MonomialMove {
    enum class Kind { transpose, scale };
    Kind kind;
    std::size_t first;   // column
    std::size_t second;  // other column (transpose)
    Elem scalar;         // multiplier (scale)
    SimplexCode result;
};

/// Codes reached from code by one column transposition or by scaling one column by a not in {0, 1}.
inline std::vector<MonomialMove> monomial_moves(const Field& f, const SimplexCode& code)
{
    std::vector<MonomialMove> out;
    const Matrix& g = code.generator();
    const std::size_t n = g.cols();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix h = g;
            for (std::size_t r = 0; r < h.rows(); ++r)
                std::swap(h(r, i), h(r, j));
            out.push_back({MonomialMove::Kind::transpose, i, j, 0, make_simplex_code(f, h)});
        }
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned a = 2; a < f.q(); ++a) {
            Matrix h = g;
            for (std::size_t r = 0; r < h.rows(); ++r)
                h(r, i) = f.mul(h(r, i), static_cast<Elem>(a));
            out.push_back({MonomialMove::Kind::scale, i, i, static_cast<Elem>(a), make_simplex_code(f, h)});
        }
    return out;
}

/// Monomial map carrying c1 onto c2, pairing generator columns up to scalars.
inline MonomialMap monomial_between(const Field& f, const SimplexCode& c1, const SimplexCode& c2)
{
    if (c1.k != c2.k || c1.key.ambient() != c2.key.ambient())
        throw std::invalid_argument("codes have different parameters");
    auto map = match_columns(f, c1.generator(), c2.generator());
    if (!map || !(apply(f, *map, c1.key) == c2.key))
        throw std::logic_error("no monomial map between simplex codes found");
    return *map;
}

/// Simplex codes containing the (k-1)-dimensional subspace x.
inline std::vector<SimplexCode> star_members(const Field& f, const SubspaceKey& x, unsigned k,
                                             std::uint64_t budget = default_budget())
{
    if (x.dim() + 1 != k)
        throw std::invalid_argument("star center must have dimension k-1");
    if (x.ambient() != gaussian_bracket(k, f.q()))
        throw std::invalid_argument("star center lives in the wrong ambient space");
    if (!is_subcode_of_simplex(f, x.basis(), k))
        return {};
    return enumerate_extensions(f, x.basis(), k, budget);
}

/// Simplex codes contained in the (k+1)-dimensional subspace y.
inline std::vector<SimplexCode> top_members(const Field& f, const SubspaceKey& y, unsigned k)
{
    if (y.dim() != k + 1)
        throw std::invalid_argument("top span must have dimension k+1");
    if (y.ambient() != gaussian_bracket(k, f.q()))
        throw std::invalid_argument("top span lives in the wrong ambient space");
    std::vector<SimplexCode> out;
    for_each_subspace(f, k + 1, k, [&](const Matrix& coeffs) {
        Matrix g = multiply(f, coeffs, y.basis());
        if (is_simplex(f, g))
            out.push_back(SimplexCode{k, SubspaceKey(f, g)});
    });
    std::sort(out.begin(), out.end());
    return out;
}

enum class CliqueKind { star, top, star_and_top, neither, not_maximal };

inline const char* to_string(CliqueKind k)
{
    switch (k) {
    case CliqueKind::star:
        return "star";
    case CliqueKind::top:
        return "top";
    case CliqueKind::star_and_top:
        return "star-and-top";
    case CliqueKind::neither:
        return "neither";
    case CliqueKind::not_maximal:
        return "not-maximal";
    }
    return "?";
}

struct CliqueRecord {
    std::vector<SimplexCode> members;  // sorted
    CliqueKind kind = CliqueKind::neither;
    std::optional<SubspaceKey> star_center;  // common (k-1)-space, when it exists
    std::optional<SubspaceKey> top_span;     // joint (k+1)-space, when it exists
};

inline bool pairwise_adjacent(const Field& f, const std::vector<SimplexCode>& codes)
{
    for (std::size_t i = 0; i < codes.size(); ++i)
        for (std::size_t j = i + 1; j < codes.size(); ++j)
            if (intersection_dim(f, codes[i].key, codes[j].key) + 1 != codes[i].k)
                return false;
    return true;
}

/// Classifies a clique of simplex codes without a prebuilt graph. A clique with at least
/// two members can only grow inside the star of its common (k-1)-space or the top of its
/// (k+1)-dimensional span, so it is maximal iff it equals every one of those that exists.
inline CliqueRecord classify_maximal_clique(const Field& f, unsigned k, std::vector<SimplexCode> members,
                                            std::uint64_t budget = default_budget())
{
    if (members.empty())
        throw std::invalid_argument("empty clique");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!pairwise_adjacent(f, members))
        throw std::invalid_argument("members are not pairwise adjacent");
    CliqueRecord rec;
    rec.members = members;
    if (members.size() == 1) {
        rec.kind = count_simplex(k, f.q()) == 1 ? CliqueKind::neither : CliqueKind::not_maximal;
        return rec;
    }
    SubspaceKey meet = members[0].key;
    SubspaceKey span = members[0].key;
    for (std::size_t i = 1; i < members.size(); ++i) {
        meet = subspace_intersection(f, meet, members[i].key);
        span = subspace_sum(f, span, members[i].key);
    }
    bool maximal = true;
    bool star = false;
    bool top = false;
    if (meet.dim() + 1 == k) {
        rec.star_center = meet;
        const auto s = star_members(f, meet, k, budget);
        star = s == members;
        maximal = maximal && star;
    }
    if (span.dim() == k + 1) {
        rec.top_span = span;
        const auto t = top_members(f, span, k);
        top = t == members;
        maximal = maximal && top;
    }
    if (!maximal)
        rec.kind = CliqueKind::not_maximal;
    else if (star && top)
        rec.kind = CliqueKind::star_and_top;
    else if (star)
        rec.kind = CliqueKind::star;
    else if (top)
        rec.kind = CliqueKind::top;
    else
        rec.kind = CliqueKind::neither;
    return rec;
}

/// Same classification for vertex indices of a built graph; maximality is checked against
/// the adjacency lists as well and the two answers must agree.
inline CliqueRecord classify_maximal_clique(const CodeGraph& g, const std::vector<std::uint32_t>& members,
                                            std::uint64_t budget = default_budget())
{
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!g.adjacent(members[i], members[j]))
                throw std::invalid_argument("members are not pairwise adjacent");
    bool graph_maximal = true;
    for (std::uint32_t v = 0; v < g.size() && graph_maximal; ++v) {
        if (std::find(members.begin(), members.end(), v) != members.end())
            continue;
        bool all = true;
        for (auto m : members)
            if (!g.adjacent(v, m)) {
                all = false;
                break;
            }
        if (all)
            graph_maximal = false;
    }
    std::vector<SimplexCode> codes;
    for (auto m : members)
        codes.push_back(g.vertices[m]);
    auto rec = classify_maximal_clique(g.field, g.k, codes, budget);
    if ((rec.kind != CliqueKind::not_maximal) != graph_maximal)
        throw std::logic_error("graph maximality disagrees with star/top maximality");
    return rec;
}

/// All maximal cliques by Bron-Kerbosch with pivoting, each sorted, in lexicographic order.
inline std::vector<std::vector<std::uint32_t>> maximal_cliques(const CodeGraph& g)
{
    const std::size_t n = g.size();
    const std::size_t words = (n + 63) / 64;
    using Bits = std::vector<std::uint64_t>;
    std::vector<Bits> nb(n, Bits(words, 0));
    for (std::uint32_t u = 0; u < n; ++u)
        for (auto v : g.adjacency[u])
            nb[u][v / 64] |= 1ull << (v % 64);

    auto count = [](const Bits& b) {
        std::size_t c = 0;
        for (auto w : b)
            c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    };
    auto empty = [](const Bits& b) { return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; }); };

    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> r;
    auto rec = [&](auto&& self, Bits p, Bits x) -> void {
        if (empty(p)) {
            if (empty(x)) {
                auto c = r;
                std::sort(c.begin(), c.end());
                out.push_back(std::move(c));
            }
            return;
        }
        // pivot maximizing |P ∩ N(u)| over u in P ∪ X
        std::size_t best = 0;
        std::uint32_t pivot = 0;
        bool have = false;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t cand = p[w] | x[w];
            while (cand) {
                const auto u = static_cast<std::uint32_t>(w * 64 + static_cast<unsigned>(__builtin_ctzll(cand)));
                cand &= cand - 1;
                Bits inter(words);
                for (std::size_t i = 0; i < words; ++i)
                    inter[i] = p[i] & nb[u][i];
                const std::size_t c = count(inter);
                if (!have || c > best) {
                    best = c;
                    pivot = u;
                    have = true;
                }
            }
        }
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t cand = p[w] & ~nb[pivot][w];
            while (cand) {
                const auto v = static_cast<std::uint32_t>(w * 64 + static_cast<unsigned>(__builtin_ctzll(cand)));
                cand &= cand - 1;
                Bits p2(words), x2(words);
                for (std::size_t i = 0; i < words; ++i) {
                    p2[i] = p[i] & nb[v][i];
                    x2[i] = x[i] & nb[v][i];
                }
                r.push_back(v);
                self(self, std::move(p2), std::move(x2));
                r.pop_back();
                p[v / 64] &= ~(1ull << (v % 64));
                x[v / 64] |= 1ull << (v % 64);
            }
        }
    };
    Bits all(words, 0);
    for (std::uint32_t v = 0; v < n; ++v)
        all[v / 64] |= 1ull << (v % 64);
    rec(rec, all, Bits(words, 0));
    std::sort(out.begin(), out.end());
    return out;
}

/// Incidence graph of the d1- and d2-dimensional subspaces of F^n; the first block of
/// vertices holds the d1-subspaces.
inline SimpleGraph subspace_incidence_graph(const Field& f, std::size_t n, std::size_t d1, std::size_t d2)
{
    std::vector<SubspaceKey> small, large;
    for_each_subspace(f, n, d1, [&](const Matrix& m) { small.emplace_back(f, m); });
    for_each_subspace(f, n, d2, [&](const Matrix& m) { large.emplace_back(f, m); });
    SimpleGraph g(small.size() + large.size());
    for (std::uint32_t i = 0; i < small.size(); ++i)
        for (std::uint32_t j = 0; j < large.size(); ++j)
            if (large[j].contains(f, small[i]))
                g.add_edge(i, static_cast<std::uint32_t>(small.size() + j));
    g.finalize();
    return g;
}

} // namespace simplexgraph

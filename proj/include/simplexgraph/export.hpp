/**************************************************************************
 * export.hpp
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

// DOT and JSON dumps of graphs, tops and geometry queries.

#pragma once

#include "geometry.hpp"
#include "graph.hpp"
#include "tops.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>

namespace simplexgraph {

inline std::string key_label(const SubspaceKey& key)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(key.hash()));
    return buf;
}

inline nlohmann::json matrix_json(const Matrix& m)
{
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (Elem e : m.row(r))
            row.push_back(e);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json vec_json(const Vec& v)
{
    auto out = nlohmann::json::array();
    for (Elem e : v)
        out.push_back(e);
    return out;
}

inline nlohmann::json field_json(const Field& f)
{
    return {{"p", f.p()}, {"m", f.m()}, {"q", f.q()}, {"primitive", f.primitive()},
            {"irreducible", f.irreducible()}};
}

inline std::string graph_to_dot(const CodeGraph& g)
{
    std::ostringstream os;
    os << "graph simplex_" << g.k << "_" << g.q << " {\n";
    for (std::size_t v = 0; v < g.size(); ++v)
        os << "  v" << v << " [label=\"" << key_label(g.vertices[v].key) << "\"];\n";
    for (std::uint32_t a = 0; a < g.size(); ++a)
        for (auto b : g.adjacency[a])
            if (a < b)
                os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

inline nlohmann::json graph_to_json(const CodeGraph& g)
{
    nlohmann::json out;
    out["params"] = {{"k", g.k}, {"q", g.q}, {"n", g.n}, {"field", field_json(g.field)}};
    auto vertices = nlohmann::json::array();
    for (std::size_t v = 0; v < g.size(); ++v)
        vertices.push_back({{"id", v}, {"label", key_label(g.vertices[v].key)},
                            {"basis", matrix_json(g.vertices[v].generator())}});
    auto edges = nlohmann::json::array();
    for (std::uint32_t a = 0; a < g.size(); ++a)
        for (auto b : g.adjacency[a])
            if (a < b)
                edges.push_back({a, b});
    out["vertices"] = std::move(vertices);
    out["edges"] = std::move(edges);
    return out;
}

inline nlohmann::json top_to_json(const TopConstruction& tc, const TopSize& size)
{
    nlohmann::json out;
    out["params"] = {{"kind", to_string(tc.kind)}, {"k", tc.k}, {"q", tc.q}, {"n", tc.v1.size()},
                     {"field", field_json(tc.field)}};
    auto scalars = nlohmann::json::array();
    for (const auto& [a, b] : tc.scalars)
        scalars.push_back({a, b});
    out["scalars"] = std::move(scalars);
    out["M"] = matrix_to_text(tc.field, tc.generator);
    auto members = nlohmann::json::array();
    for (const auto& c : size.members)
        members.push_back({{"label", key_label(c.key)}, {"basis", matrix_json(c.generator())}});
    out["members"] = std::move(members);
    auto bad = nlohmann::json::array();
    const auto dirs = tc.kind == TopConstruction::Kind::general ? bad_directions(tc) : heavy_or_light_directions(tc);
    for (const auto& d : dirs)
        bad.push_back(vec_json(d));
    out["bad_directions"] = std::move(bad);
    return out;
}

struct PerpQuery {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t perp_size = 0;
    std::vector<std::size_t> double_perp;
};

inline nlohmann::json geometry_to_json(const Geometry& g, const std::vector<PerpQuery>& queries)
{
    nlohmann::json out;
    out["params"] = {{"k", g.k()}, {"q", g.field().q()}, {"n", g.n()}, {"point_weight", g.point_weight()}};
    out["point_count"] = g.size();
    auto pairs = nlohmann::json::array();
    auto sizes = nlohmann::json::array();
    auto dps = nlohmann::json::array();
    for (const auto& qr : queries) {
        pairs.push_back({vec_json(g.points()[qr.p]), vec_json(g.points()[qr.q])});
        sizes.push_back(qr.perp_size);
        auto members = nlohmann::json::array();
        for (auto idx : qr.double_perp)
            members.push_back(vec_json(g.points()[idx]));
        dps.push_back(std::move(members));
    }
    out["queried_pairs"] = std::move(pairs);
    out["perp_sizes"] = std::move(sizes);
    out["double_perp_members"] = std::move(dps);
    return out;
}

} // namespace simplexgraph

/**************************************************************************
 * commands.hpp
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

// Verification runs behind the command-line subcommands. Each returns a
// RunReport; parameter problems surface as std::invalid_argument.

#pragma once

#include "export.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "report.hpp"
#include "simplex.hpp"
#include "tops.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace simplexgraph {

namespace detail {

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void write_file(const std::string& path, const std::string& text, RunReport& report)
{
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write " + path);
    os << text;
    report.artifacts.push_back(path);
}

inline Field field_for(unsigned q) { return make_field_of_order(q); }

} // namespace detail

/// Counting formulas, confirmed by enumeration where the budget allows.
inline RunReport count_report(unsigned k, unsigned q, std::optional<unsigned> m,
                              std::uint64_t budget = default_budget())
{
    detail::Stopwatch clock;
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    const Field f = detail::field_for(q);
    RunReport r;
    r.command = "count";
    r.parameters = {{"k", k}, {"q", q}};
    if (!m) {
        const BigInt value = count_simplex(k, q);
        r.parameters["value"] = value.str();
        if (full_enumeration_supported(k, q)) {
            const auto g = build_graph(f, k);
            r.check("simplex codes found by enumeration", value.str(), std::to_string(g.size()));
        } else if (value <= budget) {
            const auto found = count_extensions_by_enumeration(f, Matrix(0, gaussian_bracket(k, q)), k, budget);
            r.check("simplex codes found by enumeration", value.str(), std::to_string(found));
        }
        r.check("extension count with m = 0 equals the code count", value.str(), count_extensions(k, q, 0).str());
    } else {
        if (*m >= k)
            throw std::invalid_argument("m must be below k");
        const BigInt value = count_extensions(k, q, *m);
        r.parameters["m"] = *m;
        r.parameters["value"] = value.str();
        if (*m == 0)
            r.check("m = 0 value equals the code count", count_simplex(k, q).str(), value.str());
        if (value <= budget) {
            const auto code = standard_simplex(f, k);
            Matrix s(0, code.key.ambient());
            for (unsigned i = 0; i < *m; ++i)
                s.append_row(code.generator().row(i));
            const auto found = count_extensions_by_enumeration(f, s, k, budget);
            r.check("extensions of a subcode of the standard code", value.str(), std::to_string(found));
        }
    }
    r.wall_time_s = clock.seconds();
    return r;
}

struct GraphOptions {
    std::string dot_path;
    std::string json_path;
    bool cliques = false;
    bool distances = false;
};

inline RunReport graph_report(unsigned k, unsigned q, const GraphOptions& opt, std::uint64_t budget = default_budget())
{
    detail::Stopwatch clock;
    const Field f = detail::field_for(q);
    const CodeGraph g = build_graph(f, k, false, budget);
    RunReport r;
    r.command = "graph";
    r.parameters = {{"k", k}, {"q", q}, {"vertices", g.size()}, {"edges", g.edge_count()}};
    r.check("vertex count", count_simplex(k, q).str(), std::to_string(g.size()));
    r.expect_true("connected", is_connected(g));
    if (k == 2 && q == 3)
        r.expect_true("isomorphic to K4,4", find_isomorphism(g.as_simple(), complete_bipartite(4, 4)).has_value());
    if (k == 3 && q == 2)
        r.expect_true("isomorphic to the 1/3-subspace incidence graph of F_2^4",
                      find_isomorphism(g.as_simple(), subspace_incidence_graph(f, 4, 1, 3)).has_value());
    if (opt.distances) {
        auto d = diameter(g);
        r.parameters["diameter"] = d ? *d : -1;
        std::map<int, std::size_t> hist;
        for (auto dist : bfs_distances(g, 0))
            ++hist[dist];
        nlohmann::json h = nlohmann::json::object();
        for (auto [dist, c] : hist)
            h[std::to_string(dist)] = c;
        r.parameters["distances_from_vertex_0"] = h;
    }
    if (opt.cliques) {
        const auto cliques = maximal_cliques(g);
        std::map<std::string, std::size_t> kinds;
        std::map<std::size_t, std::size_t> star_sizes;
        std::map<std::size_t, std::size_t> top_sizes;
        for (const auto& c : cliques) {
            const auto rec = classify_maximal_clique(g, c, budget);
            ++kinds[to_string(rec.kind)];
            if (rec.kind == CliqueKind::star || rec.kind == CliqueKind::star_and_top)
                ++star_sizes[c.size()];
            if (rec.kind == CliqueKind::top || rec.kind == CliqueKind::star_and_top)
                ++top_sizes[c.size()];
        }
        r.parameters["maximal_cliques"] = cliques.size();
        r.parameters["clique_kinds"] = kinds;
        nlohmann::json ss = nlohmann::json::object(), ts = nlohmann::json::object();
        for (auto [s, c] : star_sizes)
            ss[std::to_string(s)] = c;
        for (auto [s, c] : top_sizes)
            ts[std::to_string(s)] = c;
        r.parameters["star_sizes"] = ss;
        r.parameters["top_sizes"] = ts;
        const std::size_t bad = kinds["neither"] + kinds["not-maximal"];
        r.check("cliques that are neither a star nor a top", std::size_t{0}, bad);
        if (k > 1) {
            const std::string expected = count_extensions(k, q, k - 1).str();
            for (auto [s, c] : star_sizes)
                r.check("star size", expected, std::to_string(s));
        }
        if ((k == 2 && q == 3) || (k == 3 && q == 2))
            r.check("star-and-top cliques", cliques.size(), kinds["star-and-top"]);
        if (k == 2 && q == 4)
            r.check("star cliques", cliques.size(), kinds["star"]);
    }
    if (!opt.dot_path.empty())
        detail::write_file(opt.dot_path, graph_to_dot(g), r);
    if (!opt.json_path.empty())
        detail::write_file(opt.json_path, graph_to_json(g).dump(2) + "\n", r);
    r.wall_time_s = clock.seconds();
    return r;
}

/// Parses "a,b;a,b;..." into scalar pairs.
inline std::vector<ScalarPair> parse_scalars(const std::string& text)
{
    std::vector<ScalarPair> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty())
            continue;
        const auto comma = item.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("scalar pair '" + item + "' is not of the form a,b");
        try {
            const int a = std::stoi(item.substr(0, comma));
            const int b = std::stoi(item.substr(comma + 1));
            if (a < 0 || b < 0 || a > 255 || b > 255)
                throw std::invalid_argument("scalar out of range");
            out.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("scalar pair '" + item + "' is not of the form a,b");
        }
    }
    return out;
}

struct TopOptions {
    std::string kind;  // k2, binary, general, three
    unsigned k = 0;
    unsigned q = 0;
    std::string scalars;
    std::string json_path;
};

inline TopConstruction build_top(const TopOptions& opt)
{
    if (opt.kind == "k2")
        return construct_top_k2(detail::field_for(opt.q));
    if (opt.kind == "binary")
        return construct_top_binary(detail::field_for(2), opt.k);
    if (opt.kind == "general") {
        const Field f = detail::field_for(opt.q);
        return construct_top_general(f, opt.k, opt.scalars.empty() ? covering_scalars(f, opt.k) : parse_scalars(opt.scalars));
    }
    if (opt.kind == "three")
        return three_element_top(detail::field_for(opt.q), opt.k);
    throw std::invalid_argument("unknown top kind '" + opt.kind + "'");
}

inline RunReport top_report(const TopOptions& opt, std::uint64_t budget = default_budget())
{
    detail::Stopwatch clock;
    const TopConstruction tc = build_top(opt);
    const Field& f = tc.field;
    RunReport r;
    r.command = "top";
    r.parameters = {{"kind", opt.kind}, {"k", tc.k}, {"q", tc.q}, {"n", tc.v1.size()}};
    r.expect_true("members pairwise adjacent",
                  pairwise_adjacent(f, std::vector<SimplexCode>(tc.codes.begin(), tc.codes.end())));
    std::optional<TopSize> size;
    try {
        size = top_size(tc);
        r.check("direct and plane counts agree", size->direct_count, size->plane_count);
    } catch (const std::logic_error& e) {
        r.expect_true(std::string("direct and plane counts agree (") + e.what() + ")", false);
    }
    if (size) {
        r.parameters["top_size"] = size->size();
        const auto rec = classify_maximal_clique(f, tc.k, size->members, budget);
        r.check("clique kind", std::string("top"), std::string(to_string(rec.kind)));
        for (const auto& c : tc.codes)
            r.expect_true("construction member lies in the top",
                          std::binary_search(size->members.begin(), size->members.end(), c));
    }
    if (tc.kind == TopConstruction::Kind::general) {
        r.check("bad directions match weight testing", bad_directions(tc).size(), heavy_or_light_directions(tc).size());
        r.expect_true("bad directions equal the weight-tested set", bad_directions(tc) == heavy_or_light_directions(tc));
        r.expect_true("offset coset weights", offset_weights_hold(tc));
        r.expect_true("extension weights", extension_weights_hold(tc));
        r.parameters["scalars_satisfy_II"] = scalars_satisfy_II(tc.scalars);
    }
    if (opt.kind == "three" && size) {
        const std::size_t q1 = tc.q - 1;
        r.check("top size", std::size_t{3}, size->size());
        r.check("bad directions", q1 * q1, bad_directions(tc).size());
        // q^2+q+1 - (q-1)^2 = 3q, the directions on the three lines <v_i, v_j>
        r.check("remaining directions", 3 * std::size_t{tc.q}, gaussian_bracket(3, tc.q) - bad_directions(tc).size());
        r.expect_true("remaining directions lie in pairwise spans", good_directions_in_pairwise_spans(tc));
    }
    if (!opt.json_path.empty() && size)
        detail::write_file(opt.json_path, top_to_json(tc, *size).dump(2) + "\n", r);
    r.wall_time_s = clock.seconds();
    return r;
}

struct GeometryOptions {
    unsigned k = 0;
    unsigned q = 0;
    std::size_t pairs = 20;
    std::uint64_t seed = 0;
    std::string json_path;
};

inline RunReport geometry_report(const GeometryOptions& opt, std::uint64_t budget = default_budget())
{
    detail::Stopwatch clock;
    if (!geometry_supported(opt.k, opt.q))
        throw unsupported_parameters("geometry S(" + std::to_string(opt.k) + "," + std::to_string(opt.q) +
                                     ") is outside the supported parameter set");
    const Field f = detail::field_for(opt.q);
    const Geometry g(f, opt.k, false, budget);
    RunReport r;
    r.command = "geometry";
    r.parameters = {{"k", opt.k}, {"q", opt.q}, {"points", g.size()}, {"pairs", opt.pairs}, {"seed", opt.seed}};
    r.check("point count", g.expected_point_count().str(), std::to_string(g.size()));

    const bool separating = separation_supported(opt.k, opt.q);
    const bool polar = (opt.k == 2 && opt.q == 3) || (opt.k == 3 && opt.q == 2);
    r.parameters["expected_double_perp"] = separating ? "pair" : polar ? "line" : "unchecked";

    std::mt19937_64 rng(opt.seed);
    std::vector<PerpQuery> queries;
    std::size_t pair_hits = 0, line_hits = 0, antitone = 0;
    for (std::size_t i = 0; i < opt.pairs; ++i) {
        auto [p, q] = sample_collinear_pair(g, rng);
        PerpQuery qr{p, q, 0, {}};
        const auto pp = perp(g, {p, q});
        qr.perp_size = pp.size();
        qr.double_perp = perp(g, pp);
        const auto line = collinear(f, opt.k, g.points()[p], g.points()[q]);
        if (!line)
            throw std::logic_error("sampled pair is not collinear");
        const std::vector<std::size_t> pq{std::min(p, q), std::max(p, q)};
        pair_hits += qr.double_perp == pq;
        line_hits += qr.double_perp == line_points(g, *line);
        const auto single = perp(g, {p});
        antitone += std::includes(single.begin(), single.end(), pp.begin(), pp.end()) &&
                    std::includes(qr.double_perp.begin(), qr.double_perp.end(), pq.begin(), pq.end());
        queries.push_back(std::move(qr));
    }
    r.check("pairs with perp antitone and X inside its double perp", opt.pairs, antitone);
    if (separating)
        r.check("pairs whose double perp is the pair", opt.pairs, pair_hits);
    if (polar)
        r.check("pairs whose double perp is the full line", opt.pairs, line_hits);
    r.parameters["double_perp_is_pair"] = pair_hits;
    r.parameters["double_perp_is_line"] = line_hits;

    if (separating && !queries.empty()) {
        const Vec& x = g.points()[queries[0].p];
        const Vec& y = g.points()[queries[0].q];
        std::size_t ok = 0;
        for (unsigned a = 1; a < opt.q; ++a)
            ok += separates(f, opt.k, x, y, static_cast<Elem>(a), separating_vector(f, opt.k, x, y, static_cast<Elem>(a), budget).z);
        r.check("separating vectors verified for every nonzero a", std::size_t{opt.q - 1}, ok);
    }

    const auto code = random_simplex_code(f, opt.k, rng);
    r.expect_true("a sampled simplex code is a maximal singular subspace", is_maximal_singular(g, code));

    if (!opt.json_path.empty())
        detail::write_file(opt.json_path, geometry_to_json(g, queries).dump(2) + "\n", r);
    r.wall_time_s = clock.seconds();
    return r;
}

} // namespace simplexgraph

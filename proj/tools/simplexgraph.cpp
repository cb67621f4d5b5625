/**************************************************************************
 * simplexgraph.cpp
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

// Command-line front end. Exit status: 0 when every check passes, 1 when a
// check fails, 2 for bad parameters or exhausted budgets.

#include <simplexgraph/commands.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace simplexgraph;

namespace {

struct Output {
    bool json = false;
    std::vector<RunReport> reports;

    int finish() const
    {
        bool ok = true;
        if (json) {
            nlohmann::json all = nlohmann::json::array();
            for (const auto& r : reports)
                all.push_back(r.to_json());
            std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
        } else {
            for (const auto& r : reports)
                r.print(std::cout);
        }
        for (const auto& r : reports)
            ok = ok && r.passed();
        return ok ? 0 : 1;
    }
};

std::vector<RunReport> verify_all(std::uint64_t seed, std::uint64_t budget)
{
    std::vector<RunReport> out;
    for (auto [k, q] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}, {2u, 5u}})
        out.push_back(count_report(k, q, std::nullopt, budget));
    out.push_back(count_report(3, 3, 1u, budget));
    out.push_back(count_report(4, 2, 2u, budget));
    for (auto [k, q] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 4u}})
        out.push_back(graph_report(k, q, GraphOptions{"", "", true, true}, budget));
    out.push_back(top_report(TopOptions{"k2", 2, 5, "", ""}, budget));
    out.push_back(top_report(TopOptions{"binary", 4, 2, "", ""}, budget));
    out.push_back(top_report(TopOptions{"general", 3, 3, "", ""}, budget));
    out.push_back(top_report(TopOptions{"three", 5, 3, "", ""}, budget));
    for (auto [k, q] : {std::pair{2u, 5u}, {3u, 2u}, {2u, 3u}, {4u, 2u}})
        out.push_back(geometry_report(GeometryOptions{k, q, 20, seed, ""}, budget));
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simplex code graphs: counting, cliques, tops and the point-line geometry"};
    app.require_subcommand(1);
    Output out;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    app.add_flag("--json", out.json, "Machine-readable output");
    app.add_option("--threads", threads, "Worker thread cap (default: available cores)");
    app.add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();

    unsigned k = 0, q = 0;
    std::optional<unsigned> m;

    auto* count = app.add_subcommand("count", "Code counts and extension counts");
    count->add_option("k", k, "Code dimension")->required();
    count->add_option("q", q, "Field order")->required();
    count->add_option("--m", m, "Subcode dimension");

    GraphOptions gopt;
    auto* graph = app.add_subcommand("graph", "Build the simplex code graph");
    graph->add_option("k", k)->required();
    graph->add_option("q", q)->required();
    graph->add_option("--dot", gopt.dot_path, "Write a DOT file");
    graph->add_option("--json-out", gopt.json_path, "Write the graph as JSON");
    graph->add_flag("--cliques", gopt.cliques, "Enumerate and classify maximal cliques");
    graph->add_flag("--distances", gopt.distances, "Report diameter and a distance histogram");

    TopOptions topt;
    std::vector<unsigned> params;
    auto* top = app.add_subcommand("top", "Explicit top constructions");
    top->add_option("kind", topt.kind, "k2 | binary | general | three")
        ->required()
        ->check(CLI::IsMember({"k2", "binary", "general", "three"}));
    top->add_option("params", params, "k2: q; binary: k; general, three: k q")->required();
    top->add_option("--scalars", topt.scalars, "Scalar pairs for general: \"a,b;a,b;...\"");
    top->add_option("--json-out", topt.json_path, "Write the construction as JSON");

    GeometryOptions geo;
    auto* geometry = app.add_subcommand("geometry", "Double perps in the point-line geometry");
    geometry->add_option("k", geo.k)->required();
    geometry->add_option("q", geo.q)->required();
    geometry->add_option("--pairs", geo.pairs, "Collinear pairs to sample")->capture_default_str();
    geometry->add_option("--json-out", geo.json_path, "Write the queries as JSON");

    auto* all = app.add_subcommand("verify-all", "Run a representative set of checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help and version requests exit 0, usage errors exit 2
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (threads > 0)
        set_max_threads(threads);
    const std::uint64_t budget = default_budget();

    try {
        if (count->parsed()) {
            out.reports.push_back(count_report(k, q, m, budget));
        } else if (graph->parsed()) {
            out.reports.push_back(graph_report(k, q, gopt, budget));
        } else if (top->parsed()) {
            const std::size_t want = (topt.kind == "k2" || topt.kind == "binary") ? 1 : 2;
            if (params.size() != want)
                throw std::invalid_argument("top " + topt.kind + " takes " + std::to_string(want) + " parameter(s)");
            if (topt.kind == "k2") {
                topt.k = 2;
                topt.q = params[0];
            } else if (topt.kind == "binary") {
                topt.k = params[0];
                topt.q = 2;
            } else {
                topt.k = params[0];
                topt.q = params[1];
            }
            out.reports.push_back(top_report(topt, budget));
        } else if (geometry->parsed()) {
            geo.seed = seed;
            out.reports.push_back(geometry_report(geo, budget));
        } else if (all->parsed()) {
            out.reports = verify_all(seed, budget);
        }
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << " (raise SIMPLEXGRAPH_BUDGET to allow more work)\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return out.finish();
}

/**************************************************************************
 * report.hpp
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

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace simplexgraph {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool passed = false;
};

struct RunReport {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    double wall_time_s = 0.0;
    std::vector<Check> checks;
    std::vector<std::string> artifacts;

    template <typename E, typename A>
    bool check(std::string name, const E& expected, const A& actual)
    {
        const bool ok = expected == actual;
        checks.push_back({std::move(name), to_text(expected), to_text(actual), ok});
        return ok;
    }

    bool expect_true(std::string name, bool value, std::string expected = "true")
    {
        std::string actual = value ? expected : "false";
        checks.push_back({std::move(name), std::move(expected), std::move(actual), value});
        return value;
    }

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }

    nlohmann::json to_json() const
    {
        auto list = nlohmann::json::array();
        for (const auto& c : checks)
            list.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
        return {{"command", command},      {"parameters", parameters}, {"wall_time_s", wall_time_s},
                {"checks", std::move(list)}, {"artifacts", artifacts},   {"passed", passed()}};
    }

    void print(std::ostream& os) const
    {
        os << command << " " << parameters.dump() << "\n";
        for (const auto& c : checks)
            os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": expected " << c.expected
               << ", got " << c.actual << "\n";
        for (const auto& a : artifacts)
            os << "  wrote " << a << "\n";
        os << "  " << (passed() ? "all checks passed" : "some checks FAILED") << " in " << std::fixed
           << std::setprecision(2) << wall_time_s << " s\n";
    }

private:
    template <typename T>
    static std::string to_text(const T& v)
    {
        std::ostringstream os;
        if constexpr (std::is_same_v<T, bool>)
            os << (v ? "true" : "false");
        else
            os << v;
        return os.str();
    }
};

} // namespace simplexgraph

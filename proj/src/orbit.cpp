/*
 * Copyright 2026 The quiverlab Authors
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
 */

#include "quiverlab/orbit.hpp"

#include <deque>
#include <set>

#include "json_io.hpp"
#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

detail::Json upper_json(const Quiver& q) {
    detail::Json out = detail::Json::array();
    for (const auto& x : q.upper()) out.push_back(format_rat(x));
    return out;
}

std::vector<std::string> key_of(const Quiver& q) {
    std::vector<std::string> key;
    key.reserve(q.upper().size());
    for (const auto& x : q.upper()) key.push_back(format_rat(x));
    return key;
}

}  // namespace

bool WalkReport::constant() const {
    std::vector<std::optional<Rat>> first(watch_names.size());
    for (const auto& step : steps) {
        if (!step.inner) continue;
        for (std::size_t w = 0; w < step.values.size(); ++w) {
            if (!step.values[w]) continue;
            if (!first[w])
                first[w] = step.values[w];
            else if (*first[w] != *step.values[w])
                return false;
        }
    }
    return true;
}

WalkReport random_mutation_walk(const Quiver& start, std::size_t steps, std::uint64_t seed,
                                const std::vector<WatchedInvariant>& watch) {
    for (const auto& w : watch)
        if (w.function.n() != start.n()) throw DimensionError("watched invariant '" + w.name + "' has the wrong size");
    WalkReport report{start, seed, {}, {}};
    for (const auto& w : watch) report.watch_names.push_back(w.name);

    auto record = [&](std::optional<int> vertex, const Quiver& q) {
        WalkStep step{vertex, q, q.is_inner(), {}};
        if (step.inner)
            for (const auto& w : watch) step.values.emplace_back(evaluate(w.function, q));
        report.steps.push_back(std::move(step));
    };

    Rng rng(seed);
    Quiver current = start;
    record(std::nullopt, current);
    for (std::size_t i = 0; i < steps; ++i) {
        const int k = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(start.n()));
        current = mutate(current, k);
        record(k, current);
    }
    return report;
}

std::string walk_to_json(const WalkReport& report) {
    detail::Json j;
    j["n"] = report.start.n();
    j["seed"] = report.seed;
    j["watch"] = report.watch_names;
    j["start"] = upper_json(report.start);
    auto& steps = j["steps"] = detail::Json::array();
    for (std::size_t i = 0; i < report.steps.size(); ++i) {
        const auto& step = report.steps[i];
        detail::Json row;
        row["step"] = i;
        row["vertex"] = step.vertex ? detail::Json(*step.vertex) : detail::Json(nullptr);
        row["upper"] = upper_json(step.quiver);
        row["inner"] = step.inner;
        detail::Json values = detail::Json::array();
        for (const auto& v : step.values) values.push_back(v ? detail::Json(format_rat(*v)) : detail::Json(nullptr));
        row["values"] = std::move(values);
        steps.push_back(std::move(row));
    }
    j["constant"] = report.constant();
    return j.dump();
}

OrbitSummary integer_orbit_bfs(const Quiver& start, std::size_t cap) {
    if (!start.is_integral()) throw DomainError("integer orbit search needs integer entries");
    OrbitSummary out{start, 0, false, cap, {}};
    if (cap == 0) return out;
    std::set<std::vector<std::string>> seen{key_of(start)};
    std::deque<Quiver> queue{start};
    out.members.push_back(start);
    bool capped = false;
    while (!queue.empty() && !capped) {
        const Quiver q = queue.front();
        queue.pop_front();
        for (int k = 1; k <= q.n(); ++k) {
            Quiver next = mutate(q, k);
            if (!seen.insert(key_of(next)).second) continue;
            if (out.members.size() == cap) {
                capped = true;
                break;
            }
            out.members.push_back(next);
            queue.push_back(std::move(next));
        }
    }
    out.visited = out.members.size();
    out.exhausted = !capped && queue.empty();
    return out;
}

std::string orbit_to_json(const OrbitSummary& summary) {
    detail::Json j;
    j["n"] = summary.start.n();
    j["start"] = upper_json(summary.start);
    j["visited"] = summary.visited;
    j["exhausted"] = summary.exhausted;
    j["cap"] = summary.cap;
    auto& members = j["members"] = detail::Json::array();
    for (const auto& q : summary.members) members.push_back(upper_json(q));
    return j.dump();
}

bool boundary_continuity_check(const CarriageWisePolynomial& f, std::size_t trials, std::uint64_t seed) {
    const int n = f.n();
    const auto m = num_entries(n);
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Rat> upper;
        for (std::size_t p = 0; p < m; ++p) upper.push_back((rng.coin() ? 1 : -1) * rng.magnitude());
        upper[rng.next() % m] = 0;
        const Quiver q(n, std::move(upper));
        try {
            (void)evaluate(f, q);
        } catch (const AmbiguousBoundaryError&) {
            return false;
        }
    }
    return true;
}

}  // namespace quiverlab

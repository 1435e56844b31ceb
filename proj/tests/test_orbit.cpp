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

#include <doctest.h>

#include <algorithm>
#include <array>

#include "oracles.hpp"
#include "quiverlab/errors.hpp"
#include "quiverlab/orbit.hpp"

using namespace quiverlab;

namespace {

// Integer quiver with a finite mutation orbit of 24 inner quivers, so long
// walks stay small.
const Quiver kFiniteOrbitStart(4, {2, -1, -1, 1, 1, 1});

}  // namespace

TEST_CASE("empty walk has only the start row") {
    const auto report = random_mutation_walk(kFiniteOrbitStart, 0, 9, {{"det", det_invariant(4)}});
    REQUIRE(report.steps.size() == 1);
    CHECK_FALSE(report.steps[0].vertex.has_value());
    CHECK(report.steps[0].quiver == kFiniteOrbitStart);
    CHECK(report.constant());
}

TEST_CASE("determinant is constant along a 1000-step walk") {
    const auto report = random_mutation_walk(kFiniteOrbitStart, 1000, 12345, {{"det", det_invariant(4)}});
    REQUIRE(report.steps.size() == 1001);
    CHECK(report.constant());
    for (const auto& step : report.steps) {
        REQUIRE(step.inner);
        CHECK(*step.values[0] == 4);
    }
}

TEST_CASE("walk vertices are uniform draws and replay the mutations") {
    const auto report = random_mutation_walk(kFiniteOrbitStart, 200, 77, {});
    std::array<int, 4> counts{};
    for (std::size_t i = 1; i < report.steps.size(); ++i) {
        const int k = *report.steps[i].vertex;
        REQUIRE(k >= 1);
        REQUIRE(k <= 4);
        ++counts[k - 1];
        CHECK(report.steps[i].quiver == mutate(report.steps[i - 1].quiver, k));
    }
    for (int c : counts) CHECK(c > 20);
}

TEST_CASE("Markov value 4 along walks from (2,-2,2)") {
    const Quiver start(3, {2, -2, 2});
    CHECK(mutate(start, 3) == Quiver(3, {-2, 2, -2}));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto report = random_mutation_walk(start, 50, seed, {{"markov", markov_invariant(3)}});
        CHECK(report.constant());
        for (const auto& step : report.steps) CHECK(*step.values[0] == 4);
    }
}

TEST_CASE("walks are reproducible byte for byte") {
    const std::vector<WatchedInvariant> watch{{"det", det_invariant(4)}};
    const auto a = walk_to_json(random_mutation_walk(kFiniteOrbitStart, 100, 5, watch));
    const auto b = walk_to_json(random_mutation_walk(kFiniteOrbitStart, 100, 5, watch));
    const auto c = walk_to_json(random_mutation_walk(kFiniteOrbitStart, 100, 6, watch));
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a.rfind(R"({"n":4,"seed":5,"watch":["det"],"start":["2","-1","-1","1","1","1"],"steps":[)", 0) == 0);
}

TEST_CASE("non-invariant watch is reported as varying") {
    const auto x12 = CarriageWisePolynomial::uniform(4, Poly::variable(6, 0));
    const auto report = random_mutation_walk(kFiniteOrbitStart, 50, 3, {{"x12", x12}});
    CHECK_FALSE(report.constant());
}

TEST_CASE("boundary steps carry no values") {
    const auto report = random_mutation_walk(Quiver(3, {1, 0, 1}), 10, 4, {{"markov", markov_invariant(3)}});
    CHECK_FALSE(report.steps[0].inner);
    CHECK(report.steps[0].values.empty());
}

TEST_CASE("watch size must match the quiver") {
    CHECK_THROWS_AS(random_mutation_walk(Quiver(3, {1, 1, 1}), 5, 1, {{"det", det_invariant(4)}}), DimensionError);
}

TEST_CASE("integer orbit of (2,-2,2)") {
    const auto summary = integer_orbit_bfs(Quiver(3, {2, -2, 2}), 100);
    CHECK(summary.exhausted);
    REQUIRE(summary.visited == 2);
    CHECK(summary.members[1] == Quiver(3, {-2, 2, -2}));
}

TEST_CASE("integer orbit of the zero quiver") {
    const auto summary = integer_orbit_bfs(Quiver(4), 100);
    CHECK(summary.exhausted);
    CHECK(summary.visited == 1);
}

TEST_CASE("capped orbit is reported truthfully") {
    const auto summary = integer_orbit_bfs(Quiver(3, {1, -1, 1}), 10000);
    CHECK(summary.visited <= 10000);
    CHECK(summary.visited == summary.members.size());
    if (!summary.exhausted) CHECK(summary.visited == 10000);
    const auto tiny = integer_orbit_bfs(kFiniteOrbitStart, 5);
    CHECK_FALSE(tiny.exhausted);
    CHECK(tiny.visited == 5);
}

TEST_CASE("exhausted orbits are closed under mutation") {
    const auto summary = integer_orbit_bfs(kFiniteOrbitStart, 1000);
    REQUIRE(summary.exhausted);
    CHECK(summary.visited == 24);
    for (const auto& q : summary.members)
        for (int k = 1; k <= 4; ++k)
            CHECK(std::find(summary.members.begin(), summary.members.end(), mutate(q, k)) != summary.members.end());
}

TEST_CASE("integer orbit needs integer entries") {
    CHECK_THROWS_AS(integer_orbit_bfs(Quiver(3, {Rat(1, 2), 1, 1}), 10), DomainError);
}

TEST_CASE("orbit JSON") {
    const auto text = orbit_to_json(integer_orbit_bfs(Quiver(3, {2, -2, 2}), 100));
    CHECK(text ==
          R"({"n":3,"start":["2","-2","2"],"visited":2,"exhausted":true,"cap":100,)"
          R"("members":[["2","-2","2"],["-2","2","-2"]]})");
}

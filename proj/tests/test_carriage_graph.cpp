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
#include <set>

#include "quiverlab/carriage_graph.hpp"
#include "quiverlab/errors.hpp"
#include "quiverlab/piecewise_map.hpp"

using namespace quiverlab;

namespace {

// Brute-force reachability: carriages linked by a flip are those for which
// some feasible mutation target differs in exactly that single position.
bool flip_by_definition(const SignPattern& s, std::size_t pos) {
    const auto [i, j] = entry_at(pos, s.n());
    for (int k = 1; k <= s.n(); ++k) {
        if (k == i || k == j) continue;
        if (s.entry_sign(i, k) == s.entry_sign(k, j)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("flip rule on small cases") {
    // x13 < 0 and x23 > 0: x13 and x32 are both negative, so k = 3 witnesses.
    CHECK(flip_allowed(SignPattern::parse("+-+"), position(1, 2, 3)));
    CHECK_FALSE(flip_allowed(SignPattern::parse("+++"), position(1, 2, 3)));
    CHECK_FALSE(flip_allowed(SignPattern::parse("+"), 0));
    CHECK_FALSE(flip_allowed(SignPattern::parse("-"), 0));
}

TEST_CASE("flip rule matches its definition and is symmetric") {
    for (int n : {3, 4, 5})
        for (std::uint64_t idx = 0; idx < num_patterns(n); ++idx) {
            const auto s = SignPattern::from_index(n, idx);
            for (std::size_t p = 0; p < s.size(); ++p) {
                CHECK(flip_allowed(s, p) == flip_by_definition(s, p));
                CHECK(flip_allowed(s, p) == flip_allowed(s.flipped(p), p));
            }
        }
}

TEST_CASE("allowed flips are realized by mutation twice over") {
    // Whenever position (i,j) may flip through k, mu_k reaches a carriage
    // whose image under mu_k again contains the flipped pattern.
    for (std::uint64_t idx = 0; idx < num_patterns(4); ++idx) {
        const auto s = SignPattern::from_index(4, idx);
        for (std::size_t p = 0; p < s.size(); ++p) {
            if (!flip_allowed(s, p)) continue;
            bool realized = false;
            for (int k = 1; k <= 4 && !realized; ++k)
                for (const auto& t : feasible_targets(s, k))
                    for (const auto& u : feasible_targets(t, k))
                        if (u == s.flipped(p)) realized = true;
            CHECK(realized);
        }
    }
}

TEST_CASE("components for n = 2, 3, 4") {
    const auto c4 = components(4);
    CHECK(c4.size() == 1);
    CHECK(c4.components[0].size() == 64);
    CHECK(is_connected(4));
    CHECK(component_summary(c4) == "1 component: 64");

    const auto c3 = components(3);
    REQUIRE(c3.size() == 2);
    CHECK(c3.components[0].size() == 4);
    CHECK(c3.components[1].size() == 4);
    CHECK_FALSE(is_connected(3));
    CHECK(component_summary(c3) == "2 components: 4, 4");
    CHECK(component_report(c3) == "component 1: size 4, least +++\ncomponent 2: size 4, least ++-\n");

    const auto c2 = components(2);
    CHECK(c2.size() == 2);
    CHECK_FALSE(is_connected(2));
    CHECK(component_summary(c2) == "2 components: 1, 1");
}

TEST_CASE("n = 3 components are the two Markov classes") {
    // Letters x = x12, y = -x13, z = x23; the class is fixed by whether at
    // least two letters are positive.
    const auto c3 = components(3);
    for (std::uint64_t idx = 0; idx < 8; ++idx) {
        const auto s = SignPattern::from_index(3, idx);
        const int positives = (s[0] > 0) + (s[1] < 0) + (s[2] > 0);
        const bool majority = positives >= 2;
        const bool in_first = c3.component_of[idx] == c3.component_of[SignPattern::parse("+-+").index()];
        CHECK(majority == in_first);
    }
}

TEST_CASE("components form a partition for n = 5") {
    const auto c5 = components(5);
    std::set<std::uint64_t> seen;
    std::size_t total = 0;
    for (std::size_t c = 0; c < c5.size(); ++c) {
        total += c5.components[c].size();
        for (auto node : c5.components[c]) {
            CHECK(seen.insert(node).second);
            CHECK(c5.component_of[node] == c);
        }
        if (c > 0) CHECK(c5.components[c - 1].front() < c5.components[c].front());
    }
    CHECK(total == 1024);
    const FlipGraph graph(5);
    for (std::uint64_t node = 0; node < graph.num_nodes(); ++node)
        for (auto other : graph.neighbours(node)) CHECK(c5.component_of[node] == c5.component_of[other]);
}

TEST_CASE("flip graph edges are symmetric") {
    const FlipGraph graph(4);
    for (std::uint64_t node = 0; node < graph.num_nodes(); ++node)
        for (auto other : graph.neighbours(node)) {
            const auto& back = graph.neighbours(other);
            CHECK(std::find(back.begin(), back.end(), node) != back.end());
        }
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(components(6), ResourceError);
    CHECK_NOTHROW(components(6, 6));
}

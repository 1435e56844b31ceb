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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quiverlab/invariant.hpp"
#include "quiverlab/quiver.hpp"

namespace quiverlab {

struct WalkStep {
    std::optional<int> vertex;  // empty for the starting row
    Quiver quiver;
    bool inner = false;
    std::vector<std::optional<Rat>> values;  // one per watched function; empty when not inner
};

struct WalkReport {
    Quiver start;
    std::uint64_t seed = 0;
    std::vector<std::string> watch_names;
    std::vector<WalkStep> steps;

    /// Every watched value is identical across all inner steps.
    bool constant() const;
};

struct WatchedInvariant {
    std::string name;
    CarriageWisePolynomial function;
};

/// Applies `steps` uniformly random mutations (vertex = draw mod n) and
/// records exact watched values at inner steps. Deterministic in seed.
WalkReport random_mutation_walk(const Quiver& start, std::size_t steps, std::uint64_t seed,
                                const std::vector<WatchedInvariant>& watch);

/// {"n", "seed", "watch", "start", "steps": [{"step", "vertex", "upper", "inner", "values"}], "constant"}.
std::string walk_to_json(const WalkReport& report);

struct OrbitSummary {
    Quiver start;
    std::size_t visited = 0;
    bool exhausted = false;
    std::size_t cap = 0;
    std::vector<Quiver> members;  // breadth-first discovery order
};

/// Breadth-first closure of an integer quiver under all mutations, keyed by
/// the raw entry tuple, stopping once `cap` quivers are known.
/// DomainError for non-integer entries.
OrbitSummary integer_orbit_bfs(const Quiver& start, std::size_t cap);

std::string orbit_to_json(const OrbitSummary& summary);

/// Draws quivers with exactly one zero entry and checks every compatible
/// piece agrees there.
bool boundary_continuity_check(const CarriageWisePolynomial& f, std::size_t trials, std::uint64_t seed);

}  // namespace quiverlab

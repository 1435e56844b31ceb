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
#include <string>
#include <vector>

#include "quiverlab/quiver.hpp"

namespace quiverlab {

/// Largest n for which the flip graph is built by default (2^10 nodes).
inline constexpr int kDefaultFlipGraphCap = 5;

/// Whether the sign of entry pos may be switched inside s: some third vertex
/// k has sign(x_{i,k}) == sign(x_{k,j}). The condition does not involve the
/// entry itself, so the relation is symmetric.
bool flip_allowed(const SignPattern& s, std::size_t pos);

/// Graph on all 2^m sign patterns; edges are allowed single-entry flips.
class FlipGraph {
public:
    explicit FlipGraph(int n, int cap = kDefaultFlipGraphCap);

    int n() const { return n_; }
    std::uint64_t num_nodes() const { return adjacency_.size(); }
    const std::vector<std::uint64_t>& neighbours(std::uint64_t node) const { return adjacency_[node]; }

private:
    int n_;
    std::vector<std::vector<std::uint64_t>> adjacency_;
};

/// Connected components of the flip graph. Members are pattern indices in
/// increasing order; components are ordered by their least member.
struct CarriagePartition {
    int n = 0;
    std::vector<std::vector<std::uint64_t>> components;
    std::vector<std::size_t> component_of;  // pattern index -> component

    std::size_t size() const { return components.size(); }
};

CarriagePartition components(int n, int cap = kDefaultFlipGraphCap);
bool is_connected(int n, int cap = kDefaultFlipGraphCap);

/// "1 component: 64" / "2 components: 4, 4".
std::string component_summary(const CarriagePartition& partition);

/// One line per component: size and least pattern.
std::string component_report(const CarriagePartition& partition);

}  // namespace quiverlab

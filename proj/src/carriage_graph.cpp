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

#include "quiverlab/carriage_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "quiverlab/errors.hpp"

namespace quiverlab {

bool flip_allowed(const SignPattern& s, std::size_t pos) {
    const auto [i, j] = entry_at(pos, s.n());
    for (int k = 1; k <= s.n(); ++k) {
        if (k == i || k == j) continue;
        if (s.entry_sign(i, k) == s.entry_sign(k, j)) return true;
    }
    return false;
}

FlipGraph::FlipGraph(int n, int cap) : n_(n) {
    if (n < 2) throw DomainError("flip graph needs n >= 2");
    if (n > cap) throw ResourceError("flip graph for n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    const auto count = num_patterns(n);
    const auto m = num_entries(n);
    adjacency_.resize(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const auto s = SignPattern::from_index(n, idx);
        for (std::size_t p = 0; p < m; ++p)
            if (flip_allowed(s, p)) adjacency_[idx].push_back(idx ^ (std::uint64_t{1} << (m - 1 - p)));
    }
}

CarriagePartition components(int n, int cap) {
    const FlipGraph graph(n, cap);
    CarriagePartition out;
    out.n = n;
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    out.component_of.assign(graph.num_nodes(), unseen);
    for (std::uint64_t root = 0; root < graph.num_nodes(); ++root) {
        if (out.component_of[root] != unseen) continue;
        const auto id = out.components.size();
        std::vector<std::uint64_t> members;
        std::deque<std::uint64_t> queue{root};
        out.component_of[root] = id;
        while (!queue.empty()) {
            const auto node = queue.front();
            queue.pop_front();
            members.push_back(node);
            for (auto next : graph.neighbours(node)) {
                if (out.component_of[next] != unseen) continue;
                out.component_of[next] = id;
                queue.push_back(next);
            }
        }
        std::sort(members.begin(), members.end());
        out.components.push_back(std::move(members));
    }
    return out;
}

bool is_connected(int n, int cap) { return components(n, cap).size() == 1; }

std::string component_summary(const CarriagePartition& partition) {
    std::string out = std::to_string(partition.size()) + (partition.size() == 1 ? " component: " : " components: ");
    for (std::size_t c = 0; c < partition.size(); ++c) {
        if (c) out += ", ";
        out += std::to_string(partition.components[c].size());
    }
    return out;
}

std::string component_report(const CarriagePartition& partition) {
    std::string out;
    for (std::size_t c = 0; c < partition.size(); ++c) {
        const auto& members = partition.components[c];
        out += "component " + std::to_string(c + 1) + ": size " + std::to_string(members.size()) + ", least " +
               SignPattern::from_index(partition.n, members.front()).to_string() + "\n";
    }
    return out;
}

}  // namespace quiverlab

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

#include "quiverlab/layout.hpp"

#include "quiverlab/errors.hpp"

namespace quiverlab {

std::pair<int, int> entry_at(std::size_t pos, int n) {
    std::size_t remaining = pos;
    for (int i = 1; i < n; ++i) {
        const auto row = static_cast<std::size_t>(n - i);
        if (remaining < row) return {i, i + 1 + static_cast<int>(remaining)};
        remaining -= row;
    }
    throw DimensionError("entry position " + std::to_string(pos) + " out of range for n=" + std::to_string(n));
}

int vertices_for_entries(std::size_t m) {
    for (int n = 2; num_entries(n) <= m; ++n)
        if (num_entries(n) == m) return n;
    throw DimensionError(std::to_string(m) + " is not a triangular entry count");
}

std::string variable_name(std::size_t pos, int n) {
    const auto [i, j] = entry_at(pos, n);
    if (n <= 9) return "x" + std::to_string(i) + std::to_string(j);
    return "x" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace quiverlab

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

#include <cstddef>
#include <string>
#include <utility>

namespace quiverlab {

// Upper-triangle entries of an n x n matrix are numbered in row-major order:
// (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n). Vertices are 1-based.

constexpr std::size_t num_entries(int n) {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Position of entry (i,j), i < j.
constexpr std::size_t position(int i, int j, int n) {
    return static_cast<std::size_t>((i - 1) * (2 * n - i) / 2 + (j - i - 1));
}

/// Inverse of position().
std::pair<int, int> entry_at(std::size_t pos, int n);

/// Vertex count n with n(n-1)/2 == m; throws DimensionError when m is not triangular.
int vertices_for_entries(std::size_t m);

/// "x12" style names for n <= 9, "x10_11" style beyond.
std::string variable_name(std::size_t pos, int n);

}  // namespace quiverlab

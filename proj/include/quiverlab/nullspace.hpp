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
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quiverlab/rational.hpp"

namespace quiverlab {

/// Sparse row with integer coefficients, sorted by column, primitive (content
/// 1) and with a positive leading coefficient.
struct SparseRow {
    std::vector<std::pair<std::uint32_t, Int>> entries;

    bool empty() const { return entries.empty(); }
    friend bool operator==(const SparseRow&, const SparseRow&) = default;
};

/// Homogeneous linear system A v = 0 over the rationals. Rows are normalized
/// on insertion; zero rows and repeats (up to a scalar) are dropped.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t num_cols) : num_cols_(num_cols) {}

    /// Coefficients may come in any order and repeat; repeats are summed.
    /// Returns true when the row was kept.
    bool add_row(std::vector<std::pair<std::size_t, Rat>> coefficients);

    std::size_t num_cols() const { return num_cols_; }
    std::size_t num_rows() const { return rows_.size(); }
    const std::vector<SparseRow>& rows() const { return rows_; }

    /// Exact check that A v = 0.
    bool annihilates(const std::vector<Rat>& v) const;

private:
    std::size_t num_cols_;
    std::vector<SparseRow> rows_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> index_;  // row hash -> rows
};

/// Exact nullspace, in canonical form: the reduced row echelon basis over the
/// fixed column order, pivots equal to 1, basis ordered by pivot column.
struct Nullspace {
    std::size_t num_cols = 0;
    std::size_t rank = 0;
    std::vector<std::vector<Rat>> basis;

    std::size_t dimension() const { return basis.size(); }
};

/// Presolve (rows with one or two unknowns fix or tie columns), then
/// fraction-free integer elimination on what remains, then back-substitution.
Nullspace nullspace(const LinearSystem& system);

/// Reduced row echelon form of the span of the given vectors; zero vectors
/// and dependent vectors disappear.
std::vector<std::vector<Rat>> canonical_basis(std::vector<std::vector<Rat>> vectors);

}  // namespace quiverlab

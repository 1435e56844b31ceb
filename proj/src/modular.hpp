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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "quiverlab/rational.hpp"

namespace quiverlab::detail {

inline constexpr std::array<std::uint32_t, 6> kPrimes = {2147483647U, 2147483629U, 2147483587U,
                                                         2147483579U, 2147483563U, 2147483549U};

/// Residue of an exact rational; nullopt when p divides the denominator.
std::optional<std::uint32_t> to_residue(const Rat& value, std::uint32_t p);

/// Nullspace of a dense matrix over GF(p): vector f has a 1 in free column
/// free_cols[f], zeros in the other free columns, and is in reduced form.
struct ModularNullspace {
    std::vector<std::size_t> free_cols;
    std::vector<std::vector<std::uint32_t>> basis;
};

/// Consumes the matrix. prime_slot indexes kPrimes.
ModularNullspace nullspace_mod(std::vector<std::vector<std::uint32_t>> rows, std::size_t num_cols,
                               std::size_t prime_slot);

/// r/t with |r|, |t| <= sqrt(m/2) and r = a t (mod m), if one exists.
std::optional<Rat> rational_reconstruct(const Int& a, const Int& m);

}  // namespace quiverlab::detail

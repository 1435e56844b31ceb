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
#include <vector>

#include "quiverlab/poly.hpp"
#include "quiverlab/quiver.hpp"
#include "quiverlab/rational.hpp"

namespace quiverlab {

/// The data a carriage-wise mutation map depends on: the vertex and the signs
/// of the n-1 entries x_{k,j}, j != k (in increasing j).
struct MutationMapKey {
    int k = 0;
    std::vector<std::int8_t> adjacent_signs;  // sign of x_kj for j != k, increasing j

    static MutationMapKey of(const SignPattern& s, int k);

    friend bool operator==(const MutationMapKey&, const MutationMapKey&) = default;
    friend auto operator<=>(const MutationMapKey&, const MutationMapKey&) = default;
};

/// Sign of the term x_{i,k} x_{k,j} added to x_{i,j} by mutation at k inside
/// carriage s: +1 when both factors are positive, -1 when both are negative
/// (the entry then loses the product, which is positive), 0 for mixed signs.
int added_term_sign(const SignPattern& s, int k, int i, int j);

/// The global polynomial map that agrees with mutate(., k) on carriage s.
PolyMap mu_poly(int k, const SignPattern& s);

/// Carriages t whose interior is reached from the interior of s by mutation
/// at k, in index order. Positions touching k flip; other positions keep
/// their sign unless the added term has the opposite sign, in which case
/// both signs are reachable.
std::vector<SignPattern> feasible_targets(const SignPattern& s, int k);

/// True iff mu_poly(k,t) after mu_poly(k,s) is the identity for every
/// feasible target t.
bool verify_involution_identity(const SignPattern& s, int k);

/// The two double-mutation translations on 4-vertex quivers.
enum class TranslationFamily {
    /// Vertex 4 on carriages with x14 > 0, x24 < 0, x34 < 0:
    /// x12 -> x12 - 2 x14 x24, x13 -> x13 - 2 x14 x34.
    Vertex4,
    /// Vertex 3 on carriages with x13 > 0, x23 < 0, x34 > 0:
    /// x12 -> x12 - 2 x13 x23, x14 -> x14 + 2 x13 x34.
    Vertex3,
};

/// Whether s satisfies the family's three sign constraints.
bool in_translation_carriage(const SignPattern& s, TranslationFamily family);

/// The expected square of the family's mutation map: identity plus the translation.
PolyMap translation_map(TranslationFamily family);

/// Checks mu_poly(k,s) composed with itself against translation_map(family).
/// DomainError when s is not a 4-vertex pattern in the family's carriage.
bool verify_double_mutation_translation(const SignPattern& s, TranslationFamily family = TranslationFamily::Vertex4);

/// A random inner quiver Q in carriage s with mutate(Q,k) inner and in
/// carriage t. DomainError when t is not a feasible target of (s,k).
Quiver sample_transition_point(const SignPattern& s, int k, const SignPattern& t, Rng& rng);

/// A random inner quiver in carriage s, entries of magnitude in [1/8, 8].
Quiver sample_inner_point(const SignPattern& s, Rng& rng);

}  // namespace quiverlab

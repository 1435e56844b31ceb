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

#include "quiverlab/piecewise_map.hpp"

#include <algorithm>

#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

void check_vertex(int k, int n) {
    if (k < 1 || k > n)
        throw DomainError("mutation vertex " + std::to_string(k) + " out of range 1.." + std::to_string(n));
}

// x_{i,j} as a polynomial, honouring skew-symmetry.
Poly entry_poly(int i, int j, int n) {
    const auto m = num_entries(n);
    if (i < j) return Poly::variable(m, position(i, j, n));
    return -Poly::variable(m, position(j, i, n));
}

}  // namespace

MutationMapKey MutationMapKey::of(const SignPattern& s, int k) {
    check_vertex(k, s.n());
    MutationMapKey key;
    key.k = k;
    for (int j = 1; j <= s.n(); ++j)
        if (j != k) key.adjacent_signs.push_back(static_cast<std::int8_t>(s.entry_sign(k, j)));
    return key;
}

int added_term_sign(const SignPattern& s, int k, int i, int j) {
    const int a = s.entry_sign(i, k);
    const int b = s.entry_sign(k, j);
    if (a > 0 && b > 0) return 1;
    if (a < 0 && b < 0) return -1;
    return 0;
}

PolyMap mu_poly(int k, const SignPattern& s) {
    const int n = s.n();
    check_vertex(k, n);
    const auto m = s.size();
    std::vector<Poly> comps;
    comps.reserve(m);
    for (std::size_t p = 0; p < m; ++p) {
        const auto [i, j] = entry_at(p, n);
        Poly x = Poly::variable(m, p);
        if (i == k || j == k) {
            comps.push_back(-x);
            continue;
        }
        const int added = added_term_sign(s, k, i, j);
        if (added != 0) {
            Poly product = entry_poly(i, k, n) * entry_poly(k, j, n);
            if (added > 0)
                x += product;
            else
                x -= product;
        }
        comps.push_back(std::move(x));
    }
    return PolyMap(std::move(comps));
}

std::vector<SignPattern> feasible_targets(const SignPattern& s, int k) {
    const int n = s.n();
    check_vertex(k, n);
    const auto m = s.size();
    SignPattern base = s;
    std::vector<std::size_t> free_positions;
    for (std::size_t p = 0; p < m; ++p) {
        const auto [i, j] = entry_at(p, n);
        if (i == k || j == k) {
            base = base.flipped(p);
            continue;
        }
        const int added = added_term_sign(s, k, i, j);
        if (added != 0 && added != s[p]) free_positions.push_back(p);
    }
    std::vector<SignPattern> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_positions.size()); ++mask) {
        SignPattern t = base;
        for (std::size_t f = 0; f < free_positions.size(); ++f)
            if ((mask >> f) & 1U) t = t.flipped(free_positions[f]);
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_involution_identity(const SignPattern& s, int k) {
    const PolyMap forward = mu_poly(k, s);
    const PolyMap identity = PolyMap::identity(s.size());
    for (const auto& t : feasible_targets(s, k))
        if (compose(mu_poly(k, t), forward) != identity) return false;
    return true;
}

bool in_translation_carriage(const SignPattern& s, TranslationFamily family) {
    if (s.n() != 4) return false;
    if (family == TranslationFamily::Vertex4)
        return s.entry_sign(1, 4) > 0 && s.entry_sign(2, 4) < 0 && s.entry_sign(3, 4) < 0;
    return s.entry_sign(1, 3) > 0 && s.entry_sign(2, 3) < 0 && s.entry_sign(3, 4) > 0;
}

PolyMap translation_map(TranslationFamily family) {
    constexpr int n = 4;
    const auto m = num_entries(n);
    auto x = [&](int i, int j) { return Poly::variable(m, position(i, j, n)); };
    std::vector<Poly> comps = PolyMap::identity(m).components();
    if (family == TranslationFamily::Vertex4) {
        comps[position(1, 2, n)] -= Rat(2) * (x(1, 4) * x(2, 4));
        comps[position(1, 3, n)] -= Rat(2) * (x(1, 4) * x(3, 4));
    } else {
        comps[position(1, 2, n)] -= Rat(2) * (x(1, 3) * x(2, 3));
        comps[position(1, 4, n)] += Rat(2) * (x(1, 3) * x(3, 4));
    }
    return PolyMap(std::move(comps));
}

bool verify_double_mutation_translation(const SignPattern& s, TranslationFamily family) {
    if (!in_translation_carriage(s, family))
        throw DomainError("wrong carriage for the double-mutation translation: " + s.to_string());
    const int k = family == TranslationFamily::Vertex4 ? 4 : 3;
    const PolyMap once = mu_poly(k, s);
    return compose(once, once) == translation_map(family);
}

Quiver sample_inner_point(const SignPattern& s, Rng& rng) {
    std::vector<Rat> upper;
    upper.reserve(s.size());
    for (std::size_t p = 0; p < s.size(); ++p) upper.push_back(s[p] * rng.magnitude());
    return Quiver(s.n(), std::move(upper));
}

Quiver sample_transition_point(const SignPattern& s, int k, const SignPattern& t, Rng& rng) {
    const auto targets = feasible_targets(s, k);
    if (std::find(targets.begin(), targets.end(), t) == targets.end())
        throw DomainError("carriage " + t.to_string() + " is not reachable from " + s.to_string() +
                          " by mutation at " + std::to_string(k));
    const int n = s.n();
    Quiver q(n);
    for (int j = 1; j <= n; ++j)
        if (j != k) q.set(k, j, s.entry_sign(k, j) * rng.magnitude());

    for (std::size_t p = 0; p < s.size(); ++p) {
        const auto [i, j] = entry_at(p, n);
        if (i == k || j == k) continue;
        const Rat a = q.entry(i, k);
        const Rat b = q.entry(k, j);
        const int added = added_term_sign(s, k, i, j);
        const Rat delta = abs(a * b);
        Rat magnitude;
        if (t[p] != s[p])
            magnitude = delta * rng.unit_fraction();  // stay below the shift so the sign turns
        else if (added != 0 && added != s[p])
            magnitude = delta + rng.magnitude();  // outrun the shift
        else
            magnitude = rng.magnitude();
        q.set(i, j, s[p] * magnitude);
    }

    const Quiver image = mutate(q, k);
    if (!q.is_inner() || !image.is_inner() || sign_pattern(q) != s || sign_pattern(image) != t)
        throw InternalConsistencyError("transition sampler produced a point outside the requested carriages");
    return q;
}

}  // namespace quiverlab

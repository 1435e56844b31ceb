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

#include "modular.hpp"

#include <utility>

#include "quiverlab/errors.hpp"

namespace quiverlab::detail {

namespace {

template <std::uint32_t P>
std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e) {
    std::uint64_t result = 1;
    base %= P;
    while (e) {
        if (e & 1U) result = result * base % P;
        base = base * base % P;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

template <std::uint32_t P>
std::uint32_t inverse_mod(std::uint32_t a) {
    return pow_mod<P>(a, P - 2);
}

// Row echelon form by rows below the pivot only, then back-substitution
// restricted to the free columns.
template <std::uint32_t P>
ModularNullspace nullspace_impl(std::vector<std::vector<std::uint32_t>> a, std::size_t num_cols) {
    const std::size_t num_rows = a.size();
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < num_cols && rank < num_rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < num_rows && a[pivot][col] == 0) ++pivot;
        if (pivot == num_rows) continue;
        std::swap(a[pivot], a[rank]);
        auto& prow = a[rank];
        const std::uint64_t inv = inverse_mod<P>(prow[col]);
        for (std::size_t j = col; j < num_cols; ++j) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % P);
        const std::uint32_t* src = prow.data();
        for (std::size_t r = rank + 1; r < num_rows; ++r) {
            std::uint32_t* dst = a[r].data();
            const std::uint64_t f = dst[col] == 0 ? 0 : P - dst[col];
            if (f == 0) continue;
            for (std::size_t j = col; j < num_cols; ++j)
                dst[j] = static_cast<std::uint32_t>((dst[j] + f * src[j]) % P);
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    ModularNullspace out;
    std::vector<bool> is_pivot(num_cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < num_cols; ++c)
        if (!is_pivot[c]) out.free_cols.push_back(c);

    for (auto f : out.free_cols) {
        std::vector<std::uint32_t> v(num_cols, 0);
        v[f] = 1;
        // Row i: x_{pivot_i} + sum_{j > pivot_i} a[i][j] x_j = 0.
        for (std::size_t i = rank; i-- > 0;) {
            const auto pc = pivot_cols[i];
            std::uint64_t acc = 0;
            for (std::size_t j = pc + 1; j < num_cols; ++j)
                if (v[j] != 0 && a[i][j] != 0) acc = (acc + static_cast<std::uint64_t>(a[i][j]) * v[j]) % P;
            v[pc] = static_cast<std::uint32_t>((P - acc) % P);
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

template <std::size_t... I>
ModularNullspace dispatch(std::vector<std::vector<std::uint32_t>> rows, std::size_t num_cols, std::size_t slot,
                          std::index_sequence<I...>) {
    ModularNullspace out;
    bool done = false;
    ((slot == I ? (out = nullspace_impl<kPrimes[I]>(std::move(rows), num_cols), done = true) : false), ...);
    if (!done) throw DomainError("no such prime slot");
    return out;
}

}  // namespace

std::optional<std::uint32_t> to_residue(const Rat& value, std::uint32_t p) {
    const Int pz(p);
    Int num = value.get_num() % pz;
    if (num < 0) num += pz;
    Int den = value.get_den() % pz;
    if (den == 0) return std::nullopt;
    Int inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    Int r = num * inv % pz;
    return static_cast<std::uint32_t>(r.get_ui());
}

ModularNullspace nullspace_mod(std::vector<std::vector<std::uint32_t>> rows, std::size_t num_cols,
                               std::size_t prime_slot) {
    return dispatch(std::move(rows), num_cols, prime_slot, std::make_index_sequence<kPrimes.size()>{});
}

std::optional<Rat> rational_reconstruct(const Int& a, const Int& m) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    Int t0 = 0, t1 = 1;
    Int q, tmp;
    while (r1 > bound) {
        q = r0 / r1;
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (abs(t1) > bound || t1 == 0) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rat out(r1, t1);
    out.canonicalize();
    return out;
}

}  // namespace quiverlab::detail

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

// Independent reference implementations used only by the tests. They work on
// dense full matrices and share no code paths with the library internals.

#include <cstdint>
#include <optional>
#include <vector>

#include "quiverlab/quiver.hpp"
#include "quiverlab/rational.hpp"

namespace oracle {

using quiverlab::Rat;
using Matrix = std::vector<std::vector<Rat>>;

inline Matrix full_matrix(const quiverlab::Quiver& q) {
    const int n = q.n();
    Matrix a(n, std::vector<Rat>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a[i - 1][j - 1] = q.entry(i, j);
    return a;
}

/// Laplace expansion along the first row.
inline Rat cofactor_determinant(const Matrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Rat total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        Matrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rat> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(a[r][cc]);
            minor.push_back(std::move(row));
        }
        const Rat term = a[0][c] * cofactor_determinant(minor);
        total += c % 2 == 0 ? term : Rat(-term);
    }
    return total;
}

/// Mutation applied to the full matrix, cell by cell.
inline Matrix mutate_full(const Matrix& b, int k) {
    const int n = static_cast<int>(b.size());
    const int kk = k - 1;
    Matrix out = b;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == kk || j == kk) {
                out[i][j] = -b[i][j];
            } else if (b[i][kk] > 0 && b[kk][j] > 0) {
                out[i][j] = b[i][j] + b[i][kk] * b[kk][j];
            } else if (b[i][kk] < 0 && b[kk][j] < 0) {
                out[i][j] = b[i][j] - b[i][kk] * b[kk][j];
            }
        }
    }
    return out;
}

/// Rank by plain Gaussian elimination over the rationals.
inline std::size_t dense_rank(Matrix a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const Rat f = a[r][c] / a[rank][c];
            for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

constexpr std::uint64_t kOraclePrime = 1000003;

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

/// Residue of a rational whose denominator is prime to p.
inline std::uint64_t residue(const Rat& x, std::uint64_t p = kOraclePrime) {
    quiverlab::Int num = x.get_num() % static_cast<unsigned long>(p);
    if (num < 0) num += static_cast<unsigned long>(p);
    const quiverlab::Int den = x.get_den() % static_cast<unsigned long>(p);
    return num.get_ui() * pow_mod(den.get_ui(), p - 2, p) % p;
}

/// Rank over Z/p; never exceeds the rank over the rationals.
inline std::size_t modular_rank(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p = kOraclePrime) {
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        const std::uint64_t inv = pow_mod(a[rank][c], p - 2, p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const std::uint64_t f = a[r][c] * inv % p;
            for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] = (a[r][cc] + (p - f) * a[rank][cc]) % p;
        }
        ++rank;
    }
    return rank;
}

inline Rat random_rat(quiverlab::Rng& rng) {
    const Rat m = rng.magnitude();
    return rng.coin() ? m : Rat(-m);
}

inline quiverlab::Quiver random_quiver(int n, quiverlab::Rng& rng) {
    std::vector<Rat> upper;
    for (std::size_t p = 0; p < quiverlab::num_entries(n); ++p) upper.push_back(random_rat(rng));
    return quiverlab::Quiver(n, std::move(upper));
}

inline quiverlab::Quiver random_in_carriage(const quiverlab::SignPattern& s, quiverlab::Rng& rng) {
    std::vector<Rat> upper;
    for (std::size_t p = 0; p < s.size(); ++p) upper.push_back(s[p] * rng.magnitude());
    return quiverlab::Quiver(s.n(), std::move(upper));
}

// Builds a point of carriage s whose image under mu_k lies in carriage t, by
// choosing each free entry's magnitude on the right side of its added term.
inline std::optional<quiverlab::Quiver> construct_witness(const quiverlab::SignPattern& s, int k,
                                                         const quiverlab::SignPattern& t, quiverlab::Rng& rng) {
    const int n = s.n();
    quiverlab::Quiver q = random_in_carriage(s, rng);
    for (std::size_t p = 0; p < s.size(); ++p) {
        const auto [i, j] = quiverlab::entry_at(p, n);
        if (i == k || j == k) continue;
        const Rat a = q.entry(i, k), b = q.entry(k, j);
        Rat added = 0;
        if (a > 0 && b > 0) added = a * b;
        if (a < 0 && b < 0) added = -a * b;
        if (added == 0 || sgn(added) == s[p]) continue;
        const Rat magnitude = abs(added);
        q.set(i, j, s[p] * (t[p] == s[p] ? Rat(2 * magnitude) : Rat(magnitude / 2)));
    }
    const auto image = quiverlab::mutate(q, k);
    if (!image.is_inner() || quiverlab::sign_pattern(image) != t) return std::nullopt;
    return q;
}

}  // namespace oracle

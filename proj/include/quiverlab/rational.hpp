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

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace quiverlab {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p" or "p/q". Throws FormatError on anything else or q == 0.
Rat parse_rat(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rat(const Rat& value);

inline int sign(const Rat& value) { return sgn(value); }

/// Deterministic source used by every randomized routine. Only raw 64-bit
/// draws are used so that results do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    bool coin() { return (next() >> 63) != 0; }

    /// p/q with q in [1,8] and p in [1,8q]; the magnitude lies in [1/8, 8].
    Rat magnitude() {
        const auto q = uniform_int(1, 8);
        const auto p = uniform_int(1, 8 * q);
        Rat r(static_cast<long>(p), static_cast<long>(q));
        r.canonicalize();
        return r;
    }

    /// Random rational in (0, 1) with denominator at most 16.
    Rat unit_fraction() {
        const auto q = uniform_int(2, 16);
        const auto p = uniform_int(1, q - 1);
        Rat r(static_cast<long>(p), static_cast<long>(q));
        r.canonicalize();
        return r;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace quiverlab

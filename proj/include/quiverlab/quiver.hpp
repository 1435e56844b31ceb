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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/layout.hpp"
#include "quiverlab/poly.hpp"
#include "quiverlab/rational.hpp"

namespace quiverlab {

/// A strict sign in every upper-triangle position; names one carriage (open
/// orthant of entry space). Stored as +1 / -1.
class SignPattern {
public:
    SignPattern() = default;
    SignPattern(int n, std::vector<std::int8_t> signs);

    /// Patterns are enumerated by index: bit (m-1-p) set means position p is
    /// negative, so index order equals lexicographic order of the text form
    /// with '+' before '-'.
    static SignPattern from_index(int n, std::uint64_t index);
    static SignPattern all_plus(int n);
    static SignPattern parse(std::string_view text);

    int n() const { return n_; }
    std::size_t size() const { return signs_.size(); }
    std::uint64_t index() const;

    int operator[](std::size_t pos) const { return signs_[pos]; }
    /// Sign of entry (i,j) of the full matrix, using skew-symmetry; 0 on the diagonal.
    int entry_sign(int i, int j) const;

    SignPattern flipped(std::size_t pos) const;
    SignPattern with(std::size_t pos, int sign) const;

    std::string to_string() const;

    friend bool operator==(const SignPattern&, const SignPattern&) = default;
    friend auto operator<=>(const SignPattern& a, const SignPattern& b) { return a.index() <=> b.index(); }

private:
    int n_ = 0;
    std::vector<std::int8_t> signs_;
};

/// Number of carriages, 2^(n(n-1)/2). Throws ResourceError when it would not fit.
std::uint64_t num_patterns(int n);

/// n x n skew-symmetric matrix with exact rational entries, stored as its
/// upper triangle. Zero entries are allowed.
class Quiver {
public:
    Quiver() = default;
    explicit Quiver(int n);
    Quiver(int n, std::vector<Rat> upper);

    int n() const { return n_; }
    std::span<const Rat> upper() const { return upper_; }

    /// x_{i,j}; x_{j,i} = -x_{i,j} and x_{i,i} = 0.
    Rat entry(int i, int j) const;
    void set(int i, int j, const Rat& value);

    bool is_inner() const;
    bool is_integral() const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    int n_ = 0;
    std::vector<Rat> upper_;
};

/// Cluster mutation at vertex k (1-based). Entries touching k change sign; any
/// other x_{i,j} gains x_{i,k} x_{k,j} when both factors are positive, loses it
/// when both are negative, and is left alone otherwise (a zero factor included).
Quiver mutate(const Quiver& q, int k);

/// Sign pattern of an inner quiver; DomainError on a zero entry.
SignPattern sign_pattern(const Quiver& q);

/// Every strict pattern that agrees with q on its nonzero entries, in index order.
std::vector<SignPattern> compatible_patterns(const Quiver& q);

/// Pfaffian by recursive expansion along the first row; DomainError for odd n.
/// Convention: Pf = x12 x34 - x13 x24 + x14 x23 for n = 4.
Rat pfaffian(const Quiver& q);

/// Exact determinant by Gaussian elimination over the rationals.
Rat determinant(const Quiver& q);

/// The Pfaffian as a polynomial in the entry variables (even n).
Poly pfaffian_poly(int n);

/// Canonical JSON: {"n": int, "upper": ["p/q", ...]} in compact form.
std::string quiver_to_json(const Quiver& q);
Quiver quiver_from_json(std::string_view text);

}  // namespace quiverlab

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
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "quiverlab/rational.hpp"

namespace quiverlab {

/// Exponent vector over the entry variables x12, x13, ..., one slot per position.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t num_vars, std::size_t var);

    std::size_t num_vars() const { return exps_.size(); }
    Exponent operator[](std::size_t var) const { return exps_[var]; }
    Exponent& operator[](std::size_t var) { return exps_[var]; }
    std::span<const Exponent> exponents() const { return exps_; }

    unsigned degree() const;
    bool is_one() const { return degree() == 0; }

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

/// Graded lexicographic order: total degree first, then the exponent of x12,
/// then x13, and so on. Ascending; the constant monomial is the least.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials in num_vars variables of total degree <= max_degree,
/// ascending in graded lexicographic order.
std::vector<Monomial> monomials_up_to(std::size_t num_vars, unsigned max_degree);

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Monomial, Rat, GrlexLess>;

    Poly() = default;
    explicit Poly(std::size_t num_vars) : num_vars_(num_vars) {}

    static Poly constant(std::size_t num_vars, const Rat& c);
    static Poly variable(std::size_t num_vars, std::size_t var);
    static Poly term(const Monomial& m, const Rat& c);

    std::size_t num_vars() const { return num_vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of m; zero when absent.
    Rat coefficient(const Monomial& m) const;
    unsigned total_degree() const;

    /// Adds c * m in place.
    void add_term(const Monomial& m, const Rat& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    /// Exact structural equality of the canonical term maps.
    friend bool operator==(const Poly& a, const Poly& b);

    Poly pow(unsigned e) const;

    /// Canonical text: terms in descending graded-lex order joined by " + " or
    /// " - ", coefficients as p or p/q, unit coefficients omitted, "0" for zero.
    std::string to_string() const;
    std::string to_string(std::span<const std::string> names) const;

private:
    std::size_t num_vars_ = 0;
    Terms terms_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
bool equal(const Poly& a, const Poly& b);

/// Exact evaluation; point must have num_vars entries.
Rat evaluate(const Poly& p, std::span<const Rat> point);

/// Parses the canonical text form. Whitespace is insignificant and terms may
/// appear in any order; variable names follow variable_name() for the
/// n implied by num_vars.
Poly parse_poly(std::string_view text, std::size_t num_vars);

/// Polynomial map: one Poly per entry position, all over the same variables.
class PolyMap {
public:
    PolyMap() = default;
    explicit PolyMap(std::vector<Poly> components);

    static PolyMap identity(std::size_t num_vars);

    std::size_t size() const { return components_.size(); }
    std::size_t num_vars() const { return components_.empty() ? 0 : components_.front().num_vars(); }
    const Poly& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<Poly>& components() const { return components_; }

    std::vector<Rat> evaluate(std::span<const Rat> point) const;

    friend bool operator==(const PolyMap&, const PolyMap&) = default;

private:
    std::vector<Poly> components_;
};

/// Memoized images of monomials under a fixed polynomial map:
/// image(x^a) = map_0^a0 * map_1^a1 * ... . Each image is derived from a
/// smaller one by a single multiplication.
class MonomialImages {
public:
    explicit MonomialImages(const PolyMap& map);

    const Poly& image(const Monomial& m);
    std::size_t num_vars() const { return map_->num_vars(); }

private:
    const PolyMap* map_;
    std::unordered_map<Monomial, Poly, MonomialHash> memo_;
};

/// p(map(x)): substitutes map component c for variable c.
Poly compose(const Poly& p, const PolyMap& map);
Poly compose(const Poly& p, MonomialImages& images);

/// outer(inner(x)), componentwise.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

}  // namespace quiverlab

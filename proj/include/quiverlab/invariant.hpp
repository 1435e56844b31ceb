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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/poly.hpp"
#include "quiverlab/quiver.hpp"

namespace quiverlab {

/// One polynomial per carriage: the function that equals pieces[s] on the
/// carriage with pattern index s.
class CarriageWisePolynomial {
public:
    CarriageWisePolynomial() = default;
    /// pieces must hold exactly 2^m polynomials in m = n(n-1)/2 variables.
    CarriageWisePolynomial(int n, std::vector<Poly> pieces);

    /// Every carriage gets the same polynomial.
    static CarriageWisePolynomial uniform(int n, const Poly& p);

    int n() const { return n_; }
    std::size_t num_vars() const { return num_entries(n_); }
    const std::vector<Poly>& pieces() const { return pieces_; }
    const Poly& piece(const SignPattern& s) const { return pieces_.at(s.index()); }
    const Poly& piece(std::uint64_t index) const { return pieces_.at(index); }

    /// Maximum total degree over the pieces.
    unsigned degree() const;

    friend bool operator==(const CarriageWisePolynomial&, const CarriageWisePolynomial&) = default;

private:
    int n_ = 0;
    std::vector<Poly> pieces_;
};

/// Value at q. On a carriage boundary every compatible piece must agree,
/// otherwise AmbiguousBoundaryError.
Rat evaluate(const CarriageWisePolynomial& f, const Quiver& q);

/// The determinant (x12 x34 - x13 x24 + x14 x23)^2 on every 4-vertex carriage.
CarriageWisePolynomial det_invariant(int n = 4);

/// The 3-vertex piecewise invariant x12^2 + x13^2 + x23^2 + e(s) x12 x13 x23
/// with e(s) = +1 when at least two of (s12, -s13, s23) are positive, else -1.
CarriageWisePolynomial markov_invariant(int n = 3);

/// A failed invariance identity: on carriage `source`, mutation at `vertex`
/// into carriage `target` changes the function by `difference`
/// (piece_source - piece_target o mu). `point` is a concrete rational quiver
/// in that transition region where the values differ.
struct Witness {
    SignPattern source;
    int vertex = 0;
    SignPattern target;
    Poly difference;
    std::optional<Quiver> point;
};

/// Checks piece_s == piece_t o mu_poly(k, s) symbolically for every carriage
/// s, vertex k and feasible target t. Returns nullopt when all hold.
std::optional<Witness> check_invariant_symbolic(const CarriageWisePolynomial& f, std::uint64_t seed = 1);

/// JSON {"n": int, "degree": int, "pieces": [{"pattern": "+-..", "poly": "..."}]},
/// pieces in pattern index order.
std::string invariant_to_json(const CarriageWisePolynomial& f);
CarriageWisePolynomial invariant_from_json(std::string_view text);

}  // namespace quiverlab

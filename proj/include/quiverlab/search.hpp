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
#include <utility>
#include <vector>

#include "quiverlab/invariant.hpp"
#include "quiverlab/nullspace.hpp"
#include "quiverlab/poly.hpp"
#include "quiverlab/quiver.hpp"

namespace quiverlab {

/// Full: one unknown polynomial per carriage. Collapsed: one unknown
/// polynomial per flip-graph component (a single one for n = 4).
enum class SearchMode { Full, Collapsed };

std::string to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view text);

/// Unknowns are the coefficients of every group's polynomial on every
/// monomial of degree <= degree. Column order: group, then graded lex.
struct ColumnLayout {
    int n = 0;
    unsigned degree = 0;
    SearchMode mode = SearchMode::Full;
    std::vector<Monomial> monomials;
    std::vector<std::size_t> group_of_pattern;
    std::size_t num_groups = 0;

    static ColumnLayout make(int n, unsigned degree, SearchMode mode);

    std::size_t num_columns() const { return num_groups * monomials.size(); }
    std::size_t column(std::size_t group, std::size_t monomial) const { return group * monomials.size() + monomial; }
};

/// Where a constraint row came from: the identity
/// piece_source - piece_target o mu_poly(vertex, source) == 0, coefficient of `monomial`.
struct RowProvenance {
    SignPattern source;
    int vertex = 0;
    SignPattern target;
    Monomial monomial;
};

struct ConstraintSystem {
    ColumnLayout layout;
    LinearSystem system;
    std::vector<RowProvenance> provenance;  // parallel to system.rows()
};

ConstraintSystem assemble_system(int n, unsigned degree, SearchMode mode);

/// The carriage-wise polynomial a coefficient vector describes.
CarriageWisePolynomial reconstitute(const ColumnLayout& layout, const std::vector<Rat>& coefficients);

/// Coefficient vector of f in the layout; nullopt when f does not fit (a
/// piece exceeds the degree, or pieces differ inside a collapsed group).
std::optional<std::vector<Rat>> coefficient_vector(const ColumnLayout& layout, const CarriageWisePolynomial& f);

struct InvariantBasis {
    int n = 0;
    unsigned degree = 0;
    SearchMode mode = SearchMode::Full;
    std::vector<std::vector<Rat>> coefficients;  // canonical reduced echelon form
    std::vector<CarriageWisePolynomial> elements;
    bool from_sampling = false;  // candidates came from the evaluation pre-pass

    std::size_t dimension() const { return elements.size(); }
};

struct SearchOptions {
    bool sample_prepass = false;
    bool unguarded = false;
    std::uint64_t seed = 1;
};

/// Throws ResourceError outside the default size envelope.
void check_search_guard(int n, unsigned degree, SearchMode mode);

/// Every carriage-wise polynomial invariant with pieces of degree <= degree.
/// Each returned element has passed check_invariant_symbolic; a failure there
/// raises InternalConsistencyError.
InvariantBasis search_invariants(int n, unsigned degree, SearchMode mode, const SearchOptions& options = {});

/// Whether f lies in the span of the basis.
bool in_span(const InvariantBasis& basis, const CarriageWisePolynomial& f);

/// Basis file: {"n", "degree", "dimension", "mode", "verified", "elements": [{"pieces": [...]}]}.
std::string basis_to_json(const InvariantBasis& basis);

/// Expression of each basis element as f(Det) for a univariate f.
struct DetDecomposition {
    bool spanned = false;
    /// f coefficients (constant term first), one vector per element.
    std::vector<std::vector<Rat>> f_coefficients;
    std::optional<std::size_t> failing_element;
    std::string reason;
    /// The f's span every polynomial of degree <= degree/4.
    bool spans_all_powers = false;
};

DetDecomposition verify_spanned_by_det(const std::vector<CarriageWisePolynomial>& elements, unsigned degree);
DetDecomposition verify_spanned_by_det(const InvariantBasis& basis);

/// "f(t) = 1 + 2*t^2" style text of one f.
std::string format_univariate(const std::vector<Rat>& coefficients, std::string_view var = "t");

struct DotProductReport {
    bool passed = true;
    std::size_t trials = 0;
    std::optional<std::pair<Quiver, Quiver>> counterexample;
};

/// Compares f on random pairs of inner 4-vertex quivers with equal
/// Y.V = x12 x34 - x13 x24 + x14 x23.
DotProductReport dot_product_dependence_check(const CarriageWisePolynomial& f, std::size_t trials,
                                              std::uint64_t seed);

/// Substitutes the letter dictionary x=x12, y=x13, z=x14, u=x23, v=-x24,
/// w=x34 and prints in those letters (n = 4).
std::string to_letters(const Poly& p);

}  // namespace quiverlab

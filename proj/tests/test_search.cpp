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

#include <doctest.h>

#include "oracles.hpp"
#include "quiverlab/errors.hpp"
#include "quiverlab/piecewise_map.hpp"
#include "quiverlab/search.hpp"

using namespace quiverlab;

namespace {

Poly P(const char* text, std::size_t vars = 6) { return parse_poly(text, vars); }

std::uint64_t monomial_residue(const Monomial& m, std::span<const Rat> point) {
    std::uint64_t v = 1;
    for (std::size_t var = 0; var < m.num_vars(); ++var)
        v = v * oracle::pow_mod(oracle::residue(point[var]), m[var], oracle::kOraclePrime) % oracle::kOraclePrime;
    return v;
}

// Dimension of the invariant space found by evaluation alone: each sampled
// pair (Q, mu_k Q) gives one row F(Q) - F(mu_k Q) = 0. Sampled rows are a
// subset of all constraints and rank mod p never exceeds the rational rank,
// so the result bounds the true dimension from above.
std::size_t sampled_dimension(int n, unsigned degree, bool per_carriage, int rows_per_transition, std::uint64_t seed) {
    const auto monomials = monomials_up_to(num_entries(n), degree);
    const std::size_t groups = per_carriage ? num_patterns(n) : 1;
    const std::size_t cols = groups * monomials.size();
    Rng rng(seed);
    constexpr std::uint64_t p = oracle::kOraclePrime;
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::uint64_t idx = 0; idx < num_patterns(n); ++idx) {
        const auto s = SignPattern::from_index(n, idx);
        for (int k = 1; k <= n; ++k)
            for (const auto& t : feasible_targets(s, k))
                for (int r = 0; r < rows_per_transition; ++r) {
                    const auto q = oracle::construct_witness(s, k, t, rng);
                    REQUIRE(q.has_value());
                    const auto image = mutate(*q, k);
                    std::vector<std::uint64_t> row(cols);
                    const std::size_t gs = per_carriage ? s.index() : 0, gt = per_carriage ? t.index() : 0;
                    for (std::size_t a = 0; a < monomials.size(); ++a) {
                        auto& src = row[gs * monomials.size() + a];
                        src = (src + monomial_residue(monomials[a], q->upper())) % p;
                        auto& dst = row[gt * monomials.size() + a];
                        dst = (dst + p - monomial_residue(monomials[a], image.upper())) % p;
                    }
                    rows.push_back(std::move(row));
                }
    }
    return cols - oracle::modular_rank(std::move(rows));
}

bool embeds(const InvariantBasis& small, const InvariantBasis& large) {
    const auto layout = ColumnLayout::make(large.n, large.degree, large.mode);
    for (const auto& f : small.elements) {
        if (!coefficient_vector(layout, f)) return false;
        if (!in_span(large, f)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("column layout") {
    const auto collapsed = ColumnLayout::make(4, 4, SearchMode::Collapsed);
    CHECK(collapsed.num_groups == 1);
    CHECK(collapsed.num_columns() == 210);
    const auto full3 = ColumnLayout::make(3, 3, SearchMode::Full);
    CHECK(full3.num_groups == 8);
    CHECK(full3.num_columns() == 160);
    const auto collapsed3 = ColumnLayout::make(3, 3, SearchMode::Collapsed);
    CHECK(collapsed3.num_groups == 2);
    CHECK(collapsed3.group_of_pattern[SignPattern::parse("+++").index()] ==
          collapsed3.group_of_pattern[SignPattern::parse("+-+").index()]);
    CHECK(collapsed3.group_of_pattern[SignPattern::parse("+++").index()] !=
          collapsed3.group_of_pattern[SignPattern::parse("---").index()]);
}

TEST_CASE("search mode names") {
    CHECK(parse_search_mode("full") == SearchMode::Full);
    CHECK(parse_search_mode("collapsed") == SearchMode::Collapsed);
    CHECK(to_string(SearchMode::Collapsed) == "collapsed");
    CHECK_THROWS_AS(parse_search_mode("dense"), FormatError);
}

TEST_CASE("constraint rows record their provenance") {
    const auto cs = assemble_system(3, 1, SearchMode::Full);
    CHECK(cs.provenance.size() == cs.system.num_rows());
    for (const auto& prov : cs.provenance) {
        const auto targets = feasible_targets(prov.source, prov.vertex);
        CHECK(std::find(targets.begin(), targets.end(), prov.target) != targets.end());
        CHECK(prov.monomial.degree() <= 2);
    }
}

TEST_CASE("n = 2: even functions of x12 and its absolute value") {
    const auto basis = search_invariants(2, 2, SearchMode::Full);
    REQUIRE(basis.dimension() == 3);
    CHECK(basis.elements[0] == CarriageWisePolynomial::uniform(2, Poly::constant(1, 1)));
    CHECK(in_span(basis, CarriageWisePolynomial::uniform(2, P("x12^2", 1))));
    CHECK(in_span(basis, CarriageWisePolynomial(2, {P("x12", 1), P("-x12", 1)})));
    CHECK_FALSE(in_span(basis, CarriageWisePolynomial::uniform(2, P("x12", 1))));
}

TEST_CASE("n = 3 dimensions") {
    CHECK(search_invariants(3, 0, SearchMode::Full).dimension() == 1);
    CHECK(search_invariants(3, 2, SearchMode::Full).dimension() == 1);
    const auto d3 = search_invariants(3, 3, SearchMode::Full);
    CHECK(d3.dimension() == 2);
    CHECK(in_span(d3, markov_invariant(3)));
    CHECK(in_span(d3, CarriageWisePolynomial::uniform(3, Poly::constant(3, 1))));
}

TEST_CASE("n = 3 dimensions agree with the sampling oracle") {
    CHECK(sampled_dimension(3, 2, true, 8, 61) == search_invariants(3, 2, SearchMode::Full).dimension());
    CHECK(sampled_dimension(3, 3, true, 8, 67) == search_invariants(3, 3, SearchMode::Full).dimension());
}

TEST_CASE("n = 4 collapsed dimensions") {
    CHECK(search_invariants(4, 3, SearchMode::Collapsed).dimension() == 1);
    const auto d4 = search_invariants(4, 4, SearchMode::Collapsed);
    CHECK(d4.dimension() == 2);
    CHECK(in_span(d4, det_invariant(4)));
}

TEST_CASE("n = 4 dimension agrees with the sampling oracle at degree 4") {
    CHECK(sampled_dimension(4, 4, false, 2, 71) == 2);
}

TEST_CASE("full and collapsed modes agree") {
    for (unsigned d = 0; d <= 3; ++d)
        CHECK(search_invariants(3, d, SearchMode::Full).dimension() ==
              search_invariants(3, d, SearchMode::Collapsed).dimension());
    for (unsigned d = 0; d <= 2; ++d)
        CHECK(search_invariants(4, d, SearchMode::Full).dimension() ==
              search_invariants(4, d, SearchMode::Collapsed).dimension());
}

TEST_CASE("lower-degree bases embed into higher-degree bases") {
    CHECK(embeds(search_invariants(3, 2, SearchMode::Full), search_invariants(3, 3, SearchMode::Full)));
    CHECK(embeds(search_invariants(3, 3, SearchMode::Full), search_invariants(3, 4, SearchMode::Full)));
    CHECK(embeds(search_invariants(4, 3, SearchMode::Collapsed), search_invariants(4, 4, SearchMode::Collapsed)));
}

TEST_CASE("coefficient vectors reject functions outside the layout") {
    const auto layout = ColumnLayout::make(4, 3, SearchMode::Collapsed);
    CHECK_FALSE(coefficient_vector(layout, det_invariant(4)).has_value());
    const auto layout3 = ColumnLayout::make(3, 3, SearchMode::Collapsed);
    CHECK(coefficient_vector(layout3, markov_invariant(3)).has_value());
    std::vector<Poly> pieces(8, Poly::constant(3, 1));
    pieces[SignPattern::parse("---").index()] = Poly::constant(3, 2);
    CHECK_FALSE(coefficient_vector(layout3, CarriageWisePolynomial(3, pieces)).has_value());
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(search_invariants(4, 4, SearchMode::Full), ResourceError);
    CHECK_THROWS_AS(search_invariants(4, 10, SearchMode::Collapsed), ResourceError);
    CHECK_THROWS_AS(search_invariants(3, 5, SearchMode::Full), ResourceError);
    CHECK_NOTHROW(check_search_guard(4, 8, SearchMode::Collapsed));
}

TEST_CASE("basis elements pass the symbolic checker") {
    for (const auto& f : search_invariants(4, 4, SearchMode::Collapsed).elements)
        CHECK_FALSE(check_invariant_symbolic(f).has_value());
    for (const auto& f : search_invariants(3, 3, SearchMode::Full).elements)
        CHECK_FALSE(check_invariant_symbolic(f).has_value());
}

TEST_CASE("sampling pre-pass gives the same canonical basis") {
    SearchOptions options;
    options.sample_prepass = true;
    const auto a = search_invariants(3, 3, SearchMode::Full);
    const auto b = search_invariants(3, 3, SearchMode::Full, options);
    CHECK(a.coefficients == b.coefficients);
    const auto c = search_invariants(4, 4, SearchMode::Collapsed);
    const auto d = search_invariants(4, 4, SearchMode::Collapsed, options);
    CHECK(c.coefficients == d.coefficients);
    CHECK(basis_to_json(c) == basis_to_json(d));
}

TEST_CASE("basis file") {
    const auto text = basis_to_json(search_invariants(3, 3, SearchMode::Full));
    CHECK(text.rfind(R"({"n":3,"degree":3,"dimension":2,"mode":"full","verified":true,"elements":[)", 0) == 0);
}

TEST_CASE("decomposition into powers of Det") {
    const auto d4 = verify_spanned_by_det(search_invariants(4, 4, SearchMode::Collapsed));
    REQUIRE(d4.spanned);
    CHECK(d4.spans_all_powers);
    REQUIRE(d4.f_coefficients.size() == 2);
    CHECK(canonical_basis(d4.f_coefficients) == std::vector<std::vector<Rat>>{{1, 0}, {0, 1}});

    const auto pf = pfaffian_poly(4);
    const auto det = pf * pf;
    Poly mixed = det.pow(2);
    mixed *= Rat(3, 2);
    mixed += Poly::constant(6, -7);
    const auto ok = verify_spanned_by_det({CarriageWisePolynomial::uniform(4, mixed)}, 8);
    REQUIRE(ok.spanned);
    CHECK(ok.f_coefficients[0] == std::vector<Rat>{-7, 0, Rat(3, 2)});
    CHECK(format_univariate(ok.f_coefficients[0]) == "-7 + 3/2*t^2");

    const auto bad = verify_spanned_by_det(
        {CarriageWisePolynomial::uniform(4, Poly::constant(6, 1)), CarriageWisePolynomial::uniform(4, P("x12^2"))}, 4);
    CHECK_FALSE(bad.spanned);
    REQUIRE(bad.failing_element.has_value());
    CHECK(*bad.failing_element == 1);

    const auto odd = verify_spanned_by_det({CarriageWisePolynomial::uniform(4, pf)}, 4);
    CHECK_FALSE(odd.spanned);
}

TEST_CASE("dependence on the dot product alone") {
    CHECK(dot_product_dependence_check(det_invariant(4), 1000, 1).passed);
    CHECK(dot_product_dependence_check(CarriageWisePolynomial::uniform(4, Poly::constant(6, 5)), 200, 2).passed);
    const auto report = dot_product_dependence_check(CarriageWisePolynomial::uniform(4, P("x12")), 200, 3);
    CHECK_FALSE(report.passed);
    REQUIRE(report.counterexample.has_value());
    const auto& [q1, q2] = *report.counterexample;
    CHECK(q1.is_inner());
    CHECK(q2.is_inner());
    CHECK(pfaffian(q1) == pfaffian(q2));
    CHECK(q1.entry(1, 2) != q2.entry(1, 2));
}

TEST_CASE("letter dictionary") {
    CHECK(to_letters(pfaffian_poly(4)) == "x*w + y*v + z*u");
    CHECK(to_letters(P("x24")) == "-v");
}

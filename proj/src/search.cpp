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

#include "quiverlab/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "json_io.hpp"
#include "modular.hpp"
#include "quiverlab/carriage_graph.hpp"
#include "quiverlab/errors.hpp"
#include "quiverlab/piecewise_map.hpp"

namespace quiverlab {

std::string to_string(SearchMode mode) { return mode == SearchMode::Full ? "full" : "collapsed"; }

SearchMode parse_search_mode(std::string_view text) {
    if (text == "full") return SearchMode::Full;
    if (text == "collapsed") return SearchMode::Collapsed;
    throw FormatError("unknown search mode '" + std::string(text) + "' (expected full or collapsed)");
}

ColumnLayout ColumnLayout::make(int n, unsigned degree, SearchMode mode) {
    ColumnLayout layout;
    layout.n = n;
    layout.degree = degree;
    layout.mode = mode;
    layout.monomials = monomials_up_to(num_entries(n), degree);
    const auto count = num_patterns(n);
    if (mode == SearchMode::Full) {
        layout.group_of_pattern.resize(count);
        for (std::uint64_t s = 0; s < count; ++s) layout.group_of_pattern[s] = s;
        layout.num_groups = count;
    } else {
        const auto partition = components(n);
        layout.group_of_pattern = partition.component_of;
        layout.num_groups = partition.size();
    }
    return layout;
}

namespace {

// One representative (s, k, t) per distinct identity. In collapsed mode
// identities coincide when the groups and the mutation map coincide.
struct Transition {
    SignPattern source;
    int vertex;
    SignPattern target;
};

std::vector<Transition> distinct_transitions(const ColumnLayout& layout) {
    std::vector<Transition> out;
    std::set<std::tuple<std::size_t, std::size_t, MutationMapKey>> seen;
    const auto count = num_patterns(layout.n);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const auto s = SignPattern::from_index(layout.n, idx);
        for (int k = 1; k <= layout.n; ++k) {
            const auto key = MutationMapKey::of(s, k);
            for (const auto& t : feasible_targets(s, k)) {
                if (layout.mode == SearchMode::Collapsed &&
                    !seen.emplace(layout.group_of_pattern[idx], layout.group_of_pattern[t.index()], key).second)
                    continue;
                out.push_back({s, k, t});
            }
        }
    }
    return out;
}

std::vector<std::uint32_t> monomial_residues(const std::vector<Monomial>& monomials,
                                             const std::vector<std::uint32_t>& point, std::uint32_t p) {
    const unsigned max_degree = monomials.empty() ? 0 : monomials.back().degree();
    std::vector<std::vector<std::uint64_t>> powers(point.size(), std::vector<std::uint64_t>(max_degree + 1, 1));
    for (std::size_t v = 0; v < point.size(); ++v)
        for (unsigned e = 1; e <= max_degree; ++e) powers[v][e] = powers[v][e - 1] * point[v] % p;
    std::vector<std::uint32_t> out;
    out.reserve(monomials.size());
    for (const auto& m : monomials) {
        std::uint64_t value = 1;
        for (std::size_t v = 0; v < point.size(); ++v)
            if (m[v]) value = value * powers[v][m[v]] % p;
        out.push_back(static_cast<std::uint32_t>(value));
    }
    return out;
}

void require_verified(const std::vector<CarriageWisePolynomial>& elements) {
    for (std::size_t e = 0; e < elements.size(); ++e) {
        if (auto witness = check_invariant_symbolic(elements[e]))
            throw InternalConsistencyError("basis element " + std::to_string(e + 1) +
                                           " fails symbolic verification at carriage " + witness->source.to_string() +
                                           ", vertex " + std::to_string(witness->vertex));
    }
}

// Evaluation constraints at sampled points, solved modulo word-sized primes and
// lifted to rationals. Returns nullopt when the lifted candidates cannot be
// verified; the caller then falls back to coefficient matching.
std::optional<InvariantBasis> sampling_prepass(const ColumnLayout& layout, std::uint64_t seed) {
    const auto transitions = distinct_transitions(layout);
    const auto monomials = layout.monomials.size();
    const auto num_cols = layout.num_columns();
    Rng rng(seed);

    std::vector<std::pair<Quiver, const Transition*>> points;
    std::size_t target_rows = num_cols + 16;
    for (int round = 0; round < 4; ++round, target_rows *= 2) {
        while (points.size() < target_rows) {
            for (const auto& tr : transitions) {
                points.emplace_back(sample_transition_point(tr.source, tr.vertex, tr.target, rng), &tr);
                if (points.size() >= target_rows) break;
            }
        }

        // Residues per prime; lift through CRT until the reconstruction is stable.
        std::optional<std::vector<std::size_t>> free_cols;
        std::vector<std::vector<Int>> lifted;
        Int modulus = 1;
        std::vector<std::vector<Rat>> previous;
        for (std::size_t slot = 0; slot < detail::kPrimes.size(); ++slot) {
            const auto p = detail::kPrimes[slot];
            std::vector<std::vector<std::uint32_t>> rows;
            rows.reserve(points.size());
            bool bad_prime = false;
            for (const auto& [q, tr] : points) {
                const Quiver image = mutate(q, tr->vertex);
                std::vector<std::uint32_t> before, after;
                for (const auto& x : q.upper()) {
                    auto r = detail::to_residue(x, p);
                    if (!r) bad_prime = true;
                    before.push_back(r.value_or(0));
                }
                for (const auto& x : image.upper()) {
                    auto r = detail::to_residue(x, p);
                    if (!r) bad_prime = true;
                    after.push_back(r.value_or(0));
                }
                const auto vb = monomial_residues(layout.monomials, before, p);
                const auto va = monomial_residues(layout.monomials, after, p);
                const auto gs = layout.group_of_pattern[tr->source.index()];
                const auto gt = layout.group_of_pattern[tr->target.index()];
                std::vector<std::uint32_t> row(num_cols, 0);
                for (std::size_t a = 0; a < monomials; ++a) {
                    auto& cs = row[layout.column(gs, a)];
                    cs = static_cast<std::uint32_t>((static_cast<std::uint64_t>(cs) + vb[a]) % p);
                    auto& ct = row[layout.column(gt, a)];
                    ct = static_cast<std::uint32_t>((static_cast<std::uint64_t>(ct) + p - va[a]) % p);
                }
                rows.push_back(std::move(row));
            }
            if (bad_prime) continue;

            auto ns = detail::nullspace_mod(std::move(rows), num_cols, slot);
            if (!free_cols) {
                free_cols = ns.free_cols;
                lifted.assign(ns.basis.size(), std::vector<Int>(num_cols, 0));
            } else if (*free_cols != ns.free_cols) {
                break;  // unlucky prime or too few rows
            }
            // CRT: x = x_old + modulus * ((r - x_old) * modulus^{-1} mod p)
            const Int pz(p);
            Int inv;
            Int mod_p = modulus % pz;
            mpz_invert(inv.get_mpz_t(), mod_p.get_mpz_t(), pz.get_mpz_t());
            for (std::size_t b = 0; b < ns.basis.size(); ++b) {
                for (std::size_t c = 0; c < num_cols; ++c) {
                    Int diff = (Int(ns.basis[b][c]) - lifted[b][c]) % pz;
                    if (diff < 0) diff += pz;
                    lifted[b][c] += modulus * (diff * inv % pz);
                }
            }
            modulus *= pz;

            std::vector<std::vector<Rat>> candidate;
            bool reconstructed = true;
            for (const auto& v : lifted) {
                std::vector<Rat> r(num_cols);
                for (std::size_t c = 0; c < num_cols && reconstructed; ++c) {
                    auto x = detail::rational_reconstruct(v[c], modulus);
                    if (!x) reconstructed = false;
                    else r[c] = *x;
                }
                candidate.push_back(std::move(r));
            }
            if (!reconstructed) continue;
            if (candidate != previous) {
                previous = std::move(candidate);
                continue;
            }

            // Stable across two moduli: verify symbolically.
            std::vector<CarriageWisePolynomial> elements;
            for (const auto& v : previous) elements.push_back(reconstitute(layout, v));
            bool all_verified = true;
            for (const auto& e : elements)
                if (check_invariant_symbolic(e)) all_verified = false;
            if (!all_verified) break;
            InvariantBasis basis;
            basis.n = layout.n;
            basis.degree = layout.degree;
            basis.mode = layout.mode;
            basis.coefficients = canonical_basis(previous);
            for (const auto& v : basis.coefficients) basis.elements.push_back(reconstitute(layout, v));
            basis.from_sampling = true;
            return basis;
        }
    }
    return std::nullopt;
}

}  // namespace

ConstraintSystem assemble_system(int n, unsigned degree, SearchMode mode) {
    ConstraintSystem out{ColumnLayout::make(n, degree, mode), LinearSystem(0), {}};
    const auto& layout = out.layout;
    out.system = LinearSystem(layout.num_columns());
    const auto monomial_count = layout.monomials.size();

    std::map<MutationMapKey, PolyMap> maps;
    std::map<MutationMapKey, MonomialImages> images;

    for (const auto& tr : distinct_transitions(layout)) {
        const auto key = MutationMapKey::of(tr.source, tr.vertex);
        auto map_it = maps.find(key);
        if (map_it == maps.end()) {
            map_it = maps.emplace(key, mu_poly(tr.vertex, tr.source)).first;
            images.emplace(key, MonomialImages(map_it->second));
        }
        auto& img = images.at(key);
        const auto gs = layout.group_of_pattern[tr.source.index()];
        const auto gt = layout.group_of_pattern[tr.target.index()];

        // Coefficient of each monomial b in P_gs - P_gt o mu.
        std::map<Monomial, std::vector<std::pair<std::size_t, Rat>>, GrlexLess> rows;
        for (std::size_t a = 0; a < monomial_count; ++a) {
            const auto& alpha = layout.monomials[a];
            rows[alpha].emplace_back(layout.column(gs, a), Rat(1));
            for (const auto& [beta, c] : img.image(alpha).terms())
                rows[beta].emplace_back(layout.column(gt, a), -c);
        }
        for (auto& [beta, coefficients] : rows)
            if (out.system.add_row(std::move(coefficients)))
                out.provenance.push_back({tr.source, tr.vertex, tr.target, beta});
    }
    return out;
}

CarriageWisePolynomial reconstitute(const ColumnLayout& layout, const std::vector<Rat>& coefficients) {
    if (coefficients.size() != layout.num_columns()) throw DimensionError("coefficient vector does not match layout");
    const auto m = num_entries(layout.n);
    std::vector<Poly> group_polys(layout.num_groups, Poly(m));
    for (std::size_t g = 0; g < layout.num_groups; ++g)
        for (std::size_t a = 0; a < layout.monomials.size(); ++a)
            group_polys[g].add_term(layout.monomials[a], coefficients[layout.column(g, a)]);
    std::vector<Poly> pieces;
    pieces.reserve(layout.group_of_pattern.size());
    for (auto g : layout.group_of_pattern) pieces.push_back(group_polys[g]);
    return CarriageWisePolynomial(layout.n, std::move(pieces));
}

std::optional<std::vector<Rat>> coefficient_vector(const ColumnLayout& layout, const CarriageWisePolynomial& f) {
    if (f.n() != layout.n || f.degree() > layout.degree) return std::nullopt;
    std::vector<Rat> out(layout.num_columns());
    std::vector<const Poly*> group_poly(layout.num_groups, nullptr);
    for (std::uint64_t s = 0; s < layout.group_of_pattern.size(); ++s) {
        const auto g = layout.group_of_pattern[s];
        if (group_poly[g] && *group_poly[g] != f.piece(s)) return std::nullopt;
        group_poly[g] = &f.piece(s);
    }
    std::map<Monomial, std::size_t, GrlexLess> index;
    for (std::size_t a = 0; a < layout.monomials.size(); ++a) index.emplace(layout.monomials[a], a);
    for (std::size_t g = 0; g < layout.num_groups; ++g)
        for (const auto& [m, c] : group_poly[g]->terms()) out[layout.column(g, index.at(m))] = c;
    return out;
}

bool in_span(const InvariantBasis& basis, const CarriageWisePolynomial& f) {
    const auto layout = ColumnLayout::make(basis.n, basis.degree, basis.mode);
    const auto v = coefficient_vector(layout, f);
    if (!v) return false;
    auto vectors = basis.coefficients;
    vectors.push_back(*v);
    return canonical_basis(std::move(vectors)).size() == basis.coefficients.size();
}

void check_search_guard(int n, unsigned degree, SearchMode mode) {
    bool ok = false;
    if (n == 2) ok = degree <= 8;
    if (mode == SearchMode::Full) {
        if (n == 3) ok = degree <= 4;
        if (n == 4) ok = degree <= 2;
    } else {
        if (n == 3) ok = degree <= 6;
        if (n == 4) ok = degree <= 8;
        if (n == 5) ok = degree <= 2;
    }
    if (!ok)
        throw ResourceError("search for n=" + std::to_string(n) + ", degree " + std::to_string(degree) + " in " +
                            to_string(mode) + " mode is outside the size guard");
}

InvariantBasis search_invariants(int n, unsigned degree, SearchMode mode, const SearchOptions& options) {
    if (n < 2) throw DomainError("search needs n >= 2");
    if (!options.unguarded) check_search_guard(n, degree, mode);

    if (options.sample_prepass) {
        const auto layout = ColumnLayout::make(n, degree, mode);
        if (auto basis = sampling_prepass(layout, options.seed)) {
            require_verified(basis->elements);
            return *basis;
        }
    }

    const auto cs = assemble_system(n, degree, mode);
    const auto ns = nullspace(cs.system);
    InvariantBasis basis;
    basis.n = n;
    basis.degree = degree;
    basis.mode = mode;
    basis.coefficients = ns.basis;
    for (const auto& v : basis.coefficients) basis.elements.push_back(reconstitute(cs.layout, v));
    require_verified(basis.elements);
    return basis;
}

std::string basis_to_json(const InvariantBasis& basis) {
    detail::Json j;
    j["n"] = basis.n;
    j["degree"] = basis.degree;
    j["dimension"] = basis.dimension();
    j["mode"] = to_string(basis.mode);
    j["verified"] = true;
    auto& elements = j["elements"] = detail::Json::array();
    for (const auto& e : basis.elements) {
        detail::Json item;
        item["pieces"] = detail::pieces_to_json(e);
        elements.push_back(std::move(item));
    }
    return j.dump();
}

// ---------------------------------------------------------------- f(Det)

DetDecomposition verify_spanned_by_det(const std::vector<CarriageWisePolynomial>& elements, unsigned degree) {
    DetDecomposition out;
    const unsigned top = degree / 4;
    std::vector<Poly> det_powers;
    const Poly det = pfaffian_poly(4).pow(2);
    for (unsigned j = 0; j <= top; ++j) det_powers.push_back(det.pow(j));

    for (std::size_t e = 0; e < elements.size(); ++e) {
        const auto& f = elements[e];
        if (f.n() != 4) throw DomainError("f(Det) decomposition needs n=4");
        const Poly& p = f.piece(0);
        const auto differing =
            std::find_if(f.pieces().begin(), f.pieces().end(), [&](const Poly& q) { return q != p; });
        if (differing != f.pieces().end()) {
            out.failing_element = e;
            out.reason = "pieces differ between carriages";
            return out;
        }
        // Det^j is homogeneous of degree 4j, so each coefficient is read off
        // one monomial; the residual check makes the solve exact.
        std::vector<Rat> coeffs(top + 1);
        Poly residual = p;
        for (unsigned j = 0; j <= top; ++j) {
            const auto& [lead, lead_coef] = *det_powers[j].terms().rbegin();
            coeffs[j] = p.coefficient(lead) / lead_coef;
            residual -= det_powers[j] * coeffs[j];
        }
        if (!residual.is_zero()) {
            out.failing_element = e;
            out.reason = "not a polynomial in Det: residual " + residual.to_string();
            return out;
        }
        out.f_coefficients.push_back(std::move(coeffs));
    }
    out.spanned = true;
    const auto span = canonical_basis(out.f_coefficients);
    out.spans_all_powers = span.size() == top + 1;
    return out;
}

DetDecomposition verify_spanned_by_det(const InvariantBasis& basis) {
    return verify_spanned_by_det(basis.elements, basis.degree);
}

std::string format_univariate(const std::vector<Rat>& coefficients, std::string_view var) {
    std::string out;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        const Rat& c = coefficients[j];
        if (c == 0) continue;
        std::string mono = j == 0 ? "" : (j == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(j));
        const Rat mag = abs(c);
        std::string term = mono.empty() ? format_rat(mag) : (mag == 1 ? mono : format_rat(mag) + "*" + mono);
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- Y.V

DotProductReport dot_product_dependence_check(const CarriageWisePolynomial& f, std::size_t trials,
                                              std::uint64_t seed) {
    if (f.n() != 4) throw DomainError("dot-product dependence is defined for n=4");
    DotProductReport report;
    Rng rng(seed);
    auto random_inner = [&] {
        std::vector<Rat> upper;
        for (int p = 0; p < 6; ++p) upper.push_back((rng.coin() ? 1 : -1) * rng.magnitude());
        return Quiver(4, std::move(upper));
    };
    while (report.trials < trials) {
        const Quiver first = random_inner();
        Quiver second = random_inner();
        // Solve x12 x34 - x13 x24 + x14 x23 = target for x12.
        const Rat target = pfaffian(first);
        const Rat x12 = (target + second.entry(1, 3) * second.entry(2, 4) - second.entry(1, 4) * second.entry(2, 3)) /
                        second.entry(3, 4);
        if (x12 == 0) continue;
        second.set(1, 2, x12);
        ++report.trials;
        if (evaluate(f, first) != evaluate(f, second)) {
            report.passed = false;
            report.counterexample = std::make_pair(first, second);
            return report;
        }
    }
    return report;
}

std::string to_letters(const Poly& p) {
    if (p.num_vars() != num_entries(4)) throw DimensionError("letter form is defined for n=4");
    std::vector<Poly> comps = PolyMap::identity(6).components();
    comps[position(2, 4, 4)] = -comps[position(2, 4, 4)];  // x24 = -v
    const std::vector<std::string> names = {"x", "y", "z", "u", "v", "w"};
    return compose(p, PolyMap(std::move(comps))).to_string(names);
}

}  // namespace quiverlab

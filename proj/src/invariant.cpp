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

#include "quiverlab/invariant.hpp"

#include <map>

#include "json_io.hpp"
#include "quiverlab/errors.hpp"
#include "quiverlab/piecewise_map.hpp"

namespace quiverlab {

CarriageWisePolynomial::CarriageWisePolynomial(int n, std::vector<Poly> pieces) : n_(n), pieces_(std::move(pieces)) {
    if (pieces_.size() != num_patterns(n))
        throw DimensionError("expected " + std::to_string(num_patterns(n)) + " pieces for n=" + std::to_string(n) +
                             ", got " + std::to_string(pieces_.size()));
    for (const auto& p : pieces_)
        if (p.num_vars() != num_entries(n)) throw DimensionError("piece has the wrong number of variables");
}

CarriageWisePolynomial CarriageWisePolynomial::uniform(int n, const Poly& p) {
    return CarriageWisePolynomial(n, std::vector<Poly>(num_patterns(n), p));
}

unsigned CarriageWisePolynomial::degree() const {
    unsigned d = 0;
    for (const auto& p : pieces_) d = std::max(d, p.total_degree());
    return d;
}

Rat evaluate(const CarriageWisePolynomial& f, const Quiver& q) {
    if (q.n() != f.n()) throw DimensionError("quiver size does not match the function");
    if (q.is_inner()) return evaluate(f.piece(sign_pattern(q)), q.upper());
    std::optional<Rat> value;
    for (const auto& s : compatible_patterns(q)) {
        Rat v = evaluate(f.piece(s), q.upper());
        if (value && *value != v)
            throw AmbiguousBoundaryError("pieces disagree on the carriage boundary at " + quiver_to_json(q));
        value = std::move(v);
    }
    return *value;
}

CarriageWisePolynomial det_invariant(int n) {
    if (n != 4) throw DomainError("det_invariant is provided for n=4 only");
    return CarriageWisePolynomial::uniform(4, pfaffian_poly(4).pow(2));
}

CarriageWisePolynomial markov_invariant(int n) {
    if (n != 3) throw DomainError("markov_invariant is provided for n=3 only");
    const auto m = num_entries(3);
    const Poly x12 = Poly::variable(m, 0);
    const Poly x13 = Poly::variable(m, 1);
    const Poly x23 = Poly::variable(m, 2);
    const Poly squares = x12 * x12 + x13 * x13 + x23 * x23;
    const Poly cubic = x12 * x13 * x23;
    std::vector<Poly> pieces;
    for (std::uint64_t idx = 0; idx < num_patterns(3); ++idx) {
        const auto s = SignPattern::from_index(3, idx);
        // Letters x = x12, y = -x13, z = x23.
        const int positive = (s[0] > 0) + (s[1] < 0) + (s[2] > 0);
        pieces.push_back(positive >= 2 ? squares + cubic : squares - cubic);
    }
    return CarriageWisePolynomial(3, std::move(pieces));
}

std::optional<Witness> check_invariant_symbolic(const CarriageWisePolynomial& f, std::uint64_t seed) {
    const int n = f.n();
    const auto count = num_patterns(n);

    // Distinct pieces, so identical pieces share their compositions.
    std::vector<const Poly*> distinct;
    std::vector<std::size_t> piece_id(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Poly& p = f.piece(idx);
        std::size_t id = 0;
        while (id < distinct.size() && *distinct[id] != p) ++id;
        if (id == distinct.size()) distinct.push_back(&p);
        piece_id[idx] = id;
    }

    std::map<MutationMapKey, PolyMap> maps;
    std::map<MutationMapKey, MonomialImages> images;
    std::map<std::pair<std::size_t, MutationMapKey>, Poly> composed;

    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const auto s = SignPattern::from_index(n, idx);
        for (int k = 1; k <= n; ++k) {
            const auto key = MutationMapKey::of(s, k);
            auto map_it = maps.find(key);
            if (map_it == maps.end()) {
                map_it = maps.emplace(key, mu_poly(k, s)).first;
                images.emplace(key, MonomialImages(map_it->second));
            }
            for (const auto& t : feasible_targets(s, k)) {
                const auto cache_key = std::make_pair(piece_id[t.index()], key);
                auto it = composed.find(cache_key);
                if (it == composed.end())
                    it = composed.emplace(cache_key, compose(f.piece(t), images.at(key))).first;
                Poly difference = f.piece(s) - it->second;
                if (difference.is_zero()) continue;

                Witness w{s, k, t, std::move(difference), std::nullopt};
                Rng rng(seed);
                for (int attempt = 0; attempt < 256 && !w.point; ++attempt) {
                    Quiver q = sample_transition_point(s, k, t, rng);
                    if (evaluate(w.difference, q.upper()) != 0) w.point = std::move(q);
                }
                return w;
            }
        }
    }
    return std::nullopt;
}

std::string invariant_to_json(const CarriageWisePolynomial& f) {
    detail::Json j;
    j["n"] = f.n();
    j["degree"] = f.degree();
    j["pieces"] = detail::pieces_to_json(f);
    return j.dump();
}

CarriageWisePolynomial invariant_from_json(std::string_view text) {
    const auto j = detail::parse_json(text, "invariant JSON");
    const int n = detail::require_int(j, "n");
    if (n < 2 || num_entries(n) > 20) throw FormatError("invariant JSON: unsupported n=" + std::to_string(n));
    if (!j.contains("pieces")) throw FormatError("invariant JSON: missing \"pieces\"");
    auto f = detail::pieces_from_json(j["pieces"], n);
    if (j.contains("degree")) {
        const int declared = detail::require_int(j, "degree");
        if (declared < 0 || f.degree() > static_cast<unsigned>(declared))
            throw FormatError("invariant JSON: a piece exceeds the declared degree");
    }
    return f;
}

}  // namespace quiverlab

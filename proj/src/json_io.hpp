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

#include <json.hpp>
#include <string>

#include "quiverlab/errors.hpp"
#include "quiverlab/invariant.hpp"

namespace quiverlab::detail {

using Json = nlohmann::ordered_json;

inline Json pieces_to_json(const CarriageWisePolynomial& f) {
    Json pieces = Json::array();
    for (std::uint64_t idx = 0; idx < f.pieces().size(); ++idx) {
        Json piece;
        piece["pattern"] = SignPattern::from_index(f.n(), idx).to_string();
        piece["poly"] = f.piece(idx).to_string();
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

/// Pieces may come in any order but every carriage must appear exactly once.
inline CarriageWisePolynomial pieces_from_json(const Json& pieces, int n) {
    if (!pieces.is_array()) throw FormatError("\"pieces\" must be an array");
    const auto count = num_patterns(n);
    const auto m = num_entries(n);
    std::vector<std::optional<Poly>> slots(count);
    for (const auto& item : pieces) {
        if (!item.is_object() || !item.contains("pattern") || !item.contains("poly") || !item["pattern"].is_string() ||
            !item["poly"].is_string())
            throw FormatError("each piece needs string fields \"pattern\" and \"poly\"");
        const auto s = SignPattern::parse(item["pattern"].get<std::string>());
        if (s.n() != n) throw FormatError("piece pattern " + s.to_string() + " does not match n=" + std::to_string(n));
        auto& slot = slots[s.index()];
        if (slot) throw FormatError("duplicate piece for pattern " + s.to_string());
        slot = parse_poly(item["poly"].get<std::string>(), m);
    }
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        if (!slots[idx])
            throw FormatError("missing piece for pattern " + SignPattern::from_index(n, idx).to_string());
        out.push_back(std::move(*slots[idx]));
    }
    return CarriageWisePolynomial(n, std::move(out));
}

inline Json parse_json(std::string_view text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

inline int require_int(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        throw FormatError(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

}  // namespace quiverlab::detail

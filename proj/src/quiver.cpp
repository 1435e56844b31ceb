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

#include "quiverlab/quiver.hpp"

#include <algorithm>
#include <json.hpp>

#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 1 || v > n)
        throw DomainError(std::string(what) + " " + std::to_string(v) + " out of range 1.." + std::to_string(n));
}

// Expansion along the first remaining vertex:
// Pf(v1..v2m) = sum_j (-1)^j a(v1, vj) Pf(without v1, vj), j counted from 2.
template <class T, class Entry>
T pfaffian_expand(std::vector<int>& vertices, const Entry& entry, const T& one) {
    if (vertices.empty()) return one;
    const int first = vertices.front();
    T total = one - one;
    for (std::size_t j = 1; j < vertices.size(); ++j) {
        const int other = vertices[j];
        std::vector<int> rest;
        rest.reserve(vertices.size() - 2);
        for (std::size_t r = 1; r < vertices.size(); ++r)
            if (r != j) rest.push_back(vertices[r]);
        T term = entry(first, other) * pfaffian_expand(rest, entry, one);
        if (j % 2 == 1)
            total += term;
        else
            total -= term;
    }
    return total;
}

}  // namespace

// ---------------------------------------------------------------- SignPattern

SignPattern::SignPattern(int n, std::vector<std::int8_t> signs) : n_(n), signs_(std::move(signs)) {
    if (signs_.size() != num_entries(n))
        throw DimensionError("sign pattern length " + std::to_string(signs_.size()) + " does not match n=" +
                             std::to_string(n));
    for (auto s : signs_)
        if (s != 1 && s != -1) throw DomainError("sign pattern entries must be strict signs");
}

std::uint64_t num_patterns(int n) {
    const auto m = num_entries(n);
    if (m >= 63) throw ResourceError("too many carriages for n=" + std::to_string(n));
    return std::uint64_t{1} << m;
}

SignPattern SignPattern::from_index(int n, std::uint64_t index) {
    const auto m = num_entries(n);
    std::vector<std::int8_t> signs(m);
    for (std::size_t p = 0; p < m; ++p) signs[p] = ((index >> (m - 1 - p)) & 1U) ? -1 : 1;
    return SignPattern(n, std::move(signs));
}

SignPattern SignPattern::all_plus(int n) { return SignPattern(n, std::vector<std::int8_t>(num_entries(n), 1)); }

SignPattern SignPattern::parse(std::string_view text) {
    std::vector<std::int8_t> signs;
    signs.reserve(text.size());
    for (char c : text) {
        if (c == '+')
            signs.push_back(1);
        else if (c == '-')
            signs.push_back(-1);
        else
            throw FormatError("sign pattern must consist of '+' and '-': '" + std::string(text) + "'");
    }
    const int n = vertices_for_entries(signs.size());
    return SignPattern(n, std::move(signs));
}

std::uint64_t SignPattern::index() const {
    std::uint64_t idx = 0;
    for (auto s : signs_) idx = (idx << 1) | (s < 0 ? 1U : 0U);
    return idx;
}

int SignPattern::entry_sign(int i, int j) const {
    if (i == j) return 0;
    return i < j ? signs_[position(i, j, n_)] : -signs_[position(j, i, n_)];
}

SignPattern SignPattern::flipped(std::size_t pos) const {
    SignPattern out(*this);
    out.signs_.at(pos) = static_cast<std::int8_t>(-out.signs_[pos]);
    return out;
}

SignPattern SignPattern::with(std::size_t pos, int sign) const {
    SignPattern out(*this);
    out.signs_.at(pos) = static_cast<std::int8_t>(sign < 0 ? -1 : 1);
    return out;
}

std::string SignPattern::to_string() const {
    std::string out;
    out.reserve(signs_.size());
    for (auto s : signs_) out += s > 0 ? '+' : '-';
    return out;
}

// ---------------------------------------------------------------- Quiver

Quiver::Quiver(int n) : n_(n), upper_(num_entries(n)) {
    if (n < 2) throw DomainError("a quiver needs at least 2 vertices");
}

Quiver::Quiver(int n, std::vector<Rat> upper) : n_(n), upper_(std::move(upper)) {
    if (n < 2) throw DomainError("a quiver needs at least 2 vertices");
    if (upper_.size() != num_entries(n))
        throw DimensionError("expected " + std::to_string(num_entries(n)) + " entries for n=" + std::to_string(n) +
                             ", got " + std::to_string(upper_.size()));
}

Rat Quiver::entry(int i, int j) const {
    check_vertex(i, n_, "vertex");
    check_vertex(j, n_, "vertex");
    if (i == j) return 0;
    return i < j ? upper_[position(i, j, n_)] : Rat(-upper_[position(j, i, n_)]);
}

void Quiver::set(int i, int j, const Rat& value) {
    check_vertex(i, n_, "vertex");
    check_vertex(j, n_, "vertex");
    if (i == j) throw DomainError("diagonal entries of a quiver are fixed at 0");
    if (i < j)
        upper_[position(i, j, n_)] = value;
    else
        upper_[position(j, i, n_)] = -value;
}

bool Quiver::is_inner() const {
    return std::none_of(upper_.begin(), upper_.end(), [](const Rat& x) { return x == 0; });
}

bool Quiver::is_integral() const {
    return std::all_of(upper_.begin(), upper_.end(), [](const Rat& x) { return x.get_den() == 1; });
}

Quiver mutate(const Quiver& q, int k) {
    const int n = q.n();
    check_vertex(k, n, "mutation vertex");
    Quiver out(q);
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (i == k || j == k) {
                out.set(i, j, -q.entry(i, j));
                continue;
            }
            const Rat a = q.entry(i, k);
            const Rat b = q.entry(k, j);
            const int sa = sgn(a);
            const int sb = sgn(b);
            if (sa > 0 && sb > 0)
                out.set(i, j, q.entry(i, j) + a * b);
            else if (sa < 0 && sb < 0)
                out.set(i, j, q.entry(i, j) - a * b);
        }
    }
    return out;
}

SignPattern sign_pattern(const Quiver& q) {
    std::vector<std::int8_t> signs;
    signs.reserve(q.upper().size());
    for (const auto& x : q.upper()) {
        if (x == 0) throw DomainError("quiver is not inner: it has a zero entry");
        signs.push_back(static_cast<std::int8_t>(sgn(x)));
    }
    return SignPattern(q.n(), std::move(signs));
}

std::vector<SignPattern> compatible_patterns(const Quiver& q) {
    const auto m = q.upper().size();
    std::vector<std::size_t> zeros;
    std::vector<std::int8_t> base(m);
    for (std::size_t p = 0; p < m; ++p) {
        const int s = sgn(q.upper()[p]);
        if (s == 0) {
            zeros.push_back(p);
            base[p] = 1;
        } else {
            base[p] = static_cast<std::int8_t>(s);
        }
    }
    if (zeros.size() >= 32) throw ResourceError("too many zero entries to enumerate compatible patterns");
    std::vector<SignPattern> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << zeros.size()); ++mask) {
        auto signs = base;
        for (std::size_t z = 0; z < zeros.size(); ++z)
            if ((mask >> z) & 1U) signs[zeros[z]] = -1;
        out.emplace_back(q.n(), std::move(signs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat pfaffian(const Quiver& q) {
    if (q.n() % 2 != 0) throw DomainError("Pfaffian requires an even number of vertices");
    std::vector<int> vertices(static_cast<std::size_t>(q.n()));
    for (int v = 0; v < q.n(); ++v) vertices[static_cast<std::size_t>(v)] = v + 1;
    return pfaffian_expand<Rat>(vertices, [&](int i, int j) { return q.entry(i, j); }, Rat(1));
}

Poly pfaffian_poly(int n) {
    if (n % 2 != 0) throw DomainError("Pfaffian requires an even number of vertices");
    const auto m = num_entries(n);
    std::vector<int> vertices(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) vertices[static_cast<std::size_t>(v)] = v + 1;
    // Expansion only ever asks for i < j.
    auto entry = [&](int i, int j) { return Poly::variable(m, position(i, j, n)); };
    return pfaffian_expand<Poly>(vertices, entry, Poly::constant(m, 1));
}

Rat determinant(const Quiver& q) {
    const int n = q.n();
    if (n % 2 != 0) return 0;
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = q.entry(i + 1, j + 1);

    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const Rat f = a[r][c] / a[c][c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

std::string quiver_to_json(const Quiver& q) {
    nlohmann::ordered_json j;
    j["n"] = q.n();
    auto& upper = j["upper"] = nlohmann::ordered_json::array();
    for (const auto& x : q.upper()) upper.push_back(format_rat(x));
    return j.dump();
}

Quiver quiver_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("quiver JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("upper") || !j["n"].is_number_integer() ||
        !j["upper"].is_array())
        throw FormatError("quiver JSON must be an object with integer \"n\" and array \"upper\"");
    const int n = j["n"].get<int>();
    if (n < 2) throw FormatError("quiver JSON: n must be at least 2");
    std::vector<Rat> upper;
    for (const auto& item : j["upper"]) {
        if (!item.is_string()) throw FormatError("quiver JSON: entries must be rational strings");
        upper.push_back(parse_rat(item.get<std::string>()));
    }
    if (upper.size() != num_entries(n))
        throw FormatError("quiver JSON: expected " + std::to_string(num_entries(n)) + " entries for n=" +
                          std::to_string(n));
    return Quiver(n, std::move(upper));
}

}  // namespace quiverlab

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

#include "quiverlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "quiverlab/errors.hpp"
#include "quiverlab/layout.hpp"

namespace quiverlab {

namespace {

void require_same_vars(std::size_t a, std::size_t b, const char* op) {
    if (a != b)
        throw DimensionError(std::string(op) + ": variable count mismatch (" + std::to_string(a) + " vs " +
                             std::to_string(b) + ")");
}

std::vector<std::string> default_names(std::size_t num_vars) {
    std::vector<std::string> names;
    if (num_vars == 0) return names;
    const int n = vertices_for_entries(num_vars);
    names.reserve(num_vars);
    for (std::size_t v = 0; v < num_vars; ++v) names.push_back(variable_name(v, n));
    return names;
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t num_vars, std::size_t var) {
    Monomial m(num_vars);
    m.exps_.at(var) = 1;
    return m;
}

unsigned Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0U);
}

Monomial Monomial::operator*(const Monomial& other) const {
    require_same_vars(num_vars(), other.num_vars(), "monomial product");
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = static_cast<Exponent>(exps_[i] + other.exps_[i]);
    return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da < db;
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exponents()) {
        h ^= e;
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<Monomial> monomials_up_to(std::size_t num_vars, unsigned max_degree) {
    std::vector<Monomial> out;
    Monomial cur(num_vars);
    // Depth-first fill of exponents; sorted afterwards.
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t var, unsigned budget) {
        if (var == num_vars) {
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= budget; ++e) {
            cur[var] = static_cast<Monomial::Exponent>(e);
            fill(var + 1, budget - e);
        }
        cur[var] = 0;
    };
    fill(0, max_degree);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

// ---------------------------------------------------------------- Poly

Poly Poly::constant(std::size_t num_vars, const Rat& c) {
    Poly p(num_vars);
    p.add_term(Monomial(num_vars), c);
    return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t var) {
    Poly p(num_vars);
    p.add_term(Monomial::variable(num_vars, var), 1);
    return p;
}

Poly Poly::term(const Monomial& m, const Rat& c) {
    Poly p(m.num_vars());
    p.add_term(m, c);
    return p;
}

Rat Poly::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

void Poly::add_term(const Monomial& m, const Rat& c) {
    require_same_vars(num_vars_, m.num_vars(), "add_term");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    require_same_vars(num_vars_, other.num_vars_, "poly_add");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    require_same_vars(num_vars_, other.num_vars_, "poly_sub");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_vars(a.num_vars_, b.num_vars_, "poly_mul");
    Poly out(a.num_vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

bool operator==(const Poly& a, const Poly& b) { return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_; }

Poly Poly::pow(unsigned e) const {
    Poly out = constant(num_vars_, 1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

std::string Poly::to_string() const { return to_string(default_names(num_vars_)); }

std::string Poly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        const Rat magnitude = abs(c);
        std::string factors;
        for (std::size_t v = 0; v < m.num_vars(); ++v) {
            if (m[v] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += names[v];
            if (m[v] > 1) factors += "^" + std::to_string(m[v]);
        }
        if (factors.empty()) {
            out += format_rat(magnitude);
        } else if (magnitude == 1) {
            out += factors;
        } else {
            out += format_rat(magnitude) + "*" + factors;
        }
    }
    return out;
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }
bool equal(const Poly& a, const Poly& b) {
    require_same_vars(a.num_vars(), b.num_vars(), "poly_equal");
    return a == b;
}

Rat evaluate(const Poly& p, std::span<const Rat> point) {
    require_same_vars(p.num_vars(), point.size(), "poly_eval");
    Rat total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rat value = c;
        for (std::size_t v = 0; v < m.num_vars(); ++v) {
            if (m[v] == 0) continue;
            Rat power;
            mpz_pow_ui(power.get_num_mpz_t(), point[v].get_num_mpz_t(), m[v]);
            mpz_pow_ui(power.get_den_mpz_t(), point[v].get_den_mpz_t(), m[v]);
            value *= power;
        }
        total += value;
    }
    return total;
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t num_vars) : text_(text), num_vars_(num_vars) {
        const auto names = default_names(num_vars);
        for (std::size_t v = 0; v < names.size(); ++v) index_.emplace(names[v], v);
    }

    Poly parse() {
        Poly out(num_vars_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [m, c] = parse_term();
            out.add_term(m, sign * c);
            skip_ws();
        }
        return out;
    }

private:
    std::pair<Monomial, Rat> parse_term() {
        Rat coef = 1;
        Monomial m(num_vars_);
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = parse_number();
            skip_ws();
            if (peek() != '*') return {m, coef};
            get();
            skip_ws();
        }
        while (need_factor) {
            parse_factor(m);
            skip_ws();
            need_factor = peek() == '*';
            if (need_factor) {
                get();
                skip_ws();
            }
        }
        return {m, coef};
    }

    void parse_factor(Monomial& m) {
        if (peek() != 'x') fail("expected a variable");
        const auto start = pos_;
        get();
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) get();
        const std::string name(text_.substr(start, pos_ - start));
        const auto it = index_.find(name);
        if (it == index_.end()) fail("unknown variable '" + name + "'");
        unsigned e = 1;
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            e = static_cast<unsigned>(parse_digits().get_ui());
        }
        m[it->second] = static_cast<Monomial::Exponent>(m[it->second] + e);
    }

    Rat parse_number() {
        const auto start = pos_;
        parse_digits();
        if (peek() == '/') {
            get();
            parse_digits();
        }
        return parse_rat(text_.substr(start, pos_ - start));
    }

    Int parse_digits() {
        const auto start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) get();
        if (start == pos_) fail("expected digits");
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw FormatError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t num_vars_;
    std::size_t pos_ = 0;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t num_vars) { return PolyParser(text, num_vars).parse(); }

// ---------------------------------------------------------------- maps

PolyMap::PolyMap(std::vector<Poly> components) : components_(std::move(components)) {
    for (const auto& c : components_) require_same_vars(c.num_vars(), num_vars(), "PolyMap");
}

PolyMap PolyMap::identity(std::size_t num_vars) {
    std::vector<Poly> comps;
    comps.reserve(num_vars);
    for (std::size_t v = 0; v < num_vars; ++v) comps.push_back(Poly::variable(num_vars, v));
    return PolyMap(std::move(comps));
}

std::vector<Rat> PolyMap::evaluate(std::span<const Rat> point) const {
    std::vector<Rat> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(quiverlab::evaluate(c, point));
    return out;
}

MonomialImages::MonomialImages(const PolyMap& map) : map_(&map) {}

const Poly& MonomialImages::image(const Monomial& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    require_same_vars(m.num_vars(), map_->size(), "compose");
    Poly img;
    if (m.is_one()) {
        img = Poly::constant(map_->num_vars(), 1);
    } else {
        std::size_t v = 0;
        while (m[v] == 0) ++v;
        Monomial smaller = m;
        --smaller[v];
        img = image(smaller) * (*map_)[v];
    }
    return memo_.emplace(m, std::move(img)).first->second;
}

Poly compose(const Poly& p, MonomialImages& images) {
    Poly out(images.num_vars());
    for (const auto& [m, c] : p.terms()) {
        const Poly& img = images.image(m);
        for (const auto& [mi, ci] : img.terms()) out.add_term(mi, c * ci);
    }
    return out;
}

Poly compose(const Poly& p, const PolyMap& map) {
    require_same_vars(p.num_vars(), map.size(), "compose");
    MonomialImages images(map);
    return compose(p, images);
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
    require_same_vars(outer.num_vars(), inner.size(), "compose");
    MonomialImages images(inner);
    std::vector<Poly> comps;
    comps.reserve(outer.size());
    for (const auto& c : outer.components()) {
        comps.push_back(compose(c, images));
    }
    return PolyMap(std::move(comps));
}

}  // namespace quiverlab

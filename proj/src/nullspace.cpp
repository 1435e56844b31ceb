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

#include "quiverlab/nullspace.hpp"

#include <algorithm>
#include <optional>

#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

using IntEntries = std::vector<std::pair<std::uint32_t, Int>>;

// Divides out the content and makes the leading coefficient positive.
void make_primitive(IntEntries& entries) {
    if (entries.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : entries) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (entries.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : entries) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Sorted, merged, zero-free rational entries scaled to a primitive integer row.
SparseRow to_integer_row(std::vector<std::pair<std::size_t, Rat>> coefficients, std::size_t num_cols) {
    std::sort(coefficients.begin(), coefficients.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::size_t, Rat>> merged;
    for (auto& [c, v] : coefficients) {
        if (c >= num_cols) throw DimensionError("row coefficient column out of range");
        if (!merged.empty() && merged.back().first == c)
            merged.back().second += v;
        else
            merged.emplace_back(c, std::move(v));
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });

    Int lcm = 1;
    for (const auto& [c, v] : merged) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    SparseRow row;
    row.entries.reserve(merged.size());
    for (const auto& [c, v] : merged) {
        Int scaled = v.get_num() * (lcm / v.get_den());
        row.entries.emplace_back(static_cast<std::uint32_t>(c), std::move(scaled));
    }
    make_primitive(row.entries);
    return row;
}

std::uint64_t row_hash(const SparseRow& row) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& [c, v] : row.entries) {
        h = (h ^ c) * 1099511628211ULL;
        h = (h ^ mpz_getlimbn(v.get_mpz_t(), 0)) * 1099511628211ULL;
        h = (h ^ static_cast<std::uint64_t>(sgn(v) + 1)) * 1099511628211ULL;
    }
    return h;
}

// Columns tied together by short rows: x_c = factor * x_parent, roots may be
// known to vanish.
class ColumnLinks {
public:
    explicit ColumnLinks(std::size_t n) : parent_(n), factor_(n, Rat(1)), zero_(n, false) {
        for (std::size_t c = 0; c < n; ++c) parent_[c] = c;
    }

    // (root, factor) with x_c = factor * x_root.
    std::pair<std::size_t, Rat> find(std::size_t c) {
        if (parent_[c] == c) return {c, Rat(1)};
        auto [root, f] = find(parent_[c]);
        factor_[c] *= f;
        parent_[c] = root;
        return {root, factor_[c]};
    }

    bool is_zero_root(std::size_t root) const { return zero_[root]; }
    void set_zero(std::size_t root) { zero_[root] = true; }

    // x_child = factor * x_root, both roots, child > root.
    void attach(std::size_t child, std::size_t root, const Rat& factor) {
        parent_[child] = root;
        factor_[child] = factor;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<Rat> factor_;
    std::vector<bool> zero_;
};

// Row expressed in root columns, zero roots dropped, merged and sorted.
std::vector<std::pair<std::size_t, Rat>> substitute(const SparseRow& row, ColumnLinks& links) {
    std::vector<std::pair<std::size_t, Rat>> terms;
    terms.reserve(row.entries.size());
    for (const auto& [c, v] : row.entries) {
        auto [root, f] = links.find(c);
        if (links.is_zero_root(root)) continue;
        terms.emplace_back(root, f * Rat(v));
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::size_t, Rat>> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    return merged;
}

// a * r - b * p for rows sharing a leading column; result primitive.
IntEntries combine(const IntEntries& r, const IntEntries& p) {
    Int a = p.front().second;
    Int b = r.front().second;
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) {
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    }
    IntEntries out;
    out.reserve(r.size() + p.size());
    std::size_t i = 1, j = 1;
    Int tmp;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            tmp = a * r[i].second - b * p[j].second;
            if (tmp != 0) out.emplace_back(r[i].first, tmp);
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

}  // namespace

bool LinearSystem::add_row(std::vector<std::pair<std::size_t, Rat>> coefficients) {
    SparseRow row = to_integer_row(std::move(coefficients), num_cols_);
    if (row.empty()) return false;
    auto& bucket = index_[row_hash(row)];
    for (auto idx : bucket)
        if (rows_[idx] == row) return false;
    bucket.push_back(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

bool LinearSystem::annihilates(const std::vector<Rat>& v) const {
    if (v.size() != num_cols_) throw DimensionError("vector length does not match column count");
    Rat acc;
    for (const auto& row : rows_) {
        acc = 0;
        for (const auto& [c, coef] : row.entries) acc += coef * v[c];
        if (acc != 0) return false;
    }
    return true;
}

Nullspace nullspace(const LinearSystem& system) {
    const std::size_t n = system.num_cols();
    ColumnLinks links(n);

    // Presolve: rows that reduce to one unknown kill it, rows that reduce to
    // two unknowns tie them. Repeat until nothing changes.
    std::vector<std::size_t> active(system.num_rows());
    for (std::size_t r = 0; r < active.size(); ++r) active[r] = r;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::size_t> still_active;
        for (auto r : active) {
            auto terms = substitute(system.rows()[r], links);
            if (terms.empty()) continue;
            if (terms.size() == 1) {
                links.set_zero(terms[0].first);
                changed = true;
                continue;
            }
            if (terms.size() == 2) {
                // a x_r1 + b x_r2 = 0 with r1 < r2  =>  x_r2 = (-a/b) x_r1
                links.attach(terms[1].first, terms[0].first, -terms[0].second / terms[1].second);
                changed = true;
                continue;
            }
            still_active.push_back(r);
        }
        active = std::move(still_active);
    }

    // Surviving root columns, renumbered in column order.
    std::vector<std::optional<std::size_t>> reduced_index(n);
    std::vector<std::size_t> live;
    for (std::size_t c = 0; c < n; ++c) {
        auto [root, f] = links.find(c);
        if (root == c && !links.is_zero_root(c)) {
            reduced_index[c] = live.size();
            live.push_back(c);
        }
    }

    LinearSystem reduced(live.size());
    for (auto r : active) {
        auto terms = substitute(system.rows()[r], links);
        for (auto& t : terms) t.first = *reduced_index[t.first];
        reduced.add_row(std::move(terms));
    }

    // Fraction-free incremental echelon form, sparsest rows first.
    std::vector<const SparseRow*> order;
    order.reserve(reduced.num_rows());
    for (const auto& row : reduced.rows()) order.push_back(&row);
    std::stable_sort(order.begin(), order.end(), [](const SparseRow* a, const SparseRow* b) {
        if (a->entries.size() != b->entries.size()) return a->entries.size() < b->entries.size();
        return a->entries.front().first < b->entries.front().first;
    });

    std::vector<IntEntries> echelon;
    std::vector<std::optional<std::size_t>> pivot_row(live.size());
    for (const SparseRow* row : order) {
        IntEntries r = row->entries;
        while (!r.empty()) {
            const auto lead = r.front().first;
            if (!pivot_row[lead]) {
                pivot_row[lead] = echelon.size();
                echelon.push_back(std::move(r));
                break;
            }
            r = combine(r, echelon[*pivot_row[lead]]);
        }
        if (echelon.size() == live.size()) break;
    }

    // Back-substitution to reduced row echelon form, last pivot first.
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < live.size(); ++c)
        if (pivot_row[c]) pivots.push_back(c);
    std::vector<std::vector<std::pair<std::size_t, Rat>>> rref(pivots.size());
    std::vector<Rat> dense(live.size());
    for (std::size_t idx = pivots.size(); idx-- > 0;) {
        const auto& source = echelon[*pivot_row[pivots[idx]]];
        std::fill(dense.begin(), dense.end(), Rat(0));
        for (const auto& [c, v] : source) dense[c] = v;
        for (std::size_t later = idx + 1; later < pivots.size(); ++later) {
            const auto pc = pivots[later];
            if (dense[pc] == 0) continue;
            const Rat f = dense[pc];
            for (const auto& [c, v] : rref[later]) dense[c] -= f * v;
        }
        const Rat lead = dense[pivots[idx]];
        for (std::size_t c = pivots[idx]; c < live.size(); ++c)
            if (dense[c] != 0) rref[idx].emplace_back(c, dense[c] / lead);
    }

    // Nullspace of the reduced system, one vector per free column.
    std::vector<bool> is_pivot(live.size(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> reduced_basis;
    for (std::size_t f = 0; f < live.size(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> w(live.size());
        w[f] = 1;
        for (std::size_t idx = 0; idx < pivots.size(); ++idx)
            for (const auto& [c, v] : rref[idx])
                if (c == f) w[pivots[idx]] = -v;
        reduced_basis.push_back(std::move(w));
    }

    // Back to the original columns through the presolve links.
    std::vector<std::vector<Rat>> full;
    full.reserve(reduced_basis.size());
    for (const auto& w : reduced_basis) {
        std::vector<Rat> v(n);
        for (std::size_t c = 0; c < n; ++c) {
            auto [root, f] = links.find(c);
            if (links.is_zero_root(root)) continue;
            v[c] = f * w[*reduced_index[root]];
        }
        full.push_back(std::move(v));
    }

    Nullspace out;
    out.num_cols = n;
    out.basis = canonical_basis(std::move(full));
    out.rank = n - out.basis.size();
    return out;
}

std::vector<std::vector<Rat>> canonical_basis(std::vector<std::vector<Rat>> vectors) {
    if (vectors.empty()) return vectors;
    const auto n = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != n) throw DimensionError("canonical_basis: vectors of different lengths");

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < vectors.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < vectors.size() && vectors[pivot][col] == 0) ++pivot;
        if (pivot == vectors.size()) continue;
        std::swap(vectors[pivot], vectors[rank]);
        const Rat lead = vectors[rank][col];
        for (auto& x : vectors[rank]) x /= lead;
        for (std::size_t r = 0; r < vectors.size(); ++r) {
            if (r == rank || vectors[r][col] == 0) continue;
            const Rat f = vectors[r][col];
            for (std::size_t c = col; c < n; ++c)
                if (vectors[rank][c] != 0) vectors[r][c] -= f * vectors[rank][c];
        }
        ++rank;
    }
    vectors.resize(rank);
    return vectors;
}

}  // namespace quiverlab

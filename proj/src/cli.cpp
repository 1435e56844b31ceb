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

#include "quiverlab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json_io.hpp"
#include "quiverlab/carriage_graph.hpp"
#include "quiverlab/errors.hpp"
#include "quiverlab/invariant.hpp"
#include "quiverlab/orbit.hpp"
#include "quiverlab/search.hpp"

namespace quiverlab {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << content << '\n';
    if (!out) throw UsageError("failed writing '" + path + "'");
}

// Sign string with '0' for zero entries.
std::string sign_string(const Quiver& q) {
    std::string out;
    for (const auto& x : q.upper()) out += sgn(x) > 0 ? '+' : (sgn(x) < 0 ? '-' : '0');
    return out;
}

std::vector<int> parse_sequence(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad vertex '" + item + "' in --seq");
        }
    }
    return out;
}

CarriageWisePolynomial load_invariant(const std::string& source) {
    if (source == "det") return det_invariant(4);
    if (source == "markov") return markov_invariant(3);
    return invariant_from_json(read_file(source));
}

std::string describe_function(const CarriageWisePolynomial& f, const std::string& indent) {
    std::string out;
    const bool uniform =
        std::all_of(f.pieces().begin(), f.pieces().end(), [&](const Poly& p) { return p == f.piece(0); });
    if (uniform) {
        out += indent + "all carriages: " + f.piece(0).to_string() + "\n";
        if (f.n() == 4) out += indent + "letters:       " + to_letters(f.piece(0)) + "\n";
        return out;
    }
    for (std::uint64_t s = 0; s < f.pieces().size(); ++s) {
        out += indent + SignPattern::from_index(f.n(), s).to_string() + ": " + f.piece(s).to_string() + "\n";
    }
    return out;
}

// ---------------------------------------------------------------- commands

struct MutateArgs {
    std::string in, out, seq;
};

int cmd_mutate(const MutateArgs& a, bool json, std::ostream& out) {
    Quiver q = quiver_from_json(read_file(a.in));
    const auto seq = parse_sequence(a.seq);
    for (int k : seq)
        if (k < 1 || k > q.n())
            throw UsageError("vertex " + std::to_string(k) + " out of range 1.." + std::to_string(q.n()));

    detail::Json trail = detail::Json::array();
    auto record = [&](int step, std::optional<int> k, const Quiver& x) {
        detail::Json row;
        row["step"] = step;
        row["vertex"] = k ? detail::Json(*k) : detail::Json(nullptr);
        row["signs"] = sign_string(x);
        if (x.n() % 2 == 0) row["pfaffian"] = format_rat(pfaffian(x));
        trail.push_back(row);
        if (!json) {
            out << "step " << step << ": " << (k ? "mu_" + std::to_string(*k) : std::string("start")) << "  signs "
                << sign_string(x);
            if (x.n() % 2 == 0) out << "  Pf " << format_rat(pfaffian(x));
            out << "\n";
        }
    };
    record(0, std::nullopt, q);
    int step = 0;
    for (int k : seq) {
        q = mutate(q, k);
        record(++step, k, q);
    }
    const auto serialized = quiver_to_json(q);
    if (!a.out.empty()) write_file(a.out, serialized);
    if (json) {
        detail::Json j;
        j["trail"] = trail;
        j["result"] = detail::Json::parse(serialized);
        out << j.dump() << "\n";
    } else if (a.out.empty()) {
        out << serialized << "\n";
    }
    return kExitOk;
}

int cmd_carriage_graph(int n, bool list_components, int cap, bool json, std::ostream& out) {
    const auto partition = components(n, cap);
    if (json) {
        detail::Json j;
        j["n"] = n;
        j["connected"] = partition.size() == 1;
        auto& comps = j["components"] = detail::Json::array();
        for (const auto& c : partition.components) {
            detail::Json item;
            item["size"] = c.size();
            item["least"] = SignPattern::from_index(n, c.front()).to_string();
            comps.push_back(item);
        }
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << component_summary(partition) << "\n";
    if (list_components) out << component_report(partition);
    return kExitOk;
}

int cmd_check(const std::string& source, bool json, std::ostream& out) {
    const auto f = load_invariant(source);
    const auto witness = check_invariant_symbolic(f);
    if (json) {
        detail::Json j;
        j["verified"] = !witness;
        if (witness) {
            j["source"] = witness->source.to_string();
            j["vertex"] = witness->vertex;
            j["target"] = witness->target.to_string();
            j["difference"] = witness->difference.to_string();
            if (witness->point) j["point"] = detail::Json::parse(quiver_to_json(*witness->point));
        }
        out << j.dump() << "\n";
    } else if (!witness) {
        out << "verified\n";
    } else {
        out << "NOT invariant\n"
            << "  carriage " << witness->source.to_string() << ", vertex " << witness->vertex << ", target carriage "
            << witness->target.to_string() << "\n"
            << "  piece_source - piece_target o mu = " << witness->difference.to_string() << "\n";
        if (witness->point) {
            const auto image = mutate(*witness->point, witness->vertex);
            out << "  counterexample " << quiver_to_json(*witness->point) << ": F = "
                << format_rat(evaluate(f, *witness->point)) << ", F(mu) = " << format_rat(evaluate(f, image)) << "\n";
        }
    }
    return witness ? kExitViolation : kExitOk;
}

struct SearchArgs {
    int n = 0;
    unsigned degree = 0;
    std::string mode = "collapsed";
    std::string out;
    bool sample_prepass = false;
    bool unguarded = false;
    std::uint64_t seed = 1;
};

int cmd_search(const SearchArgs& a, bool json, std::ostream& out) {
    SearchOptions options;
    options.sample_prepass = a.sample_prepass;
    options.unguarded = a.unguarded;
    options.seed = a.seed;
    const auto mode = parse_search_mode(a.mode);
    const auto basis = search_invariants(a.n, a.degree, mode, options);
    const auto serialized = basis_to_json(basis);
    if (!a.out.empty()) write_file(a.out, serialized);

    std::optional<DetDecomposition> decomposition;
    if (a.n == 4) decomposition = verify_spanned_by_det(basis);

    if (json) {
        auto j = detail::Json::parse(serialized);
        if (decomposition) {
            detail::Json fs = detail::Json::array();
            for (const auto& f : decomposition->f_coefficients) fs.push_back(format_univariate(f));
            j["det_decomposition"] = fs;
            j["spanned_by_det_powers"] = decomposition->spanned && decomposition->spans_all_powers;
        }
        out << j.dump() << "\n";
    } else {
        out << "search n=" << a.n << " degree=" << a.degree << " mode=" << to_string(mode)
            << (basis.from_sampling ? " (sampling pre-pass)" : "") << "\n";
        out << "dimension: " << basis.dimension() << "\n";
        for (std::size_t e = 0; e < basis.elements.size(); ++e) {
            out << "element " << e + 1 << ":\n" << describe_function(basis.elements[e], "  ");
            if (decomposition && decomposition->spanned)
                out << "  f(Det) with f(t) = " << format_univariate(decomposition->f_coefficients[e]) << "\n";
        }
        if (a.n == 3 && in_span(basis, markov_invariant(3))) out << "contains the Markov invariant\n";
        if (decomposition) {
            if (!decomposition->spanned) {
                out << "NOT spanned by powers of Det: element " << *decomposition->failing_element + 1 << ", "
                    << decomposition->reason << "\n";
            } else {
                std::string span = "1";
                for (unsigned j = 1; j <= a.degree / 4; ++j) span += j == 1 ? ", Det" : ", Det^" + std::to_string(j);
                out << (decomposition->spans_all_powers ? "spanned by {" + span + "}" : "inside span {" + span + "}")
                    << "\n";
            }
        }
    }
    return decomposition && !decomposition->spanned ? kExitViolation : kExitOk;
}

struct OrbitArgs {
    std::string in, out;
    std::size_t steps = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> watch;
};

int cmd_orbit(const OrbitArgs& a, std::ostream& out) {
    const Quiver start = quiver_from_json(read_file(a.in));
    std::vector<WatchedInvariant> watch;
    for (const auto& w : a.watch) {
        auto f = load_invariant(w);
        if (f.n() != start.n())
            throw UsageError("watched invariant '" + w + "' is for n=" + std::to_string(f.n()) + ", quiver has n=" +
                             std::to_string(start.n()));
        watch.push_back({w, std::move(f)});
    }
    const auto report = random_mutation_walk(start, a.steps, a.seed, watch);
    const auto serialized = walk_to_json(report);
    if (!a.out.empty())
        write_file(a.out, serialized);
    else
        out << serialized << "\n";
    return report.constant() ? kExitOk : kExitViolation;
}

int cmd_orbit_bfs(const std::string& in, std::size_t cap, bool json, std::ostream& out) {
    const auto summary = integer_orbit_bfs(quiver_from_json(read_file(in)), cap);
    if (json) {
        out << orbit_to_json(summary) << "\n";
    } else {
        out << "visited " << summary.visited << " quivers, "
            << (summary.exhausted ? "orbit exhausted" : "stopped at cap")
            << " (cap " << summary.cap << ")\n";
    }
    return kExitOk;
}

int cmd_export(const std::string& name, const std::string& path, std::ostream& out) {
    if (name != "det" && name != "markov") throw UsageError("unknown built-in invariant '" + name + "'");
    const auto serialized = invariant_to_json(load_invariant(name));
    if (path.empty())
        out << serialized << "\n";
    else
        write_file(path, serialized);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cluster-mutation laboratory for skew-symmetric matrices", "quiverlab"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable JSON output");

    MutateArgs mutate_args;
    auto* mutate_cmd = app.add_subcommand("mutate", "Apply a sequence of mutations to a quiver file");
    mutate_cmd->add_option("--in", mutate_args.in, "Quiver JSON file")->required();
    mutate_cmd->add_option("--seq", mutate_args.seq, "Comma-separated vertices, e.g. 4,2");
    mutate_cmd->add_option("--out", mutate_args.out, "Where to write the mutated quiver");

    int graph_n = 0;
    int graph_cap = kDefaultFlipGraphCap;
    bool list_components = false;
    auto* graph_cmd = app.add_subcommand("carriage-graph", "Connected components of the carriage flip graph");
    graph_cmd->add_option("--n", graph_n, "Number of vertices")->required();
    graph_cmd->add_flag("--components", list_components, "List every component");
    graph_cmd->add_option("--cap", graph_cap, "Largest n allowed");

    std::string invariant_source;
    auto* check_cmd = app.add_subcommand("check", "Symbolically verify mutation invariance");
    check_cmd->add_option("--invariant", invariant_source, "Invariant JSON file, or det / markov")->required();

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "Find every invariant up to a degree bound");
    search_cmd->add_option("--n", search_args.n, "Number of vertices")->required();
    search_cmd->add_option("--degree", search_args.degree, "Degree bound for each piece")->required();
    search_cmd->add_option("--mode", search_args.mode, "full or collapsed");
    search_cmd->add_option("--out", search_args.out, "Where to write the basis JSON");
    search_cmd->add_flag("--sample-prepass", search_args.sample_prepass, "Discover candidates from sampled points");
    search_cmd->add_flag("--unguarded", search_args.unguarded, "Skip the size guard");
    search_cmd->add_option("--seed", search_args.seed, "Seed for the sampling pre-pass");

    OrbitArgs orbit_args;
    auto* orbit_cmd = app.add_subcommand("orbit", "Random mutation walk watching invariants");
    orbit_cmd->add_option("--in", orbit_args.in, "Quiver JSON file")->required();
    orbit_cmd->add_option("--steps", orbit_args.steps, "Number of mutations")->required();
    orbit_cmd->add_option("--seed", orbit_args.seed, "64-bit seed")->required();
    orbit_cmd->add_option("--watch", orbit_args.watch, "det, markov or an invariant JSON file");
    orbit_cmd->add_option("--out", orbit_args.out, "Where to write the report");

    std::string bfs_in;
    std::size_t bfs_cap = 10000;
    auto* bfs_cmd = app.add_subcommand("orbit-bfs", "Breadth-first mutation orbit of an integer quiver");
    bfs_cmd->add_option("--in", bfs_in, "Quiver JSON file")->required();
    bfs_cmd->add_option("--cap", bfs_cap, "Stop after this many quivers");

    std::string export_name, export_out;
    auto* export_cmd = app.add_subcommand("export", "Write a built-in invariant as JSON");
    export_cmd->add_option("--invariant", export_name, "det or markov")->required();
    export_cmd->add_option("--out", export_out, "Destination file");

    std::vector<std::string> argv_storage{"quiverlab"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (mutate_cmd->parsed()) return cmd_mutate(mutate_args, json, out);
        if (graph_cmd->parsed()) return cmd_carriage_graph(graph_n, list_components, graph_cap, json, out);
        if (check_cmd->parsed()) return cmd_check(invariant_source, json, out);
        if (search_cmd->parsed()) return cmd_search(search_args, json, out);
        if (orbit_cmd->parsed()) return cmd_orbit(orbit_args, out);
        if (bfs_cmd->parsed()) return cmd_orbit_bfs(bfs_in, bfs_cap, json, out);
        if (export_cmd->parsed()) return cmd_export(export_name, export_out, out);
    } catch (const InternalConsistencyError& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitViolation;
    } catch (const AmbiguousBoundaryError& e) {
        err << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace quiverlab

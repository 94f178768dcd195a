#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "surfminor/bounds.hpp"
#include "surfminor/certify.hpp"
#include "surfminor/genus_search.hpp"
#include "surfminor/graph_io.hpp"
#include "surfminor/structure.hpp"
#include "surfminor/topology.hpp"
#include "surfminor/treedecomp.hpp"

#include "corpus.hpp"

namespace surfminor::cli {

// Exit codes: 0 success, 1 property violation, 2 bad input or usage.
inline constexpr int kViolation = 1;
inline constexpr int kBadInput = 2;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<Vertex> parse_ids(const std::string& s) {
    std::vector<Vertex> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw Error("expected comma-separated vertex ids, got '" + s + "'");
        out.push_back(v);
    }
    return out;
}

inline json null_if_infinite(int g) { return g >= kInfinity ? json(nullptr) : json(g); }

// Column-aligned rows; the first row is the header.
inline void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (w.size() <= i) w.push_back(0);
            w[i] = std::max(w[i], r[i].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) line += i + 1 < r.size() ? r[i] + std::string(w[i] - r[i].size() + 2, ' ') : r[i];
        out << line << '\n';
    }
}

struct Options {
    std::string graph6, json_graph, embedding, surface;
    std::optional<std::uint64_t> budget;
    bool json = false;
    std::optional<std::uint64_t> seed;
    int threads = 1;

    SearchBudget search_budget() const {
        SearchBudget b = SearchBudget::from_env();
        if (budget) b.max_nodes = *budget;
        b.threads = threads;
        return b;
    }
    std::optional<Embedding> load_embedding() const {
        if (embedding.empty()) return std::nullopt;
        return embedding_from_json(parse_json_text(read_file(embedding)));
    }
    Graph load_graph() const {
        int given = !graph6.empty() + !json_graph.empty() + !embedding.empty();
        if (given == 0) throw Error("give a graph with --graph6, --json-graph or --embedding");
        if (given > 1) throw Error("give only one of --graph6, --json-graph, --embedding");
        if (!graph6.empty()) return parse_graph6(graph6);
        if (!json_graph.empty()) return parse_graph_json(read_file(json_graph));
        return load_embedding()->graph();
    }
    Embedding require_embedding() const {
        auto p = load_embedding();
        if (!p) throw Error("this command needs --embedding");
        return *p;
    }
    Surface require_surface() const {
        if (surface.empty()) throw Error("this command needs --surface <genus>:<orientable|nonorientable>");
        return Surface::parse(surface);
    }
};

inline Cycle parse_cycle(const Graph& g, const std::string& s) {
    Cycle c{parse_ids(s)};
    validate_cycle(g, c);
    return c;
}

// Face named by the dart u->v traversed in the positive direction.
inline std::optional<FaceState> parse_outer(const Graph& g, const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto ids = parse_ids(s);
    if (ids.size() != 2) throw Error("--outer needs two vertex ids u,v");
    return FaceState{dart_from(g, ids[0], ids[1]), 1};
}

// ---- subcommands ------------------------------------------------------------

inline int cmd_faces(const Options& o, std::ostream& out) {
    auto p = o.load_embedding();
    Embedding e = p ? *p : Embedding::trivial(o.load_graph());
    auto faces = face_traversal(e);
    const Graph& g = e.graph();
    if (o.json) {
        json j;
        j["vertices"] = g.order();
        j["edges"] = g.size();
        j["faces"] = json::array();
        for (const auto& f : faces) j["faces"].push_back(f.vertices(g));
        j["euler_genus"] = euler_genus(e);
        j["orientable"] = is_orientable(e);
        out << j.dump(2) << '\n';
        return 0;
    }
    std::vector<std::vector<std::string>> rows{{"face", "length", "walk"}};
    for (std::size_t i = 0; i < faces.size(); ++i) {
        std::string walk;
        for (Vertex v : faces[i].vertices(g)) walk += (walk.empty() ? "" : " ") + std::to_string(v);
        rows.push_back({std::to_string(i), std::to_string(faces[i].size()), walk});
    }
    print_table(out, rows);
    out << "V " << g.order() << "  E " << g.size() << "  F " << faces.size() << "  Euler genus " << euler_genus(e)
        << (is_orientable(e) ? "  orientable" : "  nonorientable") << '\n';
    return 0;
}

struct GenusReport {
    int orientable = kInfinity, nonorientable = kInfinity;
    bool exact = true;
    std::uint64_t nodes = 0;
    std::vector<Embedding> orientable_witness, nonorientable_witness;
};

// Minimum Euler genus per class; disconnected graphs combine their components.
inline GenusReport genus_report(const Graph& g, const SearchBudget& b) {
    GenusReport r;
    if (g.order() == 0) {
        r.orientable = 0;
        return r;
    }
    auto comps = component_profiles(g, b);
    for (const auto& c : comps) {
        r.exact = r.exact && c.profile.exact();
        r.nodes += c.profile.orientable.nodes + c.profile.nonorientable.nodes;
    }
    if (!r.exact) return r;
    r.orientable = combined_euler_genus(comps, true);
    r.nonorientable = combined_euler_genus(comps, false);
    bool all_trees = true;
    for (const auto& c : comps) all_trees = all_trees && c.profile.nonorientable_min() >= kInfinity;
    // forests embed only orientably: a nonorientable cellular embedding needs a cycle
    if (all_trees) r.nonorientable = kInfinity;
    for (const auto& c : comps)
        if (c.profile.orientable.witness) r.orientable_witness.push_back(*c.profile.orientable.witness);
    // one witness per component; a disconnected nonorientable minimum may need
    // a component embedded above its own minimum, so none is listed then
    if (comps.size() == 1 && comps[0].profile.nonorientable.witness) r.nonorientable_witness.push_back(*comps[0].profile.nonorientable.witness);
    return r;
}

inline int cmd_genus(const Options& o, std::ostream& out) {
    Graph g = o.load_graph();
    auto r = genus_report(g, o.search_budget());
    if (o.json) {
        json j;
        j["graph6"] = to_graph6(g);
        j["exact"] = r.exact;
        j["orientable"] = r.exact ? null_if_infinite(r.orientable) : json(nullptr);
        j["nonorientable"] = r.exact ? null_if_infinite(r.nonorientable) : json(nullptr);
        j["nodes"] = r.nodes;
        j["orientable_witness"] = json::array();
        for (const auto& w : r.orientable_witness) j["orientable_witness"].push_back(embedding_to_json(w));
        j["nonorientable_witness"] = json::array();
        for (const auto& w : r.nonorientable_witness) j["nonorientable_witness"].push_back(embedding_to_json(w));
        out << j.dump(2) << '\n';
        return 0;
    }
    auto show = [&](int v) { return r.exact ? genus_str(v) : std::string("?"); };
    print_table(out, {{"class", "euler genus", "exact"},
                      {"orientable", show(r.orientable), r.exact ? "yes" : "no"},
                      {"nonorientable", show(r.nonorientable), r.exact ? "yes" : "no"}});
    if (!r.exact) out << "search budget exhausted after " << r.nodes << " nodes\n";
    return 0;
}

inline int cmd_embeddable(const Options& o, std::ostream& out) {
    Graph g = o.load_graph();
    Surface s = o.require_surface();
    auto r = embeddable_in(g, s, o.search_budget());
    if (o.json) {
        json j;
        j["graph6"] = to_graph6(g);
        j["surface"] = surface_to_json(s);
        j["embeddable"] = r.embeddable ? json(*r.embeddable) : json(nullptr);
        j["exact"] = r.embeddable.has_value();
        j["witnesses"] = json::array();
        for (const auto& w : r.witnesses) j["witnesses"].push_back(embedding_to_json(w));
        j["detail"] = r.detail;
        out << j.dump(2) << '\n';
        return 0;
    }
    out << s.str() << ": " << (!r.embeddable ? "unknown (budget exhausted)" : *r.embeddable ? "embeddable" : "not embeddable") << '\n';
    if (!r.detail.empty()) out << r.detail << '\n';
    return 0;
}

inline int cmd_certify(const Options& o, const std::string& check, const std::string& write, std::ostream& out) {
    if (!check.empty()) {
        auto c = certificate_from_json(parse_json_text(read_file(check)));
        auto v = verify_certificate(c);
        if (o.json) {
            out << json{{"ok", v.ok}, {"failed", v.failed}}.dump(2) << '\n';
        } else {
            out << (v.ok ? "certificate verified" : "certificate rejected: " + v.failed) << '\n';
        }
        return v.ok ? 0 : kViolation;
    }
    Graph g = o.load_graph();
    Surface s = o.require_surface();
    auto r = certify_excluded_minor(g, s, o.search_budget());
    json cert = r.certificate ? certificate_to_json(*r.certificate) : json(nullptr);
    if (!write.empty() && r.certificate) {
        std::ofstream f(write, std::ios::binary);
        if (!f) throw Error("cannot write " + write);
        f << cert.dump(2) << '\n';
    }
    if (o.json) {
        json j;
        j["status"] = status_name(r.status);
        j["exact"] = r.status != CertifyOutcome::Unknown;
        j["detail"] = r.detail;
        j["minor_op"] = r.minor_op ? json(r.minor_op->str()) : json(nullptr);
        j["certificate"] = cert;
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "status " << status_name(r.status) << '\n';
    if (r.minor_op) out << "minor " << r.minor_op->str() << " (" << to_graph6(*r.minor) << ")\n";
    if (r.certificate) {
        const auto& c = *r.certificate;
        out << "certificate: " << c.minors.size() << " minor classes, Euler genus of G " << c.genus_of_g << ", digest " << c.digest << '\n';
    }
    if (!r.detail.empty()) out << r.detail << '\n';
    return 0;
}

inline int cmd_cut(const Options& o, const std::string& cycle, std::ostream& out) {
    Embedding p = o.require_embedding();
    Cycle c = parse_cycle(p.graph(), cycle);
    EmbeddedCycle ec(p, c);
    auto k = ec.classification();
    auto r = cut_along(ec);
    int before = euler_genus_per_component(p), after = euler_genus_per_component(r.embedding);
    if (o.json) {
        json j;
        j["cycle"] = c.vertices;
        j["two_sided"] = k.two_sided;
        j["separating"] = k.separating;
        j["contractible"] = k.contractible;
        j["euler_genus_before"] = before;
        j["euler_genus_after"] = after;
        j["cut"] = embedding_to_json(r.embedding);
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "cycle " << c.str() << ": " << (k.two_sided ? "two-sided" : "one-sided") << (k.separating ? ", separating" : "")
        << (k.contractible ? ", contractible" : "") << '\n';
    out << "Euler genus " << before << " -> " << after << " after cutting (" << r.graph.order() << " vertices, " << r.graph.size() << " edges)\n";
    return 0;
}

inline int cmd_homotopy(const Options& o, Vertex a, Vertex b, std::ostream& out) {
    Embedding p = o.require_embedding();
    FamilyBudget fb;
    if (o.budget) fb.max_nodes = *o.budget;
    auto f = max_nonhomotopic_internally_disjoint(p, a, b, fb);
    if (o.json) {
        out << to_json(f).dump(2) << '\n';
        return f.within_bound() ? 0 : kViolation;
    }
    out << "family of " << f.members.size() << (a == b ? " cycles" : " paths") << ", k = " << f.k() << ", bound " << f.bound
        << (f.exact ? "" : " (search budget hit, k is a lower bound)") << '\n';
    for (const auto& m : f.members) {
        std::string s;
        for (Vertex v : m) s += (s.empty() ? "" : " ") + std::to_string(v);
        out << "  " << s << '\n';
    }
    return f.within_bound() ? 0 : kViolation;
}

inline int cmd_chain(const Options& o, const std::string& outer, std::ostream& out) {
    Embedding p = o.require_embedding();
    std::size_t cap = o.budget ? static_cast<std::size_t>(*o.budget) : 100000;
    auto c = longest_well_nested_chain(p, cap, parse_outer(p.graph(), outer));
    if (o.json) {
        out << to_json(c).dump(2) << '\n';
        return 0;
    }
    out << "chain of " << c.cycles.size() << " cycles, " << c.discipline.str() << (c.exact ? "" : " (cycle cap hit, length is a lower bound)") << '\n';
    for (const auto& x : c.cycles) out << "  " << x.str() << '\n';
    return 0;
}

inline int cmd_radius(const Options& o, const std::string& cycle, const std::string& outer, std::ostream& out) {
    Embedding p = o.require_embedding();
    Cycle c = parse_cycle(p.graph(), cycle);
    auto r = radius(p, c, parse_outer(p.graph(), outer));
    if (o.json) {
        out << to_json(r).dump(2) << '\n';
        return 0;
    }
    std::vector<std::vector<std::string>> rows{{"face", "radius"}};
    for (auto [f, d] : r.radius) rows.push_back({std::to_string(f), std::to_string(d)});
    print_table(out, rows);
    out << "radius " << r.overall << '\n';
    return 0;
}

inline int cmd_treedecomp(const Options& o, bool heuristic, int exact_cap, std::ostream& out) {
    Graph g = o.load_graph();
    auto r = compute_tree_decomposition(g, heuristic ? TdMode::Heuristic : TdMode::Exact, exact_cap);
    auto v = validate(g, r.td);
    if (!v.ok) throw Error("internal: invalid decomposition (" + v.detail + ")");
    if (o.json) {
        out << json{{"width", r.td.width()}, {"exact", r.exact}, {"degraded", r.degraded}, {"decomposition", td_to_json(r.td)}}.dump(2) << '\n';
        return 0;
    }
    out << "width " << r.td.width() << (r.exact ? " (exact)" : " (upper bound)") << (r.degraded ? ", exact mode above the size cap" : "") << '\n';
    std::vector<std::vector<std::string>> rows{{"node", "bag"}};
    for (const auto& [t, b] : r.td.bags) {
        std::string s;
        for (Vertex x : b) s += (s.empty() ? "" : " ") + std::to_string(x);
        rows.push_back({std::to_string(t), s});
    }
    print_table(out, rows);
    std::string es;
    for (const Edge& e : r.td.tree.edges()) es += (es.empty() ? "" : " ") + e.str();
    out << "tree " << es << '\n';
    return 0;
}

inline std::string join_ints(const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

inline int cmd_separate(const Options& o, const std::string& td_file, std::optional<int> k, std::ostream& out) {
    Graph g = o.load_graph();
    TreeDecomposition td = td_file.empty() ? compute_tree_decomposition(g, TdMode::Exact).td : td_from_json(parse_json_text(read_file(td_file)));
    auto v = validate(g, td);
    if (!v.ok) throw Error("invalid tree decomposition: " + v.detail);
    if (!k) {
        auto s = balanced_1_separation(g, td);
        if (o.json) {
            out << json{{"t0", s.t0}, {"t1", s.t1}, {"t2", s.t2}, {"balanced", s.balanced}}.dump(2) << '\n';
        } else {
            out << "t0 " << s.t0 << (s.balanced ? "" : " (no balanced split exists; closest shown)") << '\n';
            out << "T1 " << join_ints(s.t1) << "\nT2 " << join_ints(s.t2) << '\n';
        }
        return s.balanced ? 0 : kViolation;
    }
    auto s = balanced_separation_sequence(g, td, *k);
    auto violations = check_separation_sequence(td, s, *k);
    if (o.json) {
        json j;
        j["k"] = *k;
        j["parts"] = s.parts;
        j["weights"] = s.weights;
        j["boundary"] = s.boundary;
        j["split_nodes"] = s.split_nodes;
        j["boundary_cap"] = floor_log_four_thirds(3L * *k);
        j["violations"] = violations;
        out << j.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows{{"part", "weight", "boundary", "nodes"}};
        for (std::size_t i = 0; i < s.parts.size(); ++i)
            rows.push_back({std::to_string(i), std::to_string(s.weights[i]), std::to_string(s.boundary[i]), join_ints(s.parts[i])});
        print_table(out, rows);
        out << "boundary cap " << floor_log_four_thirds(3L * *k) << '\n';
        for (const auto& x : violations) out << "violation: " << x << '\n';
    }
    return violations.empty() ? 0 : kViolation;
}

inline int cmd_bounds(const Options& o, int g, long exact_cap, std::optional<long> f_index, const std::string& report, int precision,
                      std::ostream& out) {
    using namespace surfminor::bounds;
    if (!report.empty()) {
        auto rows = asymptotic_report(parse_ids(report), precision);
        json j = json::array();
        std::vector<std::vector<std::string>> table{{"g", "log2 U", "slope in log2 g", "increasing"}};
        for (const auto& r : rows) {
            std::string slope = r.slope ? r.slope->lo.str(MPFR_RNDD, 8) + " .. " + r.slope->hi.str(MPFR_RNDU, 8) : "-";
            std::string inc = r.increasing ? (*r.increasing ? "yes" : "no") : "-";
            table.push_back({std::to_string(r.g), r.log2_u.lo.str(MPFR_RNDD, 20), slope, inc});
            j.push_back({{"g", r.g},
                         {"log2_U", {r.log2_u.lo.str(MPFR_RNDD, 40), r.log2_u.hi.str(MPFR_RNDU, 40)}},
                         {"slope", r.slope ? json{r.slope->lo.str(MPFR_RNDD, 20), r.slope->hi.str(MPFR_RNDU, 20)} : json(nullptr)},
                         {"increasing", r.increasing ? json(*r.increasing) : json(nullptr)}});
        }
        if (o.json) {
            out << j.dump(2) << '\n';
        } else {
            print_table(out, table);
        }
        return 0;
    }
    auto c = constants(g, precision);
    json j = constants_to_json(c);
    std::vector<BoundValue> rows = c.table;
    if (f_index) {
        rows.push_back(f_of(c, *f_index, exact_cap));
        j["f"] = bound_value_to_json(rows.back());
        j["f"]["i"] = *f_index;
    }
    if (o.json) {
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "g = " << g << ", " << precision << "-bit intervals\n";
    std::vector<std::vector<std::string>> table{{"name", "value", "formula"}};
    for (const auto& b : rows) {
        std::string value = b.exact ? b.exact->get_str() : "2^" + b.log2.lo.str(MPFR_RNDD, 25);
        if (value.size() > 60) value = "2^" + b.log2.lo.str(MPFR_RNDD, 25);
        table.push_back({b.name, value, b.formula});
    }
    print_table(out, table);
    return 0;
}

inline int cmd_corpus(const Options& o, const std::string& action, const std::string& path, std::ostream& out) {
    Corpus corpus = load_corpus(read_file(path));
    if (action == "list") {
        std::vector<std::vector<std::string>> rows{{"name", "graph6", "facts"}};
        for (const auto& e : corpus.entries) rows.push_back({e.name, to_graph6(e.graph), std::to_string(e.facts.size())});
        if (o.json) {
            json j = json::array();
            for (const auto& e : corpus.entries) j.push_back(entry_to_json(e));
            out << j.dump(2) << '\n';
        } else {
            print_table(out, rows);
        }
        return 0;
    }
    VerifyOptions vo;
    vo.seed = o.seed ? *o.seed : corpus.seed;
    vo.budget = o.search_budget();
    auto report = verify_corpus(corpus, vo);
    if (o.json) {
        out << report_to_json(report).dump(2) << '\n';
    } else {
        for (const auto& e : report.entries)
            for (const auto& c : e.checks)
                if (!c.ok) out << "FAIL " << e.name << ": " << c.property << ": " << c.detail << '\n';
        out << report.checks << " checks over " << report.entries.size() << " entries, " << report.failures << " failed (seed " << vo.seed << ")\n";
    }
    return report.failures == 0 ? 0 : kViolation;
}

#ifndef SURFMINOR_CORPUS
#define SURFMINOR_CORPUS "data/corpus.json"
#endif

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Surface embeddings, excluded minors, structure detectors and bound evaluation"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* s, bool graph, bool embedding) {
        if (graph) {
            s->add_option("--graph6", o.graph6, "graph in graph6 format");
            s->add_option("--json-graph", o.json_graph, "file holding {\"n\":N,\"edges\":[[u,v],...]}");
        }
        if (graph || embedding) s->add_option("--embedding", o.embedding, "file holding an embedding (rotation and signature)");
        s->add_option("--budget", o.budget, "node budget for searches (default SURFACE_MINORS_BUDGET)");
        s->add_flag("--json", o.json, "machine-readable output");
        s->add_option("--seed", o.seed, "seed for randomized checks");
        s->add_option("--threads", o.threads, "worker threads for searches")->check(CLI::PositiveNumber);
    };
    std::string cycle, outer, check, write, td_file, report, corpus_path = SURFMINOR_CORPUS, corpus_action = "verify";
    Vertex a = 0, b = 0;
    bool heuristic = false;
    int exact_cap = 25, g = 0, precision = 256;
    long f_exact_cap = 1'000'000;
    std::optional<int> k;
    std::optional<long> f_index;

    auto* faces = app.add_subcommand("faces", "facial walks and Euler genus of an embedding");
    common(faces, true, true);
    auto* genus = app.add_subcommand("genus", "minimum orientable and nonorientable Euler genus");
    common(genus, true, true);
    auto* embeddable = app.add_subcommand("embeddable", "does the graph embed in a surface");
    common(embeddable, true, true);
    embeddable->add_option("--surface", o.surface, "<genus>:<orientable|nonorientable>")->required();
    auto* certify = app.add_subcommand("certify", "certify an excluded minor, or check a certificate file");
    common(certify, true, true);
    certify->add_option("--surface", o.surface, "<genus>:<orientable|nonorientable>");
    certify->add_option("--check", check, "verify this certificate file instead");
    certify->add_option("--out", write, "write the certificate to this file");
    auto* cut = app.add_subcommand("cut", "classify a cycle and cut the surface along it");
    common(cut, false, true);
    cut->add_option("--cycle", cycle, "cycle as comma-separated vertex ids")->required();
    auto* homotopy = app.add_subcommand("homotopy", "largest family of pairwise nonhomotopic internally disjoint a-b paths");
    common(homotopy, false, true);
    homotopy->add_option("--a", a, "first end")->required();
    homotopy->add_option("--b", b, "second end (equal to a for cycles through a)")->required();
    auto* chain = app.add_subcommand("chain", "longest chain of well-nested contractible cycles");
    common(chain, false, true);
    chain->add_option("--outer", outer, "outer face as the dart u,v");
    auto* rad = app.add_subcommand("radius", "face-layer radius inside a contractible cycle");
    common(rad, false, true);
    rad->add_option("--cycle", cycle, "cycle as comma-separated vertex ids")->required();
    rad->add_option("--outer", outer, "outer face as the dart u,v");
    auto* tdc = app.add_subcommand("treedecomp", "tree decomposition and treewidth");
    common(tdc, true, true);
    tdc->add_flag("--heuristic", heuristic, "min-fill elimination instead of exact search");
    tdc->add_option("--exact-cap", exact_cap, "largest order solved exactly");
    auto* sep = app.add_subcommand("separate", "balanced 1-separation, or a separation sequence with --k");
    common(sep, true, true);
    sep->add_option("--td", td_file, "tree decomposition file (default: computed)");
    sep->add_option("--k", k, "number of parts")->check(CLI::PositiveNumber);
    auto* bnd = app.add_subcommand("bounds", "constants and bound values for a genus");
    common(bnd, false, false);
    bnd->add_option("--g", g, "Euler genus")->check(CLI::NonNegativeNumber);
    bnd->add_option("--f", f_index, "also evaluate f(g,i) for this i")->check(CLI::NonNegativeNumber);
    bnd->add_option("--exact-cap", f_exact_cap, "largest exact value in bits");
    bnd->add_option("--precision", precision, "interval precision in bits")->check(CLI::Range(64, 1 << 16));
    bnd->add_option("--report", report, "comma-separated increasing genera: log2 U and slopes");
    auto* corpus = app.add_subcommand("corpus", "check the bundled corpus");
    common(corpus, false, false);
    corpus->add_option("action", corpus_action, "verify or list")->check(CLI::IsMember({"verify", "list"}));
    corpus->add_option("--corpus", corpus_path, "corpus file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : kBadInput;
    }
    try {
        if (*faces) return cmd_faces(o, out);
        if (*genus) return cmd_genus(o, out);
        if (*embeddable) return cmd_embeddable(o, out);
        if (*certify) return cmd_certify(o, check, write, out);
        if (*cut) return cmd_cut(o, cycle, out);
        if (*homotopy) return cmd_homotopy(o, a, b, out);
        if (*chain) return cmd_chain(o, outer, out);
        if (*rad) return cmd_radius(o, cycle, outer, out);
        if (*tdc) return cmd_treedecomp(o, heuristic, exact_cap, out);
        if (*sep) return cmd_separate(o, td_file, k, out);
        if (*bnd) return cmd_bounds(o, g, f_exact_cap, f_index, report, precision, out);
        if (*corpus) return cmd_corpus(o, corpus_action, corpus_path, out);
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace surfminor::cli

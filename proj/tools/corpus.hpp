#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "surfminor/certify.hpp"
#include "surfminor/cycles.hpp"
#include "surfminor/genus_search.hpp"
#include "surfminor/graph_io.hpp"
#include "surfminor/structure.hpp"
#include "surfminor/topology.hpp"
#include "surfminor/treedecomp.hpp"

// Bundled graphs with known facts. Every fact names its provenance as
// "known:<source>" or "derived:<oracle>"; facts without one are rejected.
namespace surfminor::cli {

struct Fact {
    std::string property;  // orientable_genus, nonorientable_genus, embeddable, excluded_minor, treewidth
    std::optional<Surface> surface;
    json value;
    std::string provenance;
};

struct CorpusEntry {
    std::string name;
    Graph graph;
    std::vector<Fact> facts;
};

struct Corpus {
    std::uint64_t seed = 1;
    std::vector<CorpusEntry> entries;
};

inline bool valid_provenance(const std::string& p) {
    for (const char* kind : {"known:", "derived:"}) {
        std::string k(kind);
        if (p.size() > k.size() && p.compare(0, k.size(), k) == 0) return true;
    }
    return false;
}

inline Fact fact_from_json(const json& j, const std::string& entry) {
    auto bad = [&](const std::string& why) { return Error("corpus entry " + entry + ": " + why); };
    if (!j.is_object() || !j.contains("property") || !j.contains("value")) throw bad("facts need property and value");
    Fact f;
    f.property = j.at("property").get<std::string>();
    f.value = j.at("value");
    if (!j.contains("provenance") || !j.at("provenance").is_string() || !valid_provenance(j.at("provenance").get<std::string>()))
        throw bad("fact " + f.property + " lacks a provenance of the form known:<source> or derived:<oracle>");
    f.provenance = j.at("provenance").get<std::string>();
    if (f.property == "orientable_genus" || f.property == "nonorientable_genus") {
        if (!f.value.is_null() && !f.value.is_number_integer()) throw bad(f.property + " must be an integer or null");
    } else if (f.property == "embeddable" || f.property == "excluded_minor") {
        if (!j.contains("surface")) throw bad(f.property + " needs a surface");
        f.surface = Surface::parse(j.at("surface").get<std::string>());
        if (!f.value.is_boolean()) throw bad(f.property + " must be true or false");
    } else if (f.property == "treewidth") {
        if (!f.value.is_number_integer()) throw bad("treewidth must be an integer");
    } else {
        throw bad("unknown property " + f.property);
    }
    return f;
}

inline json fact_to_json(const Fact& f) {
    json j;
    j["property"] = f.property;
    if (f.surface) j["surface"] = f.surface->str();
    j["value"] = f.value;
    j["provenance"] = f.provenance;
    return j;
}

inline json entry_to_json(const CorpusEntry& e) {
    json j;
    j["name"] = e.name;
    j["graph6"] = to_graph6(e.graph);
    j["facts"] = json::array();
    for (const auto& f : e.facts) j["facts"].push_back(fact_to_json(f));
    return j;
}

inline Corpus load_corpus(const std::string& text) {
    json j = parse_json_text(text);
    if (!j.is_object() || !j.contains("entries")) throw Error("corpus needs an entries list");
    Corpus c;
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& e : j.at("entries")) {
        CorpusEntry ce;
        ce.name = e.at("name").get<std::string>();
        if (e.contains("graph6")) {
            ce.graph = parse_graph6(e.at("graph6").get<std::string>());
        } else if (e.contains("graph")) {
            ce.graph = graph_from_json(e.at("graph"));
        } else {
            throw Error("corpus entry " + ce.name + " has no graph");
        }
        for (const auto& f : e.value("facts", json::array())) ce.facts.push_back(fact_from_json(f, ce.name));
        c.entries.push_back(std::move(ce));
    }
    return c;
}

// ---- verification -----------------------------------------------------------

struct Check {
    std::string property;
    bool ok = true;
    std::string detail;
};

struct EntryReport {
    std::string name;
    std::vector<Check> checks;
};

struct CorpusReport {
    std::vector<EntryReport> entries;
    long checks = 0;
    long failures = 0;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    SearchBudget budget;
    int random_embeddings = 40;
    std::size_t cycle_cap = 200;
};

inline json report_to_json(const CorpusReport& r) {
    json j;
    j["checks"] = r.checks;
    j["failures"] = r.failures;
    j["entries"] = json::array();
    for (const auto& e : r.entries) {
        json c = json::array();
        for (const auto& x : e.checks) c.push_back({{"property", x.property}, {"ok", x.ok}, {"detail", x.detail}});
        j["entries"].push_back({{"name", e.name}, {"checks", c}});
    }
    return j;
}

namespace detail {

inline Embedding random_embedding(std::mt19937_64& rng, const Graph& g) {
    std::vector<std::vector<Dart>> rot(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) {
        Vertex v = g.vertices()[static_cast<std::size_t>(i)];
        for (int ei : g.incident(i)) rot[static_cast<std::size_t>(i)].push_back(2 * ei + (g.edges()[static_cast<std::size_t>(ei)].u == v ? 0 : 1));
        std::shuffle(rot[static_cast<std::size_t>(i)].begin(), rot[static_cast<std::size_t>(i)].end(), rng);
    }
    std::vector<int> sig(static_cast<std::size_t>(g.size()));
    for (auto& s : sig) s = (rng() & 1) ? -1 : 1;
    return Embedding(g, std::move(rot), std::move(sig));
}

// Empty when every invariant holds, otherwise the first violation.
inline std::string embedding_invariants(const Embedding& p) {
    std::size_t total = 0;
    for (const auto& f : face_traversal(p)) total += f.size();
    const int genus = euler_genus(p);
    if (total != static_cast<std::size_t>(2 * p.graph().size())) return "face sizes sum to " + std::to_string(total);
    if (genus < 0) return "negative Euler genus";
    if (is_orientable(p) && genus % 2 != 0) return "odd Euler genus on an orientable embedding";
    for (Vertex v : p.graph().vertices())
        if (euler_genus(local_change(p, v)) != genus) return "local change at " + std::to_string(v) + " moved the genus";
    return {};
}

inline std::string cut_invariants(const Embedding& p, const std::vector<Cycle>& cycles) {
    const int g0 = euler_genus(p);
    for (const Cycle& c : cycles) {
        EmbeddedCycle ec(p, c);
        const auto& k = ec.classification();
        if (k.contractible && !k.separating) return c.str() + " is contractible but not separating";
        if (k.separating && !k.two_sided) return c.str() + " is separating but one-sided";
        CutResult r = cut_along(ec);
        const int parts = static_cast<int>(r.graph.components().size());
        const int g1 = euler_genus_per_component(r.embedding);
        if (k.separating && (parts != 2 || g1 != g0)) return "separating cut along " + c.str() + " is not additive";
        if (!k.separating && k.two_sided && (parts != 1 || g0 - g1 < 2)) return "two-sided cut along " + c.str() + " reduced genus by " + std::to_string(g0 - g1);
        if (!k.two_sided && (parts != 1 || g0 - g1 < 1)) return "one-sided cut along " + c.str() + " reduced genus by " + std::to_string(g0 - g1);
    }
    return {};
}

}  // namespace detail

inline EntryReport verify_entry(const CorpusEntry& e, const VerifyOptions& opt) {
    EntryReport rep{e.name, {}};
    auto record = [&](const std::string& property, bool ok, const std::string& detail) { rep.checks.push_back({property, ok, detail}); };
    auto guarded = [&](const std::string& property, const std::function<void()>& f) {
        try {
            f();
        } catch (const std::exception& x) {
            record(property, false, std::string("error: ") + x.what());
        }
    };
    const Graph& g = e.graph;
    std::vector<Embedding> witnesses;

    guarded("json round trip", [&] {
        bool ok = parse_graph6(to_graph6(g)) == g && graph_from_json(parse_json_text(graph_to_json(g).dump())) == g;
        record("json round trip", ok, ok ? "" : "graph does not survive graph6 or JSON");
    });

    bool need_genus = std::any_of(e.facts.begin(), e.facts.end(), [](const Fact& f) { return f.property.find("genus") != std::string::npos; });
    std::optional<GenusProfile> profile;
    if (need_genus) guarded("genus", [&] {
        if (!g.is_connected()) throw Error("genus facts need a connected graph");
        profile = min_euler_genus(g, opt.budget);
        if (!profile->exact()) throw Error("search budget exhausted");
        for (const GenusBound* b : {&profile->orientable, &profile->nonorientable})
            if (b->witness) witnesses.push_back(*b->witness);
    });

    for (const Fact& f : e.facts) {
        std::string name = f.property + (f.surface ? " on " + f.surface->str() : "");
        guarded(name, [&] {
            auto expect = [&](const json& got) {
                bool ok = got == f.value;
                record(name, ok, ok ? "" : "expected " + f.value.dump() + ", got " + got.dump() + " (" + f.provenance + ")");
            };
            if (f.property == "orientable_genus" || f.property == "nonorientable_genus") {
                if (!profile) return;
                int v = f.property == "orientable_genus" ? profile->orientable_min() : profile->nonorientable_min();
                expect(v >= kInfinity ? json(nullptr) : json(v));
            } else if (f.property == "embeddable") {
                auto r = embeddable_in(g, *f.surface, opt.budget);
                if (!r.embeddable) throw Error("search budget exhausted");
                for (const auto& w : r.witnesses)
                    if (w.graph().is_connected()) witnesses.push_back(w);
                expect(*r.embeddable);
            } else if (f.property == "excluded_minor") {
                auto r = certify_excluded_minor(g, *f.surface, opt.budget);
                if (r.status == CertifyOutcome::Unknown) throw Error("search budget exhausted");
                expect(r.status == CertifyOutcome::Certified);
                if (r.certificate) {
                    auto back = certificate_from_json(parse_json_text(certificate_to_json(*r.certificate).dump()));
                    auto v = verify_certificate(back);
                    record("certificate re-verifies", v.ok && check_genus_range(back), v.failed);
                }
            } else if (f.property == "treewidth") {
                expect(treewidth(g));
            }
        });
    }

    guarded("random embeddings", [&] {
        std::mt19937_64 rng(opt.seed ^ std::hash<std::string>{}(e.name));
        std::string bad;
        for (const Graph& c : g.components())
            for (int t = 0; t < opt.random_embeddings && bad.empty(); ++t) bad = detail::embedding_invariants(detail::random_embedding(rng, c));
        record("random embeddings", bad.empty(), bad);
    });

    if (profile && g.order() > 0) guarded("blocks", [&] {
        auto via = genus_via_blocks(g, opt.budget);
        bool ok = via.euler_genus == profile->euler_genus() && via.orientable == profile->orientable_min() &&
                  via.nonorientable == profile->nonorientable_min();
        record("blocks", ok, ok ? "" : "genus over blocks differs from direct search");
    });

    guarded("witnesses", [&] {
        std::string bad;
        for (const auto& w : witnesses) {
            if (bad.empty()) bad = detail::embedding_invariants(w);
            if (bad.empty()) bad = detail::cut_invariants(w, enumerate_cycles(w.graph(), opt.cycle_cap));
            if (!bad.empty()) break;
            HomotopyContext ctx(w);
            const auto& vs = w.graph().vertices();
            for (std::size_t i = 0; i < std::min<std::size_t>(vs.size(), 3) && bad.empty(); ++i)
                for (std::size_t j = i; j < std::min<std::size_t>(vs.size(), 3) && bad.empty(); ++j) {
                    auto fam = max_nonhomotopic_internally_disjoint(ctx, vs[i], vs[j]);
                    if (fam.exact && !fam.within_bound()) bad = "homotopy family " + to_json(fam).dump() + " exceeds its bound";
                }
        }
        record("witnesses", bad.empty(), bad);
    });

    guarded("tree decomposition", [&] {
        auto r = compute_tree_decomposition(g, TdMode::Exact);
        auto h = compute_tree_decomposition(g, TdMode::Heuristic);
        auto v = validate(g, r.td);
        std::string bad = v.ok ? "" : v.detail;
        if (bad.empty() && !validate(g, h.td).ok) bad = "heuristic decomposition is invalid";
        if (bad.empty() && r.exact && h.td.width() < r.td.width()) bad = "heuristic width below the exact width";
        if (bad.empty() && td_from_json(parse_json_text(td_to_json(r.td).dump())).bags != r.td.bags) bad = "decomposition does not survive JSON";
        if (bad.empty()) {
            auto s = balanced_1_separation(g, r.td);
            if (s.balanced)
                if (auto why = check_balanced_1_separation(g, r.td, s)) bad = *why;
        }
        record("tree decomposition", bad.empty(), bad);
    });
    return rep;
}

inline CorpusReport verify_corpus(const Corpus& c, const VerifyOptions& opt) {
    CorpusReport r;
    for (const auto& e : c.entries) {
        r.entries.push_back(verify_entry(e, opt));
        for (const auto& x : r.entries.back().checks) {
            ++r.checks;
            r.failures += !x.ok;
        }
    }
    return r;
}

}  // namespace surfminor::cli

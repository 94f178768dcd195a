#pragma once

#include <openssl/evp.h>

#include <atomic>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "connectivity.hpp"
#include "cycles.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "genus_search.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "minors.hpp"
#include "topology.hpp"

namespace surfminor {

inline constexpr const char* kPruningVersion = "rotation-bnb-2";

inline std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

inline json surface_to_json(const Surface& s) { return {{"genus", s.genus}, {"orientable", s.orientable}}; }
inline Surface surface_from_json(const json& j) { return Surface(j.at("genus").get<int>(), j.at("orientable").get<bool>()); }

// The search that refuted G: rerunning it with this configuration reproduces
// the negative claim.
inline json search_configuration(const Graph& g, const Surface& s, const SearchBudget& b) {
    return {{"graph6", to_graph6(g)}, {"surface", surface_to_json(s)}, {"max_nodes", b.max_nodes},
            {"max_log10_space", b.max_log10_space}, {"pruning", kPruningVersion}};
}

// Euler genus of G measured toward the class of s: the smallest Euler genus of
// a surface of that class into which G embeds (via the combination rule).
inline std::optional<int> class_genus(const Graph& g, bool orientable, const SearchBudget& budget) {
    if (g.order() == 0) return 0;
    auto comps = component_profiles(g, budget);
    for (const auto& c : comps)
        if (!c.profile.exact()) return std::nullopt;
    return combined_euler_genus(comps, orientable);
}

struct MinorWitness {
    MinorOp op;
    Graph minor;
    std::vector<Embedding> witnesses;  // one per component of the minor
};

struct ExclusionCertificate {
    Graph graph;
    Surface surface;
    json search;  // configuration of the refuting search
    std::string digest;
    std::vector<MinorWitness> minors;
    int genus_of_g = 0;
};

// Witness embeddings of the components of h fit s under the combination rule.
inline bool witnesses_fit(const Graph& h, const std::vector<Embedding>& ws, const Surface& s, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    long total = 0;
    bool any_nonorientable = false;
    for (const Embedding& w : ws) {
        vs.insert(vs.end(), w.graph().vertices().begin(), w.graph().vertices().end());
        es.insert(es.end(), w.graph().edges().begin(), w.graph().edges().end());
        if (!w.graph().empty() && !w.graph().is_connected()) return fail("witness of a disconnected piece");
        total += euler_genus(w);
        if (!is_orientable(w)) any_nonorientable = true;
    }
    Graph u;
    try {
        u = Graph(vs, es);
    } catch (const Error& e) {
        return fail(std::string("witnesses overlap: ") + e.what());
    }
    if (!(u == h)) return fail("witnesses do not cover the graph");
    if (s.orientable) {
        if (any_nonorientable) return fail("nonorientable witness for an orientable surface");
        if (total > s.genus) return fail("witness genus " + std::to_string(total) + " exceeds " + std::to_string(s.genus));
        return true;
    }
    long need = total + (any_nonorientable ? 0 : 1);
    if (need > s.genus) return fail("witnesses need Euler genus " + std::to_string(need) + " > " + std::to_string(s.genus));
    return true;
}

struct CertifyOutcome {
    enum Status { Certified, GraphEmbeds, MinorDoesNotEmbed, Unknown } status = Unknown;
    std::optional<ExclusionCertificate> certificate;
    std::vector<Embedding> embedding;  // GraphEmbeds: witness for G
    std::optional<MinorOp> minor_op;   // MinorDoesNotEmbed, or the blocking minor for Unknown
    std::optional<Graph> minor;
    std::string detail;
};

inline const char* status_name(CertifyOutcome::Status s) {
    switch (s) {
        case CertifyOutcome::Certified: return "certified";
        case CertifyOutcome::GraphEmbeds: return "graph-embeds";
        case CertifyOutcome::MinorDoesNotEmbed: return "minor-not-embeddable";
        case CertifyOutcome::Unknown: return "unknown";
    }
    return "";
}

// G is an excluded minor for s iff G does not embed and every one-step minor
// does (embeddability is minor-closed, so every proper minor then embeds).
inline CertifyOutcome certify_excluded_minor(const Graph& g, const Surface& s, const SearchBudget& budget = {}) {
    CertifyOutcome out;
    auto self = embeddable_in(g, s, budget);
    if (!self.embeddable) {
        out.detail = "budget exhausted deciding G itself";
        return out;
    }
    if (*self.embeddable) {
        out.status = CertifyOutcome::GraphEmbeds;
        out.embedding = self.witnesses;
        out.detail = "G embeds in " + s.str();
        return out;
    }
    auto minors = one_step_minors(g, true);
    std::vector<EmbeddabilityResult> res(minors.size());
    SearchBudget inner = budget;
    inner.threads = 1;
    auto work = [&](std::size_t i) { res[i] = embeddable_in(minors[i].second, s, inner); };
    if (budget.threads > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < budget.threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < minors.size(); i = next++) work(i);
            });
        for (auto& th : pool) th.join();
    } else {
        for (std::size_t i = 0; i < minors.size(); ++i) work(i);
    }
    ExclusionCertificate cert;
    for (std::size_t i = 0; i < minors.size(); ++i) {
        if (!res[i].embeddable) {
            out.minor_op = minors[i].first;
            out.minor = minors[i].second;
            out.detail = "budget exhausted on minor " + minors[i].first.str();
            return out;
        }
        if (!*res[i].embeddable) {
            out.status = CertifyOutcome::MinorDoesNotEmbed;
            out.minor_op = minors[i].first;
            out.minor = minors[i].second;
            out.detail = "one-step minor " + minors[i].first.str() + " does not embed in " + s.str();
            return out;
        }
        cert.minors.push_back({minors[i].first, minors[i].second, res[i].witnesses});
    }
    auto gg = class_genus(g, s.orientable, budget);
    if (!gg) {
        out.detail = "budget exhausted computing the genus of G";
        return out;
    }
    cert.graph = g;
    cert.surface = s;
    cert.search = search_configuration(g, s, budget);
    cert.digest = sha256_hex(cert.search.dump());
    cert.genus_of_g = *gg;
    out.status = CertifyOutcome::Certified;
    out.certificate = std::move(cert);
    return out;
}

inline json certificate_to_json(const ExclusionCertificate& c) {
    json j;
    j["graph"] = graph_to_json(c.graph);
    j["surface"] = surface_to_json(c.surface);
    j["search"] = c.search;
    j["digest"] = c.digest;
    j["genus_of_G"] = c.genus_of_g;
    j["minors"] = json::array();
    for (const MinorWitness& m : c.minors) {
        json w = json::array();
        for (const Embedding& e : m.witnesses) w.push_back(embedding_to_json(e));
        j["minors"].push_back({{"op", m.op.str()}, {"witness", w}});
    }
    return j;
}

inline ExclusionCertificate certificate_from_json(const json& j) {
    ExclusionCertificate c;
    c.graph = graph_from_json(j.at("graph"));
    c.surface = surface_from_json(j.at("surface"));
    c.search = j.at("search");
    c.digest = j.at("digest").get<std::string>();
    c.genus_of_g = j.at("genus_of_G").get<int>();
    for (const auto& m : j.at("minors")) {
        MinorWitness w;
        w.op = MinorOp::parse(m.at("op").get<std::string>());
        w.minor = apply_minor_op(c.graph, w.op);
        for (const auto& e : m.at("witness")) w.witnesses.push_back(embedding_from_json(e));
        c.minors.push_back(std::move(w));
    }
    return c;
}

struct VerifyReport {
    bool ok = false;
    std::string failed;
};

// Re-checks a certificate from its own data: every one-step minor class is
// represented and its witnesses re-evaluate under euler_genus; the digest
// matches the stored search configuration; with recheck_search the refuting
// search is rerun under that configuration.
inline VerifyReport verify_certificate(const ExclusionCertificate& c, bool recheck_search = true) {
    VerifyReport r;
    auto fail = [&](std::string m) {
        r.failed = std::move(m);
        return r;
    };
    if (sha256_hex(c.search.dump()) != c.digest) return fail("digest does not match the search configuration");
    if (c.search.at("graph6").get<std::string>() != to_graph6(c.graph)) return fail("search configuration names another graph");
    if (!(surface_from_json(c.search.at("surface")) == c.surface)) return fail("search configuration names another surface");
    std::map<std::string, std::string> have;
    for (const MinorWitness& m : c.minors) {
        if (!(apply_minor_op(c.graph, m.op) == m.minor)) return fail("minor " + m.op.str() + " does not match its operation");
        std::string why;
        if (!witnesses_fit(m.minor, m.witnesses, c.surface, &why)) return fail("minor " + m.op.str() + ": " + why);
        have[canonical_key(m.minor)] = m.op.str();
    }
    for (const auto& [op, h] : one_step_minors(c.graph, true))
        if (!have.count(canonical_key(h))) return fail("no witness for the minor class of " + op.str());
    if (recheck_search) {
        SearchBudget b;
        b.max_nodes = c.search.at("max_nodes").get<std::uint64_t>();
        b.max_log10_space = c.search.at("max_log10_space").get<double>();
        auto e = embeddable_in(c.graph, c.surface, b);
        if (!e.embeddable) return fail("refuting search exhausted its budget");
        if (*e.embeddable) return fail("G embeds in " + c.surface.str());
        auto gg = class_genus(c.graph, c.surface.orientable, b);
        if (!gg || *gg != c.genus_of_g) return fail("stored genus of G does not match the search");
    }
    r.ok = true;
    return r;
}

// The genus of an excluded minor for an Euler-genus-g surface is g+1 or g+2.
inline bool check_genus_range(const ExclusionCertificate& c) {
    return c.genus_of_g == c.surface.genus + 1 || c.genus_of_g == c.surface.genus + 2;
}

struct BlockCertification {
    Graph block;
    std::optional<Surface> surface;  // smallest Euler genus, orientable first
    std::optional<ExclusionCertificate> certificate;
    bool exact = true;
};

// For each block with an edge, the minimum-genus surface for which the block
// certifies as an excluded minor. Disconnected graphs are split into the
// blocks of their components.
inline std::vector<BlockCertification> blocks_are_excluded_minors(const Graph& g, const SearchBudget& budget = {}) {
    std::vector<BlockCertification> out;
    for (const Graph& comp : g.components())
        for (const Graph& b : blocks(comp).blocks) {
            if (b.size() == 0) continue;
            BlockCertification bc;
            bc.block = b;
            auto gb = min_euler_genus(b, budget);
            if (!gb.exact()) {
                bc.exact = false;
                out.push_back(std::move(bc));
                continue;
            }
            for (int h = 0; h < gb.euler_genus() && !bc.surface; ++h)
                for (bool orient : {true, false}) {
                    if ((orient && h % 2 != 0) || (!orient && h == 0)) continue;
                    Surface s(h, orient);
                    auto r = certify_excluded_minor(b, s, budget);
                    if (r.status == CertifyOutcome::Unknown) bc.exact = false;
                    if (r.status == CertifyOutcome::Certified) {
                        bc.surface = s;
                        bc.certificate = r.certificate;
                        break;
                    }
                }
            out.push_back(std::move(bc));
        }
    return out;
}

inline std::vector<BlockCertification> blocks_are_excluded_minors(const ExclusionCertificate& c, const SearchBudget& budget = {}) {
    return blocks_are_excluded_minors(c.graph, budget);
}

// B is contained in a disk of Π: the induced embedding of B is planar on every
// component and every cycle of B is Π-contractible.
inline bool in_disk(const Embedding& p, const Graph& b, std::size_t cap = 100000) {
    if (euler_genus_per_component(restrict_embedding(p, b)) != 0) return false;
    bool truncated = false;
    auto cycles = enumerate_cycles(b, cap, &truncated);
    if (truncated) throw Error("in_disk: more than " + std::to_string(cap) + " cycles");
    for (const Cycle& c : cycles)
        if (!EmbeddedCycle(p, c).contractible()) return false;
    return true;
}

struct TwoSeparationCheck {
    bool holds = true;
    std::optional<Separation> violation;
};

// Every 2-separation (A, B) of G has B an edge or B not in a disk of Π.
inline TwoSeparationCheck check_two_separation_property(const Embedding& p) {
    TwoSeparationCheck out;
    for (const Separation& s : two_separations(p.graph())) {
        if (s.side_b.size() == 1 && s.side_b.order() == 2) continue;
        if (in_disk(p, s.side_b)) {
            out.holds = false;
            out.violation = s;
            return out;
        }
    }
    return out;
}

// A bound function compared exactly or by certified intervals: nullopt when
// a comparison cannot be decided.
struct BoundFunction {
    std::function<std::optional<bool>(int a, int b)> le;             // N(a) <= N(b)
    std::function<std::optional<bool>(int a, int b, int c)> sum_le;  // N(a) + N(b) <= N(c)
};

template <class F>
BoundFunction exact_bound_function(F n) {
    return {[n](int a, int b) -> std::optional<bool> { return n(a) <= n(b); },
            [n](int a, int b, int c) -> std::optional<bool> { return n(a) + n(b) <= n(c); }};
}

// The two hypotheses that carry a bound N from 2-connected excluded minors
// to all of them: N nondecreasing on [0, g1+g2] and N(g1+g2) >= N(g1)+N(g2).
inline std::optional<bool> check_superadditive_bound_transfer(const BoundFunction& n, int g1, int g2) {
    if (g1 < 0 || g2 < 0) throw Error("check_superadditive_bound_transfer: negative genus");
    bool unknown = false;
    for (int g = 0; g < g1 + g2; ++g) {
        auto r = n.le(g, g + 1);
        if (!r) unknown = true;
        else if (!*r) return false;
    }
    auto r = n.sum_le(g1, g2, g1 + g2);
    if (!r) return std::nullopt;
    if (!*r) return false;
    if (unknown) return std::nullopt;
    return true;
}

}  // namespace surfminor

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cycles.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "genus_search.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "topology.hpp"

namespace surfminor {

// ---- pieces and pinch kinds ---------------------------------------------

// A vertex, or a face given by its index in face_traversal(Π).
struct Piece {
    enum Kind { OnVertex = 0, OnFace = 1 } kind = OnVertex;
    int id = 0;
    auto operator<=>(const Piece&) const = default;
    std::string str() const { return (kind == OnVertex ? "vertex " : "face ") + std::to_string(id); }
};

// Free, pinched on one piece, or pinched on two pieces.
struct WellNestedKind {
    std::vector<Piece> pieces;  // sorted, vertices first
    bool free() const { return pieces.empty(); }
    bool operator==(const WellNestedKind&) const = default;
    std::string str() const {
        if (pieces.empty()) return "free";
        std::string s = "pinched on " + pieces[0].str();
        if (pieces.size() == 2) s += " and " + pieces[1].str();
        return s;
    }
};

inline json to_json(const WellNestedKind& k) {
    json j;
    j["tag"] = k.pieces.empty() ? "free" : k.pieces.size() == 1 ? "pinched-on-piece" : "pinched-on-two-pieces";
    j["pieces"] = json::array();
    for (const Piece& p : k.pieces) j["pieces"].push_back({{"kind", p.kind == Piece::OnVertex ? "vertex" : "face"}, {"id", p.id}});
    return j;
}

// A face as a subgraph: its vertex set and edge set.
struct FacePart {
    std::vector<Vertex> vertices;
    std::set<Edge> edges;
};

inline std::vector<FacePart> face_parts(const Embedding& p) {
    const Graph& g = p.graph();
    std::vector<FacePart> out;
    for (const FaceWalk& f : face_traversal(p)) {
        FacePart fp;
        fp.vertices = f.vertices(g);
        std::sort(fp.vertices.begin(), fp.vertices.end());
        fp.vertices.erase(std::unique(fp.vertices.begin(), fp.vertices.end()), fp.vertices.end());
        for (int ei : f.edge_indices()) fp.edges.insert(g.edges()[static_cast<std::size_t>(ei)]);
        out.push_back(std::move(fp));
    }
    return out;
}

// Closed walk as a vertex sequence, minimal over rotations and reversal.
inline std::vector<Vertex> canonical_walk(std::vector<Vertex> vs) {
    std::vector<Vertex> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t s = 0; s < vs.size(); ++s) {
            std::vector<Vertex> cand(vs.begin() + static_cast<long>(s), vs.end());
            cand.insert(cand.end(), vs.begin(), vs.begin() + static_cast<long>(s));
            if (best.empty() || cand < best) best = cand;
        }
        std::reverse(vs.begin(), vs.end());
    }
    return best;
}

namespace detail {

struct Subgraph {
    std::set<Vertex> vertices;
    std::set<Edge> edges;
    bool operator==(const Subgraph&) const = default;
};

inline Subgraph cycle_part(const Cycle& c) {
    Subgraph s;
    s.vertices.insert(c.vertices.begin(), c.vertices.end());
    for (const Edge& e : c.edges()) s.edges.insert(e);
    return s;
}

inline Subgraph intersect(const Subgraph& a, const std::vector<Vertex>& vs, const std::set<Edge>& es) {
    Subgraph s;
    for (Vertex v : vs)
        if (a.vertices.count(v)) s.vertices.insert(v);
    for (const Edge& e : es)
        if (a.edges.count(e)) s.edges.insert(e);
    return s;
}

inline std::vector<Subgraph> components(const Subgraph& s) {
    std::map<Vertex, Vertex> parent;
    for (Vertex v : s.vertices) parent[v] = v;
    auto find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : s.edges) parent[find(e.u)] = find(e.v);
    std::map<Vertex, Subgraph> by_root;
    for (Vertex v : s.vertices) by_root[find(v)].vertices.insert(v);
    for (const Edge& e : s.edges) by_root[find(e.u)].edges.insert(e);
    std::vector<Subgraph> out;
    for (auto& [r, c] : by_root) out.push_back(std::move(c));
    return out;
}

// Internal vertices when s is a path (one vertex counts as a path).
inline std::optional<std::set<Vertex>> path_interior(const Subgraph& s) {
    if (s.vertices.empty() || s.edges.size() + 1 != s.vertices.size() || components(s).size() != 1) return std::nullopt;
    std::map<Vertex, int> deg;
    for (const Edge& e : s.edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    std::set<Vertex> inner;
    for (auto [v, d] : deg) {
        if (d > 2) return std::nullopt;
        if (d == 2) inner.insert(v);
    }
    return inner;
}

// The piece explaining one component of C ∩ C′: a single vertex is a vertex
// piece; a path must be C′ ∩ f for a face f meeting C in a path P of at least
// 3 edges, with C′ ∩ f inside the interior of P.
inline std::optional<Piece> explain(const std::vector<FacePart>& faces, const Subgraph& c1, const Subgraph& c2, const Subgraph& k) {
    if (k.edges.empty()) return Piece{Piece::OnVertex, *k.vertices.begin()};
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        Subgraph pf = intersect(c1, faces[fi].vertices, faces[fi].edges);
        if (pf.edges.size() < 3) continue;
        auto inner = path_interior(pf);
        if (!inner) continue;
        Subgraph qf = intersect(c2, faces[fi].vertices, faces[fi].edges);
        if (!(qf == k)) continue;
        if (std::all_of(qf.vertices.begin(), qf.vertices.end(), [&](Vertex v) { return inner->count(v) > 0; }))
            return Piece{Piece::OnFace, static_cast<int>(fi)};
    }
    return std::nullopt;
}

// The common shape of C and C′ in the well-nested / well-homotopic sense.
inline std::optional<WellNestedKind> pinch_kind(const std::vector<FacePart>& faces, const Cycle& a, const Cycle& b) {
    Subgraph s1 = cycle_part(a), s2 = cycle_part(b);
    Subgraph common;
    for (Vertex v : s2.vertices)
        if (s1.vertices.count(v)) common.vertices.insert(v);
    for (const Edge& e : s2.edges)
        if (s1.edges.count(e)) common.edges.insert(e);
    auto comps = components(common);
    if (comps.size() > 2) return std::nullopt;
    WellNestedKind k;
    for (const Subgraph& c : comps) {
        auto piece = explain(faces, s1, s2, c);
        if (!piece) return std::nullopt;
        k.pieces.push_back(*piece);
    }
    std::sort(k.pieces.begin(), k.pieces.end());
    if (k.pieces.size() == 2 && k.pieces[0] == k.pieces[1]) return std::nullopt;
    return k;
}

inline bool edges_within(const Cycle& c, const Graph& h) {
    for (const Edge& e : c.edges())
        if (!h.has_edge(e)) return false;
    return true;
}

}  // namespace detail

// ---- nesting ------------------------------------------------------------

// C′ ⊆ Int(C) for contractible C and C′; throws naming the failed condition.
inline void require_nested(const Embedding& p, const Cycle& c, const Cycle& c2, std::optional<FaceState> outer = std::nullopt) {
    EmbeddedCycle a(p, c, outer), b(p, c2, outer);
    if (!a.contractible()) throw Error("cycle " + c.str() + " is not contractible");
    if (!b.contractible()) throw Error("cycle " + c2.str() + " is not contractible");
    Graph in = a.interior();
    for (const Edge& e : c2.edges())
        if (!in.has_edge(e)) throw Error("cycle " + c2.str() + " is not nested in " + c.str() + ": edge " + e.str() + " lies outside");
}

// Category of C′ well nested in C, or none when C′ is nested but not well
// nested. Pinch paths on faces are measured in edges.
inline std::optional<WellNestedKind> classify_well_nested(const Embedding& p, const Cycle& c, const Cycle& c2,
                                                          std::optional<FaceState> outer = std::nullopt) {
    if (c.canonical() == c2.canonical()) throw Error("cycles " + c.str() + " and " + c2.str() + " coincide");
    require_nested(p, c, c2, outer);
    return detail::pinch_kind(face_parts(p), c, c2);
}

struct NestedChain {
    std::vector<Cycle> cycles;  // C0 innermost .. Ck outermost
    WellNestedKind discipline;
    std::size_t candidates = 0;
    bool exact = true;  // false: the cycle cap was hit, length is a lower bound
};

inline json to_json(const NestedChain& c) {
    json j;
    j["length"] = c.cycles.size();
    j["discipline"] = to_json(c.discipline);
    j["cycles"] = json::array();
    for (const Cycle& x : c.cycles) j["cycles"].push_back(x.vertices);
    j["candidates"] = c.candidates;
    j["exact"] = c.exact;
    return j;
}

// Longest chain C0, ..., Ck of contractible cycles, each well nested in the
// next under one discipline. Searches the first cap cycles in enumeration
// order (shortest first, then lexicographic).
inline NestedChain longest_well_nested_chain(const Embedding& p, std::size_t cap = 100000,
                                             std::optional<FaceState> outer = std::nullopt) {
    const Graph& g = p.graph();
    bool truncated = false;
    auto all = enumerate_cycles(g, cap, &truncated);
    std::vector<Cycle> cs;
    std::vector<Graph> interiors;
    for (const Cycle& c : all) {
        EmbeddedCycle ec(p, c, outer);
        if (!ec.contractible()) continue;
        cs.push_back(c);
        interiors.push_back(ec.interior());
    }
    NestedChain best;
    best.candidates = cs.size();
    best.exact = !truncated;
    if (cs.empty()) return best;
    best.cycles = {cs[0]};
    const auto faces = face_parts(p);
    const std::size_t n = cs.size();
    // inner j -> outer i, grouped by discipline
    std::map<std::vector<Piece>, std::vector<std::vector<int>>> up;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !detail::edges_within(cs[j], interiors[i])) continue;
            if (detail::edges_within(cs[i], interiors[j])) continue;
            auto k = detail::pinch_kind(faces, cs[i], cs[j]);
            if (!k) continue;
            auto& adj = up[k->pieces];
            if (adj.empty()) adj.resize(n);
            adj[j].push_back(static_cast<int>(i));
        }
    for (const auto& [key, adj] : up) {
        std::vector<int> len(n, 0), nxt(n, -1);
        auto longest = [&](auto&& self, int v) -> int {
            if (len[static_cast<std::size_t>(v)]) return len[static_cast<std::size_t>(v)];
            int l = 1;
            for (int w : adj[static_cast<std::size_t>(v)]) {
                int c = 1 + self(self, w);
                if (c > l) {
                    l = c;
                    nxt[static_cast<std::size_t>(v)] = w;
                }
            }
            return len[static_cast<std::size_t>(v)] = l;
        };
        for (std::size_t v = 0; v < n; ++v) {
            int l = longest(longest, static_cast<int>(v));
            if (static_cast<std::size_t>(l) <= best.cycles.size()) continue;
            best.cycles.clear();
            for (int x = static_cast<int>(v); x >= 0; x = nxt[static_cast<std::size_t>(x)]) best.cycles.push_back(cs[static_cast<std::size_t>(x)]);
            best.discipline.pieces = key;
        }
    }
    return best;
}

// Faces of the first embedding given by face index, between C and C′
// (inside C, not inside C′), as indices into face_traversal(p).
inline std::vector<int> faces_between(const Embedding& p, const Cycle& c, const Cycle& c2,
                                      std::optional<FaceState> outer = std::nullopt) {
    EmbeddedCycle a(p, c, outer);
    auto in = a.interior_faces();
    if (c.canonical() == c2.canonical()) return {};
    require_nested(p, c, c2, outer);
    auto inner = EmbeddedCycle(p, c2, outer).interior_faces();
    std::vector<int> out;
    std::set_difference(in.begin(), in.end(), inner.begin(), inner.end(), std::back_inserter(out));
    return out;
}

// B(C): the faces of Int(C ∪ C′) that share a vertex with C.
inline std::vector<int> boundary_faces(const Embedding& p, const Cycle& c, const Cycle& c2,
                                       std::optional<FaceState> outer = std::nullopt) {
    auto parts = face_parts(p);
    std::vector<int> out;
    for (int fi : faces_between(p, c, c2, outer)) {
        const auto& vs = parts[static_cast<std::size_t>(fi)].vertices;
        if (std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return c.has_vertex(v); })) out.push_back(fi);
    }
    return out;
}

struct ClosestCycle {
    enum Status { Found, Degenerate, Innermost } status = Found;
    Cycle cycle;  // empty for Innermost; C itself for Degenerate
};

inline const char* status_name(ClosestCycle::Status s) {
    return s == ClosestCycle::Found ? "found" : s == ClosestCycle::Degenerate ? "degenerate" : "innermost";
}

// The cycle C′ nested in C, closest to C, with the given faces inside
// Int(C ∪ C′). Throws when the closest cycle is not unique.
inline ClosestCycle closest_enclosing_cycle(const Embedding& p, const Cycle& c, const std::vector<int>& faces,
                                            std::optional<FaceState> outer = std::nullopt, std::size_t cap = 100000) {
    EmbeddedCycle ec(p, c, outer);
    if (!ec.contractible()) throw Error("closest_enclosing_cycle: cycle " + c.str() + " is not contractible");
    auto fc = ec.interior_faces();
    for (int f : faces)
        if (!std::binary_search(fc.begin(), fc.end(), f)) throw Error("closest_enclosing_cycle: face " + std::to_string(f) + " is not inside " + c.str());
    bool truncated = false;
    auto cycles = enumerate_cycles(ec.interior(), cap, &truncated);
    if (truncated) throw Error("closest_enclosing_cycle: more than " + std::to_string(cap) + " cycles inside " + c.str());

    struct Candidate {
        Cycle cycle;
        Graph strict;
    };
    std::vector<Candidate> cands;
    for (const Cycle& d : cycles) {
        EmbeddedCycle ed(p, d, outer);
        if (!ed.contractible()) continue;
        auto fd = ed.interior_faces();
        bool clear = std::none_of(faces.begin(), faces.end(), [&](int f) { return std::binary_search(fd.begin(), fd.end(), f); });
        if (clear) cands.push_back({d, ed.strict_interior()});
    }
    if (cands.empty()) return {ClosestCycle::Innermost, {}};
    // D ⊆ Int(C ∪ D2) iff D meets no edge of int(D2) and no vertex of int(D2) off D2.
    auto within = [](const Cycle& d, const Candidate& d2) {
        for (const Edge& e : d.edges())
            if (d2.strict.has_edge(e)) return false;
        for (Vertex v : d.vertices)
            if (d2.strict.has_vertex(v) && !d2.cycle.has_vertex(v)) return false;
        return true;
    };
    std::vector<const Candidate*> closest;
    for (const Candidate& d : cands)
        if (std::all_of(cands.begin(), cands.end(), [&](const Candidate& d2) { return within(d.cycle, d2); })) closest.push_back(&d);
    if (closest.size() != 1)
        throw Error("closest_enclosing_cycle: " + std::to_string(closest.size()) + " cycles qualify as closest to " + c.str());
    const Cycle& r = closest[0]->cycle;
    return {r == c.canonical() ? ClosestCycle::Degenerate : ClosestCycle::Found, r};
}

// ---- radius -------------------------------------------------------------

struct RadiusMap {
    std::map<int, int> radius;  // face index -> radius
    int overall = 0;
};

inline json to_json(const RadiusMap& r) {
    json j;
    j["radius"] = r.overall;
    j["faces"] = json::array();
    for (auto [f, d] : r.radius) j["faces"].push_back({{"face", f}, {"radius", d}});
    return j;
}

// Faces inside C layered by vertex contact: layer 1 touches V(C), layer i+1
// touches layer i and no earlier layer.
inline RadiusMap radius(const Embedding& p, const Cycle& c, std::optional<FaceState> outer = std::nullopt) {
    EmbeddedCycle ec(p, c, outer);
    auto faces = ec.interior_faces();
    auto parts = face_parts(p);
    RadiusMap out;
    std::set<Vertex> frontier(c.vertices.begin(), c.vertices.end());
    for (int layer = 1; out.radius.size() < faces.size(); ++layer) {
        std::set<Vertex> next;
        for (int f : faces) {
            if (out.radius.count(f)) continue;
            const auto& vs = parts[static_cast<std::size_t>(f)].vertices;
            if (std::none_of(vs.begin(), vs.end(), [&](Vertex v) { return frontier.count(v) > 0; })) continue;
            out.radius[f] = layer;
            next.insert(vs.begin(), vs.end());
        }
        if (next.empty()) throw Error("radius: face not reachable from " + c.str());
        frontier = std::move(next);
        out.overall = layer;
    }
    return out;
}

// ---- almost-disjoint families -------------------------------------------

// Each set shares at most one vertex with the union of the others.
inline bool almost_disjoint_sets(const std::vector<std::vector<Vertex>>& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::set<Vertex> shared;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i == j) continue;
            for (Vertex v : sets[i])
                if (std::find(sets[j].begin(), sets[j].end(), v) != sets[j].end()) shared.insert(v);
        }
        if (shared.size() > 1) return false;
    }
    return true;
}

inline bool is_almost_disjoint(const std::vector<Cycle>& cycles) {
    std::vector<std::vector<Vertex>> sets;
    for (const Cycle& c : cycles) sets.push_back(c.sorted_vertices());
    return almost_disjoint_sets(sets);
}

struct AlmostDisjointChoice {
    std::vector<int> chosen;  // indices into the input
    bool exact = true;
    std::uint64_t nodes = 0;
};

// Largest almost-disjoint subfamily, by branch and bound on the exact union
// condition. Sets must be sorted.
inline AlmostDisjointChoice max_almost_disjoint(const std::vector<std::vector<Vertex>>& sets, std::uint64_t max_nodes = 50'000'000) {
    const std::size_t n = sets.size();
    auto common = [&](std::size_t i, std::size_t j) {
        std::vector<Vertex> out;
        std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(), std::back_inserter(out));
        return out;
    };
    std::vector<std::vector<std::vector<Vertex>>> shared(n, std::vector<std::vector<Vertex>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) shared[i][j] = shared[j][i] = common(i, j);
    AlmostDisjointChoice best;
    std::vector<int> cur;
    std::vector<Vertex> touch(n, -1);  // the one vertex each chosen set shares
    std::vector<char> has_touch(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (++best.nodes > max_nodes) {
            best.exact = false;
            return;
        }
        if (cur.size() + (n - i) <= best.chosen.size()) return;
        if (i == n) {
            best.chosen = cur;
            return;
        }
        // include i
        bool ok = true;
        std::optional<Vertex> mine;
        std::vector<std::pair<int, Vertex>> set_touch;
        for (int c : cur) {
            const auto& s = shared[static_cast<std::size_t>(c)][i];
            if (s.empty()) continue;
            if (s.size() > 1 || (mine && *mine != s[0]) ||
                (has_touch[static_cast<std::size_t>(c)] && touch[static_cast<std::size_t>(c)] != s[0])) {
                ok = false;
                break;
            }
            mine = s[0];
            if (!has_touch[static_cast<std::size_t>(c)]) set_touch.emplace_back(c, s[0]);
        }
        if (ok) {
            for (auto [c, v] : set_touch) {
                has_touch[static_cast<std::size_t>(c)] = 1;
                touch[static_cast<std::size_t>(c)] = v;
            }
            if (mine) {
                has_touch[i] = 1;
                touch[i] = *mine;
            }
            cur.push_back(static_cast<int>(i));
            self(self, i + 1);
            cur.pop_back();
            has_touch[i] = 0;
            for (auto [c, v] : set_touch) has_touch[static_cast<std::size_t>(c)] = 0;
        }
        self(self, i + 1);
    };
    rec(rec, 0);
    return best;
}

// ---- cycles on a spanning tree ------------------------------------------

// Whether the subgraphs C0..Ck of one graph are cycles on a spanning tree
// rooted in a. A single subgraph (k = 0) is accepted.
inline bool is_cycles_on_spanning_tree(const Vertex a, const std::vector<Graph>& parts) {
    if (parts.empty()) return false;
    std::set<Edge> all;
    std::set<Vertex> vs;
    for (const Graph& h : parts) {
        all.insert(h.edges().begin(), h.edges().end());
        vs.insert(h.vertices().begin(), h.vertices().end());
    }
    if (!vs.count(a)) return false;
    const std::size_t k1 = parts.size();
    if (all.size() + 1 != vs.size() + k1) return false;
    // e_i must belong solely to C_i.
    std::vector<std::vector<Edge>> options(k1);
    for (std::size_t i = 0; i < k1; ++i)
        for (const Edge& e : parts[i].edges()) {
            bool solely = true;
            for (std::size_t j = 0; j < k1; ++j)
                if (j != i && parts[j].has_edge(e)) solely = false;
            if (solely) options[i].push_back(e);
        }
    std::vector<Vertex> vlist(vs.begin(), vs.end());
    std::vector<Edge> pick(k1);
    auto check = [&]() {
        std::vector<Edge> tree;
        for (const Edge& e : all)
            if (std::find(pick.begin(), pick.end(), e) == pick.end()) tree.push_back(e);
        Graph t(vlist, tree);
        if (!t.is_connected()) return false;
        auto tpath = [&](Vertex x, Vertex y) {
            auto ps = enumerate_paths(t, x, y, 1);
            return ps.front();
        };
        for (std::size_t i = 0; i < k1; ++i) {
            auto fund = tpath(pick[i].u, pick[i].v);
            std::set<Vertex> cyc(fund.begin(), fund.end());
            std::set<Edge> expect{pick[i]};
            for (std::size_t s = 0; s + 1 < fund.size(); ++s) expect.insert(Edge(fund[s], fund[s + 1]));
            if (!cyc.count(a)) {
                // the tree path from a to the nearest vertex of the cycle
                std::vector<Vertex> best;
                for (Vertex x : cyc) {
                    auto pth = tpath(a, x);
                    if (std::count_if(pth.begin(), pth.end(), [&](Vertex y) { return cyc.count(y) > 0; }) == 1) best = pth;
                }
                for (std::size_t s = 0; s + 1 < best.size(); ++s) expect.insert(Edge(best[s], best[s + 1]));
            }
            std::set<Edge> have(parts[i].edges().begin(), parts[i].edges().end());
            if (have != expect) return false;
            std::set<Vertex> hv(parts[i].vertices().begin(), parts[i].vertices().end()), ev;
            for (const Edge& e : expect) {
                ev.insert(e.u);
                ev.insert(e.v);
            }
            if (hv != ev) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == k1) return check();
        for (const Edge& e : options[i]) {
            pick[i] = e;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

// ---- homotopy classes of a-b paths --------------------------------------

// k bound on a family P0..Pk of pairwise nonhomotopic internally disjoint
// a-b paths in an embedding of Euler genus g.
inline int homotopy_class_bound(int g) { return g <= 1 ? g : 3 * g - 3; }

namespace detail {

// Gaussian elimination over GF(2) on edge-incidence vectors.
class Z2Span {
public:
    explicit Z2Span(std::size_t bits) : words_((bits + 63) / 64) {}
    using Row = std::vector<std::uint64_t>;
    Row row() const { return Row(words_, 0); }
    static void flip(Row& r, std::size_t bit) { r[bit / 64] ^= std::uint64_t{1} << (bit % 64); }
    Row reduce(Row r) const {
        for (const auto& [pivot, b] : basis_)
            if ((r[pivot / 64] >> (pivot % 64)) & 1u)
                for (std::size_t w = 0; w < words_; ++w) r[w] ^= b[w];
        return r;
    }
    void add(Row r) {
        r = reduce(std::move(r));
        for (std::size_t w = 0; w < words_; ++w)
            if (r[w]) {
                std::size_t pivot = w * 64 + static_cast<std::size_t>(__builtin_ctzll(r[w]));
                for (auto& [p, b] : basis_)
                    if ((b[pivot / 64] >> (pivot % 64)) & 1u)
                        for (std::size_t x = 0; x < words_; ++x) b[x] ^= r[x];
                basis_.emplace_back(pivot, std::move(r));
                return;
            }
    }
    bool contains(const Row& r) const {
        Row x = reduce(r);
        return std::all_of(x.begin(), x.end(), [](std::uint64_t w) { return w == 0; });
    }

private:
    std::size_t words_;
    std::vector<std::pair<std::size_t, Row>> basis_;
};

}  // namespace detail

// Per-embedding cache of cycle classifications and pairwise homotopy.
class HomotopyContext {
public:
    explicit HomotopyContext(const Embedding& p) : p_(p), faces_(p.graph().size()) {
        const Graph& g = p.graph();
        for (const FaceWalk& f : face_traversal(p)) {
            auto r = faces_.row();
            for (int ei : f.edge_indices()) detail::Z2Span::flip(r, static_cast<std::size_t>(ei));
            faces_.add(std::move(r));
        }
        genus_ = g.size() == 0 ? 0 : euler_genus(p);
    }

    const Embedding& embedding() const { return p_; }
    int genus() const { return genus_; }

    struct Info {
        bool two_sided = true;
        bool contractible = false;
    };
    const Info& info(const Cycle& c) {
        Cycle k = c.canonical();
        auto it = info_.find(k.vertices);
        if (it != info_.end()) return it->second;
        EmbeddedCycle ec(p_, k);
        Info in{ec.two_sided(), ec.contractible()};
        return info_.emplace(k.vertices, in).first->second;
    }

    // C + C′ is a sum of face boundaries mod 2.
    bool z2_homologous(const Cycle& a, const Cycle& b) const {
        const Graph& g = p_.graph();
        auto r = faces_.row();
        for (const Edge& e : a.edges()) detail::Z2Span::flip(r, static_cast<std::size_t>(g.edge_index(e)));
        for (const Edge& e : b.edges()) detail::Z2Span::flip(r, static_cast<std::size_t>(g.edge_index(e)));
        return faces_.contains(r);
    }

    // Two cycles through a common vertex, sharing nothing else.
    bool loops_homotopic(const Cycle& a, const Cycle& b) {
        const Info& ia = info(a);
        const Info& ib = info(b);
        if (ia.contractible || ib.contractible) return ia.contractible && ib.contractible;
        if (ia.two_sided != ib.two_sided) return false;
        if (!ia.two_sided) return z2_homologous(a, b);
        auto key = std::make_pair(a.canonical().vertices, b.canonical().vertices);
        if (key.first > key.second) std::swap(key.first, key.second);
        auto it = pair_.find(key);
        if (it != pair_.end()) return it->second;
        bool h = homotopy_region(p_, a, b).has_value();
        pair_[key] = h;
        return h;
    }

private:
    Embedding p_;
    detail::Z2Span faces_;
    int genus_ = 0;
    std::map<std::vector<Vertex>, Info> info_;
    std::map<std::pair<std::vector<Vertex>, std::vector<Vertex>>, bool> pair_;
};

struct FamilyBudget {
    std::size_t max_candidates = 100000;
    std::uint64_t max_nodes = 10'000'000;
};

struct HomotopyFamily {
    Vertex a = 0, b = 0;
    std::vector<std::vector<Vertex>> members;  // paths a..b; for a = b, cycles starting at a
    std::size_t candidates = 0;
    int genus = 0;
    int bound = 0;  // on k = |members| - 1
    bool exact = true;
    int k() const { return static_cast<int>(members.size()) - 1; }
    bool within_bound() const { return k() <= bound; }
};

inline json to_json(const HomotopyFamily& f) {
    json j;
    j["a"] = f.a;
    j["b"] = f.b;
    j["size"] = f.members.size();
    j["k"] = f.k();
    j["euler_genus"] = f.genus;
    j["bound"] = f.bound;
    j["within_bound"] = f.within_bound();
    j["members"] = f.members;
    j["candidates"] = f.candidates;
    j["exact"] = f.exact;
    return j;
}

// Largest family of pairwise internally disjoint a-b paths (a != b) or
// cycles through a (a = b), no two homotopic. Paths P, Q are homotopic when
// the cycle P ∪ Q is contractible. Two cycles through a are homotopic when
// both are contractible; when both are noncontractible and two-sided, when
// the cut test finds the cylinder between them; when both are one-sided,
// when they are homologous mod 2.
inline HomotopyFamily max_nonhomotopic_internally_disjoint(HomotopyContext& ctx, Vertex a, Vertex b, const FamilyBudget& budget = {}) {
    const Graph& g = ctx.embedding().graph();
    g.checked_index(a);
    g.checked_index(b);
    HomotopyFamily out;
    out.a = a;
    out.b = b;
    out.genus = ctx.genus();
    out.bound = homotopy_class_bound(ctx.genus());
    bool truncated = false;
    std::vector<std::vector<Vertex>> items;
    if (a != b) {
        items = enumerate_paths(g, a, b, budget.max_candidates, &truncated);
    } else {
        for (const Cycle& c : enumerate_cycles(g, budget.max_candidates, &truncated)) {
            int i = c.index_of(a);
            if (i < 0) continue;
            std::vector<Vertex> r;
            for (std::size_t k = 0; k < c.length(); ++k) r.push_back(c.at(static_cast<std::size_t>(i) + k));
            items.push_back(std::move(r));
        }
    }
    out.candidates = items.size();
    out.exact = !truncated;
    const std::size_t n = items.size();
    auto inner = [&](const std::vector<Vertex>& x) {
        std::vector<Vertex> s(x.begin() + 1, x.end() - (a != b ? 1 : 0));
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<std::vector<Vertex>> inners;
    for (const auto& x : items) inners.push_back(inner(x));
    std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Vertex> both;
            std::set_intersection(inners[i].begin(), inners[i].end(), inners[j].begin(), inners[j].end(), std::back_inserter(both));
            if (!both.empty()) continue;
            bool homotopic;
            if (a != b) {
                Cycle c{items[i]};
                for (std::size_t k = items[j].size() - 2; k >= 1; --k) c.vertices.push_back(items[j][k]);
                homotopic = ctx.info(c).contractible;
            } else {
                homotopic = ctx.loops_homotopic(Cycle{items[i]}, Cycle{items[j]});
            }
            ok[i][j] = ok[j][i] = homotopic ? 0 : 1;
        }
    // maximum clique of the compatibility graph
    std::vector<int> best, cur;
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self, std::vector<int> cand) -> void {
        if (++nodes > budget.max_nodes) {
            out.exact = false;
            return;
        }
        if (cand.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        while (!cand.empty()) {
            if (cur.size() + cand.size() <= best.size()) return;
            int v = cand.front();
            cand.erase(cand.begin());
            std::vector<int> next;
            for (int w : cand)
                if (ok[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) next.push_back(w);
            cur.push_back(v);
            self(self, std::move(next));
            cur.pop_back();
        }
        if (cur.size() > best.size()) best = cur;
    };
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    rec(rec, all);
    for (int i : best) out.members.push_back(items[static_cast<std::size_t>(i)]);
    return out;
}

inline HomotopyFamily max_nonhomotopic_internally_disjoint(const Embedding& p, Vertex a, Vertex b, const FamilyBudget& budget = {}) {
    HomotopyContext ctx(p);
    return max_nonhomotopic_internally_disjoint(ctx, a, b, budget);
}

// ---- well-homotopic cycles ----------------------------------------------

// Category of two noncontractible homotopic cycles; throws when they are not.
inline std::optional<WellNestedKind> classify_well_homotopic(const Embedding& p, const Cycle& c, const Cycle& c2) {
    for (const Cycle* x : {&c, &c2}) {
        EmbeddedCycle ec(p, *x);
        if (!ec.two_sided()) throw Error("classify_well_homotopic: cycle " + x->str() + " is one-sided");
        if (ec.contractible()) throw Error("classify_well_homotopic: cycle " + x->str() + " is contractible");
    }
    if (!homotopy_region(p, c, c2)) throw Error("classify_well_homotopic: cycles " + c.str() + " and " + c2.str() + " are not homotopic");
    return detail::pinch_kind(face_parts(p), c, c2);
}

struct HomotopicOrder {
    bool in_order = false;  // C_j misses int(C_i ∪ C_i+1) for all i, j
    std::optional<WellNestedKind> discipline;  // set when every step is well homotopic under one discipline
    std::string reason;
};

// Checks C0, ..., Ck for being homotopic in this order and well homotopic.
inline HomotopicOrder well_homotopic_order(const Embedding& p, const std::vector<Cycle>& cs) {
    HomotopicOrder out;
    if (cs.size() < 2) throw Error("well_homotopic_order: need at least two cycles");
    std::optional<WellNestedKind> common;
    bool uniform = true;
    out.in_order = true;
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
        auto k = classify_well_homotopic(p, cs[i], cs[i + 1]);
        if (!k) {
            uniform = false;
            if (out.reason.empty()) out.reason = "step " + std::to_string(i) + " is not well homotopic";
        } else if (common && !(*common == *k)) {
            uniform = false;
            if (out.reason.empty()) out.reason = "step " + std::to_string(i) + " is " + k->str() + ", earlier steps " + common->str();
        } else {
            common = k;
        }
        auto h = homotopy_region(p, cs[i], cs[i + 1]);
        const Graph& band = h->interior;
        for (std::size_t j = 0; j < cs.size(); ++j) {
            bool hit = false;
            for (Vertex v : cs[j].vertices)
                if (band.has_vertex(v) && !cs[i].has_vertex(v) && !cs[i + 1].has_vertex(v)) hit = true;
            for (const Edge& e : cs[j].edges())
                if (band.has_edge(e) && !cs[i].has_edge(e) && !cs[i + 1].has_edge(e)) hit = true;
            if (hit && out.in_order) {
                out.in_order = false;
                out.reason = "cycle " + std::to_string(j) + " enters the region between cycles " + std::to_string(i) + " and " + std::to_string(i + 1);
            }
        }
    }
    if (uniform && out.in_order) out.discipline = common;
    return out;
}

// ---- contractible squares -----------------------------------------------

struct SquareCheck {
    bool ok = false;
    std::string failed;  // the clause that failed
    WellNestedKind kind;
    std::vector<int> boundary;  // B(C)
};

// (C, C′, C″) is a contractible square with respect to C.
inline SquareCheck check_contractible_square(const Embedding& p, const Cycle& c, const Cycle& c1, const Cycle& c2,
                                             std::optional<FaceState> outer = std::nullopt) {
    SquareCheck out;
    for (const Cycle* x : {&c, &c1, &c2})
        if (!EmbeddedCycle(p, *x, outer).contractible()) {
            out.failed = "cycle " + x->str() + " is not contractible";
            return out;
        }
    std::optional<WellNestedKind> k1, k2;
    try {
        k1 = classify_well_nested(p, c, c1, outer);
        k2 = classify_well_nested(p, c1, c2, outer);
    } catch (const Error& e) {
        out.failed = std::string("not nested: ") + e.what();
        return out;
    }
    if (!k1 || !k2 || !(*k1 == *k2)) {
        out.failed = "C″, C′, C are not well nested under one discipline";
        return out;
    }
    out.kind = *k1;
    out.boundary = boundary_faces(p, c, c1, outer);
    auto cl = closest_enclosing_cycle(p, c, out.boundary, outer);
    if (cl.status == ClosestCycle::Innermost || !(cl.cycle == c1.canonical())) {
        out.failed = "C′ is not the cycle closest to C enclosing B(C)";
        return out;
    }
    out.ok = true;
    return out;
}

inline long long bad_square_threshold(long long boundary_n) { return 18 * (42 * boundary_n - 3); }

// Literal threshold: bad iff |I_N| > 18 (42 |B_N| - 3).
inline bool is_bad_square(long long interior_n, long long boundary_n) { return interior_n > bad_square_threshold(boundary_n); }

struct SquareContext {
    Cycle c, c1, c2;  // C, C′, C″
    WellNestedKind kind;
    std::vector<int> boundary, interior;      // B(C), I(C): face indices of Π
    std::vector<int> boundary_n, interior_n;  // B_N(C); a maximum almost-disjoint I_N(C)
    long long threshold = 0;
    bool bad = false;
    bool empty_boundary_n = false;  // |B_N| = 0: the threshold is negative
    bool exact = true;
};

inline json to_json(const SquareContext& s) {
    json j;
    j["cycles"] = {s.c.vertices, s.c1.vertices, s.c2.vertices};
    j["kind"] = to_json(s.kind);
    j["B"] = s.boundary;
    j["I"] = s.interior;
    j["B_N"] = s.boundary_n;
    j["I_N"] = s.interior_n;
    j["threshold"] = s.threshold;
    j["verdict"] = s.bad ? "bad" : "good";
    j["empty_B_N"] = s.empty_boundary_n;
    j["exact"] = s.exact;
    return j;
}

// Good/bad verdict of the contractible square (C, C′, C″) with respect to e,
// against the embedding pe of G - e.
inline SquareContext square_verdict(const Embedding& p, const Embedding& pe, const Cycle& c, const Cycle& c1, const Cycle& c2,
                                    Edge e, std::optional<FaceState> outer = std::nullopt) {
    const Graph& g = p.graph();
    if (!(pe.graph() == g.without_edge(e))) throw Error("square_verdict: second embedding is not of G - " + e.str());
    auto sq = check_contractible_square(p, c, c1, c2, outer);
    if (!sq.ok) throw Error("square_verdict: not a contractible square: " + sq.failed);
    EmbeddedCycle e2(p, c2, outer);
    if (!e2.strict_interior().has_edge(e)) throw Error("square_verdict: edge " + e.str() + " is not in int(C″)");

    std::set<std::vector<Vertex>> pe_faces;
    for (const FaceWalk& f : face_traversal(pe)) pe_faces.insert(canonical_walk(f.vertices(pe.graph())));
    auto walks = face_traversal(p);
    auto not_pe = [&](int fi) { return !pe_faces.count(canonical_walk(walks[static_cast<std::size_t>(fi)].vertices(g))); };

    SquareContext out;
    out.c = c;
    out.c1 = c1;
    out.c2 = c2;
    out.kind = sq.kind;
    out.boundary = sq.boundary;
    out.interior = e2.interior_faces();
    for (int f : out.boundary)
        if (not_pe(f)) out.boundary_n.push_back(f);
    std::vector<int> cand;
    std::vector<std::vector<Vertex>> sets;
    auto parts = face_parts(p);
    for (int f : out.interior)
        if (not_pe(f)) {
            cand.push_back(f);
            sets.push_back(parts[static_cast<std::size_t>(f)].vertices);
        }
    auto best = max_almost_disjoint(sets);
    for (int i : best.chosen) out.interior_n.push_back(cand[static_cast<std::size_t>(i)]);
    out.exact = best.exact;
    const long long bn = static_cast<long long>(out.boundary_n.size());
    out.threshold = bad_square_threshold(bn);
    out.bad = is_bad_square(static_cast<long long>(out.interior_n.size()), bn);
    out.empty_boundary_n = bn == 0;
    return out;
}

// The verdict under the embedding of G - e of minimum Euler genus that
// minimises |I_N|, over at most max_embeddings embeddings.
struct MinimizedVerdict {
    SquareContext square;
    Embedding pe;
    std::size_t examined = 0;
    bool exhaustive = true;
};

inline MinimizedVerdict square_verdict_minimizing(const Embedding& p, const Cycle& c, const Cycle& c1, const Cycle& c2, Edge e,
                                                  std::optional<FaceState> outer = std::nullopt,
                                                  std::size_t max_embeddings = 200000) {
    Graph ge = p.graph().without_edge(e);
    int min_genus = kInfinity;
    std::vector<Embedding> best;
    MinimizedVerdict out;
    out.exhaustive = for_each_embedding(ge, false, [&](const Embedding& q) {
        if (++out.examined > max_embeddings) return false;
        int gq = euler_genus_per_component(q);
        if (gq < min_genus) {
            min_genus = gq;
            best.clear();
        }
        if (gq == min_genus) best.push_back(q);
        return true;
    });
    std::optional<MinimizedVerdict> res;
    for (const Embedding& q : best) {
        SquareContext s = square_verdict(p, q, c, c1, c2, e, outer);
        if (!res || s.interior_n.size() < res->square.interior_n.size()) res = MinimizedVerdict{s, q, 0, true};
    }
    if (!res) throw Error("square_verdict_minimizing: no embedding of G - " + e.str() + " examined");
    res->examined = out.examined;
    res->exhaustive = out.exhaustive;
    return *res;
}

// ---- faces of a subgraph with respect to Π ------------------------------

struct SubgraphFace {
    int face = 0;  // index of the face of Π
    Graph part;    // one connected component of that face ∩ H
};

inline std::vector<SubgraphFace> faces_wrt(const Embedding& p, const Graph& h) {
    std::vector<SubgraphFace> out;
    auto parts = face_parts(p);
    for (std::size_t fi = 0; fi < parts.size(); ++fi) {
        detail::Subgraph s;
        for (Vertex v : parts[fi].vertices)
            if (h.has_vertex(v)) s.vertices.insert(v);
        for (const Edge& e : parts[fi].edges)
            if (h.has_edge(e)) s.edges.insert(e);
        for (const auto& comp : detail::components(s)) {
            std::vector<Vertex> vs(comp.vertices.begin(), comp.vertices.end());
            std::vector<Edge> es(comp.edges.begin(), comp.edges.end());
            out.push_back({static_cast<int>(fi), Graph(vs, es)});
        }
    }
    return out;
}

}  // namespace surfminor

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cycles.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace surfminor {

enum class Side { None = 0, Left = 1, Right = 2 };

inline const char* side_name(Side s) {
    switch (s) {
        case Side::Left: return "left";
        case Side::Right: return "right";
        default: return "none";
    }
}
inline Side opposite(Side s) { return s == Side::Left ? Side::Right : s == Side::Right ? Side::Left : Side::None; }

struct CycleClassification {
    bool two_sided = true;
    bool separating = false;
    bool contractible = false;
    Side disk_side = Side::None;
};

// A face named by one of its traversal states (dart, orientation).
using FaceState = std::pair<Dart, int>;

// Index of the face whose closed walk, read as a vertex sequence and taken
// up to rotation and reversal, is lexicographically smallest.
inline int default_outer_face(const Embedding& p, const std::vector<FaceWalk>& faces) {
    const Graph& g = p.graph();
    int best = -1;
    std::vector<Vertex> best_key;
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        auto vs = faces[fi].vertices(g);
        std::vector<Vertex> key;
        for (int dir = 0; dir < 2; ++dir) {
            for (std::size_t s = 0; s < vs.size(); ++s) {
                std::vector<Vertex> cand(vs.begin() + static_cast<long>(s), vs.end());
                cand.insert(cand.end(), vs.begin(), vs.begin() + static_cast<long>(s));
                if (key.empty() || cand < key) key = cand;
            }
            std::reverse(vs.begin(), vs.end());
        }
        if (best < 0 || key < best_key) {
            best = static_cast<int>(fi);
            best_key = key;
        }
    }
    return best;
}

// A cycle C of an embedded graph with its two sides. The working embedding is
// Π after local changes on V(C) that make λ = +1 on every edge of C, except
// the closing edge v(l-1)v0 of a one-sided C, which keeps λ = -1.
//
// At v(i) the darts strictly after v(i)->v(i-1) and strictly before
// v(i)->v(i+1) in rotation order lie on the left; the remaining non-cycle
// darts lie on the right. A bridge lies on every side it attaches through.
class EmbeddedCycle {
public:
    enum DartClass : char { NotOnCycle = 0, In, Out, LeftDart, RightDart };

    // outer: a face state of p naming the outer face for planar embeddings;
    // defaults to default_outer_face.
    EmbeddedCycle(const Embedding& p, Cycle c, std::optional<FaceState> outer = std::nullopt)
        : original_(p), cycle_(std::move(c)), outer_(outer) {
        const Graph& g = p.graph();
        validate_cycle(g, cycle_);
        const std::size_t l = cycle_.length();
        flip_.assign(static_cast<std::size_t>(g.order()), 1);
        on_cycle_.assign(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t i = 0; i < l; ++i) on_cycle_[static_cast<std::size_t>(g.index_of(cycle_.at(i)))] = static_cast<int>(i);
        cycle_edge_.assign(static_cast<std::size_t>(g.size()), 0);
        for (const Edge& e : cycle_.edges()) cycle_edge_[static_cast<std::size_t>(g.edge_index(e))] = 1;

        std::vector<int> sig = p.signature();
        std::vector<std::vector<Dart>> rot = p.rotations();
        for (std::size_t i = 1; i < l; ++i) {
            int ei = g.edge_index(cycle_.edge(i - 1));
            if (sig[static_cast<std::size_t>(ei)] > 0) continue;
            int vi = g.index_of(cycle_.at(i));
            flip_[static_cast<std::size_t>(vi)] = -1;
            auto& r = rot[static_cast<std::size_t>(vi)];
            if (r.size() > 1) std::reverse(r.begin() + 1, r.end());
            for (int ej : g.incident(vi)) sig[static_cast<std::size_t>(ej)] *= -1;
        }
        two_sided_ = sig[static_cast<std::size_t>(g.edge_index(cycle_.edge(l - 1)))] > 0;
        normalized_ = Embedding(p.graph_ptr(), std::move(rot), std::move(sig));

        dart_class_.assign(static_cast<std::size_t>(2 * g.size()), NotOnCycle);
        for (std::size_t i = 0; i < l; ++i) {
            Dart in = dart_from(g, cycle_.at(i), cycle_.at(i + l - 1));
            Dart out = dart_from(g, cycle_.at(i), cycle_.at(i + 1));
            dart_class_[static_cast<std::size_t>(in)] = In;
            dart_class_[static_cast<std::size_t>(out)] = Out;
            char cls = LeftDart;
            for (Dart d = normalized_.next(in); d != in; d = normalized_.next(d)) {
                if (d == out) {
                    cls = RightDart;
                    continue;
                }
                dart_class_[static_cast<std::size_t>(d)] = cls;
            }
        }
        find_bridges();
        separating_ = two_sided_;
        for (int mask : bridge_mask_)
            if (mask == 3) separating_ = false;
    }

    const Embedding& original() const { return original_; }
    const Embedding& normalized() const { return normalized_; }
    const Cycle& cycle() const { return cycle_; }
    bool two_sided() const { return two_sided_; }
    bool separating() const { return separating_; }

    // -1 when v is not on C, else its position.
    int position(Vertex v) const {
        int vi = original_.graph().index_of(v);
        return vi < 0 ? -1 : on_cycle_[static_cast<std::size_t>(vi)];
    }
    bool is_cycle_edge(int ei) const { return cycle_edge_[static_cast<std::size_t>(ei)] != 0; }
    DartClass dart_class(Dart d) const { return static_cast<DartClass>(dart_class_[static_cast<std::size_t>(d)]); }
    // Side of a non-cycle dart leaving a vertex of C.
    Side dart_side(Dart d) const {
        auto c = dart_class(d);
        return c == LeftDart ? Side::Left : c == RightDart ? Side::Right : Side::None;
    }
    // Local orientation change applied at vertex index vi (+1 or -1).
    int flip_at(int vi) const { return flip_[static_cast<std::size_t>(vi)]; }

    int bridge_count() const { return static_cast<int>(bridge_mask_.size()); }
    // Bridge index of a non-cycle edge, -1 for edges of C.
    int bridge_of(int ei) const { return bridge_of_edge_[static_cast<std::size_t>(ei)]; }
    // Bit 1 left, bit 2 right; 0 for bridges in components not touching C.
    int bridge_mask(int b) const { return bridge_mask_[static_cast<std::size_t>(b)]; }

    // G_l or G_r: the bridges attaching on that side, with their attaches.
    Graph side_graph(Side s, bool with_cycle = false) const {
        const Graph& g = original_.graph();
        std::vector<Edge> es;
        for (int ei = 0; ei < g.size(); ++ei) {
            if (is_cycle_edge(ei)) {
                if (with_cycle) es.push_back(g.edges()[static_cast<std::size_t>(ei)]);
                continue;
            }
            if (bridge_mask(bridge_of(ei)) & static_cast<int>(s)) es.push_back(g.edges()[static_cast<std::size_t>(ei)]);
        }
        return with_cycle ? g.edge_subgraph(es, cycle_.vertices) : g.edge_subgraph(es);
    }

    // Euler genus of the embedding induced on (side ∪ C).
    int side_genus(Side s) const {
        auto sub = side_graph(s, true);
        return euler_genus_per_component(restrict_embedding(normalized_, sub));
    }

    const CycleClassification& classification() const {
        if (!classified_) classify();
        return classification_;
    }
    bool contractible() const { return classification().contractible; }

    // The side holding the disk; throws when C is not contractible.
    Side interior_side() const {
        const auto& cc = classification();
        if (!cc.two_sided) throw Error("Int/Ext not applicable: cycle " + cycle_.str() + " is one-sided");
        if (!cc.contractible) throw Error("Int/Ext not applicable: cycle " + cycle_.str() + " is not contractible");
        return cc.disk_side;
    }
    // Int(C) = int(C) ∪ C and Ext(C) = ext(C) ∪ C.
    Graph interior() const { return side_graph(interior_side(), true); }
    Graph exterior() const { return side_graph(opposite(interior_side()), true); }
    // int(C): the interior bridges only.
    Graph strict_interior() const { return side_graph(interior_side(), false); }

    // Side of a face of the original embedding given by one of its states;
    // meaningful when C is separating.
    Side face_side(Dart d, int o) const {
        Dart d0 = d;
        int o0 = o;
        int fallback = 0;
        do {
            int ot = o * flip_at(original_.tail_index(d));
            int ei = dart_edge(d);
            if (!is_cycle_edge(ei)) fallback |= bridge_mask(bridge_of(ei));
            int o2 = ot * normalized_.sign(ei);
            Dart r = reverse_dart(d);
            auto cls = dart_class(r);
            if (cls != NotOnCycle) {
                bool after = o2 > 0;
                bool left = after ? (cls == In || cls == LeftDart) : (cls == LeftDart || cls == Out);
                return left ? Side::Left : Side::Right;
            }
            traversal_step(original_, d, o);
        } while (d != d0 || o != o0);
        return fallback == 1 ? Side::Left : fallback == 2 ? Side::Right : Side::None;
    }

    // Indices into face_traversal(original) of the faces on side s.
    std::vector<int> faces_on(Side s) const {
        auto faces = face_traversal(original_);
        std::vector<int> out;
        for (std::size_t fi = 0; fi < faces.size(); ++fi)
            if (!faces[fi].darts.empty() && face_side(faces[fi].darts[0], faces[fi].orientation[0]) == s)
                out.push_back(static_cast<int>(fi));
        return out;
    }
    std::vector<int> interior_faces() const { return faces_on(interior_side()); }

private:
    void find_bridges() {
        const Graph& g = original_.graph();
        bridge_of_edge_.assign(static_cast<std::size_t>(g.size()), -1);
        std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
        int nb = 0;
        for (int s = 0; s < g.order(); ++s) {
            if (on_cycle_[static_cast<std::size_t>(s)] >= 0 || comp[static_cast<std::size_t>(s)] >= 0) continue;
            std::vector<int> stack{s};
            comp[static_cast<std::size_t>(s)] = nb;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                Vertex xv = g.vertices()[static_cast<std::size_t>(x)];
                for (int ei : g.incident(x)) {
                    bridge_of_edge_[static_cast<std::size_t>(ei)] = nb;
                    int y = g.index_of(g.edges()[static_cast<std::size_t>(ei)].other(xv));
                    if (on_cycle_[static_cast<std::size_t>(y)] < 0 && comp[static_cast<std::size_t>(y)] < 0) {
                        comp[static_cast<std::size_t>(y)] = nb;
                        stack.push_back(y);
                    }
                }
            }
            ++nb;
        }
        for (int ei = 0; ei < g.size(); ++ei)
            if (!is_cycle_edge(ei) && bridge_of_edge_[static_cast<std::size_t>(ei)] < 0) bridge_of_edge_[static_cast<std::size_t>(ei)] = nb++;
        bridge_mask_.assign(static_cast<std::size_t>(nb), 0);
        for (Dart d = 0; d < 2 * g.size(); ++d) {
            Side s = dart_side(d);
            if (s != Side::None) bridge_mask_[static_cast<std::size_t>(bridge_of(dart_edge(d)))] |= static_cast<int>(s);
        }
    }

    void classify() const {
        classified_ = true;
        auto& cc = classification_;
        cc.two_sided = two_sided_;
        cc.separating = separating_;
        if (!separating_) return;
        const bool left0 = side_genus(Side::Left) == 0, right0 = side_genus(Side::Right) == 0;
        cc.contractible = left0 || right0;
        if (left0 && right0) {
            auto faces = face_traversal(original_);
            FaceState st;
            if (outer_) {
                st = *outer_;
            } else {
                const auto& f = faces[static_cast<std::size_t>(default_outer_face(original_, faces))];
                st = {f.darts[0], f.orientation[0]};
            }
            Side outer_side = face_side(st.first, st.second);
            cc.disk_side = outer_side == Side::Left ? Side::Right : Side::Left;
        } else if (left0) {
            cc.disk_side = Side::Left;
        } else if (right0) {
            cc.disk_side = Side::Right;
        }
    }

    Embedding original_;
    Cycle cycle_;
    std::optional<FaceState> outer_;
    Embedding normalized_;
    bool two_sided_ = true;
    bool separating_ = false;
    std::vector<int> flip_, on_cycle_;
    std::vector<char> cycle_edge_, dart_class_;
    std::vector<int> bridge_of_edge_, bridge_mask_;
    mutable bool classified_ = false;
    mutable CycleClassification classification_;
};

inline CycleClassification classify_cycle(const Embedding& p, const Cycle& c) { return EmbeddedCycle(p, c).classification(); }

// ---- cutting ------------------------------------------------------------

// The cut graph keeps every vertex id; the second copy of cycle vertex v(i)
// gets id max_vertex + 1 + i.
struct CutResult {
    Graph graph;
    Embedding embedding;
    bool one_sided = false;
    std::vector<std::pair<Vertex, Vertex>> copies;  // per cycle position: (left copy, right copy)
    std::map<Vertex, Vertex> vertex_origin;
    std::vector<Edge> edge_origin;  // per edge index of graph
    std::vector<int> edge_copy;     // per edge index: 0 off C, 1 left copy, 2 right copy
};

// Two-sided C: left edges attach to the first copy, right edges to the
// second, and both copies of C keep λ = +1. One-sided C: the doubled cycle
// v0 .. v(l-1) v̄0 .. v̄(l-1) v0 replaces C, with λ = -1 on the two copies of
// the closing edge.
inline CutResult cut_along(const EmbeddedCycle& ec) {
    const Embedding& pn = ec.normalized();
    const Graph& g = pn.graph();
    const Cycle& c = ec.cycle();
    const int l = static_cast<int>(c.length());
    const bool one = !ec.two_sided();
    const Vertex base = g.max_vertex() + 1;
    auto left = [&](int i) { return c.at(static_cast<std::size_t>((i % l + l) % l)); };
    auto right = [&](int i) { return base + (i % l + l) % l; };

    // The copy of the tail of a non-cycle dart.
    auto end_of = [&](Dart d) {
        Vertex t = pn.tail(d);
        int i = ec.position(t);
        if (i < 0) return t;
        return ec.dart_side(d) == Side::Left ? t : right(i);
    };

    std::vector<Vertex> vs = g.vertices();
    for (int i = 0; i < l; ++i) vs.push_back(right(i));
    std::vector<Edge> es;
    std::map<Edge, int> sig;
    std::map<Edge, std::pair<Edge, int>> origin;  // new edge -> (old edge, copy)
    for (int ei = 0; ei < g.size(); ++ei) {
        if (ec.is_cycle_edge(ei)) continue;
        Edge ne(end_of(2 * ei), end_of(2 * ei + 1));
        es.push_back(ne);
        sig[ne] = pn.sign(ei);
        origin[ne] = {g.edges()[static_cast<std::size_t>(ei)], 0};
    }
    for (int i = 0; i < l; ++i) {
        Edge old = c.edge(static_cast<std::size_t>(i));
        Edge a, b;
        int s = 1;
        if (one && i == l - 1) {
            a = Edge(left(l - 1), right(0));
            b = Edge(right(l - 1), left(0));
            s = -1;
        } else {
            a = Edge(left(i), left(i + 1));
            b = Edge(right(i), right(i + 1));
        }
        for (auto [e, k] : {std::pair{a, 1}, std::pair{b, 2}}) {
            es.push_back(e);
            sig[e] = s;
            origin[e] = {old, k};
        }
    }

    // Neighbour of the copy holding dart d (d leaves tail(d)).
    auto far_end = [&](Dart d) {
        Vertex h = pn.head(d);
        return ec.position(h) < 0 ? h : end_of(reverse_dart(d));
    };
    std::map<Vertex, std::vector<Vertex>> rot;
    for (Vertex v : g.vertices()) {
        int i = ec.position(v);
        if (i < 0) {
            for (Dart d : pn.rotation_at(v)) rot[v].push_back(far_end(d));
            continue;
        }
        const bool last = i == l - 1, first = i == 0;
        Vertex in_l = one && first ? right(l - 1) : left(i - 1);
        Vertex out_l = one && last ? right(0) : left(i + 1);
        Vertex in_r = one && first ? left(l - 1) : right(i - 1);
        Vertex out_r = one && last ? left(0) : right(i + 1);
        Dart in = dart_from(g, v, c.at(static_cast<std::size_t>(i + l - 1)));
        auto& lr = rot[left(i)];
        auto& rr = rot[right(i)];
        lr.push_back(in_l);
        rr.push_back(out_r);
        for (Dart d = pn.next(in); d != in; d = pn.next(d)) {
            auto cls = ec.dart_class(d);
            if (cls == EmbeddedCycle::Out) continue;
            (cls == EmbeddedCycle::LeftDart ? lr : rr).push_back(far_end(d));
        }
        lr.push_back(out_l);
        rr.push_back(in_r);
    }

    CutResult out;
    out.graph = Graph(vs, es);
    out.embedding = Embedding::from_neighbors(out.graph, rot, sig);
    out.one_sided = one;
    for (int i = 0; i < l; ++i) out.copies.emplace_back(left(i), right(i));
    for (Vertex v : g.vertices()) out.vertex_origin[v] = v;
    for (int i = 0; i < l; ++i) out.vertex_origin[right(i)] = left(i);
    for (const Edge& e : out.graph.edges()) {
        out.edge_origin.push_back(origin.at(e).first);
        out.edge_copy.push_back(origin.at(e).second);
    }
    return out;
}

inline CutResult cut_along(const Embedding& p, const Cycle& c) { return cut_along(EmbeddedCycle(p, c)); }

// ---- homotopy -----------------------------------------------------------

// The common part of two cycles when it is empty or a single path, as the
// path's vertex sequence in c2's order; throws naming the overlap otherwise.
inline std::vector<Vertex> shared_path(const Cycle& c1, const Cycle& c2) {
    std::vector<Vertex> common;
    for (Vertex v : c2.vertices)
        if (c1.has_vertex(v)) common.push_back(v);
    if (common.empty()) return {};
    std::vector<Edge> shared;
    for (const Edge& e : c2.edges())
        if (c1.has_edge(e)) shared.push_back(e);
    auto describe = [&] {
        std::string s = "vertices";
        for (Vertex v : common) s += " " + std::to_string(v);
        s += ", edges";
        for (const Edge& e : shared) s += " " + e.str();
        return s;
    };
    if (common.size() == c1.length() || common.size() == c2.length())
        throw Error("cycles " + c1.str() + " and " + c2.str() + " overlap in more than a path: " + describe());
    if (shared.size() + 1 != common.size())
        throw Error("cycles " + c1.str() + " and " + c2.str() + " overlap in more than a path: " + describe());
    // Connected with |E| = |V| - 1 and contained in a cycle: a path. Walk it
    // along c2 starting after a non-shared edge.
    const std::size_t l = c2.length();
    std::size_t start = 0;
    for (std::size_t i = 0; i < l; ++i)
        if (c1.has_vertex(c2.at(i)) && !(c1.has_vertex(c2.at(i + l - 1)) && c1.has_edge(c2.edge(i + l - 1)))) start = i;
    std::vector<Vertex> path{c2.at(start)};
    for (std::size_t k = start; c1.has_edge(c2.edge(k % l)); ++k) path.push_back(c2.at(k + 1));
    if (path.size() != common.size())
        throw Error("cycles " + c1.str() + " and " + c2.str() + " overlap in more than a path: " + describe());
    return path;
}

struct HomotopyResult {
    Graph interior;  // Int(C ∪ C′): original vertices and edges of the cylinder
    Graph component;
    Embedding component_embedding;
    std::map<Vertex, Vertex> vertex_origin;
    std::vector<Edge> edge_origin;  // per edge index of component
};

namespace detail {

inline Cycle relabel(const Cycle& c, const std::map<Vertex, Vertex>& to) {
    Cycle out;
    for (Vertex v : c.vertices) {
        auto it = to.find(v);
        out.vertices.push_back(it == to.end() ? v : it->second);
    }
    return out;
}

}  // namespace detail

// Maximal runs of c2 along c1: position ranges [first, last] of c2 whose
// vertices lie on c1 and whose consecutive edges are edges of c1.
inline std::vector<std::pair<std::size_t, std::size_t>> touching_segments(const Cycle& c1, const Cycle& c2) {
    const std::size_t l = c2.length();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < l; ++i) {
        if (!c1.has_vertex(c2.at(i)) || c1.has_edge(c2.edge(i + l - 1))) continue;
        std::size_t k = i;
        while (k < i + l && c1.has_edge(c2.edge(k % l))) ++k;
        out.emplace_back(i, k % l);
    }
    return out;
}

// Cut-based homotopy test for two-sided cycles whose common part is a set of
// touches, each a vertex or a path. C′ must leave every touch into one and
// the same side of C, otherwise the pair is reported not homotopic.
inline std::optional<HomotopyResult> homotopy_region(const Embedding& p, const Cycle& c1, const Cycle& c2) {
    const Graph& g = p.graph();
    validate_cycle(g, c1);
    validate_cycle(g, c2);
    if (cycle_signature(p, c1) < 0) throw Error("homotopy: cycle " + c1.str() + " is one-sided");
    if (cycle_signature(p, c2) < 0) throw Error("homotopy: cycle " + c2.str() + " is one-sided");
    if (c1.canonical() == c2.canonical()) throw Error("cycles " + c1.str() + " and " + c2.str() + " coincide");
    auto segments = touching_segments(c1, c2);
    const std::size_t l2 = c2.length();
    EmbeddedCycle e1(p, c1);
    CutResult r1 = cut_along(e1);
    std::map<Vertex, Vertex> to_copy;
    std::set<Edge> shared;
    Side side = Side::None;
    for (auto [a, b] : segments) {
        Side sx = e1.dart_side(dart_from(g, c2.at(a), c2.at(a + l2 - 1)));
        Side sy = e1.dart_side(dart_from(g, c2.at(b), c2.at(b + 1)));
        if (sx != sy || (side != Side::None && sx != side)) return std::nullopt;
        side = sx;
    }
    for (auto [a, b] : segments)
        for (std::size_t k = a;; ++k) {
            Vertex v = c2.at(k);
            const auto& cp = r1.copies[static_cast<std::size_t>(e1.position(v))];
            to_copy[v] = side == Side::Left ? cp.first : cp.second;
            if (k % l2 == b) break;
            shared.insert(c2.edge(k));
        }
    Cycle c2cut = detail::relabel(c2, to_copy);
    CutResult r2 = cut_along(r1.embedding, c2cut);

    auto origin_edge = [&](std::size_t ei2) {
        const Edge& mid = r2.edge_origin[ei2];
        return r1.edge_origin[static_cast<std::size_t>(r1.graph.edge_index(mid))];
    };
    std::optional<HomotopyResult> best;
    for (const Graph& comp : r2.graph.components()) {
        if (best && comp.size() >= best->component.size()) continue;
        std::map<Edge, int> count;
        std::vector<Edge> origins;
        for (const Edge& e : comp.edges()) {
            Edge o = origin_edge(static_cast<std::size_t>(r2.graph.edge_index(e)));
            origins.push_back(o);
            ++count[o];
        }
        bool ok = true;
        for (const Edge& e : c1.edges())
            if (!shared.count(e) && count[e] != 1) ok = false;
        for (const Edge& e : c2.edges())
            if (!shared.count(e) && count[e] != 1) ok = false;
        if (!ok) continue;
        Embedding ce = restrict_embedding(r2.embedding, comp);
        if (euler_genus(ce) != 0) continue;
        HomotopyResult h;
        std::vector<Vertex> ovs;
        for (Vertex v : comp.vertices()) {
            Vertex o = r1.vertex_origin.at(r2.vertex_origin.at(v));
            h.vertex_origin[v] = o;
            ovs.push_back(o);
        }
        h.interior = g.edge_subgraph(origins, ovs);
        h.component = comp;
        h.component_embedding = ce;
        h.edge_origin = origins;
        best = std::move(h);
    }
    return best;
}

// Cuts along C, then along C′, and returns the smallest component holding
// exactly one copy of each edge of C and C′ off their shared path, if its
// induced embedding has Euler genus 0. Cycles crossing at their shared part
// are not homotopic.
inline std::optional<HomotopyResult> are_homotopic(const Embedding& p, const Cycle& c1, const Cycle& c2) {
    validate_cycle(p.graph(), c1);
    validate_cycle(p.graph(), c2);
    if (cycle_signature(p, c1) < 0) throw Error("are_homotopic: cycle " + c1.str() + " is one-sided");
    if (cycle_signature(p, c2) < 0) throw Error("are_homotopic: cycle " + c2.str() + " is one-sided");
    shared_path(c1, c2);
    return homotopy_region(p, c1, c2);
}

// ---- relative orientation -----------------------------------------------

namespace detail {

// In a genus-0 embedding q, +1 when the region away from the cap of the
// cycle c (the face made of c's edges only) runs along c in c's own
// direction, -1 otherwise. origin maps q's vertices to the ids used by c.
inline int region_direction(const Embedding& q, const std::map<Vertex, Vertex>& origin, const Cycle& c) {
    Embedding n = normalize_signatures(q);
    const Graph& h = n.graph();
    std::set<Edge> ce;
    for (const Edge& e : c.edges()) ce.insert(e);
    auto orig = [&](Vertex v) {
        auto it = origin.find(v);
        return it == origin.end() ? v : it->second;
    };
    for (const FaceWalk& f : face_traversal(n)) {
        if (f.size() != c.length()) continue;
        bool cap = true;
        for (Dart d : f.darts)
            if (!ce.count(Edge(orig(dart_tail(h, d)), orig(dart_head(h, d))))) cap = false;
        if (!cap) continue;
        Vertex a = orig(dart_tail(h, f.darts[0])), b = orig(dart_head(h, f.darts[0]));
        // A -1 orbit of an all-positive embedding walks its face backwards.
        if (f.orientation[0] < 0) std::swap(a, b);
        // The region walks b -> a.
        int ia = c.index_of(a);
        return c.at(static_cast<std::size_t>(ia) + 1) == b ? -1 : 1;
    }
    throw Error("no face bounded by " + c.str() + " alone in the region between the cycles");
}

}  // namespace detail

// C and C′ are almost disjoint, Π-contractible and lie in a genus-0 region of
// Π between them; under Π′ they are noncontractible and homotopic. In each
// embedding take the region between the cycles (Π: the C′-side of C met with
// the C-side of C′; Π′: the cylinder of are_homotopic), orient it, and record
// whether the given walks of C and C′ agree with the induced boundary
// directions. The cycles have the same relative orientation iff the two
// records agree.
inline bool same_relative_orientation(const Embedding& p, const Embedding& p2, const Cycle& c1, const Cycle& c2) {
    const Graph& g = p.graph();
    if (!(g == p2.graph())) throw Error("same_relative_orientation: embeddings of different graphs");
    validate_cycle(g, c1);
    validate_cycle(g, c2);
    int shared = 0;
    for (Vertex v : c2.vertices) shared += c1.has_vertex(v) ? 1 : 0;
    if (shared > 1) throw Error("same_relative_orientation: cycles share " + std::to_string(shared) + " vertices, not almost disjoint");
    EmbeddedCycle a(p, c1), b(p, c2);
    if (!a.contractible()) throw Error("same_relative_orientation: " + c1.str() + " is not contractible in the first embedding");
    if (!b.contractible()) throw Error("same_relative_orientation: " + c2.str() + " is not contractible in the first embedding");
    if (classify_cycle(p2, c1).contractible || classify_cycle(p2, c2).contractible)
        throw Error("same_relative_orientation: a cycle is contractible in the second embedding");
    auto h = are_homotopic(p2, c1, c2);
    if (!h) throw Error("same_relative_orientation: cycles are not homotopic in the second embedding");

    // Region of Π between the cycles.
    auto side_toward = [&](const EmbeddedCycle& ec, const Cycle& other) {
        for (const Edge& e : other.edges()) {
            int ei = g.edge_index(e);
            if (!ec.is_cycle_edge(ei)) return static_cast<Side>(ec.bridge_mask(ec.bridge_of(ei)));
        }
        return Side::None;
    };
    Side sa = side_toward(a, c2), sb = side_toward(b, c1);
    if (sa == Side::None || sb == Side::None) throw Error("same_relative_orientation: cannot locate the region between the cycles");
    std::vector<Edge> between;
    for (int ei = 0; ei < g.size(); ++ei) {
        bool in_a = a.is_cycle_edge(ei) || (a.bridge_mask(a.bridge_of(ei)) & static_cast<int>(sa));
        bool in_b = b.is_cycle_edge(ei) || (b.bridge_mask(b.bridge_of(ei)) & static_cast<int>(sb));
        if (in_a && in_b) between.push_back(g.edges()[static_cast<std::size_t>(ei)]);
    }
    Graph region = g.edge_subgraph(between);
    if (!region.is_connected()) throw Error("same_relative_orientation: the cycles are not joined inside the region between them");
    Embedding rp = restrict_embedding(p, region);
    if (euler_genus(rp) != 0) throw Error("same_relative_orientation: the cycles do not lie in a disk or cylinder of the first embedding");
    const std::map<Vertex, Vertex> ident;
    int rel1 = detail::region_direction(rp, ident, c1) * detail::region_direction(rp, ident, c2);
    int rel2 = detail::region_direction(h->component_embedding, h->vertex_origin, c1) *
               detail::region_direction(h->component_embedding, h->vertex_origin, c2);
    return rel1 == rel2;
}

// ---- flipping -----------------------------------------------------------

// Π planar, C with at most two vertices v, w carrying exterior edges: the
// interior Int(C) is mirrored (rotations reversed at interior vertices and at
// the vertices of C without exterior edges; at v and w the arc of darts on
// the interior side is reversed in place).
inline Embedding flip(const Embedding& p, const Cycle& c, std::optional<FaceState> outer = std::nullopt) {
    if (euler_genus(p) != 0) throw Error("flip: embedding is not planar");
    const Graph& g = p.graph();
    EmbeddedCycle ec(p, c, outer);
    Side in = ec.interior_side();
    Side ext = opposite(in);
    std::vector<Vertex> attach;
    for (Vertex v : c.vertices)
        for (Dart d : p.rotation_at(v))
            if (ec.dart_side(d) == ext) {
                attach.push_back(v);
                break;
            }
    if (attach.size() > 2) {
        std::string s;
        for (Vertex v : attach) s += " " + std::to_string(v);
        throw Error("flip: " + std::to_string(attach.size()) + " vertices of " + c.str() + " have exterior edges:" + s);
    }
    const Embedding& pn = ec.normalized();
    Graph ig = ec.interior();
    std::vector<std::vector<Dart>> rot = pn.rotations();
    for (int vi = 0; vi < g.order(); ++vi) {
        Vertex v = g.vertices()[static_cast<std::size_t>(vi)];
        if (!ig.has_vertex(v)) continue;
        auto& r = rot[static_cast<std::size_t>(vi)];
        if (std::find(attach.begin(), attach.end(), v) == attach.end()) {
            std::reverse(r.begin(), r.end());
            continue;
        }
        // Interior arc: In, the darts on the interior side, Out (or the
        // reverse, for a right interior). Rotate so it comes first.
        int i = ec.position(v);
        Dart in_d = dart_from(g, v, c.at(static_cast<std::size_t>(i) + c.length() - 1));
        Dart out_d = dart_from(g, v, c.at(static_cast<std::size_t>(i) + 1));
        Dart start = in == Side::Left ? in_d : out_d;
        Dart stop = in == Side::Left ? out_d : in_d;
        std::rotate(r.begin(), std::find(r.begin(), r.end(), start), r.end());
        auto it = std::find(r.begin(), r.end(), stop);
        std::reverse(r.begin(), it + 1);
    }
    return Embedding(p.graph_ptr(), std::move(rot), pn.signature());
}

// ---- C_e ----------------------------------------------------------------

// C contractible, e an edge of int(C) (its ends may lie on C): the union of
// the two faces through e, minus e, as a cycle.
inline Cycle build_Ce(const Embedding& p, const Cycle& c, Edge e, std::optional<FaceState> outer = std::nullopt) {
    const Graph& g = p.graph();
    EmbeddedCycle ec(p, c, outer);
    if (!ec.contractible()) throw Error("build_Ce: cycle " + c.str() + " is not contractible");
    int ei = g.checked_edge(e);
    if (ec.is_cycle_edge(ei)) throw Error("build_Ce: edge " + e.str() + " lies on the cycle");
    if (ec.bridge_mask(ec.bridge_of(ei)) != static_cast<int>(ec.interior_side()))
        throw Error("build_Ce: edge " + e.str() + " is not inside the cycle");
    std::vector<const FaceWalk*> through;
    auto faces = face_traversal(p);
    for (const FaceWalk& f : faces) {
        int k = 0;
        for (Dart d : f.darts) k += dart_edge(d) == ei ? 1 : 0;
        if (k == 2) throw Error("build_Ce: one face runs along both sides of " + e.str() + "; the graph is not 2-connected");
        if (k == 1) through.push_back(&f);
    }
    std::set<Edge> es;
    for (const FaceWalk* f : through)
        for (Dart d : f->darts)
            if (dart_edge(d) != ei) es.insert(g.edges()[static_cast<std::size_t>(dart_edge(d))]);
    auto ce = cycle_from_edges(std::vector<Edge>(es.begin(), es.end()));
    if (!ce) throw Error("build_Ce: the faces through " + e.str() + " do not form a cycle once e is removed");
    return *ce;
}

}  // namespace surfminor

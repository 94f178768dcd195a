#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <queue>
#include <string>
#include <vector>

#include "cycles.hpp"
#include "graph.hpp"
#include "graph_io.hpp"

namespace surfminor {

// Dart 2i runs edges()[i].u -> .v, dart 2i+1 the other way.
using Dart = int;
inline constexpr Dart reverse_dart(Dart d) { return d ^ 1; }
inline constexpr int dart_edge(Dart d) { return d >> 1; }

inline Vertex dart_tail(const Graph& g, Dart d) {
    const Edge& e = g.edges()[static_cast<std::size_t>(dart_edge(d))];
    return (d & 1) ? e.v : e.u;
}
inline Vertex dart_head(const Graph& g, Dart d) { return dart_tail(g, reverse_dart(d)); }
inline Dart dart_from(const Graph& g, Vertex from, Vertex to) {
    int ei = g.checked_edge(Edge(from, to));
    return 2 * ei + (from < to ? 0 : 1);
}

// Face traversal state: a dart together with the current local orientation.
struct FaceWalk {
    std::vector<Dart> darts;
    std::vector<int> orientation;  // +1 or -1 before traversing the dart

    std::size_t size() const { return darts.size(); }
    std::vector<Vertex> vertices(const Graph& g) const {
        std::vector<Vertex> out;
        for (Dart d : darts) out.push_back(dart_tail(g, d));
        return out;
    }
    // Edge indices in walk order (an edge may repeat).
    std::vector<int> edge_indices() const {
        std::vector<int> out;
        for (Dart d : darts) out.push_back(dart_edge(d));
        return out;
    }
};

// Π = (π, λ): a cyclic order of darts at each vertex and a sign per edge.
class Embedding {
public:
    Embedding() : graph_(std::make_shared<Graph>()) {}

    // rotation[i] lists the darts leaving vertices()[i] in cyclic order.
    Embedding(std::shared_ptr<const Graph> g, std::vector<std::vector<Dart>> rotation, std::vector<int> signature)
        : graph_(std::move(g)), rotation_(std::move(rotation)), sign_(std::move(signature)) {
        validate();
    }
    Embedding(const Graph& g, std::vector<std::vector<Dart>> rotation, std::vector<int> signature)
        : Embedding(std::make_shared<const Graph>(g), std::move(rotation), std::move(signature)) {}

    // Rotation given as neighbour lists; unlisted signatures default to +1.
    static Embedding from_neighbors(const Graph& g, const std::map<Vertex, std::vector<Vertex>>& rot,
                                    const std::map<Edge, int>& sig = {}) {
        std::vector<std::vector<Dart>> r(static_cast<std::size_t>(g.order()));
        for (int i = 0; i < g.order(); ++i) {
            Vertex v = g.vertices()[static_cast<std::size_t>(i)];
            auto it = rot.find(v);
            if (it == rot.end()) {
                if (g.degree(v) > 0) throw Error("rotation missing at vertex " + std::to_string(v));
                continue;
            }
            for (Vertex w : it->second) {
                if (!g.adjacent(v, w)) throw Error("rotation at " + std::to_string(v) + " lists non-neighbour " + std::to_string(w));
                r[static_cast<std::size_t>(i)].push_back(dart_from(g, v, w));
            }
        }
        for (const auto& [v, _] : rot)
            if (!g.has_vertex(v)) throw Error("rotation given for unknown vertex " + std::to_string(v));
        std::vector<int> s(static_cast<std::size_t>(g.size()), 1);
        for (const auto& [e, val] : sig) s[static_cast<std::size_t>(g.checked_edge(e))] = val;
        return Embedding(g, std::move(r), std::move(s));
    }

    // Neighbours in id order, all signatures +1.
    static Embedding trivial(const Graph& g) {
        std::vector<std::vector<Dart>> r(static_cast<std::size_t>(g.order()));
        for (int i = 0; i < g.order(); ++i) {
            Vertex v = g.vertices()[static_cast<std::size_t>(i)];
            for (int ei : g.incident(i)) r[static_cast<std::size_t>(i)].push_back(2 * ei + (g.edges()[static_cast<std::size_t>(ei)].u == v ? 0 : 1));
        }
        return Embedding(g, std::move(r), std::vector<int>(static_cast<std::size_t>(g.size()), 1));
    }

    const Graph& graph() const { return *graph_; }
    std::shared_ptr<const Graph> graph_ptr() const { return graph_; }

    const std::vector<Dart>& rotation_at_index(int vi) const { return rotation_[static_cast<std::size_t>(vi)]; }
    const std::vector<Dart>& rotation_at(Vertex v) const { return rotation_at_index(graph_->checked_index(v)); }
    const std::vector<std::vector<Dart>>& rotations() const { return rotation_; }
    std::vector<Vertex> neighbor_order(Vertex v) const {
        std::vector<Vertex> out;
        for (Dart d : rotation_at(v)) out.push_back(head(d));
        return out;
    }

    Dart next(Dart d) const { return next_[static_cast<std::size_t>(d)]; }
    Dart prev(Dart d) const { return prev_[static_cast<std::size_t>(d)]; }
    int sign(int edge_index) const { return sign_[static_cast<std::size_t>(edge_index)]; }
    int sign(Edge e) const { return sign(graph_->checked_edge(e)); }
    const std::vector<int>& signature() const { return sign_; }
    Vertex tail(Dart d) const { return dart_tail(*graph_, d); }
    Vertex head(Dart d) const { return dart_head(*graph_, d); }
    int tail_index(Dart d) const { return tail_index_[static_cast<std::size_t>(d)]; }

    // Same graph, rotation at v inverted, signs flipped on edges at v.
    Embedding local_change(Vertex v) const {
        Embedding out = *this;
        int vi = graph_->checked_index(v);
        auto& r = out.rotation_[static_cast<std::size_t>(vi)];
        if (r.size() > 1) std::reverse(r.begin() + 1, r.end());
        for (int ei : graph_->incident(vi)) out.sign_[static_cast<std::size_t>(ei)] *= -1;
        out.link();
        return out;
    }

    Embedding with_signature(std::vector<int> s) const {
        return Embedding(graph_, rotation_, std::move(s));
    }

    // Rotations compare as cyclic orders.
    bool operator==(const Embedding& o) const {
        return *graph_ == *o.graph_ && next_ == o.next_ && sign_ == o.sign_;
    }

private:
    void validate() {
        const Graph& g = *graph_;
        if (static_cast<int>(rotation_.size()) != g.order())
            throw Error("rotation lists " + std::to_string(rotation_.size()) + " vertices, graph has " + std::to_string(g.order()));
        if (static_cast<int>(sign_.size()) != g.size())
            throw Error("signature has " + std::to_string(sign_.size()) + " entries, graph has " + std::to_string(g.size()) + " edges");
        for (std::size_t ei = 0; ei < sign_.size(); ++ei)
            if (sign_[ei] != 1 && sign_[ei] != -1) throw Error("signature of edge " + g.edges()[ei].str() + " is not +-1");
        std::vector<char> seen(static_cast<std::size_t>(2 * g.size()), 0);
        for (int vi = 0; vi < g.order(); ++vi) {
            Vertex v = g.vertices()[static_cast<std::size_t>(vi)];
            const auto& r = rotation_[static_cast<std::size_t>(vi)];
            if (static_cast<int>(r.size()) != static_cast<int>(g.incident(vi).size()))
                throw Error("rotation at vertex " + std::to_string(v) + " has wrong length");
            for (Dart d : r) {
                if (d < 0 || d >= 2 * g.size() || dart_tail(g, d) != v || seen[static_cast<std::size_t>(d)])
                    throw Error("rotation at vertex " + std::to_string(v) + " lists an invalid or repeated dart " + std::to_string(d));
                seen[static_cast<std::size_t>(d)] = 1;
            }
        }
        link();
    }

    void link() {
        const Graph& g = *graph_;
        next_.assign(static_cast<std::size_t>(2 * g.size()), -1);
        prev_.assign(static_cast<std::size_t>(2 * g.size()), -1);
        tail_index_.assign(static_cast<std::size_t>(2 * g.size()), -1);
        for (int vi = 0; vi < g.order(); ++vi) {
            const auto& r = rotation_[static_cast<std::size_t>(vi)];
            for (std::size_t k = 0; k < r.size(); ++k) {
                Dart a = r[k], b = r[(k + 1) % r.size()];
                next_[static_cast<std::size_t>(a)] = b;
                prev_[static_cast<std::size_t>(b)] = a;
                tail_index_[static_cast<std::size_t>(a)] = vi;
            }
        }
    }

    std::shared_ptr<const Graph> graph_;
    std::vector<std::vector<Dart>> rotation_;
    std::vector<int> sign_;
    std::vector<Dart> next_, prev_;
    std::vector<int> tail_index_;
};

// One step of the signed traversal rule: traverse d, multiply the orientation
// by λ(d), then leave the head by the successor (orientation +1) or the
// predecessor (orientation -1) of the reverse dart.
inline void traversal_step(const Embedding& p, Dart& d, int& o) {
    o *= p.sign(dart_edge(d));
    Dart r = reverse_dart(d);
    d = o > 0 ? p.next(r) : p.prev(r);
}

// The same face walked backwards.
inline std::pair<Dart, int> mirror_state(const Embedding& p, Dart d, int o) {
    return {reverse_dart(d), -o * p.sign(dart_edge(d))};
}

// Faces in a deterministic order: states (dart, orientation) are scanned in
// increasing dart order, +1 before -1; each face is reported once (its mirror
// orbit is skipped).
inline std::vector<FaceWalk> face_traversal(const Embedding& p) {
    const Graph& g = p.graph();
    std::vector<FaceWalk> faces;
    if (g.size() == 0) {
        for (int i = 0; i < g.order(); ++i) faces.push_back({});
        return faces;
    }
    const int nd = 2 * g.size();
    std::vector<char> seen(static_cast<std::size_t>(2 * nd), 0);
    auto key = [](Dart d, int o) { return static_cast<std::size_t>(2 * d + (o > 0 ? 0 : 1)); };
    for (Dart s = 0; s < nd; ++s)
        for (int so : {1, -1}) {
            if (seen[key(s, so)]) continue;
            FaceWalk f;
            Dart d = s;
            int o = so;
            do {
                seen[key(d, o)] = 1;
                auto [md, mo] = mirror_state(p, d, o);
                seen[key(md, mo)] = 1;
                f.darts.push_back(d);
                f.orientation.push_back(o);
                traversal_step(p, d, o);
            } while (d != s || o != so);
            faces.push_back(std::move(f));
        }
    return faces;
}

inline int euler_genus(const Embedding& p) {
    const Graph& g = p.graph();
    if (g.order() == 0) return 0;
    if (!g.is_connected()) throw Error("euler_genus: graph is disconnected; combine per component");
    const int f = static_cast<int>(face_traversal(p).size());
    return 2 - (g.order() - g.size() + f);
}

// Sum of Euler genera of the components.
inline int euler_genus_per_component(const Embedding& p);

inline Embedding local_change(const Embedding& p, Vertex v) { return p.local_change(v); }

// BFS forest from the smallest vertex of each component, neighbours in id order.
inline std::vector<Edge> canonical_spanning_tree(const Graph& g) {
    std::vector<Edge> tree;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        seen[static_cast<std::size_t>(s)] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            Vertex xv = g.vertices()[static_cast<std::size_t>(x)];
            for (int ei : g.incident(x)) {
                Vertex yv = g.edges()[static_cast<std::size_t>(ei)].other(xv);
                int y = g.index_of(yv);
                if (seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = 1;
                tree.push_back(Edge(xv, yv));
                q.push(y);
            }
        }
    }
    return tree;
}

// Local changes making λ = +1 on every edge of the spanning forest T.
inline Embedding normalize_signatures(const Embedding& p, const std::vector<Edge>& tree) {
    const Graph& g = p.graph();
    std::vector<Edge> t = tree;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    std::vector<int> label;
    const int comps = g.component_labels(label);
    for (const Edge& e : t)
        if (!g.has_edge(e)) throw Error("normalize_signatures: tree edge " + e.str() + " not in graph");
    if (static_cast<int>(t.size()) != g.order() - comps)
        throw Error("normalize_signatures: edge set is not a spanning tree (" + std::to_string(t.size()) + " edges)");
    // adjacency restricted to T
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
    for (const Edge& e : t) {
        int a = g.index_of(e.u), b = g.index_of(e.v);
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    Embedding out = p;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    int reached = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        seen[static_cast<std::size_t>(s)] = 1;
        ++reached;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[static_cast<std::size_t>(x)]) {
                if (seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = 1;
                Vertex yv = g.vertices()[static_cast<std::size_t>(y)];
                if (out.sign(Edge(g.vertices()[static_cast<std::size_t>(x)], yv)) < 0) out = out.local_change(yv);
                q.push(y);
            }
        }
    }
    if (reached != comps) throw Error("normalize_signatures: edge set is not a spanning tree (contains a cycle)");
    return out;
}

inline Embedding normalize_signatures(const Embedding& p) {
    return normalize_signatures(p, canonical_spanning_tree(p.graph()));
}

inline int cycle_signature(const Embedding& p, const Cycle& c) {
    validate_cycle(p.graph(), c);
    int s = 1;
    for (std::size_t i = 0; i < c.length(); ++i) s *= p.sign(c.edge(i));
    return s;
}

inline bool is_orientable(const Embedding& p) {
    Embedding n = normalize_signatures(p);
    for (int s : n.signature())
        if (s < 0) return false;
    return true;
}

// Π1 ~ Π2 iff their normal forms agree on each component, possibly with every
// rotation of that component reversed (the only local-change sets fixing the
// tree signatures are unions of components).
inline bool embeddings_equivalent(const Embedding& a, const Embedding& b) {
    if (!(a.graph() == b.graph())) throw Error("embeddings_equivalent: embeddings of different graphs");
    const Graph& g = a.graph();
    Embedding na = normalize_signatures(a), nb = normalize_signatures(b);
    if (na.signature() != nb.signature()) return false;
    std::vector<int> label;
    const int comps = g.component_labels(label);
    std::vector<char> same(static_cast<std::size_t>(comps), 1), rev(static_cast<std::size_t>(comps), 1);
    for (Dart d = 0; d < 2 * g.size(); ++d) {
        int c = label[static_cast<std::size_t>(g.index_of(dart_tail(g, d)))];
        if (na.next(d) != nb.next(d)) same[static_cast<std::size_t>(c)] = 0;
        if (na.next(d) != nb.prev(d)) rev[static_cast<std::size_t>(c)] = 0;
    }
    for (int c = 0; c < comps; ++c)
        if (!same[static_cast<std::size_t>(c)] && !rev[static_cast<std::size_t>(c)]) return false;
    return true;
}

// Π restricted to the subgraph h: rotations keep their cyclic order.
inline Embedding restrict_embedding(const Embedding& p, const Graph& h) {
    const Graph& g = p.graph();
    if (!g.contains(h)) throw Error("restrict_embedding: not a subgraph");
    std::vector<std::vector<Dart>> rot(static_cast<std::size_t>(h.order()));
    for (int hi = 0; hi < h.order(); ++hi) {
        Vertex v = h.vertices()[static_cast<std::size_t>(hi)];
        for (Dart d : p.rotation_at(v)) {
            Vertex w = p.head(d);
            int he = h.edge_index(Edge(v, w));
            if (he >= 0) rot[static_cast<std::size_t>(hi)].push_back(2 * he + (v < w ? 0 : 1));
        }
    }
    std::vector<int> sig;
    for (const Edge& e : h.edges()) sig.push_back(p.sign(e));
    return Embedding(h, std::move(rot), std::move(sig));
}

inline int euler_genus_per_component(const Embedding& p) {
    int total = 0;
    for (const Graph& c : p.graph().components()) total += euler_genus(restrict_embedding(p, c));
    return total;
}

// Planar rotation from a straight-line drawing: neighbours counter-clockwise
// by angle.
inline Embedding embedding_from_positions(const Graph& g, const std::map<Vertex, std::pair<double, double>>& pos) {
    std::map<Vertex, std::vector<Vertex>> rot;
    for (Vertex v : g.vertices()) {
        auto nb = g.neighbors(v);
        auto [x, y] = pos.at(v);
        std::sort(nb.begin(), nb.end(), [&](Vertex a, Vertex b) {
            auto [ax, ay] = pos.at(a);
            auto [bx, by] = pos.at(b);
            return std::atan2(ay - y, ax - x) < std::atan2(by - y, bx - x);
        });
        rot[v] = nb;
    }
    return Embedding::from_neighbors(g, rot);
}

// ---- JSON ---------------------------------------------------------------
// {"graph": {...} or graph6 string, "rotation": {"v": [neighbour,...]},
//  "signature": {"u-v": +-1}}. Darts are written as neighbour ids (the graph
// is simple, so a neighbour determines the dart).

inline json embedding_to_json(const Embedding& p) {
    const Graph& g = p.graph();
    json j;
    j["graph"] = graph_to_json(g);
    json rot = json::object();
    for (Vertex v : g.vertices()) rot[std::to_string(v)] = p.neighbor_order(v);
    j["rotation"] = rot;
    json sig = json::object();
    for (std::size_t i = 0; i < g.edges().size(); ++i) sig[g.edges()[i].str()] = p.sign(static_cast<int>(i));
    j["signature"] = sig;
    return j;
}

inline Embedding embedding_from_json(const json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("rotation"))
        throw Error("embedding JSON needs fields graph and rotation");
    Graph g = j.at("graph").is_string() ? parse_graph6(j.at("graph").get<std::string>()) : graph_from_json(j.at("graph"));
    std::map<Vertex, std::vector<Vertex>> rot;
    for (const auto& [k, v] : j.at("rotation").items()) rot[std::stoi(k)] = v.get<std::vector<Vertex>>();
    std::map<Edge, int> sig;
    if (j.contains("signature"))
        for (const auto& [k, v] : j.at("signature").items()) {
            auto dash = k.find('-', 1);
            if (dash == std::string::npos) throw Error("signature key '" + k + "' is not of the form u-v");
            sig[Edge(std::stoi(k.substr(0, dash)), std::stoi(k.substr(dash + 1)))] = v.get<int>();
        }
    return Embedding::from_neighbors(g, rot, sig);
}

}  // namespace surfminor

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace surfminor {

using Vertex = int;

// Unordered pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr bool has(Vertex x) const { return x == u || x == v; }
    constexpr Vertex other(Vertex x) const { return x == u ? v : u; }
    auto operator<=>(const Edge&) const = default;

    std::string str() const { return std::to_string(u) + "-" + std::to_string(v); }
};

// Immutable simple graph. Vertex ids are arbitrary ints kept sorted; edges are
// kept sorted, so an edge index is stable for a given graph value.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        vertices_.resize(static_cast<std::size_t>(std::max(n, 0)));
        std::iota(vertices_.begin(), vertices_.end(), 0);
        build();
    }

    Graph(std::vector<Vertex> vertices, std::vector<Edge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw Error("duplicate vertex id " +
                        std::to_string(*std::adjacent_find(vertices_.begin(), vertices_.end())));
        for (const Edge& e : edges_) {
            if (e.u == e.v) throw Error("loop at vertex " + std::to_string(e.u));
            if (!has_vertex(e.u) || !has_vertex(e.v))
                throw Error("edge " + e.str() + " has an undeclared endpoint");
        }
        std::sort(edges_.begin(), edges_.end());
        if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
            throw Error("parallel edge " + it->str());
        build();
    }

    // Vertices 0..n-1.
    static Graph from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
        std::vector<Vertex> vs(static_cast<std::size_t>(n));
        std::iota(vs.begin(), vs.end(), 0);
        std::vector<Edge> es;
        for (auto [a, b] : pairs) es.emplace_back(a, b);
        return Graph(std::move(vs), std::move(es));
    }
    static Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
        return from_pairs(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int order() const { return static_cast<int>(vertices_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return vertices_.empty(); }

    // Position of v in vertices(), or -1.
    int index_of(Vertex v) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        return (it != vertices_.end() && *it == v) ? static_cast<int>(it - vertices_.begin()) : -1;
    }
    bool has_vertex(Vertex v) const { return index_of(v) >= 0; }

    int edge_index(Edge e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        return (it != edges_.end() && *it == e) ? static_cast<int>(it - edges_.begin()) : -1;
    }
    bool has_edge(Edge e) const { return edge_index(e) >= 0; }
    bool adjacent(Vertex a, Vertex b) const { return a != b && has_edge(Edge(a, b)); }

    // Edge indices at the vertex with index vi, ordered by neighbour id.
    const std::vector<int>& incident(int vi) const { return incidence_[static_cast<std::size_t>(vi)]; }

    int degree(Vertex v) const { return static_cast<int>(incident(checked_index(v)).size()); }
    int max_degree() const {
        int d = 0;
        for (const auto& inc : incidence_) d = std::max(d, static_cast<int>(inc.size()));
        return d;
    }
    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        for (int ei : incident(checked_index(v))) out.push_back(edges_[static_cast<std::size_t>(ei)].other(v));
        return out;
    }

    int checked_index(Vertex v) const {
        int i = index_of(v);
        if (i < 0) throw Error("no vertex " + std::to_string(v));
        return i;
    }
    int checked_edge(Edge e) const {
        int i = edge_index(e);
        if (i < 0) throw Error("no edge " + e.str());
        return i;
    }

    Vertex max_vertex() const { return vertices_.empty() ? -1 : vertices_.back(); }

    // Component label per vertex index; returns the number of components.
    int component_labels(std::vector<int>& label) const {
        label.assign(vertices_.size(), -1);
        int count = 0;
        std::vector<int> stack;
        for (std::size_t s = 0; s < vertices_.size(); ++s) {
            if (label[s] >= 0) continue;
            label[s] = count;
            stack.push_back(static_cast<int>(s));
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int ei : incidence_[static_cast<std::size_t>(x)]) {
                    int y = index_of(edges_[static_cast<std::size_t>(ei)].other(vertices_[static_cast<std::size_t>(x)]));
                    if (label[static_cast<std::size_t>(y)] < 0) {
                        label[static_cast<std::size_t>(y)] = count;
                        stack.push_back(y);
                    }
                }
            }
            ++count;
        }
        return count;
    }

    bool is_connected() const {
        std::vector<int> label;
        return component_labels(label) <= 1;
    }

    std::vector<Graph> components() const {
        std::vector<int> label;
        int c = component_labels(label);
        std::vector<std::vector<Vertex>> vs(static_cast<std::size_t>(c));
        std::vector<std::vector<Edge>> es(static_cast<std::size_t>(c));
        for (std::size_t i = 0; i < vertices_.size(); ++i) vs[static_cast<std::size_t>(label[i])].push_back(vertices_[i]);
        for (const Edge& e : edges_) es[static_cast<std::size_t>(label[static_cast<std::size_t>(index_of(e.u))])].push_back(e);
        std::vector<Graph> out;
        for (int i = 0; i < c; ++i) out.emplace_back(std::move(vs[static_cast<std::size_t>(i)]), std::move(es[static_cast<std::size_t>(i)]));
        return out;
    }

    Graph induced(std::span<const Vertex> keep) const {
        std::vector<Vertex> vs(keep.begin(), keep.end());
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (Vertex v : vs) checked_index(v);
        std::vector<Edge> es;
        for (const Edge& e : edges_)
            if (std::binary_search(vs.begin(), vs.end(), e.u) && std::binary_search(vs.begin(), vs.end(), e.v)) es.push_back(e);
        return Graph(std::move(vs), std::move(es));
    }

    // Subgraph spanned by the given edges plus extra vertices.
    Graph edge_subgraph(std::span<const Edge> es, std::span<const Vertex> extra = {}) const {
        std::vector<Vertex> vs(extra.begin(), extra.end());
        std::vector<Edge> kept;
        for (const Edge& e : es) {
            checked_edge(e);
            kept.push_back(e);
            vs.push_back(e.u);
            vs.push_back(e.v);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        std::sort(kept.begin(), kept.end());
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        return Graph(std::move(vs), std::move(kept));
    }

    bool contains(const Graph& h) const {
        for (Vertex v : h.vertices_) if (!has_vertex(v)) return false;
        for (const Edge& e : h.edges_) if (!has_edge(e)) return false;
        return true;
    }

    Graph without_vertex(Vertex v) const {
        checked_index(v);
        std::vector<Vertex> vs;
        for (Vertex x : vertices_) if (x != v) vs.push_back(x);
        std::vector<Edge> es;
        for (const Edge& e : edges_) if (!e.has(v)) es.push_back(e);
        return Graph(std::move(vs), std::move(es));
    }

    Graph without_edge(Edge e) const {
        int ei = checked_edge(e);
        std::vector<Edge> es = edges_;
        es.erase(es.begin() + ei);
        return Graph(vertices_, std::move(es));
    }

    // Merges e.v into e.u (the lower id survives), dropping loops and parallels.
    Graph contract(Edge e) const {
        checked_edge(e);
        std::vector<Vertex> vs;
        for (Vertex x : vertices_) if (x != e.v) vs.push_back(x);
        std::vector<Edge> es;
        for (const Edge& f : edges_) {
            if (f == e) continue;
            Vertex a = f.u == e.v ? e.u : f.u;
            Vertex b = f.v == e.v ? e.u : f.v;
            if (a != b) es.emplace_back(a, b);
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        return Graph(std::move(vs), std::move(es));
    }

    Graph disjoint_union(const Graph& h) const {
        Vertex shift = max_vertex() + 1;
        std::vector<Vertex> vs = vertices_;
        std::vector<Edge> es = edges_;
        for (Vertex v : h.vertices_) vs.push_back(v + shift);
        for (const Edge& e : h.edges_) es.emplace_back(e.u + shift, e.v + shift);
        return Graph(std::move(vs), std::move(es));
    }

    // Relabel to 0..n-1 in id order.
    Graph compacted() const {
        std::vector<Edge> es;
        for (const Edge& e : edges_) es.emplace_back(index_of(e.u), index_of(e.v));
        std::vector<Vertex> vs(vertices_.size());
        std::iota(vs.begin(), vs.end(), 0);
        return Graph(std::move(vs), std::move(es));
    }

    bool operator==(const Graph& o) const { return vertices_ == o.vertices_ && edges_ == o.edges_; }

private:
    void build() {
        incidence_.assign(vertices_.size(), {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            incidence_[static_cast<std::size_t>(index_of(edges_[i].u))].push_back(static_cast<int>(i));
            incidence_[static_cast<std::size_t>(index_of(edges_[i].v))].push_back(static_cast<int>(i));
        }
        for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
            Vertex v = vertices_[vi];
            std::sort(incidence_[vi].begin(), incidence_[vi].end(), [&](int a, int b) {
                return edges_[static_cast<std::size_t>(a)].other(v) < edges_[static_cast<std::size_t>(b)].other(v);
            });
        }
    }

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
};

// ---- named graphs -------------------------------------------------------

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
    return Graph::from_pairs(n, p);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) p.emplace_back(i, a + j);
    return Graph::from_pairs(a + b, p);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
    return Graph::from_pairs(n, p);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
    return Graph::from_pairs(n, p);
}

// Hub 0, rim 1..n.
inline Graph wheel_graph(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 1; i <= n; ++i) {
        p.emplace_back(0, i);
        p.emplace_back(i, i % n + 1);
    }
    return Graph::from_pairs(n + 1, p);
}

// C_r x C_c, vertex (i,j) = i*c + j.
inline Graph torus_grid(int r, int c) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            p.emplace_back(i * c + j, i * c + (j + 1) % c);
            p.emplace_back(i * c + j, ((i + 1) % r) * c + j);
        }
    return Graph::from_pairs(r * c, p);
}

// Identify vertex a of g with vertex b of h (h shifted past g's ids).
inline Graph glue_at_vertex(const Graph& g, Vertex a, const Graph& h, Vertex b) {
    Vertex shift = g.max_vertex() + 1;
    std::vector<Vertex> vs = g.vertices();
    std::vector<Edge> es = g.edges();
    auto map = [&](Vertex x) { return x == b ? a : x + shift; };
    for (Vertex v : h.vertices()) if (v != b) vs.push_back(v + shift);
    for (const Edge& e : h.edges()) es.emplace_back(map(e.u), map(e.v));
    return Graph(std::move(vs), std::move(es));
}

}  // namespace surfminor

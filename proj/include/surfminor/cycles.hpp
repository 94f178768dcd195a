#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace surfminor {

// A cycle as its vertex sequence v0 v1 ... v(l-1); the edges are v(i)v(i+1)
// and the closing edge v(l-1)v0.
struct Cycle {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
    Vertex at(std::size_t i) const { return vertices[i % vertices.size()]; }

    // e_1 .. e_l with e_i = v(i-1)v(i), indices 0-based: edge(i) = v(i)v(i+1).
    Edge edge(std::size_t i) const { return Edge(at(i), at(i + 1)); }
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < vertices.size(); ++i) out.push_back(edge(i));
        return out;
    }
    std::vector<Edge> sorted_edges() const {
        auto es = edges();
        std::sort(es.begin(), es.end());
        return es;
    }
    std::vector<Vertex> sorted_vertices() const {
        auto vs = vertices;
        std::sort(vs.begin(), vs.end());
        return vs;
    }
    bool has_vertex(Vertex v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }
    bool has_edge(Edge e) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (edge(i) == e) return true;
        return false;
    }
    // Position of v, or -1.
    int index_of(Vertex v) const {
        auto it = std::find(vertices.begin(), vertices.end(), v);
        return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
    }

    Cycle reversed() const {
        Cycle c{vertices};
        std::reverse(c.vertices.begin() + 1, c.vertices.end());
        return c;
    }
    // Starts at the smallest vertex, second vertex smaller than the last.
    Cycle canonical() const {
        Cycle c{vertices};
        auto it = std::min_element(c.vertices.begin(), c.vertices.end());
        std::rotate(c.vertices.begin(), it, c.vertices.end());
        if (c.vertices.size() > 2 && c.vertices[1] > c.vertices.back()) c = c.reversed();
        return c;
    }
    Graph as_graph() const {
        auto vs = sorted_vertices();
        return Graph(vs, edges());
    }
    std::string str() const {
        std::string s;
        for (Vertex v : vertices) s += (s.empty() ? "" : " ") + std::to_string(v);
        return "(" + s + ")";
    }
    bool operator==(const Cycle&) const = default;
};

inline void validate_cycle(const Graph& g, const Cycle& c) {
    if (c.length() < 3) throw Error("not a cycle: fewer than 3 vertices in " + c.str());
    auto vs = c.sorted_vertices();
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw Error("not a cycle: repeated vertex in " + c.str());
    for (std::size_t i = 0; i < c.length(); ++i)
        if (!g.has_edge(c.edge(i))) throw Error("not a cycle: missing edge " + c.edge(i).str());
}

// The cycle formed by an edge set, in canonical form, if the edges form one.
inline std::optional<Cycle> cycle_from_edges(const std::vector<Edge>& es) {
    if (es.size() < 3) return std::nullopt;
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge& x : es) {
        adj[x.u].push_back(x.v);
        adj[x.v].push_back(x.u);
    }
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2) return std::nullopt;
    Cycle out;
    Vertex prev = -1, cur = adj.begin()->first;
    do {
        out.vertices.push_back(cur);
        const auto& nb = adj[cur];
        Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
    } while (cur != out.vertices.front());
    if (out.length() != adj.size() || out.length() != es.size()) return std::nullopt;
    return out.canonical();
}

// Simple cycles in canonical form, shortest first then lexicographic. Stops
// after cap cycles; truncated reports whether the cap was hit.
inline std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t cap, bool* truncated = nullptr) {
    std::vector<Cycle> out;
    bool cut = false;
    const auto& vs = g.vertices();
    std::vector<char> used(vs.size(), 0);
    std::vector<Vertex> path;
    // Cycles whose smallest vertex is s, each found twice (both directions).
    auto dfs = [&](auto&& self, Vertex s, Vertex v) -> void {
        if (cut) return;
        for (Vertex w : g.neighbors(v)) {
            if (w < s) continue;
            if (w == s && path.size() >= 3) {
                if (path[1] < path.back()) {
                    if (out.size() >= cap) { cut = true; return; }
                    out.push_back(Cycle{path});
                }
                continue;
            }
            int wi = g.index_of(w);
            if (w == s || used[static_cast<std::size_t>(wi)]) continue;
            used[static_cast<std::size_t>(wi)] = 1;
            path.push_back(w);
            self(self, s, w);
            path.pop_back();
            used[static_cast<std::size_t>(wi)] = 0;
        }
    };
    for (Vertex s : vs) {
        path = {s};
        used.assign(vs.size(), 0);
        used[static_cast<std::size_t>(g.index_of(s))] = 1;
        dfs(dfs, s, s);
        if (cut) break;
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    if (truncated) *truncated = cut;
    return out;
}

// Simple a-b paths (a != b) as vertex sequences, up to cap.
inline std::vector<std::vector<Vertex>> enumerate_paths(const Graph& g, Vertex a, Vertex b, std::size_t cap,
                                                        bool* truncated = nullptr) {
    std::vector<std::vector<Vertex>> out;
    bool cut = false;
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> path{a};
    used[static_cast<std::size_t>(g.checked_index(a))] = 1;
    g.checked_index(b);
    auto dfs = [&](auto&& self, Vertex v) -> void {
        if (cut) return;
        for (Vertex w : g.neighbors(v)) {
            if (w == b) {
                if (out.size() >= cap) { cut = true; return; }
                path.push_back(b);
                out.push_back(path);
                path.pop_back();
                continue;
            }
            int wi = g.index_of(w);
            if (used[static_cast<std::size_t>(wi)]) continue;
            used[static_cast<std::size_t>(wi)] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[static_cast<std::size_t>(wi)] = 0;
        }
    };
    dfs(dfs, a);
    if (truncated) *truncated = cut;
    return out;
}

}  // namespace surfminor

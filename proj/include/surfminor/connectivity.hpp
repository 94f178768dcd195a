#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "graph.hpp"

namespace surfminor {

struct Separation {
    Graph side_a;
    Graph side_b;
    std::vector<Vertex> shared;  // V(A ∩ B)

    int order() const { return static_cast<int>(shared.size()); }
};

struct Bridge {
    enum class Kind { Chord, Component };
    Kind kind = Kind::Chord;
    Graph body;                   // includes the attach vertices
    std::vector<Vertex> attaches;  // sorted, subset of V(H0)
};

struct BlockDecomposition {
    std::vector<Graph> blocks;
    std::vector<Vertex> cutvertices;
};

// Biconnected components (Hopcroft-Tarjan). Isolated vertices become one-vertex
// blocks so that every vertex lies in some block.
inline BlockDecomposition blocks(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> groups;
    int timer = 0;

    struct Frame { int v; int parent_edge; std::size_t next; };
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        if (g.incident(root).empty()) {
            disc[static_cast<std::size_t>(root)] = timer++;
            groups.push_back({});  // marker for isolated vertex
            groups.back().push_back(-1 - root);
            continue;
        }
        std::vector<Frame> st{{root, -1, 0}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            const auto& inc = g.incident(f.v);
            if (f.next < inc.size()) {
                int ei = inc[f.next++];
                if (ei == f.parent_edge) continue;
                int w = g.index_of(g.edges()[static_cast<std::size_t>(ei)].other(g.vertices()[static_cast<std::size_t>(f.v)]));
                if (disc[static_cast<std::size_t>(w)] < 0) {
                    edge_stack.push_back(ei);
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    st.push_back({w, ei, 0});
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.push_back(ei);
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.v, pe = f.parent_edge;
                st.pop_back();
                if (st.empty()) break;
                int u = st.back().v;
                low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) {
                    std::vector<int> grp;
                    while (true) {
                        int ei = edge_stack.back();
                        edge_stack.pop_back();
                        grp.push_back(ei);
                        if (ei == pe) break;
                    }
                    groups.push_back(std::move(grp));
                }
            }
        }
    }

    BlockDecomposition out;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (auto& grp : groups) {
        if (grp.size() == 1 && grp[0] < 0) {
            Vertex v = g.vertices()[static_cast<std::size_t>(-1 - grp[0])];
            out.blocks.emplace_back(std::vector<Vertex>{v}, std::vector<Edge>{});
            continue;
        }
        std::vector<Edge> es;
        for (int ei : grp) es.push_back(g.edges()[static_cast<std::size_t>(ei)]);
        Graph b = g.edge_subgraph(es);
        for (Vertex v : b.vertices()) ++count[static_cast<std::size_t>(g.index_of(v))];
        out.blocks.push_back(std::move(b));
    }
    std::sort(out.blocks.begin(), out.blocks.end(), [](const Graph& a, const Graph& b) {
        return std::make_pair(a.vertices(), a.edges()) < std::make_pair(b.vertices(), b.edges());
    });
    for (int i = 0; i < n; ++i)
        if (count[static_cast<std::size_t>(i)] >= 2) out.cutvertices.push_back(g.vertices()[static_cast<std::size_t>(i)]);
    return out;
}

inline bool is_two_connected(const Graph& g) {
    if (g.order() < 3 || !g.is_connected()) return false;
    return blocks(g).cutvertices.empty();
}

// Bridges of H on the subgraph H0: chords (edges of H - E(H0) with both ends on
// H0) and components of H - V(H0) with their edges to H0.
inline std::vector<Bridge> bridges_on(const Graph& h, const Graph& h0) {
    if (!h.contains(h0)) throw Error("bridges_on: H0 is not a subgraph of H");
    std::vector<Bridge> out;
    std::vector<char> on(static_cast<std::size_t>(h.order()), 0);
    for (Vertex v : h0.vertices()) on[static_cast<std::size_t>(h.index_of(v))] = 1;
    for (const Edge& e : h.edges()) {
        if (h0.has_edge(e)) continue;
        if (on[static_cast<std::size_t>(h.index_of(e.u))] && on[static_cast<std::size_t>(h.index_of(e.v))]) {
            Bridge b;
            b.kind = Bridge::Kind::Chord;
            b.body = Graph({e.u, e.v}, {e});
            b.attaches = {e.u, e.v};
            out.push_back(std::move(b));
        }
    }
    std::vector<int> comp(static_cast<std::size_t>(h.order()), -1);
    int ncomp = 0;
    for (int s = 0; s < h.order(); ++s) {
        if (on[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = ncomp;
        std::vector<Edge> es;
        std::vector<Vertex> vs, att;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            Vertex xv = h.vertices()[static_cast<std::size_t>(x)];
            vs.push_back(xv);
            for (int ei : h.incident(x)) {
                const Edge& e = h.edges()[static_cast<std::size_t>(ei)];
                Vertex yv = e.other(xv);
                int y = h.index_of(yv);
                if (on[static_cast<std::size_t>(y)]) {
                    es.push_back(e);
                    att.push_back(yv);
                } else {
                    if (xv < yv) es.push_back(e);
                    if (comp[static_cast<std::size_t>(y)] < 0) {
                        comp[static_cast<std::size_t>(y)] = ncomp;
                        stack.push_back(y);
                    }
                }
            }
        }
        std::sort(att.begin(), att.end());
        att.erase(std::unique(att.begin(), att.end()), att.end());
        Bridge b;
        b.kind = Bridge::Kind::Component;
        b.body = h.edge_subgraph(es, vs);
        b.attaches = std::move(att);
        out.push_back(std::move(b));
        ++ncomp;
    }
    return out;
}

namespace detail {

// Unit-capacity max flow on the split-vertex digraph; returns a minimum s-t
// vertex cut when its size is at most limit.
inline std::optional<std::vector<int>> min_vertex_cut(const Graph& g, int s, int t, int limit) {
    const int n = g.order();
    // node 2x = x_in, 2x+1 = x_out
    struct Arc { int to; int cap; };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(2 * n));
    auto add = [&](int a, int b, int c) {
        out[static_cast<std::size_t>(a)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, c});
        out[static_cast<std::size_t>(b)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    };
    const int inf = n + 1;
    for (int x = 0; x < n; ++x) add(2 * x, 2 * x + 1, (x == s || x == t) ? inf : 1);
    for (const Edge& e : g.edges()) {
        int a = g.index_of(e.u), b = g.index_of(e.v);
        add(2 * a + 1, 2 * b, inf);
        add(2 * b + 1, 2 * a, inf);
    }
    int flow = 0;
    const int src = 2 * s + 1, dst = 2 * t;
    while (true) {
        std::vector<int> via(static_cast<std::size_t>(2 * n), -1);
        std::queue<int> q;
        q.push(src);
        via[static_cast<std::size_t>(src)] = -2;
        while (!q.empty() && via[static_cast<std::size_t>(dst)] == -1) {
            int x = q.front();
            q.pop();
            for (int ai : out[static_cast<std::size_t>(x)]) {
                const Arc& a = arcs[static_cast<std::size_t>(ai)];
                if (a.cap > 0 && via[static_cast<std::size_t>(a.to)] == -1) {
                    via[static_cast<std::size_t>(a.to)] = ai;
                    q.push(a.to);
                }
            }
        }
        if (via[static_cast<std::size_t>(dst)] == -1) break;
        for (int x = dst; x != src;) {
            int ai = via[static_cast<std::size_t>(x)];
            arcs[static_cast<std::size_t>(ai)].cap -= 1;
            arcs[static_cast<std::size_t>(ai ^ 1)].cap += 1;
            x = arcs[static_cast<std::size_t>(ai ^ 1)].to;
        }
        if (++flow > limit) return std::nullopt;
    }
    std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
    std::vector<int> stack{src};
    seen[static_cast<std::size_t>(src)] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int ai : out[static_cast<std::size_t>(x)]) {
            const Arc& a = arcs[static_cast<std::size_t>(ai)];
            if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
                seen[static_cast<std::size_t>(a.to)] = 1;
                stack.push_back(a.to);
            }
        }
    }
    std::vector<int> cut;
    for (int x = 0; x < n; ++x)
        if (seen[static_cast<std::size_t>(2 * x)] && !seen[static_cast<std::size_t>(2 * x + 1)]) cut.push_back(x);
    return cut;
}

}  // namespace detail

// A vertex set of size <= k whose removal disconnects G, found by exact
// vertex-connectivity flows over non-adjacent pairs in id order. nullopt
// certifies that G is (k+1)-connected (or too small to be disconnected).
inline std::optional<std::vector<Vertex>> find_separator(const Graph& g, int k) {
    if (g.order() == 0) return std::nullopt;
    if (!g.is_connected()) return std::vector<Vertex>{};
    for (int s = 0; s < g.order(); ++s)
        for (int t = s + 1; t < g.order(); ++t) {
            if (g.adjacent(g.vertices()[static_cast<std::size_t>(s)], g.vertices()[static_cast<std::size_t>(t)])) continue;
            if (auto cut = detail::min_vertex_cut(g, s, t, k)) {
                std::vector<Vertex> out;
                for (int x : *cut) out.push_back(g.vertices()[static_cast<std::size_t>(x)]);
                return out;
            }
        }
    return std::nullopt;
}

// Every separation (A,B) with V(A ∩ B) = {a,b} and an edge on each side, both
// orientations listed. Sides are unions of the pieces at {a,b}: components of
// G - {a,b} with their edges to a and b, and the edge ab when present.
inline std::vector<Separation> two_separations(const Graph& g) {
    std::vector<Separation> out;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            Vertex a = vs[i], b = vs[j];
            Graph rest = g.without_vertex(a).without_vertex(b);
            std::vector<Graph> comps = rest.components();
            // pieces: each component with its attaching edges; plus edge ab
            std::vector<std::vector<Edge>> pieces;
            for (const Graph& c : comps) {
                std::vector<Edge> es = c.edges();
                for (Vertex v : c.vertices())
                    for (Vertex w : {a, b})
                        if (g.adjacent(v, w)) es.emplace_back(v, w);
                pieces.push_back(std::move(es));
            }
            if (g.adjacent(a, b)) pieces.push_back({Edge(a, b)});
            const std::size_t p = pieces.size();
            if (p < 2 || p > 20) continue;
            for (std::uint32_t mask = 1; mask + 1 < (1u << p); ++mask) {
                if (mask & (1u << (p - 1))) continue;  // B never holds the last piece
                std::vector<Edge> ea, eb;
                std::vector<Vertex> xa{a, b}, xb{a, b};
                for (std::size_t k = 0; k < p; ++k) {
                    auto& dst = (mask >> k) & 1u ? eb : ea;
                    dst.insert(dst.end(), pieces[k].begin(), pieces[k].end());
                }
                for (std::size_t k = 0; k < comps.size(); ++k) {
                    auto& dst = (mask >> k) & 1u ? xb : xa;
                    dst.insert(dst.end(), comps[k].vertices().begin(), comps[k].vertices().end());
                }
                Separation s{g.edge_subgraph(ea, xa), g.edge_subgraph(eb, xb), {a, b}};
                out.push_back(std::move(s));
                Separation r{out.back().side_b, out.back().side_a, {a, b}};
                out.push_back(std::move(r));
            }
        }
    return out;
}

}  // namespace surfminor

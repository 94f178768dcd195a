#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "graph.hpp"
#include "graph_io.hpp"

namespace surfminor {

// Tree whose nodes carry bags of host vertices. Bags are kept sorted.
struct TreeDecomposition {
    Graph tree;
    std::map<int, std::vector<Vertex>> bags;

    const std::vector<Vertex>& bag(int t) const {
        auto it = bags.find(t);
        if (it == bags.end()) throw Error("no bag at node " + std::to_string(t));
        return it->second;
    }
    int width() const {
        int w = 0;
        for (const auto& [t, b] : bags) w = std::max(w, static_cast<int>(b.size()));
        return w - 1;
    }
};

// axiom 0: the tree is not a tree or bags do not match its nodes;
// 1: a vertex lies in no bag; 2: an edge lies in no bag;
// 3: the nodes holding a vertex are not connected.
struct TdValidation {
    bool ok = true;
    int axiom = 0;
    std::string detail;
};

namespace detail {

inline bool is_tree(const Graph& t) { return t.order() > 0 && t.size() == t.order() - 1 && t.is_connected(); }

inline bool nodes_connected(const Graph& tree, const std::vector<int>& nodes) {
    if (nodes.size() <= 1) return true;
    return tree.induced(nodes).is_connected();
}

}  // namespace detail

inline TdValidation validate(const Graph& g, const TreeDecomposition& td) {
    auto fail = [](int axiom, std::string why) { return TdValidation{false, axiom, std::move(why)}; };
    if (!detail::is_tree(td.tree)) return fail(0, "the decomposition graph is not a tree");
    for (Vertex t : td.tree.vertices())
        if (!td.bags.count(t)) return fail(0, "node " + std::to_string(t) + " has no bag");
    for (const auto& [t, b] : td.bags) {
        if (!td.tree.has_vertex(t)) return fail(0, "bag for missing node " + std::to_string(t));
        for (Vertex v : b)
            if (!g.has_vertex(v)) return fail(0, "bag " + std::to_string(t) + " holds non-vertex " + std::to_string(v));
    }
    std::map<Vertex, std::vector<int>> holders;
    for (const auto& [t, b] : td.bags)
        for (Vertex v : b) holders[v].push_back(t);
    for (Vertex v : g.vertices())
        if (!holders.count(v)) return fail(1, "vertex " + std::to_string(v) + " is in no bag");
    for (const Edge& e : g.edges()) {
        const auto& a = holders[e.u];
        const auto& b = holders[e.v];
        bool shared = std::any_of(a.begin(), a.end(), [&](int t) { return std::find(b.begin(), b.end(), t) != b.end(); });
        if (!shared) return fail(2, "edge " + e.str() + " is in no bag");
    }
    for (const auto& [v, ts] : holders)
        if (!detail::nodes_connected(td.tree, ts)) return fail(3, "bags holding vertex " + std::to_string(v) + " are not connected");
    return {};
}

// {"tree_edges": [[a,b],...], "bags": {"node": [v,...]}}
inline json td_to_json(const TreeDecomposition& td) {
    json j;
    j["tree_edges"] = json::array();
    for (const Edge& e : td.tree.edges()) j["tree_edges"].push_back({e.u, e.v});
    j["bags"] = json::object();
    for (const auto& [t, b] : td.bags) j["bags"][std::to_string(t)] = b;
    return j;
}

inline TreeDecomposition td_from_json(const json& j) {
    if (!j.is_object() || !j.contains("tree_edges") || !j.contains("bags"))
        throw Error("tree decomposition JSON needs fields tree_edges and bags");
    TreeDecomposition td;
    std::vector<Vertex> nodes;
    for (const auto& [key, b] : j.at("bags").items()) {
        int t = 0;
        try {
            std::size_t used = 0;
            t = std::stoi(key, &used);
            if (used != key.size()) throw Error("");
        } catch (...) {
            throw Error("tree decomposition JSON: bag key '" + key + "' is not a node id");
        }
        auto vs = b.get<std::vector<Vertex>>();
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        td.bags[t] = std::move(vs);
        nodes.push_back(t);
    }
    std::vector<Edge> es;
    for (const auto& e : j.at("tree_edges")) {
        if (!e.is_array() || e.size() != 2) throw Error("tree decomposition JSON: tree edges must be [a,b] pairs");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    td.tree = Graph(std::move(nodes), std::move(es));
    return td;
}

// Decomposition from an elimination order: node i holds order[i] and its
// later neighbours in the filled graph.
inline TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
    const int n = g.order();
    if (static_cast<int>(order.size()) != n) throw Error("elimination order has wrong length");
    TreeDecomposition td;
    if (n == 0) {
        td.tree = Graph(1);
        td.bags[0] = {};
        return td;
    }
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int vi = g.checked_index(order[static_cast<std::size_t>(i)]);
        if (pos[static_cast<std::size_t>(vi)] >= 0) throw Error("elimination order repeats vertex " + std::to_string(order[static_cast<std::size_t>(i)]));
        pos[static_cast<std::size_t>(vi)] = i;
    }
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        int a = pos[static_cast<std::size_t>(g.index_of(e.u))], b = pos[static_cast<std::size_t>(g.index_of(e.v))];
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    }
    std::vector<Edge> tree_edges;
    int last_root = -1;
    for (int i = 0; i < n; ++i) {
        std::vector<int> later;
        for (int j : adj[static_cast<std::size_t>(i)])
            if (j > i) later.push_back(j);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b) {
                adj[static_cast<std::size_t>(later[a])].insert(later[b]);
                adj[static_cast<std::size_t>(later[b])].insert(later[a]);
            }
        std::vector<Vertex> bag{order[static_cast<std::size_t>(i)]};
        for (int j : later) bag.push_back(order[static_cast<std::size_t>(j)]);
        std::sort(bag.begin(), bag.end());
        td.bags[i] = bag;
        if (!later.empty()) {
            tree_edges.emplace_back(i, later.front());
        } else {
            // roots of separate components are chained
            if (last_root >= 0) tree_edges.emplace_back(last_root, i);
            last_root = i;
        }
    }
    std::vector<Vertex> nodes(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) nodes[static_cast<std::size_t>(i)] = i;
    td.tree = Graph(std::move(nodes), std::move(tree_edges));
    return td;
}

// Min-fill elimination order; ties by degree, then by vertex id.
inline std::vector<Vertex> min_fill_order(const Graph& g) {
    const int n = g.order();
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(g.index_of(e.u))].insert(g.index_of(e.v));
        adj[static_cast<std::size_t>(g.index_of(e.v))].insert(g.index_of(e.u));
    }
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = 0;
        std::size_t best_deg = 0;
        for (int v = 0; v < n; ++v) {
            if (gone[static_cast<std::size_t>(v)]) continue;
            const auto& nb = adj[static_cast<std::size_t>(v)];
            long fill = 0;
            for (auto a = nb.begin(); a != nb.end(); ++a)
                for (auto b = std::next(a); b != nb.end(); ++b)
                    if (!adj[static_cast<std::size_t>(*a)].count(*b)) ++fill;
            if (best < 0 || fill < best_fill || (fill == best_fill && nb.size() < best_deg)) {
                best = v;
                best_fill = fill;
                best_deg = nb.size();
            }
        }
        std::vector<int> nb(adj[static_cast<std::size_t>(best)].begin(), adj[static_cast<std::size_t>(best)].end());
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                adj[static_cast<std::size_t>(nb[a])].insert(nb[b]);
                adj[static_cast<std::size_t>(nb[b])].insert(nb[a]);
            }
        for (int x : nb) adj[static_cast<std::size_t>(x)].erase(best);
        adj[static_cast<std::size_t>(best)].clear();
        gone[static_cast<std::size_t>(best)] = true;
        order.push_back(g.vertices()[static_cast<std::size_t>(best)]);
    }
    return order;
}

// Width of the decomposition an elimination order yields.
inline int elimination_width(const Graph& g, const std::vector<Vertex>& order) {
    return decomposition_from_order(g, order).width();
}

namespace detail {

// Exact treewidth of a connected graph with at most 32 vertices: dynamic
// programming over eliminated sets S, TW(S ∪ v) = max(TW(S), |Q(S, v)|),
// where Q(S, v) is the set of vertices outside S ∪ v reachable from v
// through S. States no better than the best known order are dropped.
inline std::vector<Vertex> exact_order_connected(const Graph& g) {
    const int n = g.order();
    std::vector<Vertex> heuristic = min_fill_order(g);
    if (n <= 2) return heuristic;
    using Mask = std::uint32_t;
    std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        int a = g.index_of(e.u), b = g.index_of(e.v);
        adj[static_cast<std::size_t>(a)] |= Mask(1) << b;
        adj[static_cast<std::size_t>(b)] |= Mask(1) << a;
    }
    const Mask all = n == 32 ? ~Mask(0) : (Mask(1) << n) - 1;
    auto q_size = [&](Mask s, int v) {
        Mask comp = Mask(1) << v, frontier = comp;
        Mask reach = 0;
        while (frontier) {
            Mask nb = 0;
            for (Mask f = frontier; f; f &= f - 1) nb |= adj[static_cast<std::size_t>(__builtin_ctz(f))];
            reach |= nb;
            frontier = nb & s & ~comp;
            comp |= frontier;
        }
        return __builtin_popcount(reach & ~comp & ~s);
    };
    int ub = elimination_width(g, heuristic);
    struct State {
        int tw;
        int last;
    };
    std::vector<std::unordered_map<Mask, State>> layers(static_cast<std::size_t>(n) + 1);
    layers[0][0] = {0, -1};
    Mask finish_mask = 0;
    int finish_layer = -1;
    for (int size = 0; size < n; ++size) {
        for (const auto& [s, st] : layers[static_cast<std::size_t>(size)]) {
            if (st.tw >= ub) continue;
            // the rest form at most a clique of n - size vertices
            if (n - size - 1 <= st.tw) {
                ub = st.tw;
                finish_mask = s;
                finish_layer = size;
                continue;
            }
            for (int v = 0; v < n; ++v) {
                if (s >> v & 1) continue;
                int val = std::max(st.tw, q_size(s, v));
                if (val >= ub) continue;
                auto& next = layers[static_cast<std::size_t>(size) + 1];
                Mask t = s | Mask(1) << v;
                auto it = next.find(t);
                if (it == next.end() || it->second.tw > val) next[t] = {val, v};
            }
        }
        if (size + 1 == n) {
            auto it = layers[static_cast<std::size_t>(n)].find(all);
            if (it != layers[static_cast<std::size_t>(n)].end() && it->second.tw < ub) {
                ub = it->second.tw;
                finish_mask = all;
                finish_layer = n;
            }
        }
    }
    if (finish_layer < 0) return heuristic;
    std::vector<int> prefix;
    Mask s = finish_mask;
    for (int size = finish_layer; size > 0; --size) {
        int v = layers[static_cast<std::size_t>(size)].at(s).last;
        prefix.push_back(v);
        s &= ~(Mask(1) << v);
    }
    std::reverse(prefix.begin(), prefix.end());
    std::vector<Vertex> order;
    for (int v : prefix) order.push_back(g.vertices()[static_cast<std::size_t>(v)]);
    for (int v = 0; v < n; ++v)
        if (!(finish_mask >> v & 1)) order.push_back(g.vertices()[static_cast<std::size_t>(v)]);
    return order;
}

}  // namespace detail

enum class TdMode { Exact, Heuristic };

struct TdResult {
    TreeDecomposition td;
    bool exact = false;     // width equals the treewidth
    bool degraded = false;  // exact mode was requested above the size cap
};

inline TdResult compute_tree_decomposition(const Graph& g, TdMode mode, int exact_cap = 25) {
    TdResult r;
    if (mode == TdMode::Exact && g.order() > std::min(exact_cap, 32)) {
        r.degraded = true;
        mode = TdMode::Heuristic;
    }
    if (mode == TdMode::Heuristic) {
        r.td = decomposition_from_order(g, min_fill_order(g));
        return r;
    }
    std::vector<Vertex> order;
    for (const Graph& c : g.components()) {
        auto part = detail::exact_order_connected(c);
        order.insert(order.end(), part.begin(), part.end());
    }
    r.td = decomposition_from_order(g, order);
    r.exact = true;
    return r;
}

inline int treewidth(const Graph& g) { return compute_tree_decomposition(g, TdMode::Exact, 32).td.width(); }

// A 1-separation (T_1, T_2) of the decomposition tree with T_1 ∩ T_2 = {t_0}.
struct OneSeparation {
    std::vector<int> t1, t2;  // tree nodes, sorted, both holding t0
    int t0 = -1;
    bool balanced = true;
};

namespace detail {

inline std::set<Vertex> bag_union(const TreeDecomposition& td, const std::vector<int>& nodes) {
    std::set<Vertex> out;
    for (int t : nodes) out.insert(td.bag(t).begin(), td.bag(t).end());
    return out;
}

inline int weight_outside(const TreeDecomposition& td, const std::vector<int>& nodes, const std::vector<Vertex>& skip) {
    int w = 0;
    for (Vertex v : bag_union(td, nodes))
        if (!std::binary_search(skip.begin(), skip.end(), v)) ++w;
    return w;
}

// Components of the subtree on `nodes` once t0 is removed.
inline std::vector<std::vector<int>> branches(const Graph& tree, const std::vector<int>& nodes, int t0) {
    std::vector<int> rest;
    for (int t : nodes)
        if (t != t0) rest.push_back(t);
    std::vector<std::vector<int>> out;
    for (const Graph& c : tree.induced(rest).components()) out.push_back(c.vertices());
    return out;
}

enum class SplitRule {
    Separator,  // 1/3 |V(H) − V_t0| ≤ |⋃_{T_i} V_t − V_t0| ≤ 2/3 |V(H) − V_t0|
    Refined,    // 1/3 |V(H)| ≤ |⋃_{T_i} V_t| ≤ 3/4 |V(H)|
    Closest,    // no bound: the split whose outside weights are nearest to equal
};

struct SplitChoice {
    OneSeparation sep;
    long num = 0, den = 1;  // deviation |2s − W| / W of the chosen side
};

// Best grouping of the branches at t0 under the rule, preferring the side
// weight closest to half.
inline std::optional<SplitChoice> split_at(const TreeDecomposition& td, const std::vector<int>& nodes, int t0, SplitRule rule) {
    const auto& b0 = td.bag(t0);
    const int total = weight_outside(td, nodes, b0);
    const long whole = total + static_cast<long>(b0.size());
    auto parts = branches(td.tree, nodes, t0);
    std::vector<int> w;
    for (const auto& p : parts) w.push_back(weight_outside(td, p, b0));
    // subset sums with the branch that first reached each sum
    std::vector<int> from(static_cast<std::size_t>(total) + 1, -2);
    from[0] = -1;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int s = total; s >= w[i]; --s)
            if (from[static_cast<std::size_t>(s)] == -2 && from[static_cast<std::size_t>(s - w[i])] != -2 &&
                from[static_cast<std::size_t>(s - w[i])] < static_cast<int>(i))
                from[static_cast<std::size_t>(s)] = static_cast<int>(i);
    auto accept = [&](long s) {
        switch (rule) {
            case SplitRule::Separator: return 3 * s >= total && 3 * s <= 2L * total;
            case SplitRule::Refined: {
                long a = s + static_cast<long>(b0.size()), b = total - s + static_cast<long>(b0.size());
                return 3 * a >= whole && 4 * a <= 3 * whole && 3 * b >= whole && 4 * b <= 3 * whole;
            }
            case SplitRule::Closest: return true;
        }
        return false;
    };
    int best = -1;
    for (int s = 0; s <= total; ++s) {
        if (from[static_cast<std::size_t>(s)] == -2 || !accept(s)) continue;
        if (best < 0 || std::abs(2 * s - total) < std::abs(2 * best - total)) best = s;
    }
    if (best < 0) return std::nullopt;
    std::vector<bool> chosen(parts.size(), false);
    for (int s = best; s > 0;) {
        int i = from[static_cast<std::size_t>(s)];
        chosen[static_cast<std::size_t>(i)] = true;
        s -= w[static_cast<std::size_t>(i)];
    }
    SplitChoice c;
    c.sep.t0 = t0;
    c.sep.t1.push_back(t0);
    c.sep.t2.push_back(t0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto& side = chosen[i] ? c.sep.t1 : c.sep.t2;
        side.insert(side.end(), parts[i].begin(), parts[i].end());
    }
    std::sort(c.sep.t1.begin(), c.sep.t1.end());
    std::sort(c.sep.t2.begin(), c.sep.t2.end());
    c.num = std::abs(2 * best - total);
    c.den = std::max(total, 1);
    c.sep.balanced = rule != SplitRule::Closest;
    return c;
}

// Split of the subtree on `nodes` (sorted) at the smallest t0 admitting one
// under the rule; under Closest, the least deviating split over all t0.
inline std::optional<OneSeparation> split_subtree(const TreeDecomposition& td, const std::vector<int>& nodes, SplitRule rule) {
    std::optional<SplitChoice> best;
    for (int t0 : nodes) {
        auto c = split_at(td, nodes, t0, rule);
        if (!c) continue;
        if (rule != SplitRule::Closest) return c->sep;
        if (!best || c->num * best->den < best->num * c->den) best = c;
    }
    if (!best) return std::nullopt;
    return best->sep;
}

}  // namespace detail

// The balanced split at the smallest feasible t0. Small decompositions can
// admit none; then the least unbalanced split comes back with
// balanced = false.
inline OneSeparation balanced_1_separation(const Graph& g, const TreeDecomposition& td) {
    auto v = validate(g, td);
    if (!v.ok) throw Error("invalid tree decomposition: " + v.detail);
    if (auto sep = detail::split_subtree(td, td.tree.vertices(), detail::SplitRule::Separator)) return *sep;
    return *detail::split_subtree(td, td.tree.vertices(), detail::SplitRule::Closest);
}

// Both inequalities 1/3 |V(H) − V_t0| ≤ |⋃_{T_i} V_t − V_t0| ≤ 2/3 |V(H) − V_t0|
// over the host vertex set, plus the 1-separation shape.
inline std::optional<std::string> check_balanced_1_separation(const Graph& g, const TreeDecomposition& td, const OneSeparation& sep) {
    std::vector<int> cover = sep.t1;
    cover.insert(cover.end(), sep.t2.begin(), sep.t2.end());
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    if (cover != td.tree.vertices()) return "T_1 and T_2 do not cover the tree";
    std::vector<int> common;
    std::set_intersection(sep.t1.begin(), sep.t1.end(), sep.t2.begin(), sep.t2.end(), std::back_inserter(common));
    if (common != std::vector<int>{sep.t0}) return "T_1 and T_2 do not meet exactly in t0";
    if (!td.tree.induced(sep.t1).is_connected() || !td.tree.induced(sep.t2).is_connected()) return "a side is not a subtree";
    const auto& b0 = td.bag(sep.t0);
    int total = 0;
    for (Vertex v : g.vertices())
        if (!std::binary_search(b0.begin(), b0.end(), v)) ++total;
    for (const auto* side : {&sep.t1, &sep.t2}) {
        int w = detail::weight_outside(td, *side, b0);
        if (3 * w < total) return "a side weighs " + std::to_string(w) + ", below a third of " + std::to_string(total);
        if (3 * w > 2 * total) return "a side weighs " + std::to_string(w) + ", above two thirds of " + std::to_string(total);
    }
    return std::nullopt;
}

// floor(log_{4/3} x) for x ≥ 1, exact.
inline int floor_log_four_thirds(long x) {
    if (x < 1) throw Error("log argument must be at least 1");
    mpz_class four = 1, three = 1;
    int n = 0;
    while (true) {
        four *= 4;
        three *= 3;
        if (four > three * x) return n;
        ++n;
    }
}

struct SeparationSequence {
    std::vector<std::vector<int>> parts;           // T_1..T_k, nodes sorted
    std::vector<int> weights;                      // |⋃_{t∈T_i} V_t|
    std::vector<std::vector<int>> intersections;   // |T_i ∩ T_j|
    std::vector<int> boundary;                     // |V(T_i) ∩ ⋃_{j≠i} V(T_j)|
    std::vector<int> split_nodes;                  // t0 of each split, in order
};

namespace detail {

inline void fill_sequence_stats(const TreeDecomposition& td, SeparationSequence& s) {
    const std::size_t k = s.parts.size();
    s.weights.assign(k, 0);
    s.boundary.assign(k, 0);
    s.intersections.assign(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) s.weights[i] = static_cast<int>(bag_union(td, s.parts[i]).size());
    for (std::size_t i = 0; i < k; ++i) {
        std::set<int> touched;
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            std::vector<int> common;
            std::set_intersection(s.parts[i].begin(), s.parts[i].end(), s.parts[j].begin(), s.parts[j].end(), std::back_inserter(common));
            s.intersections[i][j] = static_cast<int>(common.size());
            touched.insert(common.begin(), common.end());
        }
        s.intersections[i][i] = static_cast<int>(s.parts[i].size());
        s.boundary[i] = static_cast<int>(touched.size());
    }
}

}  // namespace detail

// Splits the heaviest part until there are k. A part is split by the
// separator rule within its own bag union when it admits one, otherwise by
// any split whose sides weigh between 1/3 and 3/4 of it. Parts are returned
// lightest first.
inline SeparationSequence balanced_separation_sequence(const Graph& g, const TreeDecomposition& td, int k) {
    if (k < 1) throw Error("k must be at least 1");
    auto v = validate(g, td);
    if (!v.ok) throw Error("invalid tree decomposition: " + v.detail);
    for (const auto& [t, b] : td.bags)
        if (4L * k * static_cast<long>(b.size()) > g.order())
            throw Error("bag at node " + std::to_string(t) + " has " + std::to_string(b.size()) + " vertices, above |V(G)|/(4k) = " +
                        std::to_string(g.order()) + "/" + std::to_string(4 * k));
    SeparationSequence s;
    s.parts.push_back(td.tree.vertices());
    std::vector<int> weights{static_cast<int>(detail::bag_union(td, s.parts[0]).size())};
    while (static_cast<int>(s.parts.size()) < k) {
        std::size_t heavy = static_cast<std::size_t>(std::max_element(weights.begin(), weights.end()) - weights.begin());
        auto sep = detail::split_subtree(td, s.parts[heavy], detail::SplitRule::Separator);
        if (!sep) sep = detail::split_subtree(td, s.parts[heavy], detail::SplitRule::Refined);
        if (!sep) throw Error("no 1-separation of a part within a third and three quarters of its weight");
        s.split_nodes.push_back(sep->t0);
        s.parts[heavy] = sep->t1;
        weights[heavy] = static_cast<int>(detail::bag_union(td, sep->t1).size());
        s.parts.push_back(sep->t2);
        weights.push_back(static_cast<int>(detail::bag_union(td, sep->t2).size()));
    }
    std::vector<std::size_t> idx(s.parts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });
    std::vector<std::vector<int>> sorted;
    for (std::size_t i : idx) sorted.push_back(s.parts[i]);
    s.parts = std::move(sorted);
    detail::fill_sequence_stats(td, s);
    return s;
}

// Violations of the 1-separation sequence shape and of the two properties:
// (1) |⋃_{T_i} V_t| ≤ 3 |⋃_{T_j} V_t| for all i, j;
// (2) |V(T_i) ∩ ⋃_{j≠i} V(T_j)| ≤ floor(log_{4/3} 3k).
inline std::vector<std::string> check_separation_sequence(const TreeDecomposition& td, const SeparationSequence& s, int k) {
    std::vector<std::string> out;
    if (static_cast<int>(s.parts.size()) != k) out.push_back("expected " + std::to_string(k) + " parts, got " + std::to_string(s.parts.size()));
    SeparationSequence fresh;
    fresh.parts = s.parts;
    detail::fill_sequence_stats(td, fresh);
    if (fresh.weights != s.weights || fresh.boundary != s.boundary || fresh.intersections != s.intersections)
        out.push_back("recorded statistics disagree with the parts");
    std::set<int> cover;
    for (const auto& p : s.parts) {
        cover.insert(p.begin(), p.end());
        if (p.empty() || !td.tree.induced(p).is_connected()) out.push_back("a part is not a subtree");
    }
    if (std::vector<int>(cover.begin(), cover.end()) != td.tree.vertices()) out.push_back("parts do not cover the tree");
    const std::size_t n = fresh.parts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && fresh.intersections[i][j] > 1)
                out.push_back("parts " + std::to_string(i) + " and " + std::to_string(j) + " share " + std::to_string(fresh.intersections[i][j]) + " nodes");
            if (fresh.weights[i] > 3 * fresh.weights[j])
                out.push_back("weight " + std::to_string(fresh.weights[i]) + " exceeds three times " + std::to_string(fresh.weights[j]));
        }
    const int cap = floor_log_four_thirds(3L * k);
    for (std::size_t i = 0; i < n; ++i)
        if (fresh.boundary[i] > cap)
            out.push_back("part " + std::to_string(i) + " has " + std::to_string(fresh.boundary[i]) + " boundary nodes, above " + std::to_string(cap));
    return out;
}

}  // namespace surfminor

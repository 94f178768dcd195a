#pragma once

#include <set>
#include <string>
#include <vector>

#include "surfminor/canonical.hpp"
#include "surfminor/graph.hpp"

namespace oracle {

// All connected graphs with at most max_edges edges, one per isomorphism
// class, including the single vertex. Grown edge by edge: every connected
// graph with m+1 edges is a connected graph with m edges plus a pendant edge
// or a chord (remove a non-cut edge or a leaf).
inline std::vector<surfminor::Graph> connected_graphs(int max_edges) {
    using surfminor::Graph;
    std::vector<Graph> out{Graph(1)};
    std::vector<Graph> layer{Graph(1)};
    std::set<std::string> seen{surfminor::canonical_key(Graph(1))};
    for (int m = 1; m <= max_edges; ++m) {
        std::vector<Graph> next;
        for (const Graph& g : layer) {
            const int n = g.order();
            std::vector<std::pair<int, int>> base;
            for (const auto& e : g.edges()) base.emplace_back(e.u, e.v);
            auto consider = [&](int nn, std::pair<int, int> extra) {
                auto pairs = base;
                pairs.push_back(extra);
                Graph h = Graph::from_pairs(nn, pairs);
                if (seen.insert(surfminor::canonical_key(h)).second) next.push_back(h);
            };
            for (int v = 0; v < n; ++v) consider(n + 1, {v, n});
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (!g.adjacent(a, b)) consider(n, {a, b});
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// All graphs on 1..max_order vertices, one per isomorphism class, each order
// grown from the previous by a new vertex joined to every neighbour subset.
inline std::vector<surfminor::Graph> graphs_up_to_order(int max_order) {
    using surfminor::Graph;
    std::vector<Graph> out{Graph(1)};
    std::vector<Graph> layer{Graph(1)};
    for (int n = 2; n <= max_order; ++n) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& g : layer) {
            std::vector<std::pair<int, int>> base;
            for (const auto& e : g.edges()) base.emplace_back(e.u, e.v);
            for (unsigned s = 0; s < (1u << (n - 1)); ++s) {
                auto pairs = base;
                for (int v = 0; v < n - 1; ++v)
                    if (s >> v & 1) pairs.emplace_back(v, n - 1);
                Graph h = Graph::from_pairs(n, pairs);
                if (seen.insert(surfminor::canonical_key(h)).second) next.push_back(h);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace oracle

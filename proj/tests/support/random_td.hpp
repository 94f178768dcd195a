#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "surfminor/treedecomp.hpp"

namespace support {

struct TdInstance {
    surfminor::Graph g;
    surfminor::TreeDecomposition td;
    int k = 1;
};

// Random tree on m nodes; each of n vertices occupies a random subtree of up
// to `spread` nodes, and edges are sampled among vertices sharing a bag.
inline TdInstance random_td(std::mt19937_64& rng, int m, int n, int spread, double p) {
    using namespace surfminor;
    std::vector<std::vector<int>> tadj(static_cast<std::size_t>(m));
    std::vector<Edge> tes;
    for (int i = 1; i < m; ++i) {
        int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
        tes.emplace_back(parent, i);
        tadj[static_cast<std::size_t>(parent)].push_back(i);
        tadj[static_cast<std::size_t>(i)].push_back(parent);
    }
    std::vector<Vertex> nodes(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) nodes[static_cast<std::size_t>(i)] = i;
    TdInstance inst;
    inst.td.tree = Graph(nodes, tes);
    std::vector<std::set<Vertex>> bags(static_cast<std::size_t>(m));
    for (int v = 0; v < n; ++v) {
        std::vector<int> sub{static_cast<int>(rng() % static_cast<std::uint64_t>(m))};
        int want = std::min(m, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(spread)));
        while (static_cast<int>(sub.size()) < want) {
            int from = sub[rng() % sub.size()];
            const auto& nb = tadj[static_cast<std::size_t>(from)];
            if (nb.empty()) break;
            int to = nb[rng() % nb.size()];
            if (std::find(sub.begin(), sub.end(), to) == sub.end()) sub.push_back(to);
        }
        for (int t : sub) bags[static_cast<std::size_t>(t)].insert(v);
    }
    std::bernoulli_distribution coin(p);
    std::set<Edge> es;
    for (const auto& b : bags)
        for (auto a = b.begin(); a != b.end(); ++a)
            for (auto c = std::next(a); c != b.end(); ++c)
                if (coin(rng)) es.insert(Edge(*a, *c));
    for (int t = 0; t < m; ++t) inst.td.bags[t] = std::vector<Vertex>(bags[static_cast<std::size_t>(t)].begin(), bags[static_cast<std::size_t>(t)].end());
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) vs[static_cast<std::size_t>(v)] = v;
    inst.g = Graph(vs, std::vector<Edge>(es.begin(), es.end()));
    return inst;
}

// Instance whose largest bag is at most |V(G)|/(4k) for a random k in 1..6.
inline TdInstance random_hypothesis_instance(std::mt19937_64& rng) {
    while (true) {
        int k = 1 + static_cast<int>(rng() % 6);
        int n = 40 * k + static_cast<int>(rng() % 120);
        int m = n / 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n / 2));
        TdInstance inst = random_td(rng, m, n, 4, 0.4);
        inst.k = k;
        bool fits = true;
        for (const auto& [t, b] : inst.td.bags) fits = fits && 4L * k * static_cast<long>(b.size()) <= n;
        if (fits) return inst;
    }
}

}  // namespace support

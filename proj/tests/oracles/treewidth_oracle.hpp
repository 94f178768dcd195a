#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "surfminor/graph.hpp"

// Treewidth as the minimum over all elimination orders of the largest number
// of later neighbours in the filled graph. Orders are walked depth first;
// a branch stops only once it is no better than the best complete order.
namespace oracle {

inline int brute_treewidth(const surfminor::Graph& g) {
    const int n = g.order();
    if (n == 0) return -1;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges()) {
        int a = g.index_of(e.u), b = g.index_of(e.v);
        adj[static_cast<std::size_t>(a)] |= 1u << b;
        adj[static_cast<std::size_t>(b)] |= 1u << a;
    }
    int best = n - 1;
    auto go = [&](auto&& self, std::vector<std::uint32_t> cur, std::uint32_t left, int width) -> void {
        if (width >= best) return;
        if (!left) {
            best = width;
            return;
        }
        for (std::uint32_t l = left; l; l &= l - 1) {
            int v = __builtin_ctz(l);
            std::uint32_t nb = cur[static_cast<std::size_t>(v)] & left & ~(1u << v);
            std::vector<std::uint32_t> next = cur;
            for (std::uint32_t m = nb; m; m &= m - 1) next[static_cast<std::size_t>(__builtin_ctz(m))] |= nb & ~(1u << __builtin_ctz(m));
            self(self, next, left & ~(1u << v), std::max(width, __builtin_popcount(nb)));
        }
    };
    go(go, adj, (n == 32 ? ~0u : (1u << n) - 1), 0);
    return best;
}

}  // namespace oracle

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "surfminor/graph.hpp"

namespace oracle {

// Adjacency matrix over vertex indices.
inline std::vector<std::vector<int>> adjacency(const surfminor::Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (const auto& e : g.edges()) {
        int x = g.index_of(e.u), y = g.index_of(e.v);
        a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = a[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
    }
    return a;
}

// Isomorphism by trying every bijection.
inline bool isomorphic_bruteforce(const surfminor::Graph& a, const surfminor::Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    auto ma = adjacency(a), mb = adjacency(b);
    std::vector<int> p(static_cast<std::size_t>(a.order()));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < a.order() && ok; ++i)
            for (int j = 0; j < a.order() && ok; ++j)
                ok = ma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                     mb[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])][static_cast<std::size_t>(p[static_cast<std::size_t>(j)])];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline bool connected_without(const std::vector<std::vector<int>>& adj, const std::vector<char>& removed) {
    const int n = static_cast<int>(adj.size());
    int start = -1, alive = 0;
    for (int i = 0; i < n; ++i)
        if (!removed[static_cast<std::size_t>(i)]) {
            ++alive;
            if (start < 0) start = i;
        }
    if (alive <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> st{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int count = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int y = 0; y < n; ++y)
            if (adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] && !removed[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                st.push_back(y);
            }
    }
    return count == alive;
}

// Does some vertex set of size <= k disconnect G? (Removing everything but one
// vertex never counts as disconnecting.)
inline bool has_separator_bruteforce(const surfminor::Graph& g, int k) {
    const int n = g.order();
    auto adj = adjacency(g);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) > k) continue;
        std::vector<char> removed(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) removed[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
        if (!connected_without(adj, removed)) return true;
    }
    return false;
}

inline bool separates(const surfminor::Graph& g, const std::vector<surfminor::Vertex>& cut) {
    auto adj = adjacency(g);
    std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
    for (auto v : cut) removed[static_cast<std::size_t>(g.index_of(v))] = 1;
    return !connected_without(adj, removed);
}

// Contraction of the edge (x,y) on the adjacency matrix: merge y into x.
inline std::vector<std::vector<int>> contract_matrix(std::vector<std::vector<int>> a, int x, int y) {
    const std::size_t n = a.size();
    for (std::size_t j = 0; j < n; ++j)
        if (a[static_cast<std::size_t>(y)][j]) a[static_cast<std::size_t>(x)][j] = a[j][static_cast<std::size_t>(x)] = 1;
    a[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = 0;
    a.erase(a.begin() + y);
    for (auto& row : a) row.erase(row.begin() + y);
    return a;
}

}  // namespace oracle

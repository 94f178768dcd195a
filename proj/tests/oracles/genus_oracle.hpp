#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <vector>

#include "surfminor/graph.hpp"

namespace oracle {

// Unpruned exhaustive minimum Euler genus. Every cyclic order at every vertex
// and every signature on every edge is tried; faces are counted with an
// independent tracer over (from, to, orientation) states, where each face
// shows up twice (once per direction). No symmetry reduction, no bounds.
struct ExhaustiveGenus {
    int orientable = INT_MAX;
    int nonorientable = INT_MAX;
    std::uint64_t embeddings = 0;
};

namespace detail {

struct Tracer {
    int n = 0;
    std::vector<std::vector<int>> rot;               // neighbour indices in cyclic order
    std::vector<std::vector<int>> pos;               // pos[v][w] = index of w in rot[v], -1 if absent
    std::vector<std::vector<int>> sign;              // sign[v][w]

    int faces() const {
        std::vector<char> seen(static_cast<std::size_t>(2 * n * n), 0);
        auto at = [&](int a, int b, int x) -> char& { return seen[static_cast<std::size_t>((a * n + b) * 2 + (x > 0 ? 0 : 1))]; };
        int orbits = 0;
        for (int u = 0; u < n; ++u)
            for (int v : rot[static_cast<std::size_t>(u)])
                for (int o : {1, -1}) {
                    if (at(u, v, o)) continue;
                    ++orbits;
                    int a = u, b = v, x = o;
                    while (!at(a, b, x)) {
                        at(a, b, x) = 1;
                        x *= sign[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                        const auto& r = rot[static_cast<std::size_t>(b)];
                        int k = static_cast<int>(r.size());
                        int i = pos[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
                        int c = r[static_cast<std::size_t>(((i + (x > 0 ? 1 : -1)) % k + k) % k)];
                        a = b;
                        b = c;
                    }
                }
        return orbits / 2;
    }
};

// Is the signature a coboundary (every cycle has product +1)?
inline bool balanced(const surfminor::Graph& g, const std::vector<std::vector<int>>& sign) {
    const int n = g.order();
    std::vector<int> val(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (val[static_cast<std::size_t>(s)]) continue;
        val[static_cast<std::size_t>(s)] = 1;
        std::vector<int> st{s};
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y = 0; y < n; ++y) {
                int sg = sign[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
                if (!sg) continue;
                int want = val[static_cast<std::size_t>(x)] * sg;
                if (!val[static_cast<std::size_t>(y)]) {
                    val[static_cast<std::size_t>(y)] = want;
                    st.push_back(y);
                } else if (val[static_cast<std::size_t>(y)] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace detail

// Connected graphs only. With cotree_only, signatures are -1 only off a DFS
// spanning tree (every embedding is equivalent to one of these), which keeps
// K5-sized inputs cheap.
inline ExhaustiveGenus exhaustive_genus(const surfminor::Graph& g, bool cotree_only = false) {
    ExhaustiveGenus out;
    const int n = g.order(), m = g.size();
    if (m == 0) {
        out.orientable = 0;
        out.embeddings = 1;
        return out;
    }
    detail::Tracer t;
    t.n = n;
    t.rot.assign(static_cast<std::size_t>(n), {});
    t.pos.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    t.sign.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    std::vector<std::pair<int, int>> es;
    for (const auto& e : g.edges()) {
        int a = g.index_of(e.u), b = g.index_of(e.v);
        es.emplace_back(a, b);
        t.rot[static_cast<std::size_t>(a)].push_back(b);
        t.rot[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& r : t.rot) std::sort(r.begin(), r.end());
    std::vector<int> free_edges;
    if (cotree_only) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0), tree(static_cast<std::size_t>(m), 0);
        auto dfs = [&](auto&& self, int x) -> void {
            seen[static_cast<std::size_t>(x)] = 1;
            for (int k = 0; k < m; ++k) {
                auto [a, b] = es[static_cast<std::size_t>(k)];
                int y = a == x ? b : b == x ? a : -1;
                if (y < 0 || seen[static_cast<std::size_t>(y)]) continue;
                tree[static_cast<std::size_t>(k)] = 1;
                self(self, y);
            }
        };
        dfs(dfs, 0);
        for (int k = 0; k < m; ++k)
            if (!tree[static_cast<std::size_t>(k)]) free_edges.push_back(k);
    } else {
        for (int k = 0; k < m; ++k) free_edges.push_back(k);
    }
    const int nf = static_cast<int>(free_edges.size());
    auto reindex = [&] {
        for (int v = 0; v < n; ++v)
            for (std::size_t i = 0; i < t.rot[static_cast<std::size_t>(v)].size(); ++i)
                t.pos[static_cast<std::size_t>(v)][static_cast<std::size_t>(t.rot[static_cast<std::size_t>(v)][i])] = static_cast<int>(i);
    };
    // cyclic orders: permutations of everything after the first entry
    auto advance = [&](int v) {
        auto& r = t.rot[static_cast<std::size_t>(v)];
        if (r.size() < 3) return false;
        if (std::next_permutation(r.begin() + 1, r.end())) return true;
        return false;  // next_permutation wrapped back to sorted order
    };
    const int euler_base = 2 - n + m;
    while (true) {
        reindex();
        for (std::uint32_t mask = 0; mask < (1u << nf); ++mask) {
            std::vector<int> sv(static_cast<std::size_t>(m), 1);
            for (int j = 0; j < nf; ++j)
                if ((mask >> j) & 1u) sv[static_cast<std::size_t>(free_edges[static_cast<std::size_t>(j)])] = -1;
            for (int k = 0; k < m; ++k) {
                int s = sv[static_cast<std::size_t>(k)];
                t.sign[static_cast<std::size_t>(es[static_cast<std::size_t>(k)].first)][static_cast<std::size_t>(es[static_cast<std::size_t>(k)].second)] = s;
                t.sign[static_cast<std::size_t>(es[static_cast<std::size_t>(k)].second)][static_cast<std::size_t>(es[static_cast<std::size_t>(k)].first)] = s;
            }
            int genus = euler_base - t.faces();
            ++out.embeddings;
            if (detail::balanced(g, t.sign)) out.orientable = std::min(out.orientable, genus);
            else out.nonorientable = std::min(out.nonorientable, genus);
        }
        int v = 0;
        while (v < n && !advance(v)) ++v;
        if (v == n) break;
    }
    return out;
}

}  // namespace oracle

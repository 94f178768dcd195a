#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace surfminor {

namespace detail {

// Canonical labelling by equitable refinement and individualisation. Twin
// vertices (equal neighbourhoods up to each other) inside a target cell are
// interchangeable by an automorphism, so only one of them is branched on.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(g.order()) {
        if (n_ > 64) throw Error("canonical labelling supports at most 64 vertices, got " + std::to_string(n_));
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (const Edge& e : g.edges()) {
            int a = g.index_of(e.u), b = g.index_of(e.v);
            adj_[static_cast<std::size_t>(a)] |= bit(b);
            adj_[static_cast<std::size_t>(b)] |= bit(a);
        }
    }

    // Vertex indices in canonical order.
    std::vector<int> run() {
        if (n_ == 0) return {};
        std::vector<std::vector<int>> cells(1);
        for (int i = 0; i < n_; ++i) cells[0].push_back(i);
        refine(cells);
        search(cells);
        return best_order_;
    }

private:
    static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
                std::uint64_t mask = 0;
                for (int x : cells[w]) mask |= bit(x);
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c].size() < 2) continue;
                    std::vector<std::pair<int, int>> keyed;
                    for (int x : cells[c])
                        keyed.emplace_back(__builtin_popcountll(adj_[static_cast<std::size_t>(x)] & mask), x);
                    std::sort(keyed.begin(), keyed.end());
                    if (keyed.front().first == keyed.back().first) continue;
                    std::vector<std::vector<int>> parts;
                    for (std::size_t i = 0; i < keyed.size(); ++i) {
                        if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
                        parts.back().push_back(keyed[i].second);
                    }
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    bool twins(int a, int b) const {
        return (adj_[static_cast<std::size_t>(a)] & ~bit(b)) == (adj_[static_cast<std::size_t>(b)] & ~bit(a));
    }

    void search(const std::vector<std::vector<int>>& cells) {
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() < 2) continue;
            if (target == cells.size() || cells[c].size() < cells[target].size()) target = c;
        }
        if (target == cells.size()) {
            std::vector<int> order;
            for (const auto& c : cells) order.push_back(c[0]);
            std::vector<std::uint64_t> cert = certificate(order);
            if (best_order_.empty() || cert < best_cert_) {
                best_cert_ = std::move(cert);
                best_order_ = std::move(order);
            }
            return;
        }
        std::vector<int> tried;
        for (int x : cells[target]) {
            bool skip = false;
            for (int t : tried)
                if (twins(t, x)) { skip = true; break; }
            if (skip) continue;
            tried.push_back(x);
            std::vector<std::vector<int>> next = cells;
            std::vector<int> rest;
            for (int y : cells[target]) if (y != x) rest.push_back(y);
            next[target] = {x};
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
            refine(next);
            search(next);
        }
    }

    std::vector<std::uint64_t> certificate(const std::vector<int>& order) const {
        std::vector<int> pos(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            std::uint64_t a = adj_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
            std::uint64_t r = 0;
            while (a) {
                int y = __builtin_ctzll(a);
                a &= a - 1;
                r |= bit(pos[static_cast<std::size_t>(y)]);
            }
            rows[static_cast<std::size_t>(i)] = r;
        }
        return rows;
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> best_order_;
    std::vector<std::uint64_t> best_cert_;
};

}  // namespace detail

// Canonical relabelling: result vertices are 0..n-1 and isomorphic graphs map
// to identical values.
inline Graph canonical_form(const Graph& g) {
    std::vector<int> order = detail::CanonicalSearch(g).run();
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> p;
    for (const Edge& e : g.edges()) p.emplace_back(pos[static_cast<std::size_t>(g.index_of(e.u))], pos[static_cast<std::size_t>(g.index_of(e.v))]);
    return Graph::from_pairs(g.order(), p);
}

inline std::string canonical_key(const Graph& g) {
    Graph c = canonical_form(g);
    std::string key = std::to_string(c.order()) + ":";
    for (const Edge& e : c.edges()) key += std::to_string(e.u) + "," + std::to_string(e.v) + ";";
    return key;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace surfminor

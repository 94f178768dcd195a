#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "error.hpp"
#include "graph.hpp"

namespace surfminor {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// graph6 for up to 258047 vertices. Vertex ids are 0..n-1; writing relabels
// in id order.
inline Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, 10) == ">>graph6<<") pos = 10;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError("graph6: truncated input", i);
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", i);
        return c - 63;
    };
    if (pos >= text.size()) throw ParseError("graph6: empty input", pos);
    long n = byte_at(pos);
    ++pos;
    if (n == 63) {
        if (pos < text.size() && text[pos] == '~') throw ParseError("graph6: 8-byte order form unsupported", pos);
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos++);
    }
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (text.size() - pos < need) throw ParseError("graph6: expected " + std::to_string(need) + " adjacency bytes", text.size());
    if (text.size() - pos > need) throw ParseError("graph6: trailing bytes", pos + need);
    std::vector<std::pair<int, int>> pairs;
    std::size_t k = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i, ++k) {
            int chunk = byte_at(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    for (; k < need * 6; ++k)
        if ((byte_at(pos + k / 6) >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bit", pos + k / 6);
    return Graph::from_pairs(static_cast<int>(n), pairs);
}

inline std::string to_graph6(const Graph& g) {
    const long n = g.order();
    if (n > 258047) throw Error("graph6: order " + std::to_string(n) + " too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    int acc = 0, used = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            bool b = g.adjacent(g.vertices()[static_cast<std::size_t>(i)], g.vertices()[static_cast<std::size_t>(j)]);
            acc = (acc << 1) | (b ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = used = 0;
            }
        }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

// {"n": N, "edges": [[u,v],...]} with vertices 0..N-1, or with an explicit
// "vertices" list when ids are not contiguous.
inline json graph_to_json(const Graph& g) {
    json j;
    bool contiguous = true;
    for (int i = 0; i < g.order(); ++i) contiguous = contiguous && g.vertices()[static_cast<std::size_t>(i)] == i;
    j["n"] = g.order();
    if (!contiguous) j["vertices"] = g.vertices();
    json es = json::array();
    for (const Edge& e : g.edges()) es.push_back({e.u, e.v});
    j["edges"] = es;
    return j;
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw Error("graph JSON needs fields n and edges");
    int n = j.at("n").get<int>();
    std::vector<Vertex> vs;
    if (j.contains("vertices")) {
        vs = j.at("vertices").get<std::vector<Vertex>>();
        if (static_cast<int>(vs.size()) != n) throw Error("graph JSON: n disagrees with vertices list");
    } else {
        for (int i = 0; i < n; ++i) vs.push_back(i);
    }
    std::vector<Edge> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw Error("graph JSON: edge entries must be [u,v] pairs");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(std::move(vs), std::move(es));
}

inline json parse_json_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
}

inline Graph parse_graph_json(std::string_view text) { return graph_from_json(parse_json_text(text)); }

}  // namespace surfminor

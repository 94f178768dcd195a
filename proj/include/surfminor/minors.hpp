#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace surfminor {

struct MinorOp {
    enum class Kind { DeleteVertex, DeleteEdge, ContractEdge };
    Kind kind = Kind::DeleteVertex;
    Vertex vertex = 0;
    Edge edge{};

    static MinorOp delete_vertex(Vertex v) { return {Kind::DeleteVertex, v, {}}; }
    static MinorOp delete_edge(Edge e) { return {Kind::DeleteEdge, 0, e}; }
    static MinorOp contract_edge(Edge e) { return {Kind::ContractEdge, 0, e}; }

    std::string str() const {
        switch (kind) {
            case Kind::DeleteVertex: return "delete-vertex(" + std::to_string(vertex) + ")";
            case Kind::DeleteEdge: return "delete-edge(" + edge.str() + ")";
            case Kind::ContractEdge: return "contract-edge(" + edge.str() + ")";
        }
        return {};
    }

    static MinorOp parse(const std::string& s) {
        auto open = s.find('('), close = s.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw Error("malformed minor op '" + s + "'");
        std::string name = s.substr(0, open), arg = s.substr(open + 1, close - open - 1);
        auto edge_arg = [&] {
            auto dash = arg.find('-', 1);
            if (dash == std::string::npos) throw Error("malformed edge in '" + s + "'");
            return Edge(std::stoi(arg.substr(0, dash)), std::stoi(arg.substr(dash + 1)));
        };
        if (name == "delete-vertex") return delete_vertex(std::stoi(arg));
        if (name == "delete-edge") return delete_edge(edge_arg());
        if (name == "contract-edge") return contract_edge(edge_arg());
        throw Error("unknown minor op '" + name + "'");
    }

    bool operator==(const MinorOp&) const = default;
};

inline Graph apply_minor_op(const Graph& g, const MinorOp& op) {
    switch (op.kind) {
        case MinorOp::Kind::DeleteVertex: return g.without_vertex(op.vertex);
        case MinorOp::Kind::DeleteEdge: return g.without_edge(op.edge);
        case MinorOp::Kind::ContractEdge: return g.contract(op.edge);
    }
    return g;
}

// All graphs one deletion or contraction away, vertex deletions first. With
// dedup, the first representative of each isomorphism class is kept.
inline std::vector<std::pair<MinorOp, Graph>> one_step_minors(const Graph& g, bool dedup = false) {
    std::vector<MinorOp> ops;
    for (Vertex v : g.vertices()) ops.push_back(MinorOp::delete_vertex(v));
    for (const Edge& e : g.edges()) ops.push_back(MinorOp::delete_edge(e));
    for (const Edge& e : g.edges()) ops.push_back(MinorOp::contract_edge(e));
    std::vector<std::pair<MinorOp, Graph>> out;
    std::map<std::string, bool> seen;
    for (const MinorOp& op : ops) {
        Graph h = apply_minor_op(g, op);
        if (dedup && !seen.emplace(canonical_key(h), true).second) continue;
        out.emplace_back(op, std::move(h));
    }
    return out;
}

}  // namespace surfminor

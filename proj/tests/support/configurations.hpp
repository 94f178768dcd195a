#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surfminor/embedding.hpp"
#include "surfminor/structure.hpp"
#include "surfminor/topology.hpp"

// Small embedded graphs drawn as straight-line plane drawings or torus grids,
// with the cycles each configuration is about.
namespace configs {

using namespace surfminor;
using Positions = std::map<Vertex, std::pair<double, double>>;

// The face of a straight-line drawing with the largest enclosed area.
inline FaceState outer_face(const Embedding& p, const Positions& pos) {
    const Graph& g = p.graph();
    double best = -1;
    FaceState st{0, 1};
    for (const FaceWalk& f : face_traversal(p)) {
        auto vs = f.vertices(g);
        double a = 0;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            auto [x1, y1] = pos.at(vs[i]);
            auto [x2, y2] = pos.at(vs[(i + 1) % vs.size()]);
            a += x1 * y2 - x2 * y1;
        }
        if (std::abs(a) > best) {
            best = std::abs(a);
            st = {f.darts[0], f.orientation[0]};
        }
    }
    return st;
}

struct Drawing {
    Embedding p;
    FaceState outer;
};

inline Drawing draw(int n, std::vector<std::pair<int, int>> edges, const Positions& pos) {
    Graph g = Graph::from_pairs(n, edges);
    Embedding p = embedding_from_positions(g, pos);
    return {p, outer_face(p, pos)};
}

// Three cycles C ⊃ C′ ⊃ C″ with an edge e inside C″.
struct Square {
    std::string name;
    Drawing d;
    Cycle c, c1, c2;
    Edge e;
    WellNestedKind kind;  // the expected category
};

inline WellNestedKind vertex_kind(std::vector<Vertex> vs) {
    WellNestedKind k;
    for (Vertex v : vs) k.pieces.push_back({Piece::OnVertex, v});
    return k;
}

// Concentric squares joined by spokes, a centre vertex inside the innermost.
inline Square square_full() {
    std::vector<std::pair<int, int>> es;
    Positions pos{{12, {0, 0}}};
    const double r[3] = {6, 4, 2};
    const int sx[4] = {-1, 1, 1, -1}, sy[4] = {-1, -1, 1, 1};
    for (int ring = 0; ring < 3; ++ring)
        for (int i = 0; i < 4; ++i) {
            int v = 4 * ring + i;
            pos[v] = {sx[i] * r[ring], sy[i] * r[ring]};
            es.emplace_back(v, 4 * ring + (i + 1) % 4);
            if (ring < 2) es.emplace_back(v, v + 4);
            else es.emplace_back(v, 12);
        }
    return {"full", draw(13, es, pos), Cycle{{0, 1, 2, 3}}, Cycle{{4, 5, 6, 7}}, Cycle{{8, 9, 10, 11}}, Edge(8, 12), {}};
}

// Three loops through vertex 0, one inside the next.
inline Square square_pinched_on_vertex() {
    Positions pos{{0, {0, 0}}, {1, {-6, 4}}, {2, {0, 10}}, {3, {6, 4}}, {4, {-4, 4}}, {5, {0, 8}},
                  {6, {4, 4}}, {7, {-2, 4}}, {8, {0, 6}}, {9, {2, 4}}, {10, {0, 4.5}}};
    std::vector<std::pair<int, int>> es{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0},
                                        {0, 7}, {7, 8}, {8, 9}, {9, 0}, {1, 4}, {2, 5}, {3, 6}, {4, 7},
                                        {5, 8}, {6, 9}, {10, 7}, {10, 8}, {10, 9}, {10, 0}};
    return {"pinched on a vertex", draw(11, es, pos), Cycle{{0, 1, 2, 3}}, Cycle{{0, 4, 5, 6}}, Cycle{{0, 7, 8, 9}},
            Edge(8, 10), vertex_kind({0})};
}

// Three cycles along the bottom path 0..6, which bounds the face closed by
// vertex 14 below it.
inline Square square_pinched_on_face() {
    Positions pos;
    for (int i = 0; i <= 6; ++i) pos[i] = {2.0 * i, 0};
    pos[7] = {12, 8};
    pos[8] = {0, 8};
    pos[9] = {10, 6};
    pos[10] = {2, 6};
    pos[11] = {8, 4};
    pos[12] = {4, 4};
    pos[13] = {6, 3};
    pos[14] = {6, -5};
    std::vector<std::pair<int, int>> es{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0},
                                        {5, 9}, {9, 10}, {10, 1}, {4, 11}, {11, 12}, {12, 2}, {8, 10}, {7, 9},
                                        {10, 12}, {9, 11}, {13, 11}, {13, 12}, {13, 3}, {14, 0}, {14, 6}};
    Square s{"pinched on a face", draw(15, es, pos), Cycle{{0, 1, 2, 3, 4, 5, 6, 7, 8}}, Cycle{{1, 2, 3, 4, 5, 9, 10}},
             Cycle{{2, 3, 4, 11, 12}}, Edge(3, 13), {}};
    return s;
}

// Three lenses between vertices 0 and 1.
inline Square square_pinched_on_two_vertices() {
    Positions pos{{0, {0, 0}}, {1, {0, 12}}, {2, {-6, 6}}, {3, {6, 6}}, {4, {-4, 6}},
                  {5, {4, 6}},  {6, {-2, 6}}, {7, {2, 6}},  {8, {0, 6}}};
    std::vector<std::pair<int, int>> es{{0, 2}, {2, 1}, {1, 3}, {3, 0}, {0, 4}, {4, 1}, {1, 5}, {5, 0}, {0, 6}, {6, 1},
                                        {1, 7}, {7, 0}, {2, 4}, {4, 6}, {3, 5}, {5, 7}, {8, 6}, {8, 7}, {8, 0}, {8, 1}};
    return {"pinched on two vertices", draw(9, es, pos), Cycle{{0, 2, 1, 3}}, Cycle{{0, 4, 1, 5}}, Cycle{{0, 6, 1, 7}},
            Edge(0, 8), vertex_kind({0, 1})};
}

// Three cycles along the bottom path 0..6 and the top path 7..13; vertex 16
// closes one face below and the outer face above.
inline Square square_pinched_on_two_faces() {
    Positions pos;
    for (int i = 0; i <= 6; ++i) {
        pos[i] = {2.0 * i, 0};
        pos[7 + i] = {2.0 * i, 12};
    }
    pos[14] = {-2, 6};
    pos[15] = {14, 6};
    pos[16] = {6, -30};
    pos[17] = {10, 6};
    pos[18] = {2, 6};
    pos[19] = {8, 6};
    pos[20] = {4, 6};
    pos[21] = {6, 6};
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 6; ++i) {
        es.emplace_back(i, i + 1);
        es.emplace_back(7 + i, 8 + i);
    }
    for (auto e : std::vector<std::pair<int, int>>{{14, 0}, {14, 7}, {15, 6}, {15, 13}, {14, 16}, {15, 16}, {1, 18}, {18, 8},
                                                   {5, 17}, {17, 12}, {2, 20}, {20, 9}, {4, 19}, {19, 11}, {21, 20},
                                                   {21, 19}, {21, 3}, {21, 10}})
        es.push_back(e);
    return {"pinched on two faces", draw(22, es, pos), Cycle{{0, 1, 2, 3, 4, 5, 6, 15, 13, 12, 11, 10, 9, 8, 7, 14}},
            Cycle{{1, 2, 3, 4, 5, 17, 12, 11, 10, 9, 8, 18}}, Cycle{{2, 3, 4, 19, 11, 10, 9, 20}}, Edge(3, 21), {}};
}

// Three cycles through the top vertex 7 and along the bottom path 0..6.
inline Square square_pinched_on_vertex_and_face() {
    Positions pos;
    for (int i = 0; i <= 6; ++i) pos[i] = {2.0 * i, 0};
    pos[7] = {6, 14};
    pos[8] = {-2, 6};
    pos[9] = {14, 6};
    pos[10] = {6, -30};
    pos[11] = {10, 6};
    pos[12] = {2, 6};
    pos[13] = {8, 5};
    pos[14] = {4, 5};
    pos[15] = {6, 5};
    std::vector<std::pair<int, int>> es{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 9}, {9, 7},  {7, 8},
                                        {8, 0}, {8, 10}, {9, 10}, {5, 11}, {11, 7}, {7, 12}, {12, 1}, {4, 13}, {13, 7},
                                        {7, 14}, {14, 2}, {15, 14}, {15, 13}, {15, 3}, {15, 7}};
    return {"pinched on a vertex and a face", draw(16, es, pos), Cycle{{0, 1, 2, 3, 4, 5, 6, 9, 7, 8}},
            Cycle{{1, 2, 3, 4, 5, 11, 7, 12}}, Cycle{{2, 3, 4, 13, 7, 14}}, Edge(3, 15), vertex_kind({7})};
}

// Expected face pieces are the faces the drawing puts below (and above) the
// shared paths; they are looked up rather than hard-coded as face indices.
inline int face_with_all(const Embedding& p, const std::vector<Vertex>& vs, const std::vector<Vertex>& without = {}) {
    auto parts = face_parts(p);
    for (std::size_t fi = 0; fi < parts.size(); ++fi) {
        const auto& fv = parts[fi].vertices;
        auto in = [&](Vertex v) { return std::binary_search(fv.begin(), fv.end(), v); };
        if (std::all_of(vs.begin(), vs.end(), in) && std::none_of(without.begin(), without.end(), in)) return static_cast<int>(fi);
    }
    return -1;
}

inline std::vector<Square> squares() {
    std::vector<Square> out{square_full(), square_pinched_on_vertex(), square_pinched_on_face(),
                            square_pinched_on_two_vertices(), square_pinched_on_two_faces(), square_pinched_on_vertex_and_face()};
    out[2].kind.pieces = {{Piece::OnFace, face_with_all(out[2].d.p, {0, 1, 2, 3, 4, 5, 6, 14})}};
    out[4].kind.pieces = {{Piece::OnFace, face_with_all(out[4].d.p, {0, 1, 2, 3, 4, 5, 6, 16})},
                          {Piece::OnFace, face_with_all(out[4].d.p, {7, 8, 9, 10, 11, 12, 13, 16})}};
    std::sort(out[4].kind.pieces.begin(), out[4].kind.pieces.end());
    out[5].kind.pieces = {{Piece::OnVertex, 7}, {Piece::OnFace, face_with_all(out[5].d.p, {0, 1, 2, 3, 4, 5, 6, 10})}};
    return out;
}

// Rings of n vertices around a centre, ring 0 outermost; ring i vertex j is
// i*n + j and the centre is rings*n.
inline Drawing concentric_rings(int rings, int n, bool centre = true) {
    std::vector<std::pair<int, int>> es;
    Positions pos;
    for (int i = 0; i < rings; ++i)
        for (int j = 0; j < n; ++j) {
            int v = i * n + j;
            double rad = rings - i, ang = 2 * M_PI * j / n;
            pos[v] = {rad * std::cos(ang), rad * std::sin(ang)};
            es.emplace_back(v, i * n + (j + 1) % n);
            if (i + 1 < rings) es.emplace_back(v, v + n);
            else if (centre) es.emplace_back(v, rings * n);
        }
    if (centre) pos[rings * n] = {0, 0};
    return draw(rings * n + (centre ? 1 : 0), es, pos);
}

inline Cycle ring(int i, int n) {
    Cycle c;
    for (int j = 0; j < n; ++j) c.vertices.push_back(i * n + j);
    return c;
}

// Radius layering: three rings of five around a centre; faces between rings
// 0 and 1 have radius 1, between rings 1 and 2 radius 2, around the centre 3.
inline Drawing radius_layers() { return concentric_rings(3, 5); }

// Torus grid C_r x C_c, vertex i*c + j; rotation right, down, left, up.
inline Embedding torus_grid_embedding(int r, int c) {
    Graph g = torus_grid(r, c);
    std::map<Vertex, std::vector<Vertex>> rot;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            rot[i * c + j] = {i * c + (j + 1) % c, ((i + 1) % r) * c + j, i * c + (j + c - 1) % c, ((i + r - 1) % r) * c + j};
    return Embedding::from_neighbors(g, rot);
}

inline Cycle torus_row(int i, int c) { return ring(i, c); }

// The six parallel rows of a 6 x 3 torus grid, listed as C1, C1', C1'', C2'',
// C2', C2.
inline std::vector<Cycle> homotopic_rows() {
    std::vector<Cycle> out;
    for (int i = 0; i < 6; ++i) out.push_back(torus_row(i, 3));
    return out;
}

// Three subgraphs rooted at 0: a triangle through 0, and two cycles hanging
// off the shared path 0-3.
inline std::vector<Graph> spanning_tree_cycles() {
    Graph g = Graph::from_pairs(10, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}, {3, 7}, {7, 8}, {8, 9}, {9, 7}});
    std::vector<Edge> c0{{0, 1}, {1, 2}, {0, 2}};
    std::vector<Edge> c1{{0, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}};
    std::vector<Edge> c2{{0, 3}, {3, 7}, {7, 8}, {8, 9}, {7, 9}};
    return {g.edge_subgraph(c0), g.edge_subgraph(c1), g.edge_subgraph(c2)};
}

}  // namespace configs

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "oracles/graph_enum.hpp"
#include "oracles/well_nested_oracle.hpp"
#include "support/configurations.hpp"
#include "surfminor/connectivity.hpp"
#include "surfminor/genus_search.hpp"
#include "surfminor/structure.hpp"

using namespace surfminor;

namespace {

Embedding planar_k4() {
    return embedding_from_positions(complete_graph(4), {{0, {0, 0}}, {1, {4, 0}}, {2, {2, 4}}, {3, {2, 1}}});
}

Embedding planar_wheel(int n) {
    std::map<Vertex, std::pair<double, double>> pos{{0, {0, 0}}};
    for (int i = 1; i <= n; ++i) pos[i] = {std::cos(2 * M_PI * i / n), std::sin(2 * M_PI * i / n)};
    return embedding_from_positions(wheel_graph(n), pos);
}

// Nested triangles 0-1-2 and 0-3-4 sharing vertex 0.
configs::Drawing nested_triangles() {
    return configs::draw(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {1, 3}, {2, 4}},
                         {{0, {0, 0}}, {1, {-4, 6}}, {2, {4, 6}}, {3, {-1, 3}}, {4, {1, 3}}});
}

}  // namespace

TEST(WellNested, ConcentricRingsAreFree) {
    auto d = configs::concentric_rings(2, 4);
    ASSERT_EQ(euler_genus(d.p), 0);
    auto k = classify_well_nested(d.p, configs::ring(0, 4), configs::ring(1, 4), d.outer);
    ASSERT_TRUE(k);
    EXPECT_TRUE(k->free());
}

TEST(WellNested, TrianglesSharingAVertex) {
    auto d = nested_triangles();
    ASSERT_EQ(euler_genus(d.p), 0);
    auto k = classify_well_nested(d.p, Cycle{{0, 1, 2}}, Cycle{{0, 3, 4}}, d.outer);
    ASSERT_TRUE(k);
    EXPECT_EQ(k->str(), "pinched on vertex 0");
}

TEST(WellNested, RejectsNonNestedInput) {
    auto d = nested_triangles();
    EXPECT_THROW(classify_well_nested(d.p, Cycle{{0, 3, 4}}, Cycle{{0, 1, 2}}, d.outer), Error);
    EXPECT_THROW(classify_well_nested(d.p, Cycle{{0, 1, 2}}, Cycle{{0, 1, 2}}, d.outer), Error);
    auto t = configs::torus_grid_embedding(3, 3);
    EXPECT_THROW(classify_well_nested(t, Cycle{{0, 1, 2}}, Cycle{{3, 4, 5}}), Error);
}

TEST(WellNested, SharedEdgeWithoutFaceIsNotWellNested) {
    auto p = planar_k4();
    // Outer face 0-1-2; triangle 0-1-3 shares the edge 0-1 with it.
    auto k = classify_well_nested(p, Cycle{{0, 1, 2}}, Cycle{{0, 1, 3}});
    EXPECT_FALSE(k);
}

TEST(WellNested, SquareConfigurationsClassifyAsDrawn) {
    for (const auto& s : configs::squares()) {
        SCOPED_TRACE(s.name);
        ASSERT_EQ(euler_genus(s.d.p), 0);
        auto k1 = classify_well_nested(s.d.p, s.c, s.c1, s.d.outer);
        auto k2 = classify_well_nested(s.d.p, s.c1, s.c2, s.d.outer);
        ASSERT_TRUE(k1);
        ASSERT_TRUE(k2);
        EXPECT_EQ(*k1, s.kind) << k1->str();
        EXPECT_EQ(*k2, s.kind) << k2->str();
        auto sq = check_contractible_square(s.d.p, s.c, s.c1, s.c2, s.d.outer);
        EXPECT_TRUE(sq.ok) << sq.failed;
        EXPECT_EQ(sq.kind, s.kind);
    }
}

TEST(WellNested, SquareFacePiecesAreTheDrawnFaces) {
    auto all = configs::squares();
    for (int i : {2, 4, 5})
        for (const Piece& pc : all[static_cast<std::size_t>(i)].kind.pieces) {
            if (pc.kind == Piece::OnFace) {
                EXPECT_GE(pc.id, 0) << all[static_cast<std::size_t>(i)].name;
            }
        }
}

TEST(WellNested, AgreesWithLiteralOracleOnSmallEmbeddings) {
    long pairs = 0, classified = 0;
    for (const Graph& g : oracle::connected_graphs(7)) {
        auto cycles = enumerate_cycles(g, 1000);
        if (cycles.size() < 2) continue;
        for_each_embedding(g, false, [&](const Embedding& p) {
            std::vector<Cycle> con;
            std::vector<Graph> in;
            for (const Cycle& c : cycles) {
                EmbeddedCycle ec(p, c);
                if (!ec.contractible()) continue;
                con.push_back(c);
                in.push_back(ec.interior());
            }
            for (std::size_t i = 0; i < con.size(); ++i)
                for (std::size_t j = 0; j < con.size(); ++j) {
                    if (i == j) continue;
                    bool nested = true;
                    for (const Edge& e : con[j].edges()) nested = nested && in[i].has_edge(e);
                    if (!nested) continue;
                    ++pairs;
                    auto k = classify_well_nested(p, con[i], con[j]);
                    auto lit = oracle::well_nested_categories(p, con[i], con[j]);
                    EXPECT_EQ(k.has_value(), !lit.empty()) << con[i].str() << " " << con[j].str();
                    if (k) {
                        ++classified;
                        EXPECT_TRUE(lit.count(k->pieces)) << k->str();
                    }
                }
            return true;
        });
    }
    EXPECT_GT(pairs, 0);
    EXPECT_GT(classified, 0);
}

TEST(WellNestedChain, ConcentricRingsGiveOneFreeChain) {
    for (int n : {2, 3, 4}) {
        auto d = configs::concentric_rings(n, 4, false);
        auto chain = longest_well_nested_chain(d.p, 100000, d.outer);
        EXPECT_TRUE(chain.exact);
        EXPECT_EQ(chain.cycles.size(), static_cast<std::size_t>(n));
        EXPECT_TRUE(chain.discipline.free());
        EXPECT_EQ(chain.cycles.back(), configs::ring(0, 4));
    }
}

TEST(WellNestedChain, PlanarK4MatchesBruteForce) {
    auto p = planar_k4();
    auto chain = longest_well_nested_chain(p);
    auto cycles = enumerate_cycles(p.graph(), 100);
    // every ordered sequence of distinct cycles, each well nested in the next
    std::size_t best = 1;
    std::vector<int> idx(cycles.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::function<void(std::vector<int>&, std::optional<WellNestedKind>)> grow = [&](std::vector<int>& seq, std::optional<WellNestedKind> disc) {
        best = std::max(best, seq.size());
        for (int nxt : idx) {
            if (std::find(seq.begin(), seq.end(), nxt) != seq.end()) continue;
            std::optional<WellNestedKind> k;
            try {
                k = classify_well_nested(p, cycles[static_cast<std::size_t>(nxt)], cycles[static_cast<std::size_t>(seq.back())]);
            } catch (const Error&) {
                continue;
            }
            if (!k || (disc && !(*disc == *k))) continue;
            seq.push_back(nxt);
            grow(seq, k);
            seq.pop_back();
        }
    };
    for (int s : idx) {
        std::vector<int> seq{s};
        grow(seq, std::nullopt);
    }
    EXPECT_EQ(chain.cycles.size(), best);
    EXPECT_EQ(best, 1u);
}

TEST(WellNestedChain, SquareConfigurationsHaveChainsOfThree) {
    for (const auto& s : configs::squares()) {
        SCOPED_TRACE(s.name);
        auto chain = longest_well_nested_chain(s.d.p, 100000, s.d.outer);
        EXPECT_GE(chain.cycles.size(), 3u);
    }
}

TEST(AlmostDisjoint, Examples) {
    EXPECT_TRUE(is_almost_disjoint({Cycle{{0, 1, 2}}, Cycle{{3, 4, 5}}}));
    EXPECT_FALSE(is_almost_disjoint({Cycle{{0, 1, 2}}, Cycle{{0, 1, 3}}}));
    EXPECT_TRUE(is_almost_disjoint({Cycle{{0, 1, 2}}, Cycle{{0, 3, 4}}, Cycle{{0, 5, 6}}, Cycle{{0, 7, 8}}}));
    // Each pair shares one vertex, but the middle triangle meets the union
    // of the other two in two vertices.
    EXPECT_FALSE(is_almost_disjoint({Cycle{{0, 1, 2}}, Cycle{{2, 3, 4}}, Cycle{{4, 5, 0}}}));
}

TEST(AlmostDisjoint, MaximumSubfamilyIsExact) {
    std::vector<std::vector<Vertex>> sets{{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {6, 7, 8}};
    auto r = max_almost_disjoint(sets);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.chosen.size(), 3u);
    // brute force over all subsets
    std::size_t best = 0;
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<std::vector<Vertex>> sub;
        for (unsigned i = 0; i < 4; ++i)
            if (mask >> i & 1u) sub.push_back(sets[i]);
        if (almost_disjoint_sets(sub)) best = std::max(best, sub.size());
    }
    EXPECT_EQ(r.chosen.size(), best);
}

TEST(AlmostDisjoint, RandomFamiliesMatchBruteForce) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::vector<Vertex>> sets;
        const int n = 2 + static_cast<int>(rng() % 9);
        for (int i = 0; i < n; ++i) {
            std::set<Vertex> s;
            while (s.size() < 3) s.insert(static_cast<Vertex>(rng() % 12));
            sets.emplace_back(s.begin(), s.end());
        }
        std::size_t best = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<std::vector<Vertex>> sub;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u) sub.push_back(sets[static_cast<std::size_t>(i)]);
            if (sub.size() > best && almost_disjoint_sets(sub)) best = sub.size();
        }
        auto r = max_almost_disjoint(sets);
        std::vector<std::vector<Vertex>> chosen;
        for (int i : r.chosen) chosen.push_back(sets[static_cast<std::size_t>(i)]);
        EXPECT_TRUE(almost_disjoint_sets(chosen));
        EXPECT_EQ(r.chosen.size(), best);
    }
}

TEST(SpanningTreeCycles, SingleCycleThroughRoot) {
    Graph g = cycle_graph(4);
    // two copies of one cycle share every edge
    EXPECT_FALSE(is_cycles_on_spanning_tree(0, {g, g}));
    EXPECT_TRUE(is_cycles_on_spanning_tree(0, {g}));
    Graph tri = Graph::from_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    EXPECT_TRUE(is_cycles_on_spanning_tree(0, {tri.edge_subgraph(std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}),
                                                tri.edge_subgraph(std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}})}));
}

TEST(SpanningTreeCycles, RootedConfiguration) {
    auto parts = configs::spanning_tree_cycles();
    EXPECT_TRUE(is_cycles_on_spanning_tree(0, parts));
    EXPECT_FALSE(is_cycles_on_spanning_tree(5, parts));
}

TEST(SpanningTreeCycles, Violations) {
    Graph g = Graph::from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 3}, {2, 4}});
    auto sub = [&](std::vector<Edge> es) { return g.edge_subgraph(es); };
    // Two cycles sharing the edges 0-1 and 1-2 leave no tree with two cotree edges of their own.
    EXPECT_FALSE(is_cycles_on_spanning_tree(0, {sub({{0, 1}, {1, 2}, {0, 2}}), sub({{0, 1}, {1, 2}, {2, 4}, {3, 4}, {0, 3}, {0, 2}})}));
    // C1 reaches a only through edges of C0, so it is not its cycle plus an access path.
    EXPECT_FALSE(is_cycles_on_spanning_tree(0, {sub({{0, 1}, {1, 2}, {0, 2}}), sub({{2, 4}, {3, 4}, {4, 5}, {3, 5}})}));
    EXPECT_TRUE(is_cycles_on_spanning_tree(0, {sub({{0, 1}, {1, 2}, {0, 2}}), sub({{0, 1}, {1, 2}, {2, 4}, {3, 4}, {4, 5}, {3, 5}})}));
    EXPECT_TRUE(is_cycles_on_spanning_tree(0, {sub({{0, 1}, {1, 2}, {0, 2}}), sub({{0, 3}, {3, 4}, {4, 5}, {3, 5}})}));
}

TEST(HomotopyFamily, BoundFormula) {
    EXPECT_EQ(homotopy_class_bound(0), 0);
    EXPECT_EQ(homotopy_class_bound(1), 1);
    EXPECT_EQ(homotopy_class_bound(2), 3);
    EXPECT_EQ(homotopy_class_bound(4), 9);
}

TEST(HomotopyFamily, PlanarThetaHasOneClass) {
    Graph g = Graph::from_pairs(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    auto p = embedding_from_positions(g, {{0, {0, 0}}, {1, {0, 4}}, {2, {-2, 2}}, {3, {0, 2}}, {4, {2, 2}}});
    auto f = max_nonhomotopic_internally_disjoint(p, 0, 1);
    EXPECT_EQ(f.members.size(), 1u);
    EXPECT_EQ(f.bound, 0);
    EXPECT_TRUE(f.within_bound());
    EXPECT_TRUE(f.exact);
}

TEST(HomotopyFamily, TorusGridStaysWithinThree) {
    auto p = configs::torus_grid_embedding(3, 3);
    HomotopyContext ctx(p);
    for (Vertex a : p.graph().vertices())
        for (Vertex b : p.graph().vertices()) {
            auto f = max_nonhomotopic_internally_disjoint(ctx, a, b);
            EXPECT_TRUE(f.exact);
            EXPECT_LE(f.k(), 3);
            EXPECT_GE(f.members.size(), 1u);
        }
    // a = b: vertex 0 has degree 4, so the row and the column
    auto f = max_nonhomotopic_internally_disjoint(ctx, 0, 0);
    EXPECT_EQ(f.members.size(), 2u);
}

TEST(HomotopyFamily, ProjectivePlaneLoops) {
    auto prof = min_euler_genus(complete_graph(5));
    const auto& p = *prof.nonorientable.witness;
    ASSERT_EQ(euler_genus(p), 1);
    HomotopyContext ctx(p);
    for (Vertex a = 0; a < 5; ++a) {
        auto f = max_nonhomotopic_internally_disjoint(ctx, a, a);
        EXPECT_TRUE(f.exact);
        EXPECT_GE(f.members.size(), 1u);
        EXPECT_LE(f.members.size(), 2u);
    }
}

TEST(HomotopyFamily, ExhaustiveBoundOnSmallEmbeddings) {
    long families = 0, violations = 0;
    for (const Graph& g : oracle::connected_graphs(6)) {
        if (g.size() == 0) continue;
        for_each_embedding(g, false, [&](const Embedding& p) {
            HomotopyContext ctx(p);
            for (Vertex a : g.vertices())
                for (Vertex b : g.vertices()) {
                    if (b < a) continue;
                    auto f = max_nonhomotopic_internally_disjoint(ctx, a, b);
                    ++families;
                    if (!f.exact || !f.within_bound()) ++violations;
                }
            return true;
        });
    }
    EXPECT_GT(families, 1000);
    EXPECT_EQ(violations, 0);
}

TEST(Radius, WheelRimHasRadiusOne) {
    auto p = planar_wheel(5);
    EmbeddedCycle ec(p, Cycle{{1, 2, 3, 4, 5}});
    ASSERT_TRUE(ec.contractible());
    // interior chosen opposite the lexicographically smallest face, 0-1-2
    auto faces = face_traversal(p);
    std::optional<FaceState> outer;
    for (const auto& f : faces)
        if (f.size() == 5) outer = FaceState{f.darts[0], f.orientation[0]};
    auto r = radius(p, Cycle{{1, 2, 3, 4, 5}}, outer);
    EXPECT_EQ(r.overall, 1);
    EXPECT_EQ(r.radius.size(), 5u);
}

TEST(Radius, FacialCycleHasRadiusOne) {
    auto p = Embedding::trivial(cycle_graph(4));
    auto r = radius(p, Cycle{{0, 1, 2, 3}});
    EXPECT_EQ(r.radius.size(), 1u);
    EXPECT_EQ(r.overall, 1);
}

TEST(Radius, ThreeLayers) {
    auto d = configs::radius_layers();
    auto r = radius(d.p, configs::ring(0, 5), d.outer);
    EXPECT_EQ(r.overall, 3);
    std::map<int, int> per_layer;
    auto parts = face_parts(d.p);
    for (auto [f, layer] : r.radius) {
        ++per_layer[layer];
        const auto& vs = parts[static_cast<std::size_t>(f)].vertices;
        int lowest_ring = *std::min_element(vs.begin(), vs.end()) / 5;
        EXPECT_EQ(layer, lowest_ring + 1);
    }
    EXPECT_EQ(per_layer, (std::map<int, int>{{1, 5}, {2, 5}, {3, 5}}));
}

TEST(BoundaryFaces, AnnulusRing) {
    auto d = configs::concentric_rings(2, 4, false);
    auto b = boundary_faces(d.p, configs::ring(0, 4), configs::ring(1, 4), d.outer);
    EXPECT_EQ(b.size(), 4u);
}

TEST(BoundaryFaces, OnlyTheOuterRingOfTwo) {
    auto d = configs::concentric_rings(3, 4, false);
    auto b = boundary_faces(d.p, configs::ring(0, 4), configs::ring(2, 4), d.outer);
    auto between = faces_between(d.p, configs::ring(0, 4), configs::ring(2, 4), d.outer);
    EXPECT_EQ(between.size(), 8u);
    EXPECT_EQ(b.size(), 4u);
    auto parts = face_parts(d.p);
    for (int f : b) EXPECT_LT(parts[static_cast<std::size_t>(f)].vertices.front(), 4);
}

TEST(BoundaryFaces, EmptyBand) {
    auto d = configs::concentric_rings(2, 4, false);
    EXPECT_TRUE(boundary_faces(d.p, configs::ring(0, 4), configs::ring(0, 4), d.outer).empty());
}

TEST(ClosestCycle, SecondRingEnclosesBoundary) {
    auto d = configs::concentric_rings(3, 4, true);
    auto b = boundary_faces(d.p, configs::ring(0, 4), configs::ring(2, 4), d.outer);
    ASSERT_EQ(b.size(), 4u);
    auto r = closest_enclosing_cycle(d.p, configs::ring(0, 4), b, d.outer);
    EXPECT_EQ(r.status, ClosestCycle::Found);
    EXPECT_EQ(r.cycle, configs::ring(1, 4).canonical());
}

TEST(ClosestCycle, EmptyFaceSetGivesCItself) {
    auto d = configs::concentric_rings(3, 4, true);
    auto r = closest_enclosing_cycle(d.p, configs::ring(0, 4), {}, d.outer);
    EXPECT_EQ(r.status, ClosestCycle::Degenerate);
    EXPECT_EQ(r.cycle, configs::ring(0, 4).canonical());
}

TEST(ClosestCycle, AllFacesLeaveNoCycle) {
    auto d = configs::concentric_rings(3, 4, true);
    EmbeddedCycle ec(d.p, configs::ring(0, 4), d.outer);
    auto r = closest_enclosing_cycle(d.p, configs::ring(0, 4), ec.interior_faces(), d.outer);
    EXPECT_EQ(r.status, ClosestCycle::Innermost);
    EXPECT_TRUE(r.cycle.vertices.empty());
}

TEST(SquareVerdict, ThresholdArithmetic) {
    EXPECT_FALSE(is_bad_square(0, 1));
    EXPECT_EQ(bad_square_threshold(1), 18 * 39);
    EXPECT_EQ(bad_square_threshold(0), -54);
    EXPECT_TRUE(is_bad_square(0, 0));
    EXPECT_FALSE(is_bad_square(100, 2));
    EXPECT_EQ(bad_square_threshold(2), 1458);
    EXPECT_TRUE(is_bad_square(1459, 2));
}

TEST(SquareVerdict, SamePlaneDrawingOfGMinusE) {
    auto s = configs::square_full();
    Graph ge = s.d.p.graph().without_edge(s.e);
    std::map<Vertex, std::pair<double, double>> pos;
    const double r[3] = {6, 4, 2};
    const int sx[4] = {-1, 1, 1, -1}, sy[4] = {-1, -1, 1, 1};
    for (int ring = 0; ring < 3; ++ring)
        for (int i = 0; i < 4; ++i) pos[4 * ring + i] = {sx[i] * r[ring], sy[i] * r[ring]};
    pos[12] = {0, 0};
    auto pe = embedding_from_positions(ge, pos);
    auto v = square_verdict(s.d.p, pe, s.c, s.c1, s.c2, s.e, s.d.outer);
    // Only the two faces at e differ between the drawings.
    EXPECT_EQ(v.boundary.size(), 4u);
    EXPECT_TRUE(v.boundary_n.empty());
    EXPECT_TRUE(v.empty_boundary_n);
    EXPECT_EQ(v.interior.size(), 4u);
    EXPECT_EQ(v.interior_n.size(), 1u);
    EXPECT_EQ(v.threshold, -54);
    EXPECT_TRUE(v.bad);
}

TEST(SquareVerdict, RejectsBrokenPreconditions) {
    auto s = configs::square_full();
    auto pe = Embedding::trivial(s.d.p.graph().without_edge(s.e));
    EXPECT_THROW(square_verdict(s.d.p, pe, s.c, s.c2, s.c1, s.e, s.d.outer), Error);
    EXPECT_THROW(square_verdict(s.d.p, pe, s.c, s.c1, s.c2, Edge(0, 1), s.d.outer), Error);
    // C″ = ring 2 is not the closest cycle to C: the square needs C′ = ring 1.
    auto sq = check_contractible_square(s.d.p, s.c, s.c2, Cycle{{12, 8, 9}}, s.d.outer);
    EXPECT_FALSE(sq.ok);
}

TEST(SquareVerdict, MinimizingOverEmbeddingsOfGMinusE) {
    // Three loops at 0 with a chord 5-7 inside the innermost: G - e is a
    // bouquet of three cycles, small enough to enumerate.
    auto d = configs::draw(8, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 7}, {7, 0}, {5, 7}},
                           {{0, {0, 0}}, {1, {-6, 6}}, {2, {6, 6}}, {3, {-4, 5}}, {4, {4, 5}}, {5, {-2, 4}}, {6, {0, 4.5}}, {7, {2, 4}}});
    Cycle c{{0, 1, 2}}, c1{{0, 3, 4}}, c2{{0, 5, 6, 7}};
    auto sq = check_contractible_square(d.p, c, c1, c2, d.outer);
    ASSERT_TRUE(sq.ok) << sq.failed;
    EXPECT_EQ(sq.kind.str(), "pinched on vertex 0");
    auto m = square_verdict_minimizing(d.p, c, c1, c2, Edge(5, 7), d.outer);
    EXPECT_TRUE(m.exhaustive);
    EXPECT_GT(m.examined, 1u);
    EXPECT_EQ(euler_genus(m.pe), 0);
    // both faces at the chord disappear in G - e, and they share 5 and 7
    EXPECT_EQ(m.square.interior.size(), 2u);
    EXPECT_EQ(m.square.interior_n.size(), 1u);
    EXPECT_FALSE(m.square.bad);
}

TEST(WellHomotopic, ParallelTorusRowsAreFree) {
    auto p = configs::torus_grid_embedding(3, 3);
    auto k = classify_well_homotopic(p, Cycle{{0, 1, 2}}, Cycle{{3, 4, 5}});
    ASSERT_TRUE(k);
    EXPECT_TRUE(k->free());
    EXPECT_THROW(classify_well_homotopic(p, Cycle{{0, 1, 2}}, Cycle{{0, 3, 6}}), Error);
    EXPECT_THROW(classify_well_homotopic(p, Cycle{{0, 1, 2}}, Cycle{{0, 1, 4, 3}}), Error);
}

TEST(WellHomotopic, PinchedOnAVertex) {
    // 3 x 4 torus grid with the diagonal 1-4 drawn inside the square 0-1-5-4.
    Graph g0 = torus_grid(3, 4);
    std::vector<Edge> es(g0.edges().begin(), g0.edges().end());
    es.emplace_back(1, 4);
    Graph g(g0.vertices(), es);
    std::map<Vertex, std::vector<Vertex>> rot;
    const int r = 3, c = 4;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            rot[i * c + j] = {i * c + (j + 1) % c, ((i + 1) % r) * c + j, i * c + (j + c - 1) % c, ((i + r - 1) % r) * c + j};
    rot[1] = {2, 5, 4, 0, 9};
    rot[4] = {5, 8, 7, 0, 1};
    auto p = Embedding::from_neighbors(g, rot);
    ASSERT_EQ(euler_genus(p), 2);
    auto k = classify_well_homotopic(p, Cycle{{4, 5, 6, 7}}, Cycle{{4, 0, 3, 2, 1}});
    ASSERT_TRUE(k);
    EXPECT_EQ(k->str(), "pinched on vertex 4");
}

TEST(WellHomotopic, SixRowsInOrder) {
    auto p = configs::torus_grid_embedding(6, 3);
    auto rows = configs::homotopic_rows();
    auto o = well_homotopic_order(p, rows);
    EXPECT_TRUE(o.in_order) << o.reason;
    ASSERT_TRUE(o.discipline);
    EXPECT_TRUE(o.discipline->free());
    std::swap(rows[1], rows[2]);
    auto bad = well_homotopic_order(p, rows);
    EXPECT_FALSE(bad.in_order);
    EXPECT_FALSE(bad.discipline);
}

TEST(FacesWrtSubgraph, ComponentsOfFaceIntersections) {
    auto s = configs::square_full();
    EmbeddedCycle ec(s.d.p, s.c1, s.d.outer);
    Graph h = ec.interior();
    auto fs = faces_wrt(s.d.p, h);
    // 8 faces inside C′ and the 4 band faces outside, each meeting C′ in one
    // edge; the outer face misses C′
    std::size_t single_edges = 0;
    for (const auto& f : fs)
        if (f.part.size() == 1) ++single_edges;
    EXPECT_EQ(single_edges, 4u);
    EXPECT_EQ(fs.size(), 8u + 4u);
}

#include <gtest/gtest.h>

#include <random>

#include "oracles/brute.hpp"
#include "support/random_graphs.hpp"
#include "surfminor/connectivity.hpp"
#include "surfminor/graph_io.hpp"
#include "surfminor/minors.hpp"

using namespace surfminor;

TEST(Graph, RejectsLoopsParallelAndUndeclared) {
    EXPECT_THROW(Graph({0, 1}, {Edge(0, 0)}), Error);
    EXPECT_THROW(Graph({0, 1}, {Edge(0, 1), Edge(1, 0)}), Error);
    EXPECT_THROW(Graph({0, 1}, {Edge(0, 2)}), Error);
    EXPECT_THROW(Graph({0, 0}, {}), Error);
}

TEST(MinorOps, ContractTriangleGivesK2) {
    Graph c3 = cycle_graph(3);
    for (const Edge& e : c3.edges()) {
        Graph h = apply_minor_op(c3, MinorOp::contract_edge(e));
        EXPECT_EQ(h.order(), 2);
        EXPECT_EQ(h.size(), 1);
        EXPECT_TRUE(h.has_vertex(e.u));  // lower id survives
        EXPECT_FALSE(h.has_vertex(e.v));
    }
}

TEST(MinorOps, DeleteVertexOfK5IsK4) {
    Graph h = apply_minor_op(complete_graph(5), MinorOp::delete_vertex(2));
    EXPECT_TRUE(oracle::isomorphic_bruteforce(h, complete_graph(4)));
}

TEST(MinorOps, ContractK33EdgeMatchesMatrixOracle) {
    Graph k = complete_bipartite(3, 3);
    for (const Edge& e : k.edges()) {
        Graph h = apply_minor_op(k, MinorOp::contract_edge(e));
        EXPECT_EQ(h.order(), 5);
        EXPECT_EQ(h.size(), 8);
        auto m = oracle::contract_matrix(oracle::adjacency(k), k.index_of(e.u), k.index_of(e.v));
        EXPECT_EQ(oracle::adjacency(h), m);
    }
}

TEST(MinorOps, MissingElementsRejectedWithId) {
    Graph k = complete_graph(3);
    try {
        apply_minor_op(k, MinorOp::delete_vertex(7));
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find('7'), std::string::npos);
    }
    EXPECT_THROW(apply_minor_op(k, MinorOp::contract_edge(Edge(0, 5))), Error);
    EXPECT_THROW(apply_minor_op(cycle_graph(4), MinorOp::delete_edge(Edge(0, 2))), Error);
}

TEST(MinorOps, OpStringsRoundTrip) {
    for (MinorOp op : {MinorOp::delete_vertex(3), MinorOp::delete_edge(Edge(4, 1)), MinorOp::contract_edge(Edge(0, 9))})
        EXPECT_EQ(MinorOp::parse(op.str()), op);
    EXPECT_THROW(MinorOp::parse("squash(1)"), Error);
}

TEST(OneStepMinors, TriangleHasNine) {
    auto all = one_step_minors(cycle_graph(3));
    ASSERT_EQ(all.size(), 9u);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(all[static_cast<std::size_t>(i)].second.size(), 1);      // K2
    for (int i = 3; i < 6; ++i) EXPECT_EQ(all[static_cast<std::size_t>(i)].second.size(), 2);      // P3
    for (int i = 6; i < 9; ++i) EXPECT_EQ(all[static_cast<std::size_t>(i)].second.order(), 2);     // K2
}

TEST(OneStepMinors, K5DedupMatchesBruteIsomorphism) {
    Graph k5 = complete_graph(5);
    auto all = one_step_minors(k5);
    ASSERT_EQ(all.size(), 25u);
    // brute-force class count
    std::vector<Graph> reps;
    for (auto& [op, h] : all) {
        bool found = false;
        for (auto& r : reps) found = found || oracle::isomorphic_bruteforce(r, h);
        if (!found) reps.push_back(h);
    }
    auto dedup = one_step_minors(k5, true);
    EXPECT_EQ(dedup.size(), reps.size());
    // K5 minus a vertex and K5 contracted along an edge are both K4.
    EXPECT_EQ(dedup.size(), 2u);
}

TEST(OneStepMinors, SingleVertex) {
    auto all = one_step_minors(Graph(1));
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0].second.order(), 0);
}

TEST(OneStepMinors, SizesNeverGrow) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        Graph g = support::random_graph(rng, 7, 10);
        for (int step = 0; step < 5 && g.order() > 0; ++step) {
            auto ms = one_step_minors(g);
            auto& pick = ms[rng() % ms.size()].second;
            EXPECT_LE(pick.order(), g.order());
            EXPECT_LE(pick.size(), g.size());
            g = pick;
        }
    }
}

TEST(Blocks, Examples) {
    Graph bowtie = Graph::from_pairs(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto b = blocks(bowtie);
    EXPECT_EQ(b.blocks.size(), 2u);
    EXPECT_EQ(b.cutvertices, std::vector<Vertex>{2});
    auto k5 = blocks(complete_graph(5));
    EXPECT_EQ(k5.blocks.size(), 1u);
    EXPECT_TRUE(k5.cutvertices.empty());
    auto p4 = blocks(path_graph(4));
    EXPECT_EQ(p4.blocks.size(), 3u);
    EXPECT_EQ(p4.cutvertices, (std::vector<Vertex>{1, 2}));
}

TEST(Blocks, PartitionEdgesAndRecombine) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        Graph g = support::random_graph(rng, 9, 12);
        auto b = blocks(g);
        std::vector<Edge> all;
        std::vector<Vertex> vs;
        for (const Graph& blk : b.blocks) {
            all.insert(all.end(), blk.edges().begin(), blk.edges().end());
            vs.insert(vs.end(), blk.vertices().begin(), blk.vertices().end());
            if (blk.size() > 1) {
                EXPECT_TRUE(is_two_connected(blk));
            }
        }
        EXPECT_EQ(static_cast<int>(all.size()), g.size());
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        EXPECT_EQ(Graph(vs, all), g);
        // cutvertices are exactly the vertices whose removal adds components
        std::vector<int> lab;
        int base = g.component_labels(lab);
        std::vector<Vertex> cuts;
        for (Vertex v : g.vertices()) {
            Graph h = g.without_vertex(v);
            if (h.component_labels(lab) > base - (g.degree(v) == 0 ? 1 : 0)) cuts.push_back(v);
        }
        EXPECT_EQ(b.cutvertices, cuts);
    }
}

TEST(Bridges, K4OnTriangle) {
    Graph k4 = complete_graph(4);
    Graph tri = Graph::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}});
    auto bs = bridges_on(k4, tri);
    ASSERT_EQ(bs.size(), 1u);
    EXPECT_EQ(bs[0].kind, Bridge::Kind::Component);
    EXPECT_EQ(bs[0].attaches, (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(bs[0].body.size(), 3);
}

TEST(Bridges, CycleOnItselfAndChord) {
    EXPECT_TRUE(bridges_on(cycle_graph(5), cycle_graph(5)).empty());
    Graph c4c = Graph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    auto bs = bridges_on(c4c, cycle_graph(4));
    ASSERT_EQ(bs.size(), 1u);
    EXPECT_EQ(bs[0].kind, Bridge::Kind::Chord);
    EXPECT_EQ(bs[0].attaches, (std::vector<Vertex>{0, 2}));
    EXPECT_THROW(bridges_on(cycle_graph(4), complete_graph(4)), Error);
}

TEST(Bridges, PartitionProperty) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        Graph h = support::random_graph(rng, 8, 13);
        std::vector<Edge> sub;
        for (const Edge& e : h.edges())
            if (rng() % 2) sub.push_back(e);
        Graph h0 = h.edge_subgraph(sub);
        auto bs = bridges_on(h, h0);
        std::vector<Edge> all = h0.edges();
        for (const auto& b : bs) {
            all.insert(all.end(), b.body.edges().begin(), b.body.edges().end());
            for (Vertex a : b.attaches) EXPECT_TRUE(h0.has_vertex(a));
        }
        std::sort(all.begin(), all.end());
        EXPECT_EQ(all, h.edges());
    }
}

TEST(Separator, Examples) {
    EXPECT_FALSE(find_separator(complete_graph(4), 2).has_value());
    Graph bowtie = Graph::from_pairs(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto s = find_separator(bowtie, 1);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s, std::vector<Vertex>{2});
    Graph k33 = complete_bipartite(3, 3);
    EXPECT_FALSE(find_separator(k33, 2).has_value());
    auto s3 = find_separator(k33, 3);
    ASSERT_TRUE(s3.has_value());
    EXPECT_EQ(s3->size(), 3u);
    EXPECT_TRUE(oracle::separates(k33, *s3));
}

TEST(Separator, AgreesWithSubsetBruteForce) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 300; ++t) {
        Graph g = support::random_connected_graph(rng, 3 + static_cast<int>(rng() % 8), 0.5);
        for (int k = 0; k <= 3; ++k) {
            auto s = find_separator(g, k);
            EXPECT_EQ(s.has_value(), oracle::has_separator_bruteforce(g, k));
            if (s) {
                EXPECT_LE(static_cast<int>(s->size()), k);
                EXPECT_TRUE(oracle::separates(g, *s));
            }
        }
    }
}

TEST(TwoSeparations, ThetaGraph) {
    // two degree-3 vertices joined by three paths of length 2
    Graph theta = Graph::from_pairs(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    auto seps = two_separations(theta);
    for (const auto& s : seps) {
        EXPECT_EQ(s.order(), 2);
        std::vector<Edge> all = s.side_a.edges();
        all.insert(all.end(), s.side_b.edges().begin(), s.side_b.edges().end());
        std::sort(all.begin(), all.end());
        EXPECT_EQ(all, theta.edges());
    }
    EXPECT_FALSE(seps.empty());
    // in K4 one side is always the single edge between the two shared vertices
    for (const auto& s : two_separations(complete_graph(4))) EXPECT_TRUE(s.side_a.size() == 1 || s.side_b.size() == 1);
}

TEST(Graph6, KnownStrings) {
    EXPECT_EQ(to_graph6(complete_graph(5)), "D~{");
    EXPECT_EQ(to_graph6(complete_bipartite(3, 3)), "EFz_");
    EXPECT_EQ(parse_graph6("D~{"), complete_graph(5));
    EXPECT_EQ(parse_graph6(">>graph6<<D~{\n"), complete_graph(5));
    EXPECT_EQ(parse_graph6("@"), Graph(1));
}

TEST(Graph6, RoundTripRandom) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        Graph g = support::random_graph(rng, 1 + static_cast<int>(rng() % 70), static_cast<int>(rng() % 90));
        g = g.compacted();
        EXPECT_EQ(parse_graph6(to_graph6(g)), g);
    }
}

TEST(Graph6, MalformedInputReportsOffset) {
    try {
        parse_graph6("D~");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 2u);
    }
    try {
        parse_graph6("D {");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 1u);
    }
    EXPECT_THROW(parse_graph6("D~{{"), ParseError);
    EXPECT_THROW(parse_graph6("A`"), ParseError);  // padding bit set
    EXPECT_THROW(parse_graph6(""), ParseError);
}

TEST(GraphJson, RoundTripAndErrors) {
    Graph g = Graph({2, 5, 9}, {Edge(2, 9), Edge(5, 9)});
    EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
    EXPECT_EQ(graph_from_json(graph_to_json(complete_graph(4))), complete_graph(4));
    try {
        parse_graph_json("{\"n\": 3, \"edges\": [[0,1],");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_GT(e.offset(), 20u);
    }
    EXPECT_THROW(parse_graph_json("{\"n\": 3}"), Error);
    EXPECT_THROW(parse_graph_json("{\"n\": 2, \"edges\": [[0,0]]}"), Error);
}

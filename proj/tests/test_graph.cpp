#include "doctest.h"

#include <multipark/graph.hpp>

using namespace multipark;

TEST_SUITE("graph") {

TEST_CASE("parse and serialize round-trip") {
    Graph g = Graph::parse("# a comment\n3 3\n1 2\n1 3\n2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g == Graph::parse(g.serialize()));
    CHECK(g == Graph::complete(3));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Graph::parse(""), ParseError);
    CHECK_THROWS_AS(Graph::parse("2 1\n"), ParseError);           // missing edge line
    CHECK_THROWS_AS(Graph::parse("2 1\n1 1\n"), ParseError);      // loop
    CHECK_THROWS_AS(Graph::parse("2 2\n1 2\n2 1\n"), ParseError); // duplicate
    CHECK_THROWS_AS(Graph::parse("2 1\n1 3\n"), ParseError);      // out of range
}

TEST_CASE("neighbors are sorted and degrees consistent") {
    Graph g(4, {{2, 4}, {1, 2}, {2, 3}});
    CHECK(g.neighbors(2) == std::vector<Vertex>{1, 3, 4});
    CHECK(g.degree(2) == 3);
    CHECK(g.degree(1) == 1);
    CHECK(g.has_edge(4, 2));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.edge_index(2, 1) == 0);  // edges stored canonically sorted
}

TEST_CASE("component counts") {
    CHECK(Graph::complete(5).components() == 1);
    CHECK(Graph(3, {}).components() == 3);
    CHECK(Graph(5, {{1, 2}, {4, 5}}).components() == 3);
    CHECK(count_components(4, {{1, 2}, {3, 4}}) == 2);
}

TEST_CASE("multigraph deletion and contraction") {
    Multigraph g = Multigraph::from_graph(Graph::complete(3));
    CHECK(g.edge_count() == 3);
    CHECK_FALSE(g.is_loop(0));
    CHECK_FALSE(g.is_bridge(0));

    Multigraph c = g.contract_edge(0);  // contract {1,2}
    CHECK(c.vertex_count() == 2);
    CHECK(c.edge_count() == 2);  // parallel pair survives
    CHECK_FALSE(c.is_loop(1));
    Multigraph cc = c.contract_edge(1);
    CHECK(cc.vertex_count() == 1);
    CHECK(cc.is_loop(2));

    Multigraph d = g.delete_edge(0);
    CHECK(d.edge_count() == 2);
    CHECK(d.is_bridge(1));
    CHECK(d.components() == 1);
    CHECK(d.delete_edge(1).components() == 2);
}

TEST_CASE("digraph parsing with multiplicities") {
    Digraph d = Digraph::parse("3 2\n1 2 3\n2 3\n");
    CHECK(d.arc_count() == 4);
    CHECK(d.arc_multiplicity(1, 2) == 3);
    CHECK(d.arc_multiplicity(2, 1) == 0);
    CHECK(d.out_degree(1) == 3);
    CHECK(d.out_neighbors(1) == std::vector<Vertex>{2});
    CHECK(d.in_neighbors(3) == std::vector<Vertex>{2});
}

TEST_CASE("digraph from undirected graph doubles every edge") {
    Digraph d = Digraph::from_graph(Graph::complete(3));
    CHECK(d.arc_count() == 6);
    for (Vertex u = 1; u <= 3; ++u)
        for (Vertex v = 1; v <= 3; ++v)
            if (u != v) CHECK(d.arc_multiplicity(u, v) == 1);
}

TEST_CASE("partial orientation components and edge weight") {
    Graph k3 = Graph::complete(3);
    // edges in canonical order: {1,2},{1,3},{2,3}
    PartialOrientation k(k3, {EdgeState::Fwd, EdgeState::Absent, EdgeState::Absent});
    CHECK(k.components() == 2);  // weak connectivity
    CHECK(k.edge_weight() == 1);
    CHECK(k.has_arc(1, 2));
    CHECK_FALSE(k.has_arc(2, 1));

    PartialOrientation k2(k3, {EdgeState::Both, EdgeState::Undirected, EdgeState::Bwd});
    CHECK(k2.components() == 1);
    CHECK(k2.edge_weight() == 2 + 1 + 1);
    CHECK(k2.has_arc(3, 2));
    CHECK(k2.has_undirected(3, 1));
}

}  // TEST_SUITE

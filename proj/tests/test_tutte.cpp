#include "doctest.h"

#include <numeric>
#include <random>

#include <multipark/enumerate.hpp>
#include <multipark/graph.hpp>
#include <multipark/orders.hpp>
#include <multipark/tutte.hpp>

using namespace multipark;

TEST_SUITE("tutte") {

TEST_CASE("polynomial arithmetic") {
    Polynomial p = Polynomial::x() + Polynomial::y();
    Polynomial q = p * p;
    CHECK(q.to_string() == "x^2 + 2 x y + y^2");
    CHECK(p.pow(2) == q);
    CHECK(p.pow(0) == Polynomial::constant(1));

    Polynomial cancel = Polynomial::x();
    cancel.add_term(1, 0, -1);
    CHECK(cancel.is_zero());
    CHECK(cancel.to_string() == "0");

    CHECK(Polynomial::x().shift(1, 0).to_string() == "x + 1");
    CHECK(Polynomial::monomial(2, 0).shift(-1, 0).to_string() == "x^2 - 2 x + 1");

    Polynomial laurent = Polynomial::monomial(0, -1);
    CHECK(laurent.has_negative_exponents());
    CHECK_THROWS_AS(laurent.shift(0, 1), std::logic_error);
    CHECK(laurent.evaluate(1, mpq_class(1, 2)) == 2);
}

TEST_CASE("evaluation is exact rational arithmetic") {
    Polynomial t = tutte_dc(Graph::complete(3));
    CHECK(t.evaluate(2, mpq_class(5, 3)) == mpq_class(23, 3));
    CHECK(t.evaluate(1, 1) == 3);   // spanning trees
    CHECK(t.evaluate(2, 1) == 7);   // spanning forests
    CHECK(t.evaluate(-1, -1) == -1);
}

TEST_CASE("known closed forms") {
    CHECK(tutte_dc(Graph::complete(3)).to_string() == "x^2 + x + y");
    CHECK(tutte_dc(Graph::path(4)).to_string() == "x^3");
    CHECK(tutte_dc(Graph::cycle(5)).to_string() == "x^4 + x^3 + x^2 + x + y");
    CHECK(tutte_dc(Graph(1, {})).to_string() == "1");
    // the complete graph on four vertices
    Polynomial k4 = tutte_dc(Graph::complete(4));
    CHECK(k4.evaluate(1, 1) == 16);
    CHECK(k4.evaluate(2, 1) == 38);
    CHECK(k4.to_string() == "x^3 + 3 x^2 + 4 x y + 2 x + y^3 + 3 y^2 + 2 y");
}

TEST_CASE("deletion-contraction handles loops and parallel edges") {
    // two vertices, a doubled edge: contracting one edge leaves a loop
    Multigraph doubled(2, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 2}});
    CHECK(tutte_dc(doubled).to_string() == "x + y");
    Multigraph tripled(2, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 2}, {1, 2}});
    CHECK(tutte_dc(tripled).to_string() == "x + y^2 + y");
}

TEST_CASE("all five routes agree on the bundled graphs") {
    for (const auto& g : {Graph::complete(4), Graph::cycle(5), Graph::path(4),
                          Graph::parse("5 6\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n")}) {
        Polynomial ref = tutte_dc(g);
        CHECK(tutte_activities(g) == ref);
        CHECK(tutte_corank_nullity(g) == ref);
        CHECK(tutte_bfs_forests(g) == ref);
        CHECK(tutte_multiparking(g, ChoiceRule::bfsq()) == ref);
    }
}

TEST_CASE("activities route is independent of the edge order") {
    Graph g = Graph::complete(4);
    Polynomial ref = tutte_activities(g);
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::reverse(order.begin(), order.end());
    CHECK(tutte_activities(g, order) == ref);
    std::mt19937 rng(7);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(tutte_activities(g, order) == ref);
    }
}

TEST_CASE("activities on a tree: every edge internally active") {
    CHECK(tutte_activities(Graph::path(5)).to_string() == "x^4");
}

TEST_CASE("multiparking route is independent of the choice rule") {
    Graph g = Graph::complete(4);
    Polynomial ref = tutte_dc(g);
    for (const auto& gamma : ChoiceRule::builtins(4))
        CHECK(tutte_multiparking(g, gamma) == ref);
}

TEST_CASE("routes extend to disconnected graphs") {
    Graph g(5, {{1, 2}, {2, 3}, {1, 3}, {4, 5}});  // triangle plus an edge
    Polynomial ref = tutte_dc(g);
    CHECK(ref.to_string() == "x^3 + x^2 + x y");  // product of the factors
    CHECK(tutte_activities(g) == ref);
    CHECK(tutte_corank_nullity(g) == ref);
    CHECK(tutte_bfs_forests(g) == ref);
    CHECK(tutte_multiparking(g, ChoiceRule::dfs()) == ref);
}

TEST_CASE("restriction to one root gives the classical specialization") {
    // t_G(1, y) collects the functions whose only root is vertex 1
    Graph k3 = Graph::complete(3);
    Polynomial t = tutte_dc(k3);
    CHECK(t.evaluate(1, 2) == 4);  // y + 2 at y = 2
}

TEST_CASE("sweep caps are enforced") {
    Graph big = Graph::complete(7);  // 21 edges
    CHECK_THROWS_AS(tutte_corank_nullity(big, 20), std::invalid_argument);
    CHECK_THROWS_AS(tutte_bfs_forests(big, 20), std::invalid_argument);
}

}  // TEST_SUITE

#include "doctest.h"

#include <multipark/census.hpp>
#include <multipark/enumerate.hpp>
#include <multipark/graph.hpp>
#include <multipark/parking.hpp>

using namespace multipark;

TEST_SUITE("census") {

TEST_CASE("spanning forest counts") {
    CHECK(spanning_forests(Graph::complete(3), 10).size() == 7);
    CHECK(spanning_forests(Graph::complete(4), 10).size() == 38);
    CHECK(spanning_forests(Graph::path(4), 10).size() == 8);  // 2^(n-1) on a tree
    CHECK(spanning_trees(Graph::complete(4), 10).size() == 16);
    CHECK_THROWS_AS(spanning_forests(Graph::complete(7), 20), std::invalid_argument);
}

TEST_CASE("forest stream is ordered by edge count then lexicographic edge set") {
    auto fs = spanning_forests(Graph::complete(3), 10);
    REQUIRE(fs.size() == 7);
    CHECK(fs[0].edge_count() == 0);
    for (size_t i = 1; i < fs.size(); ++i) CHECK(fs[i - 1].edge_count() <= fs[i].edge_count());
    CHECK(fs[1].edges() == std::vector<Edge>{{1, 2}});
    CHECK(fs[2].edges() == std::vector<Edge>{{1, 3}});
    CHECK(fs[3].edges() == std::vector<Edge>{{2, 3}});
}

TEST_CASE("psi image equals the brute-force sweep for every rule") {
    for (const auto& g : {Graph::complete(4), Graph::cycle(5)}) {
        auto brute = multiparking_all_bruteforce(g);
        for (const auto& gamma : ChoiceRule::builtins(g.vertex_count()))
            CHECK(multiparking_all(g, gamma, 10) == brute);
    }
}

TEST_CASE("gamma_tk on the triangle") {
    Graph k3 = Graph::complete(3);
    GammaTk a = gamma_tk(k3, 1, 1);
    CHECK(a.brute == 1);  // only the full triangle
    CHECK(a.forest_sum == 1);
    CHECK(a.mpf_sum == 1);
    GammaTk b = gamma_tk(k3, 2, 1);
    CHECK(b.brute == 0);
    CHECK(b.forest_sum == 0);
    CHECK(b.mpf_sum == 0);
    // k = 0 counts the forests with t components
    for (int t = 1; t <= 3; ++t) {
        GammaTk c = gamma_tk(k3, t, 0);
        long forests = 0;
        for (const auto& f : spanning_forests(k3, 10)) forests += f.tree_count() == t;
        CHECK(c.brute == forests);
        CHECK(c.forest_sum == forests);
    }
}

TEST_CASE("subdigraph census: single edge, full identity") {
    Graph e(2, {{1, 2}});
    Polynomial brute = subdigraph_census_bruteforce(e);
    CHECK(brute.to_string() == "x^2 y + x^2 + x y^2 + x y");
    CHECK(brute == subdigraph_census_closed_form(e));
}

TEST_CASE("subdigraph census identity on small connected graphs") {
    for (const auto& g : all_connected_graphs(3, 3))
        CHECK(subdigraph_census_bruteforce(g) == subdigraph_census_closed_form(g));
    Graph k4 = Graph::complete(4);
    Polynomial b = subdigraph_census_bruteforce(k4);
    CHECK(b == subdigraph_census_closed_form(k4));
    CHECK(b.evaluate(1, 1) == 4096);  // 4^6 subdigraphs
}

TEST_CASE("subtraffic census: the total is always 5^edges") {
    Graph k3 = Graph::complete(3);
    Polynomial traffic = subtraffic_census_bruteforce(k3);
    CHECK(traffic.evaluate(1, 1) == 125);
    CHECK(subtraffic_census_bruteforce(Graph::path(4)).evaluate(1, 1) == 125);
    CHECK(subtraffic_factor_check(k3) == 125);
    CHECK(subtraffic_factor_check(Graph::path(4)) == 125);
    CHECK(subtraffic_factor_check(Graph::complete(4)) == 15625);  // 5^6
}

TEST_CASE("the closed-form subtraffic formula disagrees with the census") {
    Graph k3 = Graph::complete(3);
    CHECK(subtraffic_printed_corollary(k3) == 207);
    CHECK(subtraffic_printed_rhs(k3, 1, 1) == 207);
    CHECK(subtraffic_census_bruteforce(k3).evaluate(1, 1) == 125);
}

TEST_CASE("inversion statistic on the triangle trees") {
    Graph k3 = Graph::complete(3);
    std::vector<int> values;
    for (const auto& T : spanning_trees(k3, 10)) values.push_back(ginv(T, k3));
    std::sort(values.begin(), values.end());
    CHECK(values == std::vector<int>{0, 0, 1});
    CHECK(ginv_distribution(k3, 1).to_string() == "y + 2");
    CHECK(rsum_distribution(k3, 1).to_string() == "y + 2");
}

TEST_CASE("inversion and reversed-sum distributions agree per component count") {
    for (const auto& g : {Graph::complete(4), Graph::cycle(5)}) {
        for (int k = 1; k <= g.vertex_count(); ++k)
            CHECK(ginv_distribution(g, k) == rsum_distribution(g, k));
    }
}

TEST_CASE("a forest with no extra edges has no inversions") {
    Graph p4 = Graph::path(4);
    for (const auto& F : spanning_forests(p4, 10))
        CHECK(ginv(F, p4) == 0);
}

TEST_CASE("parking-function polynomial equals the complete-graph polynomial") {
    CHECK(opf_polynomial(2).to_string() == "x^2 + x + y");
    CHECK(opf_polynomial(3) == tutte_dc(Graph::complete(4)));
    // the all-zero function contributes the top power of y with no x
    Polynomial p3 = opf_polynomial(3);
    CHECK(p3.terms().at({0, 3}) == 1);
}

TEST_CASE("verification report on the triangle") {
    CensusReport rep = verify_all(Graph::complete(3));
    CHECK(rep.all_ok(true));
    CHECK_FALSE(rep.all_ok(false));
    CHECK(rep.mismatch_count(false) == 3);  // the three recorded closed-form discrepancy checks
    for (const auto& c : rep.checks)
        if (!c.match && !c.informational) CHECK(c.known_erratum);
    std::string table = rep.format_table();
    CHECK(table.find("documented erratum") != std::string::npos);
}

TEST_CASE("verification report on the path passes with the erratum tolerated") {
    CensusReport rep = verify_all(Graph::path(3));
    CHECK(rep.mismatch_count(true) == 0);
}

}  // TEST_SUITE

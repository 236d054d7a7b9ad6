#include "doctest.h"

#include <random>

#include <multipark/enumerate.hpp>
#include <multipark/graph.hpp>
#include <multipark/parking.hpp>

using namespace multipark;

namespace {

// every function 1..n -> {0..deg(v)} x {inf}, one odometer sweep
template <typename Body>
void for_each_candidate(const Graph& g, Body body) {
    int n = g.vertex_count();
    std::vector<int> digit(n + 1, 0);
    VertexFunction f(n);
    while (true) {
        for (Vertex v = 1; v <= n; ++v)
            f.set(v, digit[v] == g.degree(v) ? ExtNat::inf() : ExtNat::of(digit[v]));
        body(f);
        Vertex v = n;
        while (v >= 1 && digit[v] == g.degree(v)) digit[v--] = 0;
        if (v < 1) break;
        ++digit[v];
    }
}

}  // namespace

TEST_SUITE("parking") {

TEST_CASE("infinity is a distinguished state") {
    VertexFunction f = VertexFunction::parse("inf 0 1");
    CHECK(f.at(1).infinite);
    CHECK_FALSE(f.at(2).infinite);
    CHECK(f.roots() == std::vector<Vertex>{1});
    CHECK(f.finite_sum() == 1);
    CHECK(f.to_string() == "inf 0 1");
    CHECK(f == VertexFunction::parse(f.to_string()));
}

TEST_CASE("triangle examples") {
    Graph k3 = Graph::complete(3);
    CHECK(is_multiparking(k3, VertexFunction::parse("inf 0 1")));
    CHECK(is_multiparking(k3, VertexFunction::parse("inf inf 1")));
    // U = {2,3}: min is not a root and neither value is below its outdegree
    CHECK_FALSE(is_multiparking(k3, VertexFunction::parse("inf 1 1")));
    // vertex 1 must be a root
    CHECK_FALSE(is_multiparking(k3, VertexFunction::parse("0 0 inf")));

    BurnResult bad = is_multiparking_burning(k3, VertexFunction::parse("inf 1 1"));
    CHECK_FALSE(bad.ok);
    CHECK(bad.residual == std::vector<Vertex>{2, 3});
}

TEST_CASE("subset definition and burning certificate agree on every sweep, n <= 4") {
    for (const auto& g : all_graphs(4, 6)) {
        for_each_candidate(g, [&](const VertexFunction& f) {
            CHECK(is_multiparking_subsets(g, f) == is_multiparking_burning(g, f).ok);
        });
    }
}

TEST_CASE("subset definition and burning agree on random larger graphs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + static_cast<int>(rng() % 3);
        std::vector<Edge> edges;
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (rng() % 2) edges.push_back({u, v});
        Graph g(n, edges);
        for (int s = 0; s < 200; ++s) {
            VertexFunction f(n);
            f.set(1, ExtNat::inf());
            for (Vertex v = 2; v <= n; ++v) {
                if (rng() % 4 == 0)
                    f.set(v, ExtNat::inf());
                else
                    f.set(v, ExtNat::of(rng() % (g.degree(v) + 1)));
            }
            CHECK(is_multiparking_subsets(g, f) == is_multiparking_burning(g, f).ok);
        }
    }
}

TEST_CASE("lowering a finite value preserves validity") {
    Graph k4 = Graph::complete(4);
    for (const auto& f : multiparking_all_bruteforce(k4)) {
        for (Vertex v = 1; v <= 4; ++v) {
            if (f.at(v).infinite || f.at(v).finite == 0) continue;
            VertexFunction lower = f;
            lower.set(v, ExtNat::of(f.at(v).finite - 1));
            CHECK(is_multiparking(k4, lower));
        }
    }
}

TEST_CASE("burning starts at the least root and spreads to well-behaved vertices") {
    Graph k3 = Graph::complete(3);
    BurnResult burn = is_multiparking_burning(k3, VertexFunction::parse("inf 0 1"));
    REQUIRE(burn.ok);
    REQUIRE(burn.order.size() == 3);
    // no vertex is well-behaved before a neighbor burns, so the root goes first
    CHECK(burn.order[0].v == 1);
    CHECK(burn.order[0].root_case);
    CHECK(burn.order[1].v == 2);  // f(2)=0 < one burned neighbor
    CHECK_FALSE(burn.order[1].root_case);
    CHECK(burn.order[2].v == 3);  // f(3)=1 < two burned neighbors
}

TEST_CASE("greedy record equals the subset-minimum record") {
    for (const auto& g : {Graph::complete(4), Graph::cycle(5), Graph::parse("4 4\n1 2\n1 3\n2 3\n3 4\n")}) {
        for (const auto& f : multiparking_all_bruteforce(g)) {
            for (Vertex v : f.roots())
                CHECK(record(g, f, v) == record_bruteforce(g, f, v));
        }
    }
}

TEST_CASE("reversed sums on the triangle") {
    Graph k3 = Graph::complete(3);
    // the seven functions, in the order produced by the sweep
    std::vector<std::pair<std::string, long>> expected = {
        {"inf 0 0", 1}, {"inf 0 1", 0}, {"inf 0 inf", 0}, {"inf 1 0", 0},
        {"inf inf 0", 0}, {"inf inf 1", 0}, {"inf inf inf", 0}};
    auto all = multiparking_all_bruteforce(k3);
    REQUIRE(all.size() == expected.size());
    for (size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].to_string() == expected[i].first);
        CHECK(rsum(k3, all[i]) == expected[i].second);
    }
}

TEST_CASE("directed predicate agrees between subset and burning checks") {
    Digraph d = Digraph::parse("3 3\n1 2\n2 1\n2 3 2\n");
    int agree = 0;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 4; ++b) {
            VertexFunction f(3);
            f.set(1, ExtNat::inf());
            f.set(2, a == 2 ? ExtNat::inf() : ExtNat::of(a));
            f.set(3, b == 3 ? ExtNat::inf() : ExtNat::of(b));
            CHECK(is_multiparking_subsets(d, f) == is_multiparking_burning(d, f).ok);
            ++agree;
        }
    }
    CHECK(agree == 12);
}

}  // TEST_SUITE

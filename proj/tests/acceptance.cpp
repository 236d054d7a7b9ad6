// End-to-end acceptance checks. Each numbered block prints exactly one
// pass/fail line; the process exits nonzero when any block fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <multipark/activity.hpp>
#include <multipark/bijection.hpp>
#include <multipark/census.hpp>
#include <multipark/enumerate.hpp>
#include <multipark/graph.hpp>
#include <multipark/orders.hpp>
#include <multipark/parking.hpp>
#include <multipark/tutte.hpp>

using namespace multipark;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " " << number << ". " << name;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

Graph h11() {
    return Graph(11, {{1, 3}, {1, 4}, {3, 8}, {4, 7}, {6, 7}, {7, 9}, {2, 5}, {2, 10}, {5, 11},
                      {3, 4}, {4, 8}, {7, 8}, {6, 9}, {5, 10}, {10, 11}});
}

std::vector<Graph> corpus() {
    return {Graph::complete(3), Graph::complete(4), Graph::cycle(5), Graph::path(4), h11()};
}

// all simple graphs on 1..5 with at most 8 edges, plus every connected graph on 1..5
std::vector<Graph> bijection_corpus() {
    std::vector<Graph> out;
    for (int n = 1; n <= 5; ++n)
        for (auto& g : all_graphs(n, 8)) out.push_back(std::move(g));
    for (auto& g : all_connected_graphs(5, 10))
        if (g.edge_count() > 8) out.push_back(std::move(g));
    return out;
}

void criterion_1() {
    std::string detail;
    bool ok = true;
    for (const auto& g : bijection_corpus()) {
        auto forests = spanning_forests(g, 10);
        auto functions = multiparking_all_bruteforce(g);
        if (forests.size() != functions.size()) ok = false;
        for (const auto& gamma : ChoiceRule::builtins(g.vertex_count())) {
            for (const auto& F : forests)
                if (!(phi(g, gamma, psi(g, gamma, F).f).forest == F)) {
                    ok = false;
                    detail = "phi(psi(F)) != F under " + gamma.name();
                }
            for (const auto& f : functions)
                if (!(psi(g, gamma, phi(g, gamma, f).forest).f == f)) {
                    ok = false;
                    detail = "psi(phi(f)) != f under " + gamma.name();
                }
        }
    }
    report(1, "bijection round-trip, all graphs n<=5, six choice rules", ok, detail);
}

void criterion_2() {
    bool ok = true;
    for (const auto& g : all_graphs(4, 6)) {
        int n = g.vertex_count();
        std::vector<int> digit(n + 1, 0);
        VertexFunction f(n);
        while (true) {
            for (Vertex v = 1; v <= n; ++v)
                f.set(v, digit[v] == g.degree(v) ? ExtNat::inf() : ExtNat::of(digit[v]));
            if (is_multiparking_subsets(g, f) != is_multiparking_burning(g, f).ok) ok = false;
            Vertex v = n;
            while (v >= 1 && digit[v] == g.degree(v)) digit[v--] = 0;
            if (v < 1) break;
            ++digit[v];
        }
    }
    report(2, "subset definition equals burning certificate, full sweep n<=4", ok);
}

void criterion_3() {
    bool ok = true;
    std::string detail;
    std::vector<Graph> graphs = all_connected_graphs(5, 8);
    for (int n = 1; n <= 4; ++n)
        for (auto& g : all_connected_graphs(n, 8)) graphs.push_back(std::move(g));
    graphs.push_back(Graph::complete(4));
    graphs.push_back(Graph::cycle(5));
    graphs.push_back(h11());
    for (const auto& g : graphs) {
        Polynomial ref = tutte_dc(g);
        int m = g.edge_count();
        std::vector<std::vector<int>> orders(3);
        for (int i = 0; i < m; ++i) {
            orders[0].push_back(i);
            orders[1].push_back(m - 1 - i);
            orders[2].push_back((i * 7 + 3) % m);
        }
        bool shuffled_valid = true;  // orders[2] must be a permutation
        {
            std::vector<char> seen(m, 0);
            for (int e : orders[2]) {
                if (seen[e]) shuffled_valid = false;
                seen[e] = 1;
            }
        }
        for (int oi = 0; oi < 3; ++oi) {
            if (oi == 2 && !shuffled_valid) continue;
            if (!(tutte_activities(g, orders[oi]) == ref)) {
                ok = false;
                detail = "activities order " + std::to_string(oi);
            }
        }
        if (!(tutte_corank_nullity(g) == ref)) ok = false;
        if (!(tutte_bfs_forests(g) == ref)) ok = false;
        for (const auto& gamma : ChoiceRule::builtins(g.vertex_count()))
            if (!(tutte_multiparking(g, gamma) == ref)) {
                ok = false;
                detail = "multiparking under " + gamma.name();
            }
    }
    report(3, "five Tutte routes agree on connected graphs n<=5 plus fixtures", ok, detail);
}

void criterion_4() {
    BfsResult res = bfs_forest(h11());
    bool trace_ok = res.trace.format_row() ==
                    "(1),(3,4),(4,8),(8,7),(7),(6,9),(9),(2),(5,10),(10,11),(11),()";
    bool active_ok = bfs_external(h11(), res.forest) ==
                     std::vector<Edge>{{3, 4}, {4, 8}, {5, 10}, {6, 9}, {7, 8}, {10, 11}};
    RootedForest t = RootedForest::from_edges(6, {{1, 2}, {2, 3}, {2, 6}, {1, 4}, {4, 5}});
    bool orders_ok = order_df(t) == std::vector<Vertex>{1, 2, 3, 6, 4, 5} &&
                     order_bf(t) == std::vector<Vertex>{1, 2, 4, 3, 5, 6} &&
                     order_bfq(t) == std::vector<Vertex>{1, 2, 4, 3, 6, 5};
    bool alpha_ok = alpha({3, 0, 0, 2}) == 1;
    report(4, "worked examples: queue trace, active set, traversal orders, alpha",
           trace_ok && active_ok && orders_ok && alpha_ok);
}

void criterion_5() {
    Graph k3 = Graph::complete(3);
    Polynomial t = tutte_dc(k3);
    auto mp = multiparking_all_bruteforce(k3);
    bool ok = mp.size() == 7 && t.evaluate(2, 1) == 7;
    long odd = 0, even = 0;
    for (const auto& f : mp) (f.root_count() % 2 ? odd : even) += 1;
    mpq_class t21 = t.evaluate(2, 1), t01 = t.evaluate(0, 1);
    ok = ok && odd == (t21 + t01) / 2 && even == (t21 - t01) / 2 && odd == 4 && even == 3;
    long expected[] = {1, 3, 16, 125};
    for (int n = 1; n <= 4; ++n) {
        long count = static_cast<long>(classical_parking_functions(n).size());
        long power = 1;
        for (int i = 0; i < n - 1; ++i) power *= n + 1;
        ok = ok && count == expected[n - 1] && count == power;
    }
    report(5, "counting identities: |MP(K3)|, parity split, classical counts", ok);
}

void criterion_6() {
    bool ok = true;
    for (int n = 2; n <= 4; ++n)
        if (!(opf_polynomial(n) == tutte_dc(Graph::complete(n + 1)))) ok = false;
    report(6, "parking-function polynomial equals t(K_{n+1}) for n=2,3,4", ok);
}

void criterion_7() {
    bool ok = true;
    for (const auto& g : corpus()) {
        for (const auto& F : spanning_forests(g, 16)) {
            for (const auto& gamma : ChoiceRule::builtins(g.vertex_count())) {
                try {
                    verify_edge_identity(g, gamma, F);
                } catch (const std::logic_error&) {
                    ok = false;
                }
            }
            if (!(bfs_external(g, F) == classify_edges(g, ChoiceRule::bfsq(), F).r3)) ok = false;
            if (!(nfs_external(g, F) == classify_edges(g, ChoiceRule::dfs(), F).r3)) ok = false;
        }
    }
    report(7, "edge identity and external-activity classification on the corpus", ok);
}

void criterion_8() {
    bool ok = true;
    for (const auto& g : all_connected_graphs(4, 6))
        if (!(subdigraph_census_bruteforce(g) == subdigraph_census_closed_form(g))) ok = false;
    for (const auto& g : corpus())
        for (const auto& F : spanning_forests(g, 16))
            if (static_cast<int>(dbfs_external(g, F).size()) !=
                g.edge_count() + static_cast<int>(bfs_external(g, F).size()))
                ok = false;
    report(8, "subdigraph polynomial identity and directed activity count law", ok);
}

void criterion_9() {
    bool ok = true;
    std::vector<Graph> graphs = all_connected_graphs(4, 6);
    for (auto& g : all_connected_graphs(5, 8)) graphs.push_back(std::move(g));
    for (const auto& g : graphs) {
        mpz_class expected = 1;
        for (int i = 0; i < g.edge_count(); ++i) expected *= 5;
        if (subtraffic_census_bruteforce(g, 8).evaluate(1, 1) != expected) ok = false;
    }
    // the documented mismatch of the closed-form subtraffic formula is recorded, tolerated
    // under the erratum flag, and fatal without it
    CensusReport rep = verify_all(Graph::complete(3));
    bool recorded = false;
    for (const auto& c : rep.checks)
        if (c.known_erratum && !c.match && c.left == "125" && c.right == "207") recorded = true;
    ok = ok && recorded && rep.all_ok(true) && !rep.all_ok(false);
    report(9, "subtraffic census totals and the recorded closed-form discrepancy", ok);
}

void criterion_10() {
    bool ok = true;
    for (const auto& g : corpus()) {
        Polynomial by_bfs, by_nfs, by_mpf;
        for (const auto& F : spanning_forests(g, 16)) {
            by_bfs.add_term(F.tree_count(), static_cast<int>(bfs_external(g, F).size()), 1);
            by_nfs.add_term(F.tree_count(), static_cast<int>(nfs_external(g, F).size()), 1);
            VertexFunction f = psi(g, ChoiceRule::bfsq(), F).f;
            by_mpf.add_term(f.root_count(), static_cast<int>(rsum(g, f)), 1);
        }
        if (!(by_bfs == by_nfs) || !(by_bfs == by_mpf)) ok = false;
        for (int k = 1; k <= g.vertex_count(); ++k)
            if (!(ginv_distribution(g, k, 16) == rsum_distribution(g, k, 16))) ok = false;
    }
    // classical specialization: K_{n+1} trees vs parking functions
    for (int n = 2; n <= 4; ++n) {
        Graph k = Graph::complete(n + 1);
        Polynomial lhs = ginv_distribution(k, 1);
        Polynomial rhs;
        long total = n * (n - 1) / 2;
        for (const auto& b : classical_parking_functions(n)) {
            long s = 0;
            for (long bi : b) s += bi;
            rhs.add_term(0, static_cast<int>(total - s), 1);
        }
        if (!(lhs == rhs)) ok = false;
    }
    report(10, "distribution equalities across searches, functions, and inversions", ok);
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << " (" << dt << " s)" << std::endl;
    return failures == 0 ? 0 : 1;
}

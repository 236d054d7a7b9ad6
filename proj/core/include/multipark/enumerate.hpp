#ifndef MULTIPARK_ENUMERATE_HPP
#define MULTIPARK_ENUMERATE_HPP

#include <vector>

#include "multipark/graph.hpp"
#include "multipark/orders.hpp"
#include "multipark/parking.hpp"

namespace multipark {

/// All acyclic spanning subgraphs, each rooted at least vertices, ordered by
/// increasing edge count then lexicographic edge-index set.
std::vector<RootedForest> spanning_forests(const Graph& g, int max_edges = 20);
std::vector<RootedForest> spanning_trees(const Graph& g, int max_edges = 20);

/// All multiparking functions as the image of psi over the spanning forests.
std::vector<VertexFunction> multiparking_all(const Graph& g, const ChoiceRule& gamma,
                                             int max_edges = 20);
/// Independent route: sweep candidate values {0..deg(v)-1} union {inf} per
/// vertex and keep those passing the subset predicate. The value bound is
/// sound: U = {v} forces f(v) < deg(v) unless v is a root.
std::vector<VertexFunction> multiparking_all_bruteforce(const Graph& g);

/// Classical parking functions of length n, lexicographic.
std::vector<std::vector<long>> classical_parking_functions(int n);

/// All simple graphs on 1..n with at most max_edges edges (every subset of
/// the possible edge slots), edge-mask order.
std::vector<Graph> all_graphs(int n, int max_edges);
std::vector<Graph> all_connected_graphs(int n, int max_edges);

}  // namespace multipark

#endif

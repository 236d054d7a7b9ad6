#include "multipark/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "multipark/activity.hpp"
#include "multipark/bijection.hpp"

namespace multipark {

std::vector<RootedForest> spanning_forests(const Graph& g, int max_edges) {
    int m = g.edge_count();
    if (m > max_edges)
        throw std::invalid_argument("spanning_forests: edge count " + std::to_string(m) +
                                    " exceeds the cap of " + std::to_string(max_edges));
    int n = g.vertex_count();
    std::vector<std::pair<std::vector<int>, RootedForest>> found;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<Edge> sub;
        std::vector<int> idx;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) {
                sub.push_back(g.edges()[i]);
                idx.push_back(i);
            }
        // acyclic iff every edge joins two components
        if (count_components(n, sub) != n - static_cast<int>(sub.size())) continue;
        found.emplace_back(std::move(idx), RootedForest::from_edges(n, sub));
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<RootedForest> out;
    out.reserve(found.size());
    for (auto& [idx, f] : found) out.push_back(std::move(f));
    return out;
}

std::vector<RootedForest> spanning_trees(const Graph& g, int max_edges) {
    std::vector<RootedForest> out;
    for (auto& f : spanning_forests(g, max_edges))
        if (f.edge_count() == g.vertex_count() - 1) out.push_back(std::move(f));
    return out;
}

std::vector<VertexFunction> multiparking_all(const Graph& g, const ChoiceRule& gamma,
                                             int max_edges) {
    std::vector<VertexFunction> out;
    for (const auto& f : spanning_forests(g, max_edges)) out.push_back(psi(g, gamma, f).f);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexFunction> multiparking_all_bruteforce(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexFunction> out;
    VertexFunction f(n);
    // odometer over per-vertex candidate lists: 0..deg(v)-1, then inf
    std::vector<int> digit(n + 1, 0);
    while (true) {
        for (Vertex v = 1; v <= n; ++v)
            f.set(v, digit[v] == g.degree(v) ? ExtNat::inf() : ExtNat::of(digit[v]));
        if (is_multiparking_subsets(g, f)) out.push_back(f);
        Vertex v = n;
        while (v >= 1 && digit[v] == g.degree(v)) digit[v--] = 0;
        if (v < 1) break;
        ++digit[v];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<long>> classical_parking_functions(int n) {
    std::vector<std::vector<long>> out;
    std::vector<long> b(n, 0);
    while (true) {
        if (is_classical_parking_function(b)) out.push_back(b);
        int i = n - 1;
        while (i >= 0 && b[i] == n - 1) b[i--] = 0;
        if (i < 0) break;
        ++b[i];
    }
    return out;
}

std::vector<Graph> all_graphs(int n, int max_edges) {
    std::vector<Edge> slots;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) slots.push_back({u, v});
    int m = static_cast<int>(slots.size());
    if (m > 25) throw std::invalid_argument("all_graphs: too many vertex pairs");
    std::vector<Graph> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) > static_cast<unsigned>(max_edges)) continue;
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) edges.push_back(slots[i]);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

std::vector<Graph> all_connected_graphs(int n, int max_edges) {
    std::vector<Graph> out;
    for (auto& g : all_graphs(n, max_edges))
        if (g.components() == 1) out.push_back(std::move(g));
    return out;
}

}  // namespace multipark

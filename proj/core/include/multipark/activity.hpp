#ifndef MULTIPARK_ACTIVITY_HPP
#define MULTIPARK_ACTIVITY_HPP

#include <string>
#include <vector>

#include "multipark/bijection.hpp"
#include "multipark/graph.hpp"
#include "multipark/orders.hpp"

namespace multipark {

/// FIFO queue trace of a breadth-first search: one snapshot per time step,
/// plus per-vertex presence intervals for the simultaneity criterion.
struct QueueTrace {
    std::vector<std::vector<Vertex>> queue_at;  // Q_0 .. Q_n
    std::vector<Vertex> processed_order;
    std::vector<int> enqueue_time;  // indexed by vertex, -1 if never
    std::vector<int> dequeue_time;

    bool copresent(Vertex v, Vertex w) const;
    /// Compact form "(1),(3,4),...,()".
    std::string format_row() const;
    /// Two-row t / Q_t table.
    std::string format_table() const;
};

struct BfsResult {
    RootedForest forest;
    QueueTrace trace;
};

/// Breadth-first search over all of 1..n: queue seeded with vertex 1,
/// unvisited neighbors enter in numerical order, empty queue refilled with
/// the least unvisited vertex.
BfsResult bfs_forest(const Graph& h);

/// BFS-externally active edges of a spanning forest F: edges e of g - F with
/// BFS(F + e) = F, computed by queue simultaneity.
std::vector<Edge> bfs_external(const Graph& g, const RootedForest& F);
/// Same set by rerunning BFS on F + e for every candidate (test oracle).
std::vector<Edge> bfs_external_by_definition(const Graph& g, const RootedForest& F);

/// Partition of E(G) relative to a spanning forest F and a choice rule:
/// forest edges, the three redundant types, and the rest.
struct EdgeClassification {
    std::vector<Edge> forest;
    std::vector<Edge> r1;     // both endpoints roots
    std::vector<Edge> r2;     // root-nonroot, nonroot processed earlier
    std::vector<Edge> r3;     // nonroot-nonroot straddling the parent position
    std::vector<Edge> plain;  // contributes to some f(v)

    std::vector<Edge> redundant() const;  // r1 + r2 + r3, sorted
};

EdgeClassification classify_edges(const Graph& g, const ChoiceRule& gamma, const RootedForest& F);

struct EdgeIdentity {
    long finite_sum;
    long forest_edges;
    long redundant;
};

/// Checks |E(G)| = sum f(v) + |E(F)| + |R(G;F)| with f = psi(g, gamma, F);
/// throws std::logic_error if the identity fails.
EdgeIdentity verify_edge_identity(const Graph& g, const ChoiceRule& gamma, const RootedForest& F);

/// Neighbors-first search: searches depth-first, marks all neighbors of the
/// searched vertex breadth-first.
RootedForest nfs_forest(const Graph& h);
std::vector<Edge> nfs_external(const Graph& g, const RootedForest& F);

/// Directed BFS on a digraph: only arcs (x, u) out of the processed vertex
/// discover u. The result is oriented away from the roots.
BfsResult dbfs_forest(const Digraph& d);

/// Directed BFS-externally active arcs of an away-from-root oriented
/// spanning forest, by the three-case characterization.
std::vector<Arc> dbfs_external(const Graph& g, const RootedForest& F);
std::vector<Arc> dbfs_external_by_definition(const Graph& g, const RootedForest& F);

struct TrafficBfsResult {
    RootedForest forest;
    std::vector<Arc> directed_edges;  // forest edges discovered via an arc of K
    QueueTrace trace;
};

/// Directed BFS over a subtraffic: arcs and undirected edges both discover;
/// a forest edge is recorded as directed exactly when K carries the arc.
TrafficBfsResult traffic_bfs(const PartialOrientation& k);

/// Joins the trees of a spanning forest of a complete graph into one tree:
/// the root of each tree after the first attaches to the bfq-maximal vertex
/// of the previous tree.
RootedForest merge_forest(const RootedForest& f, const Graph& complete_base);

/// Edges e of a spanning tree T with merge(T - e) = T.
std::vector<Edge> critical_edges(const RootedForest& tree, const Graph& complete_base);

bool is_classical_parking_function(const std::vector<long>& b);

/// Number of critical left-to-right maxima of a classical parking function:
/// terms b_i = j with exactly j smaller and n-1-j larger terms, strictly
/// exceeding every earlier term.
int alpha(const std::vector<long>& b);

}  // namespace multipark

#endif

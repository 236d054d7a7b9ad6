#ifndef MULTIPARK_GRAPH_HPP
#define MULTIPARK_GRAPH_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace multipark {

using Vertex = int;  // vertices are 1-based integers

struct Edge {
    Vertex u, v;  // canonical form u < v for simple graphs
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
    Vertex from, to;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 1..n. No loops, no parallel edges.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    /// Edge-list text format: '#' comment lines, "n m" header, then m
    /// lines "u v".
    static Graph parse(const std::string& text);
    static Graph parse_file(const std::string& path);
    std::string serialize() const;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;
    /// Index of {u,v} in edges(), or -1.
    int edge_index(Vertex u, Vertex v) const;

    int components() const;

    friend bool operator==(const Graph&, const Graph&) = default;

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

private:
    int n_;
    std::vector<Edge> edges_;              // sorted
    std::vector<std::vector<Vertex>> adj_; // adj_[v] sorted, index 0 unused
};

/// Multigraph with loops, parallel edges and stable edge ids. Used by the
/// deletion-contraction recursion.
class Multigraph {
public:
    struct MEdge {
        int id;
        Vertex u, v;  // u <= v; u == v is a loop
    };

    Multigraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
    static Multigraph from_graph(const Graph& g);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<MEdge>& edges() const { return edges_; }
    const MEdge& edge_by_id(int id) const;
    bool has_edge_id(int id) const;

    Multigraph delete_edge(int id) const;
    /// Identifies the endpoints of a non-loop edge; vertex labels above the
    /// larger endpoint shift down by one. Ids of the surviving edges are kept.
    Multigraph contract_edge(int id) const;

    bool is_loop(int id) const;
    /// True iff removing the edge increases the component count.
    bool is_bridge(int id) const;

    int components() const;

private:
    Multigraph(int n, std::vector<MEdge> edges);
    int n_;
    std::vector<MEdge> edges_;
};

/// Directed multigraph, loopless. Parallel arcs between the same ordered
/// pair are indexed 1,2,... in input order.
class Digraph {
public:
    Digraph(int n, const std::vector<Arc>& arcs);

    /// Same edge-list format as Graph, with an optional per-line
    /// multiplicity: "u v k" adds k parallel arcs u->v.
    static Digraph parse(const std::string& text);
    static Digraph parse_file(const std::string& path);

    /// Every edge {u,v} becomes the pair of arcs (u,v) and (v,u).
    static Digraph from_graph(const Graph& g);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }  // with repetition
    int arc_multiplicity(Vertex u, Vertex v) const;
    /// Distinct targets of arcs leaving v, sorted.
    const std::vector<Vertex>& out_neighbors(Vertex v) const;
    const std::vector<Vertex>& in_neighbors(Vertex v) const;
    int out_degree(Vertex v) const;  // with multiplicity

private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_, in_;
};

enum class EdgeState { Absent, Fwd, Bwd, Both, Undirected };

/// A subtraffic: every edge {u,v} (u < v) of a base graph carries one of the
/// five states. Fwd means the arc u->v, Bwd the arc v->u.
class PartialOrientation {
public:
    PartialOrientation(Graph base, std::vector<EdgeState> states);

    const Graph& base() const { return base_; }
    EdgeState state(int edge_index) const { return states_[edge_index]; }
    const std::vector<EdgeState>& states() const { return states_; }

    /// Weak connectivity: directions are ignored, Absent edges are absent.
    int components() const;
    /// Edge grading: Absent=0, Fwd=1, Bwd=1, Undirected=1, Both=2.
    int edge_weight() const;

    bool has_arc(Vertex x, Vertex u) const;         // directed arc x->u present
    bool has_undirected(Vertex x, Vertex u) const;  // state Undirected

private:
    Graph base_;
    std::vector<EdgeState> states_;
};

/// Number of connected components of the graph on vertices 1..n with the
/// given edges; isolated vertices count.
int count_components(int n, const std::vector<Edge>& edges);

}  // namespace multipark

#endif

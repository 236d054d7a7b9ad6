#ifndef MULTIPARK_ORDERS_HPP
#define MULTIPARK_ORDERS_HPP

#include <string>
#include <vector>

#include "multipark/graph.hpp"

namespace multipark {

/// Rooted forest on a subset of 1..n, stored as parent links. The root of
/// every tree is the least vertex of that tree. For oriented forests each
/// parent link additionally records which parallel arc (v -> parent) it uses.
class RootedForest {
public:
    explicit RootedForest(int n);

    /// Builds a spanning forest of 1..n from undirected edges; each tree is
    /// rooted at its least vertex. Throws on cycles.
    static RootedForest from_edges(int n, const std::vector<Edge>& edges);
    static RootedForest parse(const std::string& text);
    static RootedForest parse_file(const std::string& path);

    void add_vertex(Vertex v);  // as an isolated root
    void add_child(Vertex parent, Vertex child, int arc_index = 1);

    int vertex_count() const { return n_; }
    bool present(Vertex v) const { return present_[v]; }
    bool all_present() const;
    /// 0 when v is a root (or absent).
    Vertex parent(Vertex v) const { return parent_[v]; }
    int parent_arc(Vertex v) const { return parent_arc_[v]; }
    bool is_root(Vertex v) const { return present_[v] && parent_[v] == 0; }

    std::vector<Vertex> vertices() const;          // present, ascending
    std::vector<Vertex> roots() const;             // ascending
    std::vector<Vertex> children(Vertex v) const;  // ascending
    std::vector<Edge> edges() const;               // canonical, sorted
    std::vector<Arc> arcs_away_from_root() const;  // (parent, child) arcs
    int edge_count() const;
    int tree_count() const { return static_cast<int>(roots().size()); }
    int height(Vertex v) const;  // edges on the path to the root
    /// Index of the tree (in root order) containing v.
    int tree_index(Vertex v) const;
    Vertex tree_root(Vertex v) const;

    /// Leaves in the forest sense: degree <= 1 and not a non-isolated root.
    bool is_leaf_or_isolated(Vertex v) const;

    bool is_spanning_subforest_of(const Graph& g) const;

    std::string serialize() const;  // edge-list document

    /// Equality as undirected rooted forests (same present set and edges).
    friend bool operator==(const RootedForest& a, const RootedForest& b);

private:
    int n_;
    std::vector<Vertex> parent_;
    std::vector<int> parent_arc_;
    std::vector<char> present_;
    std::vector<int> child_count_;
};

/// Depth-first (preorder) traversal order: trees in root order, parent before
/// child, sibling blocks in vertex order.
std::vector<Vertex> order_df(const RootedForest& f);
/// Breadth-first order: trees in root order, then by (height, vertex index).
std::vector<Vertex> order_bf(const RootedForest& f);
/// Breadth-first order with a queue: dequeue order of a FIFO queue seeded
/// with each root, children entering in vertex order.
std::vector<Vertex> order_bfq(const RootedForest& f);

/// A deterministic choice function: picks one vertex from a nonempty
/// candidate collection W, possibly consulting the current sub-forest.
/// W is carried in insertion order so that the stack rule is well-defined.
struct ChoiceRule {
    enum class Kind { Ranking, DepthFirst, BreadthFirst, BreadthFirstQueue, Stack, SecondMin };

    Kind kind = Kind::BreadthFirstQueue;
    std::vector<int> ranking;  // Ranking only: ranking[v] = rank of v

    static ChoiceRule ranking_rule(std::vector<int> sigma);
    static ChoiceRule identity_ranking(int n);
    static ChoiceRule dfs() { return {Kind::DepthFirst, {}}; }
    static ChoiceRule bfs() { return {Kind::BreadthFirst, {}}; }
    static ChoiceRule bfsq() { return {Kind::BreadthFirstQueue, {}}; }
    static ChoiceRule stack() { return {Kind::Stack, {}}; }
    static ChoiceRule second_min() { return {Kind::SecondMin, {}}; }

    /// CLI spelling: ranking:<perm> | dfs | bfs | bfsq | stack | secondmin.
    static ChoiceRule parse(const std::string& spec, int n);
    std::string name() const;

    /// The six built-in rules, ranking instantiated with the identity.
    static std::vector<ChoiceRule> builtins(int n);

    Vertex choose(const RootedForest& f, const std::vector<Vertex>& pending) const;
};

}  // namespace multipark

#endif

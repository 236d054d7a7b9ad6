#include "multipark/orders.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace multipark {

RootedForest::RootedForest(int n)
    : n_(n), parent_(n + 1, 0), parent_arc_(n + 1, 0), present_(n + 1, 0), child_count_(n + 1, 0) {
    if (n < 0) throw GraphError("negative vertex count");
}

RootedForest RootedForest::from_edges(int n, const std::vector<Edge>& edges) {
    // Root each component at its least vertex, orient parents toward it.
    std::vector<std::vector<Vertex>> adj(n + 1);
    for (const auto& e : edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n || e.u == e.v)
            throw GraphError("bad forest edge");
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    if (count_components(n, edges) != n - static_cast<int>(edges.size()))
        throw GraphError("edge set contains a cycle");
    RootedForest f(n);
    std::vector<char> seen(n + 1, 0);
    for (Vertex r = 1; r <= n; ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        f.add_vertex(r);
        std::vector<Vertex> stack{r};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj[v]) {
                if (seen[w]) continue;
                seen[w] = 1;
                f.add_child(v, w);
                stack.push_back(w);
            }
        }
    }
    return f;
}

RootedForest RootedForest::parse(const std::string& text) {
    Graph g = Graph::parse(text);
    return from_edges(g.vertex_count(), g.edges());
}

RootedForest RootedForest::parse_file(const std::string& path) {
    Graph g = Graph::parse_file(path);
    return from_edges(g.vertex_count(), g.edges());
}

void RootedForest::add_vertex(Vertex v) {
    if (v < 1 || v > n_) throw GraphError("vertex out of range");
    if (present_[v]) throw GraphError("vertex already present");
    present_[v] = 1;
}

void RootedForest::add_child(Vertex parent, Vertex child, int arc_index) {
    if (parent < 1 || parent > n_ || child < 1 || child > n_)
        throw GraphError("vertex out of range");
    if (!present_[parent]) throw GraphError("parent not present");
    if (present_[child]) throw GraphError("child already present");
    present_[child] = 1;
    parent_[child] = parent;
    parent_arc_[child] = arc_index;
    ++child_count_[parent];
}

bool RootedForest::all_present() const {
    for (Vertex v = 1; v <= n_; ++v)
        if (!present_[v]) return false;
    return true;
}

std::vector<Vertex> RootedForest::vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= n_; ++v)
        if (present_[v]) out.push_back(v);
    return out;
}

std::vector<Vertex> RootedForest::roots() const {
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= n_; ++v)
        if (is_root(v)) out.push_back(v);
    return out;
}

std::vector<Vertex> RootedForest::children(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w = 1; w <= n_; ++w)
        if (present_[w] && parent_[w] == v) out.push_back(w);
    return out;
}

std::vector<Edge> RootedForest::edges() const {
    std::vector<Edge> out;
    for (Vertex v = 1; v <= n_; ++v)
        if (present_[v] && parent_[v] != 0)
            out.push_back({std::min(v, parent_[v]), std::max(v, parent_[v])});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Arc> RootedForest::arcs_away_from_root() const {
    std::vector<Arc> out;
    for (Vertex v = 1; v <= n_; ++v)
        if (present_[v] && parent_[v] != 0) out.push_back({parent_[v], v});
    std::sort(out.begin(), out.end());
    return out;
}

int RootedForest::edge_count() const {
    int k = 0;
    for (Vertex v = 1; v <= n_; ++v)
        if (present_[v] && parent_[v] != 0) ++k;
    return k;
}

int RootedForest::height(Vertex v) const {
    if (!present_[v]) throw GraphError("vertex not present");
    int h = 0;
    while (parent_[v] != 0) {
        v = parent_[v];
        ++h;
    }
    return h;
}

Vertex RootedForest::tree_root(Vertex v) const {
    if (!present_[v]) throw GraphError("vertex not present");
    while (parent_[v] != 0) v = parent_[v];
    return v;
}

int RootedForest::tree_index(Vertex v) const {
    Vertex r = tree_root(v);
    auto rs = roots();
    return static_cast<int>(std::lower_bound(rs.begin(), rs.end(), r) - rs.begin());
}

bool RootedForest::is_leaf_or_isolated(Vertex v) const {
    if (!present_[v]) return false;
    int deg = child_count_[v] + (parent_[v] != 0 ? 1 : 0);
    return deg <= 1;
}

bool RootedForest::is_spanning_subforest_of(const Graph& g) const {
    if (n_ != g.vertex_count() || !all_present()) return false;
    for (const auto& e : edges())
        if (!g.has_edge(e.u, e.v)) return false;
    return true;
}

std::string RootedForest::serialize() const {
    auto es = edges();
    std::ostringstream out;
    out << n_ << " " << es.size() << "\n";
    for (const auto& e : es) out << e.u << " " << e.v << "\n";
    return out.str();
}

bool operator==(const RootedForest& a, const RootedForest& b) {
    return a.n_ == b.n_ && a.present_ == b.present_ && a.edges() == b.edges();
}

// ------------------------------------------------------------ traversals

std::vector<Vertex> order_df(const RootedForest& f) {
    std::vector<Vertex> out;
    for (Vertex r : f.roots()) {
        std::vector<Vertex> stack{r};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out.push_back(v);
            auto ch = f.children(v);
            for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
        }
    }
    return out;
}

std::vector<Vertex> order_bf(const RootedForest& f) {
    std::vector<Vertex> out;
    for (Vertex r : f.roots()) {
        std::vector<Vertex> tree;
        // collect the tree of r
        std::vector<Vertex> stack{r};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            tree.push_back(v);
            for (Vertex c : f.children(v)) stack.push_back(c);
        }
        std::sort(tree.begin(), tree.end(), [&](Vertex a, Vertex b) {
            int ha = f.height(a), hb = f.height(b);
            return ha != hb ? ha < hb : a < b;
        });
        out.insert(out.end(), tree.begin(), tree.end());
    }
    return out;
}

std::vector<Vertex> order_bfq(const RootedForest& f) {
    std::vector<Vertex> out;
    for (Vertex r : f.roots()) {
        std::vector<Vertex> queue{r};
        size_t head = 0;
        while (head < queue.size()) {
            Vertex v = queue[head++];
            out.push_back(v);
            for (Vertex c : f.children(v)) queue.push_back(c);
        }
    }
    return out;
}

// ------------------------------------------------------------ ChoiceRule

ChoiceRule ChoiceRule::ranking_rule(std::vector<int> sigma) {
    ChoiceRule r{Kind::Ranking, {}};
    // sigma lists vertices by rank; ranking[v] = position
    r.ranking.assign(sigma.size() + 1, 0);
    std::vector<char> seen(sigma.size() + 1, 0);
    for (size_t i = 0; i < sigma.size(); ++i) {
        int v = sigma[i];
        if (v < 1 || v > static_cast<int>(sigma.size()) || seen[v])
            throw std::invalid_argument("ranking is not a permutation");
        seen[v] = 1;
        r.ranking[v] = static_cast<int>(i);
    }
    return r;
}

ChoiceRule ChoiceRule::identity_ranking(int n) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    return ranking_rule(std::move(sigma));
}

ChoiceRule ChoiceRule::parse(const std::string& spec, int n) {
    if (spec == "dfs") return dfs();
    if (spec == "bfs") return bfs();
    if (spec == "bfsq") return bfsq();
    if (spec == "stack") return stack();
    if (spec == "secondmin") return second_min();
    const std::string prefix = "ranking:";
    if (spec.rfind(prefix, 0) == 0) {
        std::vector<int> sigma;
        std::string body = spec.substr(prefix.size());
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream in(body);
        int v;
        while (in >> v) sigma.push_back(v);
        if (static_cast<int>(sigma.size()) != n)
            throw std::invalid_argument("ranking permutation must list all " + std::to_string(n) + " vertices");
        return ranking_rule(std::move(sigma));
    }
    throw std::invalid_argument("unknown choice rule '" + spec + "'");
}

std::string ChoiceRule::name() const {
    switch (kind) {
        case Kind::Ranking: return "ranking";
        case Kind::DepthFirst: return "dfs";
        case Kind::BreadthFirst: return "bfs";
        case Kind::BreadthFirstQueue: return "bfsq";
        case Kind::Stack: return "stack";
        case Kind::SecondMin: return "secondmin";
    }
    return "?";
}

std::vector<ChoiceRule> ChoiceRule::builtins(int n) {
    return {identity_ranking(n), dfs(), bfs(), bfsq(), stack(), second_min()};
}

Vertex ChoiceRule::choose(const RootedForest& f, const std::vector<Vertex>& pending) const {
    if (pending.empty()) throw std::invalid_argument("choose: empty candidate set");
    switch (kind) {
        case Kind::Ranking:
            return *std::min_element(pending.begin(), pending.end(), [&](Vertex a, Vertex b) {
                return ranking.at(a) < ranking.at(b);
            });
        case Kind::DepthFirst:
        case Kind::BreadthFirst:
        case Kind::BreadthFirstQueue: {
            auto order = kind == Kind::DepthFirst    ? order_df(f)
                         : kind == Kind::BreadthFirst ? order_bf(f)
                                                      : order_bfq(f);
            std::vector<int> pos(f.vertex_count() + 1, -1);
            for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
            return *std::min_element(pending.begin(), pending.end(), [&](Vertex a, Vertex b) {
                return pos.at(a) < pos.at(b);
            });
        }
        case Kind::Stack:
            return pending.back();
        case Kind::SecondMin: {
            if (pending.size() == 1) return pending.front();
            std::vector<Vertex> s(pending);
            std::sort(s.begin(), s.end());
            return s[1];
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace multipark

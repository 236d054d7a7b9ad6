#include "multipark/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace multipark {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n + 1), count_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        --count_;
        return true;
    }
    int components() const { return count_; }

private:
    std::vector<int> parent_;
    int count_;
};

void check_vertex(Vertex v, int n, const char* what) {
    if (v < 1 || v > n)
        throw GraphError(std::string(what) + ": endpoint " + std::to_string(v) +
                         " out of range 1.." + std::to_string(n));
}

// Strips comments, returns the whitespace-separated tokens of each data line.
std::vector<std::vector<std::string>> data_lines(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

long parse_int(const std::string& tok) {
    size_t pos = 0;
    long v;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("malformed token '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("malformed token '" + tok + "'");
    return v;
}

}  // namespace

int count_components(int n, const std::vector<Edge>& edges) {
    UnionFind uf(n);
    for (const auto& e : edges) uf.unite(e.u, e.v);
    return uf.components();
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(n + 1) {
    if (n < 0) throw GraphError("negative vertex count");
    std::set<Edge> seen;
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        check_vertex(e.u, n, "Graph");
        check_vertex(e.v, n, "Graph");
        if (e.u == e.v) throw GraphError("Loop: {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        if (!seen.insert(e).second)
            throw GraphError("DuplicateEdge: {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    edges_.assign(seen.begin(), seen.end());
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::parse(const std::string& text) {
    auto lines = data_lines(text);
    if (lines.empty()) throw ParseError("empty graph document");
    if (lines[0].size() != 2) throw ParseError("header must be 'n m'");
    long n = parse_int(lines[0][0]);
    long m = parse_int(lines[0][1]);
    if (static_cast<long>(lines.size()) - 1 != m)
        throw ParseError("declared " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].size() != 2) throw ParseError("edge line must be 'u v'");
        Vertex u = static_cast<Vertex>(parse_int(lines[i][0]));
        Vertex v = static_cast<Vertex>(parse_int(lines[i][1]));
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("endpoint out of range on line " + std::to_string(i + 1));
        edges.push_back({u, v});
    }
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

Graph Graph::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string Graph::serialize() const {
    std::ostringstream out;
    out << n_ << " " << edges_.size() << "\n";
    for (const auto& e : edges_) out << e.u << " " << e.v << "\n";
    return out.str();
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v, n_, "neighbors");
    return adj_[v];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(Vertex u, Vertex v) const {
    return edge_index(u, v) >= 0;
}

int Graph::edge_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    Edge e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Graph::components() const { return count_components(n_, edges_); }

Graph Graph::complete(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph Graph::cycle(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u < n; ++u) edges.push_back({u, u + 1});
    if (n >= 3) edges.push_back({1, n});
    return Graph(n, std::move(edges));
}

Graph Graph::path(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u < n; ++u) edges.push_back({u, u + 1});
    return Graph(n, std::move(edges));
}

// ------------------------------------------------------------ Multigraph

Multigraph::Multigraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : n_(n) {
    int id = 0;
    for (auto [u, v] : edges) {
        check_vertex(u, n, "Multigraph");
        check_vertex(v, n, "Multigraph");
        if (u > v) std::swap(u, v);
        edges_.push_back({id++, u, v});
    }
}

Multigraph::Multigraph(int n, std::vector<MEdge> edges) : n_(n), edges_(std::move(edges)) {}

Multigraph Multigraph::from_graph(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const auto& e : g.edges()) es.emplace_back(e.u, e.v);
    return Multigraph(g.vertex_count(), es);
}

const Multigraph::MEdge& Multigraph::edge_by_id(int id) const {
    for (const auto& e : edges_)
        if (e.id == id) return e;
    throw GraphError("unknown edge id " + std::to_string(id));
}

bool Multigraph::has_edge_id(int id) const {
    return std::any_of(edges_.begin(), edges_.end(), [id](const MEdge& e) { return e.id == id; });
}

Multigraph Multigraph::delete_edge(int id) const {
    edge_by_id(id);  // existence check
    std::vector<MEdge> kept;
    for (const auto& e : edges_)
        if (e.id != id) kept.push_back(e);
    return Multigraph(n_, std::move(kept));
}

Multigraph Multigraph::contract_edge(int id) const {
    const MEdge& c = edge_by_id(id);
    if (c.u == c.v) throw GraphError("cannot contract a loop");
    Vertex keep = c.u, gone = c.v;  // keep < gone
    std::vector<MEdge> kept;
    for (const auto& e : edges_) {
        if (e.id == id) continue;
        auto remap = [&](Vertex w) {
            if (w == gone) w = keep;
            return w > gone ? w - 1 : w;
        };
        Vertex u = remap(e.u), v = remap(e.v);
        if (u > v) std::swap(u, v);
        kept.push_back({e.id, u, v});
    }
    return Multigraph(n_ - 1, std::move(kept));
}

bool Multigraph::is_loop(int id) const {
    const MEdge& e = edge_by_id(id);
    return e.u == e.v;
}

bool Multigraph::is_bridge(int id) const {
    return delete_edge(id).components() > components();
}

int Multigraph::components() const {
    UnionFind uf(n_);
    for (const auto& e : edges_) uf.unite(e.u, e.v);
    return uf.components();
}

// -------------------------------------------------------------- Digraph

Digraph::Digraph(int n, const std::vector<Arc>& arcs)
    : n_(n), arcs_(arcs), out_(n + 1), in_(n + 1) {
    for (const auto& a : arcs_) {
        check_vertex(a.from, n, "Digraph");
        check_vertex(a.to, n, "Digraph");
        if (a.from == a.to) throw GraphError("Loop: (" + std::to_string(a.from) + "," + std::to_string(a.to) + ")");
    }
    for (const auto& a : arcs_) {
        out_[a.from].push_back(a.to);
        in_[a.to].push_back(a.from);
    }
    auto dedup = [](std::vector<Vertex>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    for (auto& v : out_) dedup(v);
    for (auto& v : in_) dedup(v);
}

Digraph Digraph::parse(const std::string& text) {
    auto lines = data_lines(text);
    if (lines.empty()) throw ParseError("empty digraph document");
    if (lines[0].size() != 2) throw ParseError("header must be 'n m'");
    long n = parse_int(lines[0][0]);
    long m = parse_int(lines[0][1]);
    if (static_cast<long>(lines.size()) - 1 != m)
        throw ParseError("declared " + std::to_string(m) + " arc lines, found " +
                         std::to_string(lines.size() - 1));
    std::vector<Arc> arcs;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].size() != 2 && lines[i].size() != 3)
            throw ParseError("arc line must be 'u v' or 'u v k'");
        Vertex u = static_cast<Vertex>(parse_int(lines[i][0]));
        Vertex v = static_cast<Vertex>(parse_int(lines[i][1]));
        long k = lines[i].size() == 3 ? parse_int(lines[i][2]) : 1;
        if (k < 1) throw ParseError("multiplicity must be positive");
        for (long j = 0; j < k; ++j) arcs.push_back({u, v});
    }
    try {
        return Digraph(static_cast<int>(n), arcs);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

Digraph Digraph::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

Digraph Digraph::from_graph(const Graph& g) {
    std::vector<Arc> arcs;
    for (const auto& e : g.edges()) {
        arcs.push_back({e.u, e.v});
        arcs.push_back({e.v, e.u});
    }
    return Digraph(g.vertex_count(), arcs);
}

int Digraph::arc_multiplicity(Vertex u, Vertex v) const {
    int k = 0;
    for (const auto& a : arcs_)
        if (a.from == u && a.to == v) ++k;
    return k;
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex v) const {
    check_vertex(v, n_, "out_neighbors");
    return out_[v];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex v) const {
    check_vertex(v, n_, "in_neighbors");
    return in_[v];
}

int Digraph::out_degree(Vertex v) const {
    check_vertex(v, n_, "out_degree");
    int k = 0;
    for (const auto& a : arcs_)
        if (a.from == v) ++k;
    return k;
}

// ---------------------------------------------------- PartialOrientation

PartialOrientation::PartialOrientation(Graph base, std::vector<EdgeState> states)
    : base_(std::move(base)), states_(std::move(states)) {
    if (static_cast<int>(states_.size()) != base_.edge_count())
        throw GraphError("state vector size does not match base edge count");
}

int PartialOrientation::components() const {
    std::vector<Edge> present;
    for (int i = 0; i < base_.edge_count(); ++i)
        if (states_[i] != EdgeState::Absent) present.push_back(base_.edges()[i]);
    return count_components(base_.vertex_count(), present);
}

int PartialOrientation::edge_weight() const {
    int w = 0;
    for (auto s : states_) {
        switch (s) {
            case EdgeState::Absent: break;
            case EdgeState::Both: w += 2; break;
            default: w += 1; break;
        }
    }
    return w;
}

bool PartialOrientation::has_arc(Vertex x, Vertex u) const {
    int i = base_.edge_index(x, u);
    if (i < 0) return false;
    EdgeState s = states_[i];
    if (s == EdgeState::Both) return true;
    bool forward = x < u;  // Fwd is min->max
    return (forward && s == EdgeState::Fwd) || (!forward && s == EdgeState::Bwd);
}

bool PartialOrientation::has_undirected(Vertex x, Vertex u) const {
    int i = base_.edge_index(x, u);
    return i >= 0 && states_[i] == EdgeState::Undirected;
}

}  // namespace multipark

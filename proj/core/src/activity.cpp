#include "multipark/activity.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace multipark {

namespace {

Graph forest_as_graph(const RootedForest& f) {
    return Graph(f.vertex_count(), f.edges());
}

void require_spanning(const Graph& g, const RootedForest& f, const char* who) {
    if (!f.is_spanning_subforest_of(g))
        throw std::invalid_argument(std::string(who) + ": F is not a spanning sub-forest of g");
}

}  // namespace

bool QueueTrace::copresent(Vertex v, Vertex w) const {
    return enqueue_time[v] < dequeue_time[w] && enqueue_time[w] < dequeue_time[v];
}

std::string QueueTrace::format_row() const {
    std::ostringstream out;
    for (size_t t = 0; t < queue_at.size(); ++t) {
        if (t) out << ",";
        out << "(";
        for (size_t i = 0; i < queue_at[t].size(); ++i) {
            if (i) out << ",";
            out << queue_at[t][i];
        }
        out << ")";
    }
    return out.str();
}

std::string QueueTrace::format_table() const {
    std::vector<std::string> trow{"t"}, qrow{"Q_t"};
    for (size_t t = 0; t < queue_at.size(); ++t) {
        trow.push_back(std::to_string(t));
        std::ostringstream cell;
        cell << "(";
        for (size_t i = 0; i < queue_at[t].size(); ++i) {
            if (i) cell << ",";
            cell << queue_at[t][i];
        }
        cell << ")";
        qrow.push_back(cell.str());
    }
    std::ostringstream out;
    for (const auto* row : {&trow, &qrow}) {
        for (size_t c = 0; c < row->size(); ++c) {
            if (c) out << " | ";
            size_t w = std::max(trow[c].size(), qrow[c].size());
            out << (*row)[c] << std::string(w - (*row)[c].size(), ' ');
        }
        out << "\n";
    }
    return out.str();
}

// -------------------------------------------------------------------- BFS

BfsResult bfs_forest(const Graph& h) {
    int n = h.vertex_count();
    BfsResult result{RootedForest(n), {}};
    QueueTrace& tr = result.trace;
    tr.enqueue_time.assign(n + 1, -1);
    tr.dequeue_time.assign(n + 1, -1);

    std::vector<char> visited(n + 1, 0);
    std::vector<Vertex> queue;
    auto enqueue = [&](Vertex v, int t) {
        visited[v] = 1;
        queue.push_back(v);
        tr.enqueue_time[v] = t;
    };
    if (n >= 1) {
        result.forest.add_vertex(1);
        enqueue(1, 0);
    }
    tr.queue_at.push_back(queue);
    int processed = 0;
    int t = 0;
    while (!queue.empty()) {
        ++t;
        Vertex x = queue.front();
        queue.erase(queue.begin());
        tr.dequeue_time[x] = t;
        tr.processed_order.push_back(x);
        ++processed;
        for (Vertex u : h.neighbors(x)) {
            if (visited[u]) continue;
            result.forest.add_child(x, u);
            enqueue(u, t);
        }
        if (queue.empty() && processed < n) {
            for (Vertex u = 1; u <= n; ++u)
                if (!visited[u]) {
                    result.forest.add_vertex(u);
                    enqueue(u, t);
                    break;
                }
        }
        tr.queue_at.push_back(queue);
    }
    return result;
}

std::vector<Edge> bfs_external(const Graph& g, const RootedForest& F) {
    require_spanning(g, F, "bfs_external");
    BfsResult on_forest = bfs_forest(forest_as_graph(F));
    assert(on_forest.forest == F);
    std::vector<Edge> active;
    for (const auto& e : g.edges()) {
        if (F.parent(e.u) == e.v || F.parent(e.v) == e.u) continue;
        if (on_forest.trace.copresent(e.u, e.v)) active.push_back(e);
    }
    return active;
}

std::vector<Edge> bfs_external_by_definition(const Graph& g, const RootedForest& F) {
    require_spanning(g, F, "bfs_external");
    std::vector<Edge> active;
    for (const auto& e : g.edges()) {
        if (F.parent(e.u) == e.v || F.parent(e.v) == e.u) continue;
        auto edges = F.edges();
        edges.push_back(e);
        if (bfs_forest(Graph(g.vertex_count(), edges)).forest == F) active.push_back(e);
    }
    return active;
}

// ----------------------------------------------------------- edge classes

std::vector<Edge> EdgeClassification::redundant() const {
    std::vector<Edge> out;
    out.insert(out.end(), r1.begin(), r1.end());
    out.insert(out.end(), r2.begin(), r2.end());
    out.insert(out.end(), r3.begin(), r3.end());
    std::sort(out.begin(), out.end());
    return out;
}

EdgeClassification classify_edges(const Graph& g, const ChoiceRule& gamma, const RootedForest& F) {
    require_spanning(g, F, "classify_edges");
    PsiResult p = psi(g, gamma, F);
    int n = g.vertex_count();
    std::vector<int> pos(n + 1, 0);
    for (size_t i = 0; i < p.order.size(); ++i) pos[p.order[i]] = static_cast<int>(i);

    EdgeClassification cls;
    for (const auto& e : g.edges()) {
        if (F.parent(e.u) == e.v || F.parent(e.v) == e.u) {
            cls.forest.push_back(e);
            continue;
        }
        bool ru = F.is_root(e.u), rv = F.is_root(e.v);
        if (ru && rv) {
            cls.r1.push_back(e);
        } else if (ru != rv) {
            Vertex root = ru ? e.u : e.v;
            Vertex other = ru ? e.v : e.u;
            (pos[other] < pos[root] ? cls.r2 : cls.plain).push_back(e);
        } else {
            Vertex late = pos[e.u] > pos[e.v] ? e.u : e.v;
            Vertex early = late == e.u ? e.v : e.u;
            bool type3 = pos[F.parent(late)] < pos[early] && pos[early] < pos[late];
            (type3 ? cls.r3 : cls.plain).push_back(e);
        }
    }
    return cls;
}

EdgeIdentity verify_edge_identity(const Graph& g, const ChoiceRule& gamma, const RootedForest& F) {
    PsiResult p = psi(g, gamma, F);
    EdgeClassification cls = classify_edges(g, gamma, F);
    EdgeIdentity id{p.f.finite_sum(), F.edge_count(), static_cast<long>(cls.redundant().size())};
    if (id.finite_sum + id.forest_edges + id.redundant != g.edge_count())
        throw std::logic_error("edge identity violated");
    return id;
}

// -------------------------------------------------------------------- NFS

namespace {

void nfs_search(const Graph& h, Vertex v, std::vector<char>& marked, RootedForest& forest) {
    std::vector<Vertex> found;
    for (Vertex w : h.neighbors(v)) {
        if (marked[w]) continue;
        marked[w] = 1;
        forest.add_child(v, w);
        found.push_back(w);
    }
    for (Vertex w : found) nfs_search(h, w, marked, forest);
}

}  // namespace

RootedForest nfs_forest(const Graph& h) {
    int n = h.vertex_count();
    RootedForest forest(n);
    std::vector<char> marked(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        if (marked[v]) continue;
        marked[v] = 1;
        forest.add_vertex(v);
        nfs_search(h, v, marked, forest);
    }
    return forest;
}

std::vector<Edge> nfs_external(const Graph& g, const RootedForest& F) {
    require_spanning(g, F, "nfs_external");
    std::vector<Edge> active;
    for (const auto& e : g.edges()) {
        if (F.parent(e.u) == e.v || F.parent(e.v) == e.u) continue;
        auto edges = F.edges();
        edges.push_back(e);
        if (nfs_forest(Graph(g.vertex_count(), edges)) == F) active.push_back(e);
    }
    return active;
}

// ------------------------------------------------------------ directed BFS

BfsResult dbfs_forest(const Digraph& d) {
    int n = d.vertex_count();
    BfsResult result{RootedForest(n), {}};
    QueueTrace& tr = result.trace;
    tr.enqueue_time.assign(n + 1, -1);
    tr.dequeue_time.assign(n + 1, -1);
    std::vector<char> visited(n + 1, 0);
    std::vector<Vertex> queue;
    auto enqueue = [&](Vertex v, int t) {
        visited[v] = 1;
        queue.push_back(v);
        tr.enqueue_time[v] = t;
    };
    if (n >= 1) {
        result.forest.add_vertex(1);
        enqueue(1, 0);
    }
    tr.queue_at.push_back(queue);
    int processed = 0;
    int t = 0;
    while (!queue.empty()) {
        ++t;
        Vertex x = queue.front();
        queue.erase(queue.begin());
        tr.dequeue_time[x] = t;
        tr.processed_order.push_back(x);
        ++processed;
        for (Vertex u : d.out_neighbors(x)) {
            if (visited[u]) continue;
            result.forest.add_child(x, u);
            enqueue(u, t);
        }
        if (queue.empty() && processed < n) {
            for (Vertex u = 1; u <= n; ++u)
                if (!visited[u]) {
                    result.forest.add_vertex(u);
                    enqueue(u, t);
                    break;
                }
        }
        tr.queue_at.push_back(queue);
    }
    return result;
}

std::vector<Arc> dbfs_external(const Graph& g, const RootedForest& F) {
    require_spanning(g, F, "dbfs_external");
    auto active_edges = bfs_external(g, F);
    auto is_active = [&](const Edge& e) {
        return std::binary_search(active_edges.begin(), active_edges.end(), e);
    };
    auto order = order_bfq(F);
    std::vector<int> pos(g.vertex_count() + 1, 0);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    std::vector<Arc> out;
    for (const auto& e : g.edges()) {
        Vertex first = pos[e.u] < pos[e.v] ? e.u : e.v;
        Vertex second = first == e.u ? e.v : e.u;
        if (F.parent(e.u) == e.v || F.parent(e.v) == e.u) {
            out.push_back({second, first});  // backward arc over a forest edge
        } else if (is_active(e)) {
            out.push_back({first, second});
            out.push_back({second, first});
        } else {
            out.push_back({second, first});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Arc> dbfs_external_by_definition(const Graph& g, const RootedForest& F) {
    require_spanning(g, F, "dbfs_external");
    std::vector<Arc> base = F.arcs_away_from_root();
    std::vector<Arc> out;
    for (const auto& e : g.edges()) {
        for (Arc a : {Arc{e.u, e.v}, Arc{e.v, e.u}}) {
            if (std::find(base.begin(), base.end(), a) != base.end()) continue;
            auto arcs = base;
            arcs.push_back(a);
            BfsResult r = dbfs_forest(Digraph(g.vertex_count(), arcs));
            if (r.forest.arcs_away_from_root() == base) out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// -------------------------------------------------------------- subtraffic

TrafficBfsResult traffic_bfs(const PartialOrientation& k) {
    const Graph& base = k.base();
    int n = base.vertex_count();
    TrafficBfsResult result{RootedForest(n), {}, {}};
    QueueTrace& tr = result.trace;
    tr.enqueue_time.assign(n + 1, -1);
    tr.dequeue_time.assign(n + 1, -1);
    std::vector<char> visited(n + 1, 0);
    std::vector<Vertex> queue;
    auto enqueue = [&](Vertex v, int t) {
        visited[v] = 1;
        queue.push_back(v);
        tr.enqueue_time[v] = t;
    };
    if (n >= 1) {
        result.forest.add_vertex(1);
        enqueue(1, 0);
    }
    tr.queue_at.push_back(queue);
    int processed = 0;
    int t = 0;
    while (!queue.empty()) {
        ++t;
        Vertex x = queue.front();
        queue.erase(queue.begin());
        tr.dequeue_time[x] = t;
        tr.processed_order.push_back(x);
        ++processed;
        for (Vertex u : base.neighbors(x)) {
            if (visited[u]) continue;
            bool arc = k.has_arc(x, u);
            if (!arc && !k.has_undirected(x, u)) continue;
            result.forest.add_child(x, u);
            if (arc) result.directed_edges.push_back({x, u});
            enqueue(u, t);
        }
        if (queue.empty() && processed < n) {
            for (Vertex u = 1; u <= n; ++u)
                if (!visited[u]) {
                    result.forest.add_vertex(u);
                    enqueue(u, t);
                    break;
                }
        }
        tr.queue_at.push_back(queue);
    }
    std::sort(result.directed_edges.begin(), result.directed_edges.end());
    return result;
}

// ------------------------------------------------- complete-graph machinery

RootedForest merge_forest(const RootedForest& f, const Graph& complete_base) {
    int n = complete_base.vertex_count();
    if (complete_base.edge_count() != n * (n - 1) / 2)
        throw std::invalid_argument("merge: base graph is not complete");
    require_spanning(complete_base, f, "merge");
    auto roots = f.roots();
    auto order = order_bfq(f);
    // bfq-maximal vertex of each tree = last member of the tree's bfq block
    std::vector<Vertex> tree_max(roots.size());
    for (Vertex v : order) tree_max[f.tree_index(v)] = v;

    auto edges = f.edges();
    for (size_t i = 1; i < roots.size(); ++i) {
        Vertex a = roots[i], b = tree_max[i - 1];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return RootedForest::from_edges(n, edges);
}

std::vector<Edge> critical_edges(const RootedForest& tree, const Graph& complete_base) {
    if (tree.tree_count() != 1) throw std::invalid_argument("critical_edges: input must be a tree");
    std::vector<Edge> out;
    for (const auto& e : tree.edges()) {
        std::vector<Edge> rest;
        for (const auto& o : tree.edges())
            if (!(o == e)) rest.push_back(o);
        RootedForest split = RootedForest::from_edges(tree.vertex_count(), rest);
        if (merge_forest(split, complete_base) == tree) out.push_back(e);
    }
    return out;
}

bool is_classical_parking_function(const std::vector<long>& b) {
    std::vector<long> s(b);
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] < 0 || s[i] > static_cast<long>(i)) return false;
    return true;
}

int alpha(const std::vector<long>& b) {
    if (!is_classical_parking_function(b))
        throw std::invalid_argument("alpha: not a classical parking function");
    long n = static_cast<long>(b.size());
    int count = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        long j = b[i];
        long smaller = 0, larger = 0;
        for (long x : b) {
            smaller += x < j;
            larger += x > j;
        }
        if (smaller != j || larger != n - 1 - j) continue;
        bool lr_max = true;
        for (size_t t = 0; t < i; ++t)
            if (b[t] >= j) lr_max = false;
        if (lr_max) ++count;
    }
    return count;
}

}  // namespace multipark

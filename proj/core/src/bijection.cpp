#include "multipark/bijection.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace multipark {

namespace {

std::string join(const std::vector<Vertex>& vs, char open, char close) {
    std::ostringstream out;
    out << open;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out << ",";
        out << vs[i];
    }
    out << close;
    return out.str();
}

void record_step(ProcessTrace& trace, Vertex processed, const std::vector<Vertex>& queue,
                 const std::vector<char>& in_p, const std::vector<long>* val,
                 const std::vector<char>* val_inf) {
    TraceStep s;
    s.processed = processed;
    s.queue = queue;
    for (Vertex v = 1; v < static_cast<Vertex>(in_p.size()); ++v)
        if (in_p[v]) s.processed_set.push_back(v);
    if (val) s.val = *val;
    if (val_inf) s.val_infinite = *val_inf;
    trace.steps.push_back(std::move(s));
}

Vertex least_unprocessed(const std::vector<char>& in_p, int n) {
    for (Vertex v = 1; v <= n; ++v)
        if (!in_p[v]) return v;
    return 0;
}

}  // namespace

std::string ProcessTrace::format_table() const {
    std::vector<std::string> trow{"t"}, qrow{"Q_t"}, prow{"P_t"};
    for (size_t t = 0; t < steps.size(); ++t) {
        trow.push_back(std::to_string(t));
        std::vector<Vertex> q = steps[t].queue;
        if (t + 1 < steps.size()) {
            Vertex next = steps[t + 1].processed;
            auto it = std::find(q.begin(), q.end(), next);
            if (it != q.end()) {
                q.erase(it);
                q.insert(q.begin(), next);
            }
        }
        qrow.push_back(join(q, '(', ')'));
        prow.push_back(join(steps[t].processed_set, '{', '}'));
    }
    std::vector<size_t> width(trow.size());
    for (size_t c = 0; c < trow.size(); ++c)
        width[c] = std::max({trow[c].size(), qrow[c].size(), prow[c].size()});
    std::ostringstream out;
    for (const auto* row : {&trow, &qrow, &prow}) {
        for (size_t c = 0; c < row->size(); ++c) {
            if (c) out << " | ";
            out << (*row)[c] << std::string(width[c] - (*row)[c].size(), ' ');
        }
        out << "\n";
    }
    return out.str();
}

// -------------------------------------------------------------------- phi

PhiResult phi(const Graph& g, const ChoiceRule& gamma, const VertexFunction& f) {
    int n = g.vertex_count();
    if (f.size() != n) throw std::invalid_argument("phi: vertex function size mismatch");
    BurnResult burn = is_multiparking_burning(g, f);
    if (!burn.ok)
        throw std::invalid_argument("phi: not a multiparking function, stuck on residual " +
                                    join(burn.residual, '{', '}'));

    std::vector<long> val(n + 1, 0);
    std::vector<char> val_inf(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        if (f.at(v).infinite)
            val_inf[v] = 1;
        else
            val[v] = f.at(v).finite;
    }

    RootedForest forest(n);
    forest.add_vertex(1);
    std::vector<Vertex> queue{1};
    std::vector<char> in_p(n + 1, 0);
    PhiResult result{std::move(forest), {}};
    record_step(result.trace, 0, queue, in_p, &val, &val_inf);

    for (int i = 1; i <= n; ++i) {
        Vertex v = gamma.choose(result.forest, queue);
        queue.erase(std::find(queue.begin(), queue.end(), v));
        std::vector<Vertex> found;
        for (Vertex w : g.neighbors(v)) {
            if (in_p[w] || val_inf[w]) continue;
            if (--val[w] == -1) found.push_back(w);  // neighbors() is ascending
        }
        in_p[v] = 1;
        for (Vertex w : found) {
            result.forest.add_child(v, w);
            queue.push_back(w);
        }
        if (queue.empty() && i < n) {
            Vertex u = least_unprocessed(in_p, n);
            result.forest.add_vertex(u);
            queue.push_back(u);
        }
        record_step(result.trace, v, queue, in_p, &val, &val_inf);
    }
    assert(result.forest.all_present());
    return result;
}

PhiResult phi_directed(const Digraph& d, const ChoiceRule& gamma, const VertexFunction& f) {
    int n = d.vertex_count();
    if (f.size() != n) throw std::invalid_argument("phi: vertex function size mismatch");
    BurnResult burn = is_multiparking_burning(d, f);
    if (!burn.ok)
        throw std::invalid_argument("phi: not a multiparking function, stuck on residual " +
                                    join(burn.residual, '{', '}'));

    std::vector<long> val(n + 1, 0);
    std::vector<char> val_inf(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        if (f.at(v).infinite)
            val_inf[v] = 1;
        else
            val[v] = f.at(v).finite;
    }

    RootedForest forest(n);
    forest.add_vertex(1);
    std::vector<Vertex> queue{1};
    std::vector<char> in_p(n + 1, 0);
    PhiResult result{std::move(forest), {}};
    record_step(result.trace, 0, queue, in_p, &val, &val_inf);

    for (int i = 1; i <= n; ++i) {
        Vertex v = gamma.choose(result.forest, queue);
        queue.erase(std::find(queue.begin(), queue.end(), v));
        std::vector<std::pair<Vertex, int>> found;  // (w, arc index used)
        for (Vertex w : d.in_neighbors(v)) {
            if (in_p[w] || val_inf[w]) continue;
            int mult = d.arc_multiplicity(w, v);
            long before = val[w];
            val[w] -= mult;
            if (before >= 0 && val[w] < 0)
                found.emplace_back(w, static_cast<int>(before) + 1);
        }
        in_p[v] = 1;
        std::sort(found.begin(), found.end());
        for (auto [w, arc] : found) {
            result.forest.add_child(v, w, arc);
            queue.push_back(w);
        }
        if (queue.empty() && i < n) {
            Vertex u = least_unprocessed(in_p, n);
            result.forest.add_vertex(u);
            queue.push_back(u);
        }
        record_step(result.trace, v, queue, in_p, &val, &val_inf);
    }
    assert(result.forest.all_present());
    return result;
}

// -------------------------------------------------------------------- psi

namespace {

// Shared core of Step 1: walk the forest from the roots, maintaining the
// pending collection in insertion order, children entering in vertex order.
struct OrderResult {
    std::vector<Vertex> order;
    ProcessTrace trace;
};

OrderResult process_order(int n, const ChoiceRule& gamma, const RootedForest& F) {
    if (!F.all_present()) throw std::invalid_argument("psi: forest must span all vertices");
    for (Vertex v = 1; v <= n; ++v)
        if (F.tree_root(v) > v) throw std::invalid_argument("psi: forest roots are not least-vertex");

    RootedForest sub(n);
    sub.add_vertex(1);
    std::vector<Vertex> pending{1};
    std::vector<char> in_p(n + 1, 0);
    OrderResult result;
    record_step(result.trace, 0, pending, in_p, nullptr, nullptr);
    for (int i = 1; i <= n; ++i) {
        Vertex v = gamma.choose(sub, pending);
        pending.erase(std::find(pending.begin(), pending.end(), v));
        in_p[v] = 1;
        result.order.push_back(v);
        for (Vertex c : F.children(v)) {
            sub.add_child(v, c, F.parent_arc(c));
            pending.push_back(c);
        }
        if (pending.empty() && i < n) {
            Vertex u = least_unprocessed(in_p, n);
            assert(F.is_root(u));
            sub.add_vertex(u);
            pending.push_back(u);
        }
        record_step(result.trace, v, pending, in_p, nullptr, nullptr);
    }
    return result;
}

}  // namespace

PsiResult psi(const Graph& g, const ChoiceRule& gamma, const RootedForest& F) {
    int n = g.vertex_count();
    if (!F.is_spanning_subforest_of(g))
        throw std::invalid_argument("psi: F is not a spanning sub-forest of g");
    OrderResult ord = process_order(n, gamma, F);
    std::vector<int> pos(n + 1, 0);
    for (size_t i = 0; i < ord.order.size(); ++i) pos[ord.order[i]] = static_cast<int>(i);

    VertexFunction f(n);
    for (Vertex v = 1; v <= n; ++v) {
        if (F.is_root(v)) {
            f.set(v, ExtNat::inf());
            continue;
        }
        int parent_pos = pos[F.parent(v)];
        long count = 0;
        for (Vertex u : g.neighbors(v))
            if (pos[u] < parent_pos) ++count;
        f.set(v, ExtNat::of(count));
    }
    return {std::move(f), std::move(ord.order), std::move(ord.trace)};
}

PsiResult psi_directed(const Digraph& d, const ChoiceRule& gamma, const RootedForest& F) {
    int n = d.vertex_count();
    if (F.vertex_count() != n || !F.all_present())
        throw std::invalid_argument("psi: forest must span all vertices");
    for (Vertex v = 1; v <= n; ++v) {
        if (F.is_root(v)) continue;
        int mult = d.arc_multiplicity(v, F.parent(v));
        if (F.parent_arc(v) < 1 || F.parent_arc(v) > mult)
            throw std::invalid_argument("psi: forest arc (" + std::to_string(v) + "," +
                                        std::to_string(F.parent(v)) + ") not in digraph");
    }
    OrderResult ord = process_order(n, gamma, F);
    std::vector<int> pos(n + 1, 0);
    for (size_t i = 0; i < ord.order.size(); ++i) pos[ord.order[i]] = static_cast<int>(i);

    VertexFunction f(n);
    for (Vertex v = 1; v <= n; ++v) {
        if (F.is_root(v)) {
            f.set(v, ExtNat::inf());
            continue;
        }
        int parent_pos = pos[F.parent(v)];
        long count = F.parent_arc(v) - 1;  // earlier parallel arcs to the parent
        for (const auto& a : d.arcs())
            if (a.from == v && pos[a.to] < parent_pos) ++count;
        f.set(v, ExtNat::of(count));
    }
    return {std::move(f), std::move(ord.order), std::move(ord.trace)};
}

}  // namespace multipark

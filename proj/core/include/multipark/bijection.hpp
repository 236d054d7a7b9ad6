#ifndef MULTIPARK_BIJECTION_HPP
#define MULTIPARK_BIJECTION_HPP

#include <string>
#include <vector>

#include "multipark/orders.hpp"
#include "multipark/parking.hpp"

namespace multipark {

struct TraceStep {
    Vertex processed = 0;              // 0 at time 0
    std::vector<Vertex> queue;         // pending vertices, insertion order
    std::vector<Vertex> processed_set; // ascending
    std::vector<long> val;             // finite values, may be negative; unused entries 0
    std::vector<char> val_infinite;    // marks roots; empty when values untracked
};

struct ProcessTrace {
    std::vector<TraceStep> steps;  // steps[t] = state at time t, t = 0..n

    /// Q_t/P_t table; in each Q_t the vertex processed next is listed first,
    /// the rest keep insertion order.
    std::string format_table() const;
};

struct PhiResult {
    RootedForest forest;
    ProcessTrace trace;
};

struct PsiResult {
    VertexFunction f;
    std::vector<Vertex> order;  // process order pi, order[0] = 1
    ProcessTrace trace;
};

/// Multiparking function -> spanning forest. Validates f via the burning
/// certificate first.
PhiResult phi(const Graph& g, const ChoiceRule& gamma, const VertexFunction& f);

/// Spanning forest -> multiparking function, with the process order.
/// F must be a spanning sub-forest of g with least-vertex roots.
PsiResult psi(const Graph& g, const ChoiceRule& gamma, const RootedForest& F);

/// Directed variants. Oriented forests carry the arc (v, parent(v)) toward
/// the root; parent_arc(v) is the 1-based index among the parallel arcs
/// v -> parent(v) of d.
PhiResult phi_directed(const Digraph& d, const ChoiceRule& gamma, const VertexFunction& f);
PsiResult psi_directed(const Digraph& d, const ChoiceRule& gamma, const RootedForest& F);

}  // namespace multipark

#endif

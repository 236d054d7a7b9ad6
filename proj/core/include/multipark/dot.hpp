#ifndef MULTIPARK_DOT_HPP
#define MULTIPARK_DOT_HPP

#include <string>

#include "multipark/activity.hpp"
#include "multipark/graph.hpp"
#include "multipark/orders.hpp"

namespace multipark {

/// Graphviz rendering of a rooted forest: solid edges oriented away from the
/// roots, roots drawn as double circles.
std::string dot_forest(const RootedForest& f);

/// Graphviz rendering of a graph with a classified edge set: forest edges
/// solid, the three redundant types dashed/dotted/bold, the rest gray.
std::string dot_classified(const Graph& g, const EdgeClassification& cls);

}  // namespace multipark

#endif

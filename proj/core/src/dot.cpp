#include "multipark/dot.hpp"

#include <algorithm>
#include <sstream>

namespace multipark {

std::string dot_forest(const RootedForest& f) {
    std::ostringstream out;
    out << "digraph forest {\n";
    for (Vertex r : f.roots()) out << "  " << r << " [shape=doublecircle];\n";
    for (const auto& a : f.arcs_away_from_root())
        out << "  " << a.from << " -> " << a.to << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot_classified(const Graph& g, const EdgeClassification& cls) {
    auto style_of = [&](const Edge& e) -> const char* {
        auto in = [&](const std::vector<Edge>& v) {
            return std::find(v.begin(), v.end(), e) != v.end();
        };
        if (in(cls.forest)) return "solid";
        if (in(cls.r1)) return "dashed";
        if (in(cls.r2)) return "dotted";
        if (in(cls.r3)) return "bold";
        return "solid\", color=\"gray";
    };
    std::ostringstream out;
    out << "graph classified {\n";
    for (Vertex v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& e : g.edges())
        out << "  " << e.u << " -- " << e.v << " [style=\"" << style_of(e) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace multipark

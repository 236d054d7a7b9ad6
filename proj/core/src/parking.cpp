#include "multipark/parking.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace multipark {

namespace {

int outdeg_in(const Graph& g, const std::vector<char>& in_u, Vertex v) {
    int k = 0;
    for (Vertex w : g.neighbors(v))
        if (!in_u[w]) ++k;
    return k;
}

int outdeg_in(const Digraph& d, const std::vector<char>& in_u, Vertex v) {
    int k = 0;
    for (const auto& a : d.arcs())
        if (a.from == v && !in_u[a.to]) ++k;
    return k;
}

template <class G>
int outdeg_impl(const G& g, const std::vector<Vertex>& U, Vertex v) {
    std::vector<char> in_u(g.vertex_count() + 1, 0);
    bool found = false;
    for (Vertex u : U) {
        if (u < 1 || u > g.vertex_count()) throw GraphError("outdeg: vertex out of range");
        in_u[u] = 1;
        found |= (u == v);
    }
    if (!found) throw std::invalid_argument("outdeg: v must belong to U");
    return outdeg_in(g, in_u, v);
}

template <class G>
bool subsets_impl(const G& g, const VertexFunction& f) {
    int n = g.vertex_count();
    if (f.size() != n) throw std::invalid_argument("vertex function size mismatch");
    if (n > 25) throw std::invalid_argument("subset sweep infeasible for n > 25");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<char> in_u(n + 1, 0);
        Vertex min_u = 0;
        for (Vertex v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) {
                in_u[v] = 1;
                if (min_u == 0) min_u = v;
            }
        if (f.at(min_u).infinite) continue;  // condition (A)
        bool ok = false;
        for (Vertex v = 1; v <= n && !ok; ++v) {
            if (!in_u[v]) continue;
            const ExtNat& fv = f.at(v);
            if (!fv.infinite && fv.finite >= 0 && fv.finite < outdeg_in(g, in_u, v)) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

template <class G>
BurnResult burning_impl(const G& g, const VertexFunction& f) {
    int n = g.vertex_count();
    if (f.size() != n) throw std::invalid_argument("vertex function size mismatch");
    std::vector<char> in_u(n + 1, 1);
    in_u[0] = 0;
    BurnResult result;
    for (int step = 0; step < n; ++step) {
        Vertex pick = 0;
        int witness = -1;
        for (Vertex v = 1; v <= n; ++v) {
            if (!in_u[v]) continue;
            const ExtNat& fv = f.at(v);
            if (fv.infinite || fv.finite < 0) continue;
            int od = outdeg_in(g, in_u, v);
            if (fv.finite < od) {
                pick = v;
                witness = od;
                break;  // smallest-index well-behaved vertex
            }
        }
        bool root_case = false;
        if (pick == 0) {
            Vertex min_u = 0;
            for (Vertex v = 1; v <= n && min_u == 0; ++v)
                if (in_u[v]) min_u = v;
            if (!f.at(min_u).infinite) {
                result.ok = false;
                for (Vertex v = 1; v <= n; ++v)
                    if (in_u[v]) result.residual.push_back(v);
                return result;
            }
            pick = min_u;
            root_case = true;
        }
        result.order.push_back({pick, root_case, witness});
        in_u[pick] = 0;
    }
    result.ok = true;
    return result;
}

}  // namespace

// -------------------------------------------------------- VertexFunction

VertexFunction::VertexFunction(int n, ExtNat fill) : vals_(n + 1, fill) {
    if (n < 0) throw std::invalid_argument("negative size");
}

VertexFunction::VertexFunction(std::initializer_list<ExtNat> vals) : vals_(vals.size() + 1) {
    size_t i = 1;
    for (const auto& v : vals) vals_[i++] = v;
}

VertexFunction VertexFunction::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<ExtNat> vals;
    std::string tok;
    while (in >> tok) {
        if (tok == "inf") {
            vals.push_back(ExtNat::inf());
        } else {
            size_t pos = 0;
            long v;
            try {
                v = std::stol(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError("bad vertex-function token '" + tok + "'");
            }
            if (pos != tok.size() || v < 0)
                throw ParseError("bad vertex-function token '" + tok + "'");
            vals.push_back(ExtNat::of(v));
        }
    }
    if (vals.empty()) throw ParseError("empty vertex function");
    VertexFunction f(static_cast<int>(vals.size()));
    for (size_t i = 0; i < vals.size(); ++i) f.set(static_cast<Vertex>(i + 1), vals[i]);
    return f;
}

std::string VertexFunction::to_string() const {
    std::ostringstream out;
    for (int v = 1; v <= size(); ++v) {
        if (v > 1) out << " ";
        if (at(v).infinite)
            out << "inf";
        else
            out << at(v).finite;
    }
    return out.str();
}

const ExtNat& VertexFunction::at(Vertex v) const {
    if (v < 1 || v >= static_cast<Vertex>(vals_.size()))
        throw std::invalid_argument("vertex out of range");
    return vals_[v];
}

void VertexFunction::set(Vertex v, ExtNat val) {
    if (v < 1 || v >= static_cast<Vertex>(vals_.size()))
        throw std::invalid_argument("vertex out of range");
    vals_[v] = val;
}

std::vector<Vertex> VertexFunction::roots() const {
    std::vector<Vertex> out;
    for (int v = 1; v <= size(); ++v)
        if (vals_[v].infinite) out.push_back(v);
    return out;
}

long VertexFunction::finite_sum() const {
    long s = 0;
    for (int v = 1; v <= size(); ++v)
        if (!vals_[v].infinite) s += vals_[v].finite;
    return s;
}

bool operator<(const VertexFunction& a, const VertexFunction& b) {
    auto key = [](const ExtNat& x) { return x.infinite ? std::pair<int, long>{1, 0} : std::pair<int, long>{0, x.finite}; };
    for (int v = 1; v <= std::min(a.size(), b.size()); ++v) {
        auto ka = key(a.at(v)), kb = key(b.at(v));
        if (ka != kb) return ka < kb;
    }
    return a.size() < b.size();
}

// ------------------------------------------------------------ predicates

int outdeg(const Graph& g, const std::vector<Vertex>& U, Vertex v) { return outdeg_impl(g, U, v); }
int outdeg(const Digraph& d, const std::vector<Vertex>& U, Vertex v) { return outdeg_impl(d, U, v); }

bool is_multiparking_subsets(const Graph& g, const VertexFunction& f) { return subsets_impl(g, f); }
bool is_multiparking_subsets(const Digraph& d, const VertexFunction& f) { return subsets_impl(d, f); }

BurnResult is_multiparking_burning(const Graph& g, const VertexFunction& f) { return burning_impl(g, f); }
BurnResult is_multiparking_burning(const Digraph& d, const VertexFunction& f) { return burning_impl(d, f); }

// --------------------------------------------------------------- records

int record(const Graph& g, const VertexFunction& f, Vertex v) {
    if (!f.at(v).infinite) throw std::invalid_argument("record: v is not a root");
    BurnResult burn = is_multiparking_burning(g, f);
    if (!burn.ok) throw std::invalid_argument("record: f is not a multiparking function");
    std::vector<int> pos(g.vertex_count() + 1, -1);
    for (size_t i = 0; i < burn.order.size(); ++i) pos[burn.order[i].v] = static_cast<int>(i);
    int k = 0;
    for (Vertex w : g.neighbors(v))
        if (pos[w] < pos[v]) ++k;
    return k;
}

int record_bruteforce(const Graph& g, const VertexFunction& f, Vertex v) {
    if (!f.at(v).infinite) throw std::invalid_argument("record: v is not a root");
    int n = g.vertex_count();
    if (n > 25) throw std::invalid_argument("record sweep infeasible for n > 25");
    // U ranges over subsets of {v, ..., n} containing v with no well-behaved vertex.
    std::vector<Vertex> rest;
    for (Vertex w = v + 1; w <= n; ++w) rest.push_back(w);
    int best = -1;
    for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
        std::vector<char> in_u(n + 1, 0);
        in_u[v] = 1;
        for (size_t i = 0; i < rest.size(); ++i)
            if (mask & (1u << i)) in_u[rest[i]] = 1;
        bool has_wb = false;
        for (Vertex w = v; w <= n && !has_wb; ++w) {
            if (!in_u[w]) continue;
            const ExtNat& fw = f.at(w);
            if (!fw.infinite && fw.finite < outdeg_in(g, in_u, w)) has_wb = true;
        }
        if (has_wb) continue;
        int od = outdeg_in(g, in_u, v);
        if (best < 0 || od < best) best = od;
    }
    return best;  // {v} itself always qualifies, so best >= 0
}

int rec_total(const Graph& g, const VertexFunction& f) {
    int total = 0;
    for (Vertex r : f.roots()) total += record(g, f, r);
    return total;
}

long rsum(const Graph& g, const VertexFunction& f) {
    long value = g.edge_count() - g.vertex_count() + f.root_count() - rec_total(g, f) - f.finite_sum();
    if (value < 0) throw std::logic_error("negative reversed sum on a valid multiparking function");
    return value;
}

}  // namespace multipark

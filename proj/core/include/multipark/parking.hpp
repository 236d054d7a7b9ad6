#ifndef MULTIPARK_PARKING_HPP
#define MULTIPARK_PARKING_HPP

#include <string>
#include <vector>

#include "multipark/graph.hpp"

namespace multipark {

/// A value in the extended naturals: a finite nonnegative integer or
/// infinity. Infinity is a distinguished state, never a large integer,
/// and infinity - 1 = infinity.
struct ExtNat {
    bool infinite = false;
    long finite = 0;  // meaningful only when !infinite

    static ExtNat inf() { return {true, 0}; }
    static ExtNat of(long v) { return {false, v}; }
    friend bool operator==(const ExtNat&, const ExtNat&) = default;
};

/// Map from V(G) = 1..n to the extended naturals.
class VertexFunction {
public:
    explicit VertexFunction(int n, ExtNat fill = ExtNat::of(0));
    VertexFunction(std::initializer_list<ExtNat> vals);

    /// Text form: n whitespace-separated tokens, nonnegative integers or
    /// "inf"; position i is f(i).
    static VertexFunction parse(const std::string& text);
    std::string to_string() const;

    int size() const { return static_cast<int>(vals_.size()) - 1; }
    const ExtNat& at(Vertex v) const;
    void set(Vertex v, ExtNat val);
    bool is_root(Vertex v) const { return at(v).infinite; }
    std::vector<Vertex> roots() const;
    int root_count() const { return static_cast<int>(roots().size()); }
    long finite_sum() const;

    friend bool operator==(const VertexFunction&, const VertexFunction&) = default;
    friend bool operator<(const VertexFunction& a, const VertexFunction& b);

private:
    std::vector<ExtNat> vals_;  // index 0 unused
};

/// Number of edges {v,w} of g with w outside U; v must belong to U.
int outdeg(const Graph& g, const std::vector<Vertex>& U, Vertex v);
/// Directed version: arcs v -> w with w outside U, counted with multiplicity.
int outdeg(const Digraph& d, const std::vector<Vertex>& U, Vertex v);

/// Exhaustive check of the defining condition over all 2^n - 1 nonempty
/// subsets U: either min(U) is a root of f, or U has a well-behaved vertex
/// (some i in U with 0 <= f(i) < outdeg_U(i)).
bool is_multiparking_subsets(const Graph& g, const VertexFunction& f);
bool is_multiparking_subsets(const Digraph& d, const VertexFunction& f);

struct ThrowOutStep {
    Vertex v;
    bool root_case;       // condition (A): v = min of the residual set, f(v) infinite
    int outdeg_witness;   // condition (B): outdeg of v in the residual set
};

struct BurnResult {
    bool ok;
    std::vector<ThrowOutStep> order;  // full throw-out order when ok
    std::vector<Vertex> residual;     // the stuck set when !ok
};

/// Greedy burning certificate: repeatedly throw out the smallest-index
/// well-behaved vertex of the residual set, else the minimal residual vertex
/// when it is a root. Succeeds exactly when f is a multiparking function.
BurnResult is_multiparking_burning(const Graph& g, const VertexFunction& f);
BurnResult is_multiparking_burning(const Digraph& d, const VertexFunction& f);

inline bool is_multiparking(const Graph& g, const VertexFunction& f) {
    return is_multiparking_burning(g, f).ok;
}
inline bool is_multiparking(const Digraph& d, const VertexFunction& f) {
    return is_multiparking_burning(d, f).ok;
}

/// Record of a root v: the number of neighbors of v thrown out before v in
/// the greedy burning order. Requires f valid and v a root.
int record(const Graph& g, const VertexFunction& f, Vertex v);
/// Independent route: min over subsets U with min(U) = v and no well-behaved
/// vertex, of outdeg_U(v).
int record_bruteforce(const Graph& g, const VertexFunction& f, Vertex v);
/// Total root record Rec(f) = sum of record(v) over roots of f.
int rec_total(const Graph& g, const VertexFunction& f);

/// Reversed sum |E| - n + r(f) - Rec(f) - sum of finite values.
long rsum(const Graph& g, const VertexFunction& f);

}  // namespace multipark

#endif

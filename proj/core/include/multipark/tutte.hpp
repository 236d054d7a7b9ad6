#ifndef MULTIPARK_TUTTE_HPP
#define MULTIPARK_TUTTE_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "multipark/graph.hpp"
#include "multipark/orders.hpp"

namespace multipark {

/// Sparse bivariate polynomial with arbitrary-precision integer
/// coefficients. Exponents are signed so that intermediate Laurent terms
/// (x/y substitutions) can be carried exactly; final results are plain
/// polynomials.
class Polynomial {
public:
    using Exponents = std::pair<int, int>;  // (x power, y power)

    Polynomial() = default;
    static Polynomial constant(mpz_class c);
    static Polynomial monomial(int i, int j, mpz_class c = 1);
    static Polynomial x() { return monomial(1, 0); }
    static Polynomial y() { return monomial(0, 1); }

    const std::map<Exponents, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_negative_exponents() const;

    void add_term(int i, int j, const mpz_class& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(unsigned e) const;
    /// Substitutes x -> x + dx, y -> y + dy. Requires nonnegative exponents.
    Polynomial shift(int dx, int dy) const;
    mpq_class evaluate(const mpq_class& at_x, const mpq_class& at_y) const;

    std::string to_string() const;  // e.g. "x^2 + x + y"

private:
    std::map<Exponents, mpz_class> terms_;  // no zero coefficients stored
};

/// Deletion-contraction recursion, memoized on a relabeled edge-multiset key.
Polynomial tutte_dc(const Multigraph& g);
inline Polynomial tutte_dc(const Graph& g) { return tutte_dc(Multigraph::from_graph(g)); }

/// Spanning-tree sum of x^{ia(T)} y^{ea(T)} for a total edge order given as
/// a permutation of edge indices (rank of edge i = position of i). The
/// identity order is used when the permutation is empty.
Polynomial tutte_activities(const Graph& g, const std::vector<int>& edge_order = {});

/// Corank-nullity subset sweep, then the shift back to Tutte arguments.
Polynomial tutte_corank_nullity(const Graph& g, int max_edges = 20);

/// Spanning-forest sum over BFS external activity.
Polynomial tutte_bfs_forests(const Graph& g, int max_edges = 20);

/// Multiparking-function route: sum of x^{r(f)-1} y^{rsum(f)} over the image
/// of psi; independent of the choice rule.
Polynomial tutte_multiparking(const Graph& g, const ChoiceRule& gamma, int max_edges = 20);

}  // namespace multipark

#endif

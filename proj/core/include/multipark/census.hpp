#ifndef MULTIPARK_CENSUS_HPP
#define MULTIPARK_CENSUS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "multipark/enumerate.hpp"
#include "multipark/graph.hpp"
#include "multipark/orders.hpp"
#include "multipark/tutte.hpp"

namespace multipark {

/// Count of spanning subgraphs with t components and n-t+k edges, three ways,
/// plus the variant counting n-1+k edges (reported, never asserted).
struct GammaTk {
    mpz_class brute;          // subgraphs, t components, n-t+k edges
    mpz_class brute_printed;  // same but n-1+k edges
    mpz_class forest_sum;     // sum over t-tree forests of C(#active, k)
    mpz_class mpf_sum;        // sum over t-root functions of C(rsum, k)
};

GammaTk gamma_tk(const Graph& g, int t, int k, int max_edges = 20);

/// Sum of x^{c(D)} y^{#arcs} over all 4^{|E|} orientations-with-multiplicity
/// (each edge absent, one-way, or two-way); c(D) counts the trees of the
/// directed-search forest of D.
Polynomial subdigraph_census_bruteforce(const Graph& g, int max_state_edges = 10);
/// Closed form x y^{n-1} (1+y)^{|E|} t_G(1+x/y, 1+y), expanded exactly.
Polynomial subdigraph_census_closed_form(const Graph& g);

/// Sum of x^{c(K)} y^{|E(K)|} over all 5^{|E|} subtraffics; weak components,
/// edge grading Both=2, Undirected=1.
Polynomial subtraffic_census_bruteforce(const Graph& g, int max_state_edges = 9);
/// The closed-form right-hand side
/// x (y^2+2y)^{n-1} (1+2y)^{|E|-n+1} t_G(1 + x(1+2y)/(y(2+y)), (1+3y+y^2)/(1+2y))
/// at a rational point. Recorded for comparison; known to disagree with the
/// exhaustive census (see the factor check below).
mpq_class subtraffic_printed_rhs(const Graph& g, const mpq_class& x, const mpq_class& y);
/// The closed-form specialization 3^{|E|} t_G(2, 5/3).
mpq_class subtraffic_printed_corollary(const Graph& g);
/// Per-edge-class count at x = y = 1 with the corrected factor 2 for edges
/// neither in the forest nor active:
/// sum over forests F of 3^{|E(F)|} 5^{#active} 2^{|E|-|E(F)|-#active}.
/// Must equal 5^{|E|}.
mpz_class subtraffic_factor_check(const Graph& g, int max_edges = 20);

/// Number of non-forest edges {u,v} of g with v a descendant of u in F such
/// that the child of u on the u-v path exceeds v.
int ginv(const RootedForest& F, const Graph& g);
/// Sum of y^{ginv(F)} over spanning forests with k trees.
Polynomial ginv_distribution(const Graph& g, int k, int max_edges = 20);
/// Sum of y^{rsum(f)} over multiparking functions with k roots.
Polynomial rsum_distribution(const Graph& g, int k, int max_edges = 20);

/// Sum of x^{alpha(b)} y^{C(n,2) - sum b} over classical parking functions of
/// length n; equals the Tutte polynomial of the complete graph on n+1 vertices.
Polynomial opf_polynomial(int n);

struct CensusCheck {
    std::string name;
    std::string left;
    std::string right;
    bool match = false;
    bool known_erratum = false;   // known closed-form discrepancy, recorded
    bool informational = false;   // reported but never a failure
};

struct CensusReport {
    std::vector<CensusCheck> checks;

    /// True when every hard check matches; known-erratum mismatches are
    /// tolerated exactly when expect_erratum is set.
    bool all_ok(bool expect_erratum) const;
    int mismatch_count(bool expect_erratum) const;
    std::string format_table() const;
};

struct VerifyOptions {
    int max_edges = 20;        // 2^E sweeps (forests, subgraphs)
    int max_state_edges = 9;   // 4^E / 5^E sweeps; larger inputs skip those checks
};

/// Runs every identity check against one graph and collects the verdicts.
CensusReport verify_all(const Graph& g, const VerifyOptions& opts = {});

}  // namespace multipark

#endif

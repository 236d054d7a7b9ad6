#include "multipark/tutte.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "multipark/activity.hpp"
#include "multipark/bijection.hpp"
#include "multipark/enumerate.hpp"
#include "multipark/parking.hpp"

namespace multipark {

// --------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(mpz_class c) {
    Polynomial p;
    p.add_term(0, 0, c);
    return p;
}

Polynomial Polynomial::monomial(int i, int j, mpz_class c) {
    Polynomial p;
    p.add_term(i, j, c);
    return p;
}

bool Polynomial::has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
        if (e.first < 0 || e.second < 0) return true;
    return false;
}

void Polynomial::add_term(int i, int j, const mpz_class& c) {
    if (c == 0) return;
    auto key = Exponents{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    Polynomial prod;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            prod.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    terms_ = std::move(prod.terms_);
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

namespace {

mpz_class ipow(long base, unsigned e) {
    mpz_class r;
    mpz_class b = base;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

mpz_class binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpq_class qpow(const mpq_class& base, int e) {
    if (e == 0) return 1;
    bool inv = e < 0;
    if (inv && base == 0) throw std::domain_error("evaluate: division by zero");
    unsigned ue = inv ? -static_cast<unsigned>(e) : e;
    mpq_class r = 1;
    mpq_class b = base;
    while (ue) {
        if (ue & 1) r *= b;
        b *= b;
        ue >>= 1;
    }
    if (inv) r = 1 / r;
    return r;
}

}  // namespace

Polynomial Polynomial::shift(int dx, int dy) const {
    if (has_negative_exponents())
        throw std::logic_error("shift: polynomial has negative exponents");
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        auto [i, j] = e;
        for (int a = 0; a <= i; ++a)
            for (int b = 0; b <= j; ++b)
                out.add_term(a, b, c * binom(i, a) * ipow(dx, i - a) * binom(j, b) * ipow(dy, j - b));
    }
    return out;
}

mpq_class Polynomial::evaluate(const mpq_class& at_x, const mpq_class& at_y) const {
    mpq_class sum = 0;
    for (const auto& [e, c] : terms_) sum += mpq_class(c) * qpow(at_x, e.first) * qpow(at_y, e.second);
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = e.first != 0 || e.second != 0;
        if (a != 1 || !has_var) out << a.get_str();
        auto put = [&](const char* var, int p) {
            if (p == 0) return;
            out << var;
            if (p != 1) out << "^" << p;
        };
        if (e.first != 0 && (a != 1)) out << " ";
        put("x", e.first);
        if (e.first != 0 && e.second != 0) out << " ";
        else if (e.first == 0 && e.second != 0 && a != 1) out << " ";
        put("y", e.second);
    }
    return out.str();
}

// ------------------------------------------------------ deletion-contraction

namespace {

std::string dc_key(const Multigraph& g) {
    std::vector<std::pair<Vertex, Vertex>> es;
    es.reserve(g.edges().size());
    for (const auto& e : g.edges()) es.emplace_back(e.u, e.v);
    std::sort(es.begin(), es.end());
    std::ostringstream out;
    out << g.vertex_count();
    for (auto [u, v] : es) out << "," << u << "-" << v;
    return out.str();
}

Polynomial tutte_dc_memo(const Multigraph& g, std::unordered_map<std::string, Polynomial>& memo) {
    if (g.edge_count() == 0) return Polynomial::constant(1);
    std::string key = dc_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const auto& e = g.edges().front();
    Polynomial result;
    if (g.is_loop(e.id)) {
        result = Polynomial::y() * tutte_dc_memo(g.delete_edge(e.id), memo);
    } else if (g.is_bridge(e.id)) {
        result = Polynomial::x() * tutte_dc_memo(g.contract_edge(e.id), memo);
    } else {
        result = tutte_dc_memo(g.delete_edge(e.id), memo) +
                 tutte_dc_memo(g.contract_edge(e.id), memo);
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

Polynomial tutte_dc(const Multigraph& g) {
    std::unordered_map<std::string, Polynomial> memo;
    return tutte_dc_memo(g, memo);
}

// ----------------------------------------------------------------- activities

Polynomial tutte_activities(const Graph& g, const std::vector<int>& edge_order) {
    int n = g.vertex_count();
    int m = g.edge_count();
    int cg = g.components();
    std::vector<int> rank(m);
    if (edge_order.empty()) {
        for (int i = 0; i < m; ++i) rank[i] = i;
    } else {
        if (static_cast<int>(edge_order.size()) != m)
            throw std::invalid_argument("tutte_activities: edge order size mismatch");
        for (int pos = 0; pos < m; ++pos) {
            int e = edge_order[pos];
            if (e < 0 || e >= m) throw std::invalid_argument("tutte_activities: bad edge index");
            rank[e] = pos;
        }
    }

    Polynomial sum;
    for (const auto& tree : spanning_forests(g, 25)) {
        if (tree.edge_count() != n - cg) continue;  // maximal forests only
        std::vector<char> in_tree(m, 0);
        for (const auto& te : tree.edges()) in_tree[g.edge_index(te.u, te.v)] = 1;

        int internal = 0, external = 0;
        for (int e = 0; e < m; ++e) {
            Edge ed = g.edges()[e];
            if (in_tree[e]) {
                // cut: components of the tree minus e; active iff e has the
                // largest rank among the crossing edges of g
                std::vector<Edge> rest;
                for (const auto& te : tree.edges())
                    if (!(te == ed)) rest.push_back(te);
                std::vector<int> comp = [&] {
                    std::vector<int> c(n + 1, 0);
                    std::vector<std::vector<Vertex>> adj(n + 1);
                    for (const auto& re : rest) {
                        adj[re.u].push_back(re.v);
                        adj[re.v].push_back(re.u);
                    }
                    int label = 0;
                    for (Vertex s = 1; s <= n; ++s) {
                        if (c[s]) continue;
                        ++label;
                        std::queue<Vertex> q;
                        q.push(s);
                        c[s] = label;
                        while (!q.empty()) {
                            Vertex v = q.front();
                            q.pop();
                            for (Vertex w : adj[v])
                                if (!c[w]) {
                                    c[w] = label;
                                    q.push(w);
                                }
                        }
                    }
                    return c;
                }();
                bool active = true;
                for (int o = 0; o < m; ++o) {
                    Edge oe = g.edges()[o];
                    if (comp[oe.u] != comp[oe.v] && rank[o] > rank[e]) {
                        active = false;
                        break;
                    }
                }
                if (active) ++internal;
            } else {
                // unique tree path between the endpoints; active iff e has the
                // largest rank on the resulting cycle
                std::vector<Vertex> par(n + 1, 0);
                std::vector<char> seen(n + 1, 0);
                std::queue<Vertex> q;
                q.push(ed.u);
                seen[ed.u] = 1;
                while (!q.empty()) {
                    Vertex v = q.front();
                    q.pop();
                    for (const auto& te : tree.edges()) {
                        Vertex w = 0;
                        if (te.u == v) w = te.v;
                        else if (te.v == v) w = te.u;
                        if (w && !seen[w]) {
                            seen[w] = 1;
                            par[w] = v;
                            q.push(w);
                        }
                    }
                }
                bool active = true;
                for (Vertex v = ed.v; v != ed.u && active; v = par[v]) {
                    int o = g.edge_index(std::min(v, par[v]), std::max(v, par[v]));
                    if (rank[o] > rank[e]) active = false;
                }
                if (active) ++external;
            }
        }
        sum.add_term(internal, external, 1);
    }
    return sum;
}

// ------------------------------------------------------------- corank-nullity

Polynomial tutte_corank_nullity(const Graph& g, int max_edges) {
    int m = g.edge_count();
    if (m > max_edges)
        throw std::invalid_argument("tutte_corank_nullity: edge count exceeds the cap");
    int n = g.vertex_count();
    int cg = g.components();
    Polynomial sum;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<Edge> sub;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) sub.push_back(g.edges()[i]);
        int c = count_components(n, sub);
        int corank = c - cg;
        int nullity = static_cast<int>(sub.size()) - n + c;
        sum.add_term(corank, nullity, 1);
    }
    return sum.shift(-1, -1);
}

// ------------------------------------------------------------ forest routes

Polynomial tutte_bfs_forests(const Graph& g, int max_edges) {
    int cg = g.components();
    Polynomial sum;
    for (const auto& f : spanning_forests(g, max_edges))
        sum.add_term(f.tree_count() - cg, static_cast<int>(bfs_external(g, f).size()), 1);
    return sum.shift(-1, 0);
}

Polynomial tutte_multiparking(const Graph& g, const ChoiceRule& gamma, int max_edges) {
    int cg = g.components();
    Polynomial sum;
    for (const auto& forest : spanning_forests(g, max_edges)) {
        VertexFunction f = psi(g, gamma, forest).f;
        sum.add_term(f.root_count() - cg, static_cast<int>(rsum(g, f)), 1);
    }
    return sum.shift(-1, 0);
}

}  // namespace multipark

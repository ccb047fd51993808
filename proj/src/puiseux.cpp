#include "newtonsing/curve.hpp"
#include "newtonsing/errors.hpp"
#include "newtonsing/puiseux_tree.hpp"

#include <algorithm>
#include <map>

namespace newtonsing {

namespace detail {

std::vector<PolyEdge> polygon_below(const MultiPoly& F, int i_top, int r, int& bottom_j, int& bottom_i)
{
    std::map<int, int> mi;  // j -> min i
    for (const auto& [e, c] : F.terms()) {
        if (e[1] > r) continue;
        auto it = mi.find(e[1]);
        if (it == mi.end() || e[0] < it->second) mi[e[1]] = e[0];
    }
    auto top = mi.find(r);
    if (top == mi.end() || top->second != i_top) throw DomainError("Newton polygon has no vertex at the expected height");
    bottom_j = mi.begin()->first;
    bottom_i = mi.begin()->second;

    std::vector<PolyEdge> edges;
    int ci = i_top, cj = r;
    while (cj > bottom_j) {
        int bi = -1, bj = -1;
        for (const auto& [j, i] : mi) {
            if (j >= cj) break;
            // slope (i - ci)/(cj - j); keep the smallest, ties to the lowest j
            if (bj < 0 || static_cast<long long>(i - ci) * (cj - bj) < static_cast<long long>(bi - ci) * (cj - j)) {
                bi = i;
                bj = j;
            }
        }
        PolyEdge ed;
        ed.i_top = ci;
        ed.j_top = cj;
        ed.i_bot = bi;
        ed.j_bot = bj;
        int di = bi - ci, dj = cj - bj;
        int g = static_cast<int>(gcd64(di, dj));
        ed.m = di / g;
        ed.q = dj / g;
        std::vector<Rational> c(g + 1, Rational(0));
        for (int k = 0; k <= g; ++k) c[k] = F.coeff({bi - k * ed.m, bj + k * ed.q});
        ed.phi = UPoly(c);
        edges.push_back(std::move(ed));
        ci = bi;
        cj = bj;
    }
    return edges;
}

MultiPoly duval_substitute(const MultiPoly& F, const PolyEdge& ed, const Rational& xi, int keep_j)
{
    int m = ed.m, q = ed.q;
    // u*q - v*m = 1 with u, v >= 0
    int u = 1;
    while ((static_cast<long long>(u) * q - 1) % m != 0) ++u;
    int v = static_cast<int>((static_cast<long long>(u) * q - 1) / m);
    long long L = static_cast<long long>(q) * ed.i_bot + static_cast<long long>(m) * ed.j_bot;
    Rational xu = pow(xi, u), xv = pow(xi, v);

    MultiPoly out(2);
    std::vector<std::vector<Rational>> binom(1, std::vector<Rational>{Rational(1)});
    for (const auto& [e, a] : F.terms()) {
        int i = e[0], j = e[1];
        long long t = static_cast<long long>(q) * i + static_cast<long long>(m) * j - L;
        if (t < 0) throw DomainError("point below the Newton polygon");
        while (static_cast<int>(binom.size()) <= j) {
            const auto& prev = binom.back();
            std::vector<Rational> nx(prev.size() + 1, Rational(0));
            for (std::size_t k = 0; k < prev.size(); ++k) {
                nx[k] += prev[k];
                nx[k + 1] += prev[k];
            }
            binom.push_back(nx);
        }
        Rational base = a * pow(xv, i);
        for (int k = 0; k <= std::min(j, keep_j); ++k)
            out.add_term({static_cast<int>(t), k}, base * binom[j][k] * pow(xu, j - k));
    }
    return out;
}

namespace {

struct TreeBuilder {
    int component;
    int next_node = 0;
    std::vector<Branch> out;

    void leaf(std::vector<PuiseuxStep> path, int mult, bool exact)
    {
        Branch b;
        b.component = component;
        b.multiplicity = mult;
        b.exact_leaf = exact;
        b.path = std::move(path);
        out.push_back(std::move(b));
    }

    void grow(const MultiPoly& F, int i_top, int r, std::vector<PuiseuxStep> prefix, Rational W, Rational E, int depth)
    {
        if (depth > 200) throw DomainError("Newton-Puiseux recursion too deep (non-reduced input?)");
        int node = next_node++;
        int Q = static_cast<int>(to_ll(Rational(1) / E));
        int bj = 0, bi = 0;
        auto edges = polygon_below(F, i_top, r, bj, bi);
        if (bj >= 2) throw DomainError("non-reduced curve (repeated branch)");
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            const auto& ed = edges[e];
            int rid = 0;
            PuiseuxStep st;
            st.node = node;
            st.edge = e;
            st.m = ed.m;
            st.q = ed.q;
            st.W = W;
            st.E = E;
            UPoly rest = ed.phi;
            for (const auto& [xi, mult] : rational_roots(ed.phi)) {
                rest = rest / pow(UPoly::x() - UPoly(xi), mult);
                st.root = rid++;
                auto path = prefix;
                path.push_back(st);
                if (mult == 1) {
                    leaf(std::move(path), Q * ed.q, false);
                } else {
                    MultiPoly F1 = duval_substitute(F, ed, xi, mult);
                    Rational E1 = E / Rational(ed.q);
                    grow(F1, 0, mult, std::move(path), W + Rational(ed.m) * E1, E1, depth + 1);
                }
            }
            for (const auto& [fac, mult] : squarefree_decomposition(rest)) {
                if (mult > 1)
                    throw UnsupportedError("repeated irrational root " + fac.str("T") +
                                           " of an edge polynomial (needs an algebraic extension)");
                for (int k = 0; k < fac.degree(); ++k) {
                    st.root = rid++;
                    auto path = prefix;
                    path.push_back(st);
                    leaf(std::move(path), Q * ed.q, false);
                }
            }
        }
        if (bj == 1) {
            PuiseuxStep st;
            st.node = node;
            st.edge = -1;
            st.m = 0;
            st.q = 1;
            st.W = W;
            st.E = E;
            auto path = prefix;
            path.push_back(st);
            leaf(std::move(path), Q, true);
        }
    }
};

}  // namespace

std::vector<Branch> puiseux_branches(const MultiPoly& F, int p, int p_alpha, int component)
{
    TreeBuilder tb;
    tb.component = component;
    tb.grow(F, p - p_alpha, p_alpha, {}, Rational(0), Rational(1), 0);
    for (auto& b : tb.out) {
        Rational Q = 1, S = 0;
        for (const auto& st : b.path) {
            if (st.edge < 0) continue;
            Rational Qn = Q * st.q;
            if (st.q > 1) {
                ++b.characteristic_pairs;
                b.characteristic_exponents.push_back(st.contact());
                S += Rational(b.multiplicity) * b.multiplicity * (st.q - 1) / Qn * st.contact();
            }
            Q = Qn;
        }
        b.gnnd = b.characteristic_pairs <= 1;
        if (b.characteristic_pairs == 1) {
            Rational beta = b.characteristic_exponents[0] * b.multiplicity;
            b.puiseux_pair = std::make_pair(b.multiplicity, static_cast<int>(to_ll(beta)));
        }
        b.delta = to_ll((S - b.multiplicity + 1) / 2);
    }
    return tb.out;
}

long long contact_intersection(const Branch& A, const Branch& B)
{
    std::size_t k = 0;
    while (k < A.path.size() && k < B.path.size() && A.path[k].edge == B.path[k].edge &&
           A.path[k].root == B.path[k].root)
        ++k;
    if (k == A.path.size() || k == B.path.size()) throw DomainError("branches share a full Puiseux path");
    const auto& sa = A.path[k];
    const auto& sb = B.path[k];
    Rational s;
    if (sa.edge != sb.edge) {
        if (sa.edge < 0)
            s = sb.slope();
        else if (sb.edge < 0)
            s = sa.slope();
        else
            s = std::min(sa.slope(), sb.slope());
    } else {
        s = sa.slope();
    }
    Rational sum = 0, Q = 1;
    Rational NB = B.multiplicity;
    for (std::size_t j = 0; j < k; ++j) {
        const auto& st = A.path[j];
        Rational Qn = Q * st.q;
        if (st.q > 1) sum += NB * (st.q - 1) / Qn * st.contact();
        Q = Qn;
    }
    sum += NB / Q * (sa.W + s * sa.E);
    return to_ll(sum * A.multiplicity);
}

}  // namespace detail

}  // namespace newtonsing

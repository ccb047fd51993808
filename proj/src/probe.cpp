#include "newtonsing/errors.hpp"
#include "newtonsing/nondeg.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <random>

namespace newtonsing {

namespace {

// exponents of total degree d in n variables, lex descending
void monomials_of_degree(int n, int d, Exponent& cur, int i, std::vector<Exponent>& out)
{
    if (i == n - 1) {
        cur[i] = d;
        out.push_back(cur);
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur[i] = k;
        monomials_of_degree(n, d - k, cur, i + 1, out);
    }
}

std::vector<Exponent> monomials_up_to(int n, int lo, int hi)
{
    std::vector<Exponent> out;
    Exponent cur(n, 0);
    for (int d = lo; d <= hi; ++d) monomials_of_degree(n, d, cur, 0, out);
    return out;
}

int max_degree(const MultiPoly& f) { return f.total_degree(); }

CoordinateChange random_change(int n, int degree_bound, int trunc, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> lin(-3, 3), coef(-2, 2), count(0, 3);
    CoordinateChange phi = CoordinateChange::identity(n, trunc);
    do {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) phi.linear(i, j) = lin(rng);
    } while (phi.linear.determinant() == 0);
    if (degree_bound >= 2) {
        auto pool = monomials_up_to(n, 2, degree_bound);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int i = 0; i < n; ++i) {
            MultiPoly h(n);
            for (int t = count(rng); t > 0; --t) h.add_term(pool[pick(rng)], coef(rng));
            phi.higher.push_back(h);
        }
    }
    return phi;
}

}  // namespace

ProbeResult diagram_stability_probe(const MultiPoly& f, const std::optional<MultiPoly>& g, int degree_bound,
                                    int samples, std::uint64_t seed)
{
    int n = f.nvars();
    if (g && g->nvars() != n) throw DomainError("dimension mismatch");
    if (samples < 1) throw DomainError("samples must be >= 1");
    if (degree_bound < 1) throw DomainError("degree bound must be >= 1");

    NewtonDiagram base_f = newton_diagram(f);
    std::optional<NewtonDiagram> base_g;
    if (g) base_g = newton_diagram(*g);

    int trunc = 2 * std::max(max_degree(f), g ? max_degree(*g) : 0);
    if (is_commode(base_f)) trunc = std::max<int>(trunc, static_cast<int>(determinacy_bound(base_f)) + 1);

    ProbeResult res;
    res.truncation_degree = trunc;

    auto differs = [&](const CoordinateChange& phi, const std::string& origin) {
        ++res.changes_tried;
        NewtonDiagram df = newton_diagram(apply_change(f, phi));
        NewtonDiagram dg = g ? newton_diagram(apply_change(*g, phi)) : base_f;
        if (df == dg) return false;
        res.stable_equal = false;
        res.witness = phi;
        res.witness_origin = origin;
        res.diagram_f = df;
        res.diagram_g = dg;
        return true;
    };

    // elementary shears x_i -> x_i + c*m
    auto pool = monomials_up_to(n, 1, degree_bound);
    for (const auto& m : pool) {
        for (int i = 0; i < n; ++i) {
            if (total_degree(m) == 1 && m[i] == 1) continue;
            for (int c : {1, -1, 2, -2}) {
                CoordinateChange phi = CoordinateChange::identity(n, trunc);
                if (total_degree(m) == 1) {
                    int j = static_cast<int>(std::find(m.begin(), m.end(), 1) - m.begin());
                    phi.linear(i, j) = c;
                } else {
                    phi.higher.assign(n, MultiPoly(n));
                    phi.higher[i] = MultiPoly::monomial(m, c);
                }
                if (differs(phi, "sweep")) return res;
            }
        }
    }

    for (int s = 0; s < samples; ++s) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(s)};
        std::mt19937_64 rng(seq);
        if (differs(random_change(n, degree_bound, trunc, rng), "sample " + std::to_string(s))) return res;
    }
    return res;
}

}  // namespace newtonsing

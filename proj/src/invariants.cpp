#include "newtonsing/zeta.hpp"

#include "newtonsing/errors.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace newtonsing {

CycloProduct CycloProduct::factor(long long m, long long e)
{
    CycloProduct c;
    c.add(m, e);
    return c;
}

void CycloProduct::add(long long m, long long e)
{
    if (m < 1) throw DomainError("cyclotomic factor needs m >= 1");
    if (e == 0) return;
    long long& v = f_[m];
    v += e;
    if (v == 0) f_.erase(m);
}

long long CycloProduct::exponent(long long m) const
{
    auto it = f_.find(m);
    return it == f_.end() ? 0 : it->second;
}

long long CycloProduct::degree() const
{
    long long d = 0;
    for (const auto& [m, e] : f_) d += m * e;
    return d;
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& o)
{
    for (const auto& [m, e] : o.f_) add(m, e);
    return *this;
}

CycloProduct& CycloProduct::operator/=(const CycloProduct& o)
{
    for (const auto& [m, e] : o.f_) add(m, -e);
    return *this;
}

CycloProduct CycloProduct::pow(long long e) const
{
    CycloProduct c;
    for (const auto& [m, x] : f_) c.add(m, x * e);
    return c;
}

std::string CycloProduct::str() const
{
    if (f_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, e] : f_) {
        if (!first) os << " * ";
        first = false;
        os << "(1-z^" << m << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

Rational newton_number(const NewtonDiagram& g)
{
    auto vol = lattice_volumes(g);
    Rational nu = 0, fact = 1;
    for (int j = 0; j <= g.n; ++j) {
        if (j) fact *= j;
        Rational t = fact * vol[j];
        nu += ((g.n - j) % 2 == 0) ? t : Rational(-t);
    }
    return nu;
}

MilnorResult kouchnirenko_mu(const NewtonDiagram& g, bool nnd_certified)
{
    MilnorResult r;
    r.value = to_ll(newton_number(g));
    r.route = "Kouchnirenko";
    r.is_newton_number = !nnd_certified;
    return r;
}

long long directional_mu(int n, long long p, const std::vector<long long>& mu_alpha)
{
    if (mu_alpha.empty()) throw DomainError("need at least one component");
    long long k = static_cast<long long>(mu_alpha.size());
    long long s = std::accumulate(mu_alpha.begin(), mu_alpha.end(), 0LL);
    long long pn = 1;
    for (int i = 0; i < n; ++i) pn *= p - 1;
    return s - (k - 1) * pn;
}

long long directional_mu(const DirectionalInput& in)
{
    if (static_cast<int>(in.components.size()) != in.k) throw DomainError("k does not match the component list");
    std::vector<long long> mus;
    for (const auto& c : in.components) {
        if (c.mu)
            mus.push_back(*c.mu);
        else if (c.zeta)
            mus.push_back(zeta_mu_consistency(*c.zeta, in.n));
        else
            throw DomainError("component lacks mu or zeta");
    }
    return directional_mu(in.n, in.p, mus);
}

long long yomdin_mu(int n, long long p, const std::vector<std::pair<long long, long long>>& points)
{
    long long mu = 1;
    for (int i = 0; i < n; ++i) mu *= p - 1;
    for (const auto& [q, m] : points) {
        if (q < 1 || m < 1) throw DomainError("need q >= 1 and mu_tc >= 1");
        mu += q * m;
    }
    return mu;
}

CycloProduct acampo_zeta(const std::vector<std::pair<long long, long long>>& strata)
{
    CycloProduct z;
    std::set<long long> seen;
    for (const auto& [m, chi] : strata) {
        if (!seen.insert(m).second) throw DomainError("duplicate multiplicity " + std::to_string(m));
        z *= CycloProduct::factor(m, chi);
    }
    return z;
}

CycloProduct curve_diagram_zeta(const NewtonDiagram& g)
{
    if (g.n != 2) throw DomainError("edge zeta needs a plane diagram");
    CycloProduct z;
    for (const auto& v : g.vertices) {
        if (v[0] == 0) z *= CycloProduct::factor(v[1]);
        if (v[1] == 0) z *= CycloProduct::factor(v[0]);
    }
    for (int k : g.compact_facet_ids()) {
        const auto& fc = g.facets[k];
        const auto& a = g.vertices[fc.vertex_ids.front()];
        const auto& b = g.vertices[fc.vertex_ids.back()];
        long long len = gcd64(std::llabs(a[0] - b[0]), std::llabs(a[1] - b[1]));
        z /= CycloProduct::factor(fc.level, len);
    }
    return z;
}

CycloProduct curve_zeta(const CurveModel& model, std::string* route)
{
    bool closed = true;
    for (const auto& c : model.components) {
        if (c.p_alpha == 1) continue;
        if (!c.single_pair || c.single_pair->first != c.p_alpha) closed = false;
    }
    long long p = model.p;
    long long k = static_cast<long long>(model.components.size());
    if (closed) {
        CycloProduct z = CycloProduct::factor(p, 2 - k);
        for (const auto& c : model.components) {
            if (c.p_alpha == 1) continue;
            long long pa = c.single_pair->first, qa = c.single_pair->second;
            z *= CycloProduct::factor(p + qa - pa);
            z /= CycloProduct::factor(pa * (p + qa - pa));
        }
        if (route) *route = "closed curve formula";
        return z;
    }
    std::vector<CycloProduct> parts;
    for (const auto& g : directional_approximation_diagrams(model)) parts.push_back(curve_diagram_zeta(g));
    if (route) *route = "edge formula over directional diagrams";
    return directional_zeta(2, p, parts);
}

long long chi_smooth_hypersurface(long long p, int n)
{
    if (p < 1 || n < 2) throw DomainError("need p >= 1, n >= 2");
    Integer t = 1;
    for (int i = 0; i < n; ++i) t *= Integer(1 - p);
    t -= 1;
    if (t % p != 0) throw DomainError("non-integral Euler characteristic");
    return to_ll(Integer(t / p)) + n;
}

CycloProduct directional_zeta(int n, long long p, const std::vector<CycloProduct>& zeta_alpha)
{
    if (zeta_alpha.empty()) throw DomainError("need at least one component");
    long long k = static_cast<long long>(zeta_alpha.size());
    CycloProduct z;
    for (const auto& a : zeta_alpha) z *= a;
    long long e = (k - 1) * (n - chi_smooth_hypersurface(p, n));
    return z / CycloProduct::factor(p, e);
}

CycloProduct directional_zeta(const DirectionalInput& in)
{
    if (static_cast<int>(in.components.size()) != in.k) throw DomainError("k does not match the component list");
    std::vector<CycloProduct> zs;
    for (const auto& c : in.components) {
        if (!c.zeta) throw DomainError("component lacks zeta");
        zs.push_back(*c.zeta);
    }
    return directional_zeta(in.n, in.p, zs);
}

CycloProduct special_surface_zeta(long long p, long long p_a, long long q_a)
{
    if (p < 2 || p_a < 2 || p_a > p || q_a < 1) throw DomainError("need p >= 2, 2 <= p_a <= p, q_a >= 1");
    CycloProduct z = CycloProduct::factor(p, p * p - 3 * p + 3 - (p_a - 1) * (p_a - 1));
    z *= CycloProduct::factor(p_a * (q_a + p), p_a - 2);
    z *= CycloProduct::factor(q_a + p);
    return z;
}

long long zeta_mu_consistency(const CycloProduct& zeta, int n)
{
    long long d = zeta.degree() - 1;
    return (n % 2 == 1) ? d : -d;
}

MilnorResult curve_mu_directional(const CurveModel& model)
{
    std::vector<long long> mus;
    for (const auto& g : directional_approximation_diagrams(model))
        mus.push_back(to_ll(newton_number(is_commode(g) ? g : commode_closure(g))));
    MilnorResult r;
    r.value = directional_mu(2, model.p, mus);
    r.route = "Kouchnirenko on directional approximations, sum mu_alpha - (k-1)(p-1)^n";
    r.is_newton_number = false;
    return r;
}

}  // namespace newtonsing

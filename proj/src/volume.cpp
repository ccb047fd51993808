#include "newtonsing/diagram.hpp"
#include "newtonsing/errors.hpp"
#include "newtonsing/geometry_detail.hpp"

#include <algorithm>
#include <map>

namespace newtonsing {

namespace {

using Simplex = std::vector<int>;

class Triangulator {
public:
    explicit Triangulator(const NewtonDiagram& g) : g_(g), faces_(detail::face_sets(g)) {}

    // pulling triangulation: cone from the smallest vertex over the facets of F missing it
    const std::vector<Simplex>& run(const std::vector<int>& V, int dim)
    {
        auto it = memo_.find(V);
        if (it != memo_.end()) return it->second;
        std::vector<Simplex> out;
        if (dim == 0) {
            out.push_back(V);
        } else {
            int v0 = V.front();
            for (const auto& h : faces_) {
                if (h.dim != dim - 1) continue;
                if (!std::includes(V.begin(), V.end(), h.vertex_ids.begin(), h.vertex_ids.end())) continue;
                if (std::binary_search(h.vertex_ids.begin(), h.vertex_ids.end(), v0)) continue;
                for (Simplex s : run(h.vertex_ids, dim - 1)) {
                    s.push_back(v0);
                    out.push_back(std::move(s));
                }
            }
        }
        return memo_.emplace(V, std::move(out)).first->second;
    }

private:
    const NewtonDiagram& g_;
    std::vector<detail::FaceSet> faces_;
    std::map<std::vector<int>, std::vector<Simplex>> memo_;
};

Rational factorial(int k)
{
    Rational r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace

Rational under_volume(const NewtonDiagram& g)
{
    if (!is_commode(g)) throw DomainError("volume needs a commode diagram");
    if (g.n == 1) return Rational(g.vertices.at(0)[0]);
    Triangulator tri(g);
    Rational total = 0;
    for (int k : g.compact_facet_ids()) {
        const auto& fc = g.facets[k];
        for (const auto& s : tri.run(fc.vertex_ids, g.n - 1)) {
            std::vector<std::vector<std::int64_t>> m;
            for (int v : s) m.emplace_back(g.vertices[v].begin(), g.vertices[v].end());
            std::int64_t d = detail::det_int(m);
            total += Rational(static_cast<long long>(d < 0 ? -d : d));
        }
    }
    return total;
}

std::vector<Rational> lattice_volumes(const NewtonDiagram& g)
{
    if (!is_commode(g)) throw DomainError("lattice volumes need a commode diagram");
    int n = g.n;
    std::vector<Rational> vol(n + 1, Rational(0));
    vol[0] = 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> axes;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) axes.push_back(i);
        int j = static_cast<int>(axes.size());
        if (j == n) {
            vol[n] += under_volume(g) / factorial(n);
            continue;
        }
        std::vector<Exponent> pts;
        for (const auto& v : g.vertices) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (!(mask & (1u << i)) && v[i] != 0) inside = false;
            if (!inside) continue;
            Exponent p;
            for (int a : axes) p.push_back(v[a]);
            pts.push_back(p);
        }
        vol[j] += under_volume(diagram_of_points(j, pts)) / factorial(j);
    }
    return vol;
}

}  // namespace newtonsing

#include "newtonsing/diagram.hpp"

#include "newtonsing/errors.hpp"
#include "newtonsing/geometry_detail.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace newtonsing {

bool Facet::compact() const
{
    return std::all_of(normal.begin(), normal.end(), [](std::int64_t w) { return w > 0; });
}

std::int64_t dot(const IVec& a, const Exponent& e)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * e[i];
    return s;
}

std::vector<int> NewtonDiagram::compact_facet_ids() const
{
    std::vector<int> ids;
    for (std::size_t i = 0; i < facets.size(); ++i)
        if (facets[i].compact()) ids.push_back(static_cast<int>(i));
    return ids;
}

namespace detail {

std::int64_t det_int(std::vector<std::vector<std::int64_t>> m)
{
    int N = static_cast<int>(m.size());
    if (N == 0) return 1;
    std::vector<std::vector<__int128>> a(N, std::vector<__int128>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) a[i][j] = m[i][j];
    bool neg = false;
    __int128 prev = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (a[k][k] == 0) {
            int r = k + 1;
            while (r < N && a[r][k] == 0) ++r;
            if (r == N) return 0;
            std::swap(a[k], a[r]);
            neg = !neg;
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    __int128 d = neg ? -a[N - 1][N - 1] : a[N - 1][N - 1];
    return static_cast<std::int64_t>(d);
}

// Integer vector orthogonal to n-1 given vectors (cofactor expansion); zero if dependent.
IVec normal_of(const std::vector<IVec>& dirs, int n)
{
    IVec w(n);
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<std::int64_t>> m;
        for (const auto& d : dirs) {
            std::vector<std::int64_t> row;
            for (int j = 0; j < n; ++j)
                if (j != i) row.push_back(d[j]);
            m.push_back(row);
        }
        std::int64_t c = det_int(m);
        w[i] = (i % 2 == 0) ? c : -c;
    }
    return w;
}

int rank_of(const std::vector<IVec>& rows, int n)
{
    std::vector<std::vector<Rational>> a;
    for (const auto& r : rows) {
        std::vector<Rational> v;
        for (auto x : r) v.emplace_back(static_cast<long long>(x));
        a.push_back(v);
    }
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(a.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(a.size()); ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int i = 0; i < static_cast<int>(a.size()); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rational f = a[i][col] / a[rank][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

int affine_rank(const std::vector<Exponent>& pts)
{
    if (pts.empty()) return -1;
    int n = static_cast<int>(pts[0].size());
    std::vector<IVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        IVec d(n);
        for (int j = 0; j < n; ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(d);
    }
    return rank_of(diffs, n);
}

std::vector<FaceSet> face_sets(const NewtonDiagram& g)
{
    std::vector<const Facet*> all;
    for (const auto& f : g.facets) all.push_back(&f);
    for (const auto& f : g.boundary_facets) all.push_back(&f);

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    auto push = [&](std::vector<int> v) {
        if (v.empty()) return;
        if (seen.insert(v).second) queue.push_back(std::move(v));
    };
    for (const auto* f : all) push(f->vertex_ids);
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) push({v});
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> cur = queue[qi];
        for (const auto* f : all) {
            std::vector<int> inter;
            std::set_intersection(cur.begin(), cur.end(), f->vertex_ids.begin(), f->vertex_ids.end(),
                                  std::back_inserter(inter));
            push(std::move(inter));
        }
    }

    std::vector<FaceSet> out;
    for (const auto& vs : queue) {
        FaceSet fs;
        fs.vertex_ids = vs;
        for (std::size_t k = 0; k < all.size(); ++k)
            if (std::includes(all[k]->vertex_ids.begin(), all[k]->vertex_ids.end(), vs.begin(), vs.end()))
                fs.all_facet_ids.push_back(static_cast<int>(k));
        // compact iff every coordinate is bounded by some containing facet
        bool compact = true;
        for (int i = 0; i < g.n && compact; ++i) {
            bool bounded = false;
            for (int k : fs.all_facet_ids)
                if (all[k]->normal[i] > 0) bounded = true;
            compact = bounded;
        }
        if (!compact) continue;
        std::vector<Exponent> pts;
        for (int v : vs) pts.push_back(g.vertices[v]);
        fs.dim = affine_rank(pts);
        out.push_back(std::move(fs));
    }
    std::sort(out.begin(), out.end(), [](const FaceSet& a, const FaceSet& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_ids < b.vertex_ids;
    });
    return out;
}

}  // namespace detail

using detail::det_int;
using detail::normal_of;
using detail::rank_of;

namespace {

std::vector<Exponent> minimal_points(std::vector<Exponent> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Exponent> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
            if (i == j) continue;
            bool geq = true;
            for (std::size_t k = 0; k < pts[i].size(); ++k)
                if (pts[i][k] < pts[j][k]) {
                    geq = false;
                    break;
                }
            dominated = geq;
        }
        if (!dominated) out.push_back(pts[i]);
    }
    return out;
}

// Enumerate candidate supporting hyperplanes spanned by n generators.
void hull_facets(int n, const std::vector<Exponent>& P, std::set<std::pair<IVec, std::int64_t>>& found)
{
    int m = static_cast<int>(P.size());
    // choose k points (k>=1) and n-k rays
    auto test = [&](const std::vector<int>& pts, const std::vector<int>& rays) {
        std::vector<IVec> dirs;
        const Exponent& p0 = P[pts[0]];
        for (std::size_t a = 1; a < pts.size(); ++a) {
            IVec d(n);
            for (int j = 0; j < n; ++j) d[j] = P[pts[a]][j] - p0[j];
            dirs.push_back(d);
        }
        for (int r : rays) {
            IVec d(n, 0);
            d[r] = 1;
            dirs.push_back(d);
        }
        IVec w = normal_of(dirs, n);
        std::int64_t g = 0;
        bool pos = false, neg = false;
        for (auto x : w) {
            g = gcd64(g, x);
            if (x > 0) pos = true;
            if (x < 0) neg = true;
        }
        if (g == 0 || (pos && neg)) return;
        for (auto& x : w) x = (neg ? -x : x) / g;
        std::int64_t level = dot(w, p0);
        for (const auto& p : P)
            if (dot(w, p) < level) return;
        found.emplace(w, level);
    };
    std::vector<int> pts, rays;
    std::function<void(int)> rec_pts = [&](int start) {
        int k = static_cast<int>(pts.size());
        if (k >= 1) {
            // complete with rays
            int need = n - k;
            rays.clear();
            std::function<void(int)> rr = [&](int s) {
                if (static_cast<int>(rays.size()) == need) {
                    test(pts, rays);
                    return;
                }
                for (int r = s; r < n; ++r) {
                    rays.push_back(r);
                    rr(r + 1);
                    rays.pop_back();
                }
            };
            rr(0);
        }
        if (k == n) return;
        for (int i = start; i < m; ++i) {
            pts.push_back(i);
            rec_pts(i + 1);
            pts.pop_back();
        }
    };
    rec_pts(0);
}

}  // namespace

NewtonDiagram diagram_of_points(int n, const std::vector<Exponent>& points)
{
    if (points.empty()) throw DomainError("empty support");
    for (const auto& p : points)
        if (total_degree(p) == 0) throw DomainError("support contains the constant term (f(0) != 0)");
    std::vector<Exponent> P = minimal_points(points);
    NewtonDiagram g;
    g.n = n;

    std::set<std::pair<IVec, std::int64_t>> found;
    if (n == 1) {
        found.emplace(IVec{1}, P[0][0]);
    } else {
        hull_facets(n, P, found);
    }

    // vertices: minimal points whose active normals have full rank
    std::vector<std::pair<IVec, std::int64_t>> planes(found.begin(), found.end());
    for (const auto& p : P) {
        std::vector<IVec> active;
        for (const auto& [w, l] : planes)
            if (dot(w, p) == l) active.push_back(w);
        if (rank_of(active, n) == n) g.vertices.push_back(p);
    }
    std::sort(g.vertices.begin(), g.vertices.end());

    for (const auto& [w, l] : planes) {
        Facet f;
        f.normal = w;
        f.level = l;
        for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
            if (dot(w, g.vertices[v]) == l) f.vertex_ids.push_back(v);
        if (l > 0)
            g.facets.push_back(std::move(f));
        else
            g.boundary_facets.push_back(std::move(f));
    }
    auto by_normal = [](const Facet& a, const Facet& b) { return a.normal < b.normal; };
    std::sort(g.facets.begin(), g.facets.end(), by_normal);
    std::sort(g.boundary_facets.begin(), g.boundary_facets.end(), by_normal);
    return g;
}

NewtonDiagram newton_diagram(const MultiPoly& f)
{
    if (f.is_zero()) throw DomainError("zero polynomial has no Newton diagram");
    if (f.constant_term() != 0) throw DomainError("f(0) != 0");
    return diagram_of_points(f.nvars(), f.support());
}

bool is_commode(const NewtonDiagram& g)
{
    for (int i = 0; i < g.n; ++i) {
        bool hit = false;
        for (const auto& v : g.vertices) {
            bool pure = v[i] > 0;
            for (int j = 0; j < g.n && pure; ++j)
                if (j != i && v[j] != 0) pure = false;
            if (pure) hit = true;
        }
        if (!hit) return false;
    }
    return true;
}

std::vector<Face> faces(const NewtonDiagram& g, const MultiPoly& f)
{
    if (f.nvars() != g.n) throw DomainError("dimension mismatch");
    std::vector<const Facet*> all;
    for (const auto& fc : g.facets) all.push_back(&fc);
    for (const auto& fc : g.boundary_facets) all.push_back(&fc);
    std::vector<Face> out;
    for (const auto& fs : detail::face_sets(g)) {
        Face face;
        face.dim = fs.dim;
        face.vertex_ids = fs.vertex_ids;
        for (int k : fs.all_facet_ids)
            if (k < static_cast<int>(g.facets.size())) face.facet_ids.push_back(k);
        for (const auto& [e, c] : f.terms()) {
            bool on = true;
            for (int k : fs.all_facet_ids)
                if (dot(all[k]->normal, e) != all[k]->level) {
                    on = false;
                    break;
                }
            if (on) face.lattice_points_of_support.push_back(e);
        }
        std::sort(face.lattice_points_of_support.begin(), face.lattice_points_of_support.end());
        // every vertex of the face must be in the support of f
        for (int v : face.vertex_ids)
            if (f.coeff(g.vertices[v]) == 0) throw DomainError("face does not belong to the diagram of f");
        out.push_back(std::move(face));
    }
    return out;
}

MultiPoly truncation(const MultiPoly& f, const Face& face)
{
    MultiPoly r(f.nvars());
    for (const auto& e : face.lattice_points_of_support) {
        Rational c = f.coeff(e);
        if (c == 0) throw DomainError("face does not belong to the diagram of f");
        r.add_term(e, c);
    }
    return r;
}

Rational weight_eval(const NewtonDiagram& g, const std::vector<Rational>& x)
{
    if (!is_commode(g)) throw DomainError("weight function needs a commode diagram");
    if (static_cast<int>(x.size()) != g.n) throw DomainError("dimension mismatch");
    bool have = false;
    Rational best = 0;
    for (const auto& fc : g.facets) {
        Rational s = 0;
        for (int i = 0; i < g.n; ++i) s += Rational(static_cast<long long>(fc.normal[i])) * x[i];
        s /= Rational(static_cast<long long>(fc.level));
        if (!have || s < best) {
            best = s;
            have = true;
        }
    }
    return best;
}

bool diagram_geq(const NewtonDiagram& g1, const NewtonDiagram& g2)
{
    if (g1.n != g2.n) throw DomainError("dimension mismatch");
    if (!is_commode(g1) || !is_commode(g2)) throw DomainError("diagram order needs commode diagrams");
    // lambda_1 <= 1 on all of g2 iff lambda_2 >= 1 on the vertices of g1 (lambda_2 is concave)
    for (const auto& v : g1.vertices) {
        std::vector<Rational> x;
        for (int c : v) x.emplace_back(c);
        if (weight_eval(g2, x) < 1) return false;
    }
    return true;
}

std::vector<int> delta_faces(const NewtonDiagram& g, int axis)
{
    if (axis < 0 || axis >= g.n) throw DomainError("axis out of range");
    std::vector<int> out;
    for (int k : g.compact_facet_ids()) {
        const auto& w = g.facets[k].normal;
        __int128 norm2 = 0;
        for (auto x : w) norm2 += static_cast<__int128>(x) * x;
        __int128 lhs = static_cast<__int128>(g.n) * w[axis] * w[axis];
        if (lhs >= norm2) out.push_back(k);
    }
    return out;
}

std::vector<Exponent> under_diagram_lattice_points(const NewtonDiagram& g, int min_coord)
{
    bool commode = is_commode(g);
    if (!commode) {
        // region must stay bounded inside the vertex box
        for (const auto& fc : g.facets) {
            if (fc.compact()) continue;
            std::int64_t s = 0;
            for (auto w : fc.normal) s += w * min_coord;
            if (s <= fc.level) throw DomainError("unbounded lattice region for a non-commode diagram");
        }
    }
    std::vector<int> hi(g.n, 0);
    for (const auto& v : g.vertices)
        for (int i = 0; i < g.n; ++i) hi[i] = std::max(hi[i], v[i]);
    std::vector<Exponent> out;
    Exponent cur(g.n, min_coord);
    if (g.n == 0) return out;
    for (int i = 0; i < g.n; ++i)
        if (min_coord > hi[i]) return out;
    for (;;) {
        bool below = false;
        for (const auto& fc : g.facets)
            if (dot(fc.normal, cur) <= fc.level) {
                below = true;
                break;
            }
        if (below) out.push_back(cur);
        int i = g.n - 1;
        while (i >= 0 && cur[i] == hi[i]) {
            cur[i] = min_coord;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long determinacy_bound(const NewtonDiagram& g)
{
    long long best = 0;
    for (int k : g.compact_facet_ids()) {
        const auto& fc = g.facets[k];
        std::int64_t mn = *std::min_element(fc.normal.begin(), fc.normal.end());
        best = std::max<long long>(best, ceil_div(fc.level, mn));
    }
    return best;
}

NewtonDiagram commode_closure(const NewtonDiagram& g)
{
    if (is_commode(g)) return g;
    int far = 0;
    for (const auto& v : g.vertices)
        for (int c : v) far = std::max(far, c);
    far = 2 * far + 2;
    std::vector<Exponent> pts = g.vertices;
    for (int i = 0; i < g.n; ++i) {
        Exponent e(g.n, 0);
        e[i] = far;
        pts.push_back(e);
    }
    return diagram_of_points(g.n, pts);
}

}  // namespace newtonsing

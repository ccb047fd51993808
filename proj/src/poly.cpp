#include "newtonsing/poly.hpp"

#include "newtonsing/errors.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace newtonsing {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const
{
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

MultiPoly MultiPoly::constant(int n, const Rational& c)
{
    MultiPoly p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int n, int i)
{
    Exponent e(n, 0);
    e[i] = 1;
    return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c)
{
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Rational MultiPoly::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int MultiPoly::total_degree() const
{
    return terms_.empty() ? -1 : newtonsing::total_degree(terms_.begin()->first);
}

int MultiPoly::order() const
{
    return terms_.empty() ? -1 : newtonsing::total_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(int i) const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

int MultiPoly::order_in(int i) const
{
    if (terms_.empty()) return -1;
    int d = INT32_MAX;
    for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
    return d;
}

Rational MultiPoly::constant_term() const { return coeff(Exponent(n_, 0)); }

Exponent MultiPoly::min_exponent() const
{
    Exponent m(n_, 0);
    if (terms_.empty()) return m;
    m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < n_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

std::vector<Exponent> MultiPoly::support() const
{
    std::vector<Exponent> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

MultiPoly MultiPoly::truncated(int max_degree) const
{
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_)
        if (newtonsing::total_degree(e) <= max_degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
}

MultiPoly MultiPoly::divide_monomial(const Exponent& m) const
{
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
        Exponent d = e;
        for (int i = 0; i < n_; ++i) {
            d[i] -= m[i];
            if (d[i] < 0) throw DomainError("monomial division is not exact");
        }
        r.terms_.emplace(d, c);
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& x) const
{
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < n_; ++i)
            if (e[i]) t *= pow(x[i], e[i]);
        s += t;
    }
    return s;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(int i) const
{
    int d = degree_in(i);
    std::vector<MultiPoly> out(std::max(d + 1, 0), MultiPoly(n_));
    for (const auto& [e, c] : terms_) {
        Exponent r = e;
        r[i] = 0;
        out[e[i]].terms_.emplace(r, c);
    }
    return out;
}

UPoly MultiPoly::to_upoly(int i) const
{
    int d = degree_in(i);
    std::vector<Rational> c(std::max(d + 1, 0), Rational(0));
    for (const auto& [e, v] : terms_) {
        for (int j = 0; j < n_; ++j)
            if (j != i && e[j] != 0) throw DomainError("polynomial is not univariate");
        c[e[i]] += v;
    }
    return UPoly(std::move(c));
}

MultiPoly MultiPoly::from_upoly(const UPoly& p, int n, int i)
{
    MultiPoly r(n);
    for (int k = 0; k <= p.degree(); ++k) {
        Exponent e(n, 0);
        e[i] = k;
        r.add_term(e, p.coeff(k));
    }
    return r;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly multiply_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree)
{
    MultiPoly r(a.nvars());
    int n = a.nvars();
    Exponent e(n);
    for (const auto& [ea, ca] : a.terms()) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms()) {
            if (max_degree >= 0 && da + total_degree(eb) > max_degree) continue;
            for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply_truncated(a, b, -1); }

MultiPoly pow_truncated(const MultiPoly& a, unsigned e, int max_degree)
{
    MultiPoly r = MultiPoly::constant(a.nvars(), 1);
    MultiPoly b = a;
    while (e) {
        if (e & 1) r = multiply_truncated(r, b, max_degree);
        e >>= 1;
        if (e) b = multiply_truncated(b, b, max_degree);
    }
    return r;
}

MultiPoly pow(const MultiPoly& a, unsigned e) { return pow_truncated(a, e, -1); }

std::vector<std::string> default_var_names(int n)
{
    if (n <= 3) {
        std::vector<std::string> v{"x", "y", "z"};
        v.resize(n);
        return v;
    }
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

std::string MultiPoly::str(const std::vector<std::string>& vars) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool is_const = newtonsing::total_degree(e) == 0;
        bool wrote = false;
        if (is_const || a != 1) {
            os << a.str();
            wrote = true;
        }
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << vars[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::string MultiPoly::str() const { return str(default_var_names(n_)); }

MultiPoly homogeneous_component(const MultiPoly& f, int d)
{
    if (d < 0) throw DomainError("negative degree");
    MultiPoly r(f.nvars());
    for (const auto& [e, c] : f.terms())
        if (total_degree(e) == d) r.add_term(e, c);
    return r;
}

MultiPoly partial_derivative(const MultiPoly& f, int i)
{
    if (i < 0 || i >= f.nvars()) throw DomainError("variable index out of range");
    MultiPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        Exponent d = e;
        d[i] -= 1;
        r.add_term(d, c * Rational(e[i]));
    }
    return r;
}

bool proportional_modulo_scalar(const MultiPoly& f, const MultiPoly& g)
{
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (f.size() != g.size() || f.nvars() != g.nvars()) return false;
    Rational ratio = f.terms().begin()->second / g.terms().begin()->second;
    auto it = g.terms().begin();
    for (const auto& [e, c] : f.terms()) {
        if (it->first != e || c != ratio * it->second) return false;
        ++it;
    }
    return true;
}

MultiPoly compose(const MultiPoly& f, const std::vector<MultiPoly>& images, int max_degree)
{
    int n = f.nvars();
    if (static_cast<int>(images.size()) != n) throw DomainError("composition arity mismatch");
    int m = images.empty() ? n : images[0].nvars();
    std::vector<std::vector<MultiPoly>> powers(n);
    for (int i = 0; i < n; ++i) {
        int d = f.degree_in(i);
        powers[i].push_back(MultiPoly::constant(m, 1));
        for (int k = 1; k <= d; ++k)
            powers[i].push_back(multiply_truncated(powers[i].back(), images[i], max_degree));
    }
    MultiPoly r(m);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly t = MultiPoly::constant(m, c);
        for (int i = 0; i < n && !t.is_zero(); ++i)
            if (e[i]) t = multiply_truncated(t, powers[i][e[i]], max_degree);
        r += t;
    }
    return r;
}

CoordinateChange CoordinateChange::identity(int n, int degree_bound)
{
    CoordinateChange c;
    c.linear = RationalMatrix::Identity(n, n);
    c.degree_bound = degree_bound;
    return c;
}

std::vector<MultiPoly> CoordinateChange::images() const
{
    int nn = n();
    std::vector<MultiPoly> img;
    for (int i = 0; i < nn; ++i) {
        MultiPoly p(nn);
        for (int j = 0; j < nn; ++j) p += MultiPoly::variable(nn, j) * linear(i, j);
        if (!higher.empty()) p += higher[i];
        img.push_back(std::move(p));
    }
    return img;
}

std::string CoordinateChange::str(const std::vector<std::string>& vars) const
{
    std::ostringstream os;
    auto img = images();
    for (int i = 0; i < n(); ++i) {
        if (i) os << ", ";
        os << vars[i] << " -> " << img[i].str(vars);
    }
    return os.str();
}

MultiPoly apply_change(const MultiPoly& f, const CoordinateChange& phi)
{
    if (phi.n() != f.nvars()) throw DomainError("coordinate change dimension mismatch");
    if (phi.linear.determinant() == 0) throw DomainError("singular linear part");
    for (const auto& h : phi.higher)
        if (!h.is_zero() && h.order() < 2) throw DomainError("higher part must have order >= 2");
    return compose(f, phi.images(), phi.degree_bound);
}

}  // namespace newtonsing

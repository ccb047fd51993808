#include "newtonsing/upoly.hpp"

#include "newtonsing/errors.hpp"
#include "newtonsing/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace newtonsing {

long long to_ll(const Integer& z)
{
    if (z > Integer(INT64_MAX) || z < Integer(INT64_MIN)) throw DomainError("integer out of range");
    return z.convert_to<long long>();
}

long long to_ll(const Rational& q)
{
    if (!is_integer(q)) throw DomainError("expected an integer, got " + q.str());
    return to_ll(numer(q));
}

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c)
{
    if (c != 0) c_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, int deg)
{
    UPoly p;
    if (c == 0) return p;
    p.c_.assign(deg + 1, Rational(0));
    p.c_[deg] = c;
    return p;
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Rational UPoly::lead() const { return c_.empty() ? Rational(0) : c_.back(); }

int UPoly::low_order() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

Rational UPoly::eval(const Rational& t) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

UPoly UPoly::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const
{
    if (is_zero()) return *this;
    UPoly r = *this;
    Rational l = lead();
    for (auto& c : r.c_) c /= l;
    return r;
}

UPoly UPoly::shift_down(int k) const
{
    if (k <= 0) return *this;
    if (k >= static_cast<int>(c_.size())) return UPoly();
    return UPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

UPoly UPoly::strip_zero_root() const
{
    int k = low_order();
    return k <= 0 ? *this : shift_down(k);
}

UPoly UPoly::compose(const UPoly& inner) const
{
    UPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= inner;
        r += UPoly(*it);
    }
    return r;
}

UPoly UPoly::operator-() const
{
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= c;
    return *this;
}

std::string UPoly::str(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) {
            os << a.str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rational> r = a.coeffs();
    const auto& bc = b.coeffs();
    int db = b.degree();
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    Rational lb = b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Rational f = r[i] / lb;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * bc[j];
    }
    r.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly gcd(const UPoly& a, const UPoly& b)
{
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::pair<UPoly, UPoly> half_extended_gcd(const UPoly& a, const UPoly& b)
{
    // invariant: s0*a = r0 mod b, s1*a = r1 mod b
    UPoly r0 = a, r1 = b, s0(1), s1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) return {r0, s0};
    Rational l = r0.lead();
    return {r0 * (Rational(1) / l), s0 * (Rational(1) / l)};
}

UPoly pow(const UPoly& a, unsigned e)
{
    UPoly r(1), b = a;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

UPoly squarefree_part(const UPoly& a)
{
    if (a.degree() <= 0) return a.is_zero() ? a : UPoly(1);
    UPoly g = gcd(a, a.derivative());
    return (a / g).monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a)
{
    std::vector<std::pair<UPoly, int>> out;
    if (a.degree() <= 0) return out;
    UPoly f = a.monic();
    UPoly fp = f.derivative();
    UPoly g = gcd(f, fp);
    UPoly b = f / g;
    UPoly c = fp / g;
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly h = gcd(b, d);
        if (h.degree() > 0) out.emplace_back(h, i);
        b = b / h;
        c = d / h;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::vector<Integer> primitive_integer_coeffs(const UPoly& a)
{
    std::vector<Integer> out;
    if (a.is_zero()) return out;
    Integer l = 1;
    for (const auto& c : a.coeffs()) l = boost::multiprecision::lcm(l, denom(c));
    Integer g = 0;
    for (const auto& c : a.coeffs()) {
        Integer v = numer(c * Rational(l));
        out.push_back(v);
        g = boost::multiprecision::gcd(g, v);
    }
    if (out.back() < 0) g = -g;
    for (auto& v : out) v /= g;
    return out;
}

namespace {

// Factor |n| by trial division; false if a cofactor is too large to certify.
bool factor_small(Integer n, std::vector<std::pair<Integer, int>>& fac)
{
    if (n < 0) n = -n;
    fac.clear();
    if (n <= 1) return true;
    for (long p = 2; p <= 1000000; p += (p == 2 ? 1 : 2)) {
        Integer pp = p;
        if (pp * pp > n) break;
        int e = 0;
        while (n % pp == 0) {
            n /= pp;
            ++e;
        }
        if (e) fac.emplace_back(pp, e);
    }
    if (n > 1) {
        if (n > Integer(1000000) * Integer(1000000)) return false;
        fac.emplace_back(n, 1);
    }
    return true;
}

std::vector<Integer> divisors_of(const std::vector<std::pair<Integer, int>>& fac)
{
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : fac) {
        std::size_t cur = ds.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

bool is_root(const std::vector<Integer>& c, const Integer& a, const Integer& b)
{
    // sum c_i a^i b^(n-i) == 0
    Integer v = 0, bp = 1;
    int n = static_cast<int>(c.size()) - 1;
    std::vector<Integer> bpow(n + 1);
    for (int i = 0; i <= n; ++i) {
        bpow[i] = bp;
        bp *= b;
    }
    Integer ap = 1;
    for (int i = 0; i <= n; ++i) {
        v += c[i] * ap * bpow[n - i];
        ap *= a;
    }
    return v == 0;
}

std::vector<Rational> rational_roots_squarefree(const UPoly& sf)
{
    std::vector<Rational> roots;
    UPoly p = sf;
    if (p.low_order() > 0) {
        roots.push_back(0);
        p = p.strip_zero_root();
    }
    if (p.degree() < 1) return roots;
    if (p.degree() == 1) {
        roots.push_back(-p.coeff(0) / p.coeff(1));
        return roots;
    }
    std::vector<Integer> c = primitive_integer_coeffs(p);
    std::vector<std::pair<Integer, int>> f0, fn;
    bool ok0 = factor_small(c.front(), f0);
    bool okn = factor_small(c.back(), fn);
    if (ok0 && okn) {
        auto d0 = divisors_of(f0);
        auto dn = divisors_of(fn);
        if (d0.size() * dn.size() <= 400000) {
            for (const auto& b : dn)
                for (const auto& a : d0) {
                    if (boost::multiprecision::gcd(a, b) != 1) continue;
                    if (is_root(c, a, b)) roots.push_back(Rational(a, b));
                    if (is_root(c, -a, b)) roots.push_back(Rational(-a, b));
                }
            return roots;
        }
    }
    // Numeric guidance with exact verification. Denominators divide the leading
    // coefficient; try its divisors when known, else continued-fraction convergents.
    std::vector<Integer> dens;
    if (okn) dens = divisors_of(fn);
    for (const auto& z : complex_roots(p)) {
        if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z.real()))) continue;
        double r = z.real();
        std::vector<Rational> cands;
        if (!dens.empty()) {
            for (const auto& b : dens) {
                double ab = r * b.convert_to<double>();
                if (std::abs(ab) > 9e15) continue;
                cands.push_back(Rational(Integer(static_cast<long long>(std::llround(ab))), b));
            }
        } else {
            double x = r;
            Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
            for (int it = 0; it < 40; ++it) {
                double fl = std::floor(x);
                if (std::abs(fl) > 9e15) break;
                Integer a = static_cast<long long>(fl);
                Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
                cands.push_back(Rational(h2, k2));
                h0 = h1; h1 = h2; k0 = k1; k1 = k2;
                if (x - fl < 1e-12) break;
                x = 1.0 / (x - fl);
            }
        }
        for (const auto& q : cands)
            if (p.eval(q) == 0 && std::find(roots.begin(), roots.end(), q) == roots.end())
                roots.push_back(q);
    }
    return roots;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& a)
{
    std::vector<std::pair<Rational, int>> out;
    if (a.degree() < 1) return out;
    for (const auto& [f, mult] : squarefree_decomposition(a))
        for (const auto& r : rational_roots_squarefree(f)) out.emplace_back(r, mult);
    std::sort(out.begin(), out.end());
    return out;
}

Rational resultant(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero()) return 0;
    int m = a.degree(), n = b.degree();
    if (n == 0) return pow(b.lead(), m);
    if (m == 0) return pow(a.lead(), n);
    Rational sign = ((m % 2) && (n % 2)) ? Rational(-1) : Rational(1);
    if (m < n) return sign * resultant(b, a);
    UPoly r = a % b;
    if (r.is_zero()) return 0;
    return sign * pow(b.lead(), m - r.degree()) * resultant(b, r);
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UPoly r;
    for (std::size_t k = n; k-- > 0;) {
        r *= UPoly(std::vector<Rational>{-xs[k], Rational(1)});
        r += UPoly(dd[k]);
    }
    return r;
}

}  // namespace newtonsing

#pragma once

#include "newtonsing/curve.hpp"
#include "newtonsing/diagram.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace newtonsing {

// prod_m (1 - z^m)^{e_m}; zero exponents are never stored
class CycloProduct {
public:
    CycloProduct() = default;
    static CycloProduct factor(long long m, long long e = 1);

    const std::map<long long, long long>& factors() const { return f_; }
    long long exponent(long long m) const;
    long long degree() const;  // sum m * e_m
    bool is_one() const { return f_.empty(); }

    CycloProduct& operator*=(const CycloProduct& o);
    CycloProduct& operator/=(const CycloProduct& o);
    friend CycloProduct operator*(CycloProduct a, const CycloProduct& b) { return a *= b; }
    friend CycloProduct operator/(CycloProduct a, const CycloProduct& b) { return a /= b; }
    CycloProduct pow(long long e) const;
    friend bool operator==(const CycloProduct& a, const CycloProduct& b) { return a.f_ == b.f_; }
    friend bool operator!=(const CycloProduct& a, const CycloProduct& b) { return !(a == b); }

    std::string str() const;

private:
    void add(long long m, long long e);
    std::map<long long, long long> f_;
};

struct MilnorResult {
    long long value = 0;
    std::string route;
    bool is_newton_number = true;  // true unless non-degeneracy was certified
};

Rational newton_number(const NewtonDiagram& g);
MilnorResult kouchnirenko_mu(const NewtonDiagram& g, bool nnd_certified = false);

struct DirectionalComponent {
    std::optional<long long> mu;
    std::optional<CycloProduct> zeta;
    std::optional<std::pair<long long, long long>> q_mu_tc;  // (q_alpha, mu of the tangent cone point)
};

struct DirectionalInput {
    int n = 2;
    long long p = 2;
    int k = 1;
    std::vector<DirectionalComponent> components;
};

long long directional_mu(int n, long long p, const std::vector<long long>& mu_alpha);
long long directional_mu(const DirectionalInput& in);
long long yomdin_mu(int n, long long p, const std::vector<std::pair<long long, long long>>& points);

CycloProduct acampo_zeta(const std::vector<std::pair<long long, long long>>& strata);

// Closed formula in p, k and the components' pairs; edge form of the directional
// diagrams when a component is not a single one-pair or smooth branch.
CycloProduct curve_zeta(const CurveModel& model, std::string* route = nullptr);
// zeta of a non-degenerate plane curve with this diagram, from its edges and intercepts
CycloProduct curve_diagram_zeta(const NewtonDiagram& g);

CycloProduct directional_zeta(int n, long long p, const std::vector<CycloProduct>& zeta_alpha);
CycloProduct directional_zeta(const DirectionalInput& in);

CycloProduct special_surface_zeta(long long p, long long p_a, long long q_a);

long long chi_smooth_hypersurface(long long p, int n);

long long zeta_mu_consistency(const CycloProduct& zeta, int n);

// Kouchnirenko on each directional diagram (closed with a far pure power when
// needed), combined with directional_mu.
MilnorResult curve_mu_directional(const CurveModel& model);

}  // namespace newtonsing
